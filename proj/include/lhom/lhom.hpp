#pragma once

// Local homology of Vietoris-Rips complexes: simplicial complexes, GF(p)
// boundary algebra, local betti profiles, profile-preserving clustering, and
// the word-embedding sweep pipeline.

#include "lhom/simplex.hpp"
#include "lhom/complex.hpp"
#include "lhom/gf.hpp"
#include "lhom/local_homology.hpp"
#include "lhom/vr.hpp"
#include "lhom/parallel.hpp"
#include "lhom/embedding.hpp"
#include "lhom/cluster.hpp"
#include "lhom/pipeline.hpp"
