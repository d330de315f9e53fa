#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "lhom/gf.hpp"
#include "oracles.hpp"

using lhom::GfMatrix;
using lhom::PrimeField;

TEST_CASE("prime field validates the modulus", "[gf]") {
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(3));
    CHECK_NOTHROW(PrimeField(97));
    CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(-2), std::invalid_argument);
}

TEST_CASE("field arithmetic satisfies the field laws", "[gf]") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const PrimeField f(p);
        for (std::uint32_t a = 0; a < p; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (std::uint32_t b = 0; b < p; ++b) {
                CHECK(f.add(a, b) == (a + b) % p);
                CHECK(f.mul(a, b) == (a * b) % p);
                CHECK(f.sub(a, b) == (a + p - b) % p);
            }
        }
        CHECK_THROWS_AS(f.inv(0), std::domain_error);
    }
    CHECK(PrimeField(5).reduce(-1) == 4);
    CHECK(PrimeField(5).reduce(12) == 2);
}

TEST_CASE("matrix set reduces values into the field", "[gf]") {
    const PrimeField f(3);
    GfMatrix m(2, 2, f);
    m.set(0, 0, -1);
    m.set(0, 1, 5);
    m.set(1, 0, 3);
    CHECK(m.at(0, 0) == 2);
    CHECK(m.at(0, 1) == 2);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 1) == 0);
}

TEST_CASE("smith normal form diagonalizes by rank", "[gf]") {
    const PrimeField gf2(2);

    GfMatrix id2(2, 2, gf2);
    id2.set(0, 0, 1);
    id2.set(1, 1, 1);
    CHECK(lhom::smith_normal_form(id2) == id2);

    GfMatrix ones(2, 2, gf2);
    ones.set(0, 0, 1);
    ones.set(0, 1, 1);
    ones.set(1, 0, 1);
    ones.set(1, 1, 1);
    const GfMatrix snf = lhom::smith_normal_form(ones);
    GfMatrix expected(2, 2, gf2);
    expected.set(0, 0, 1);
    CHECK(snf == expected);
    CHECK(lhom::zero_col_count(snf) == 1);
    // input untouched
    CHECK(ones.at(1, 1) == 1);

    const GfMatrix empty = GfMatrix::empty_matrix(gf2);
    CHECK(lhom::smith_normal_form(empty) == empty);
    CHECK(lhom::rank(empty) == 0);

    // idempotence
    CHECK(lhom::smith_normal_form(snf) == snf);
}

TEST_CASE("column counting conventions", "[gf]") {
    const PrimeField gf2(2);

    GfMatrix zero34(3, 4, gf2);
    CHECK(lhom::zero_col_count(zero34) == 4);
    CHECK(lhom::nonzero_col_count(zero34) == 0);

    GfMatrix id2(2, 2, gf2);
    id2.set(0, 0, 1);
    id2.set(1, 1, 1);
    CHECK(lhom::zero_col_count(id2) == 0);
    CHECK(lhom::nonzero_col_count(id2) == 2);

    GfMatrix row13(1, 3, gf2);
    CHECK(lhom::nonzero_col_count(row13) == 0);
    CHECK(lhom::zero_col_count(row13) == 3);

    CHECK(lhom::zero_col_count(GfMatrix::empty_matrix(gf2)) == 0);
    CHECK(lhom::nonzero_col_count(GfMatrix::empty_matrix(gf2)) == 0);
}

namespace {

GfMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                       const PrimeField& field, oracles::IntMatrix& mirror) {
    std::uniform_int_distribution<int> entry(0, field.modulus() - 1);
    GfMatrix m(rows, cols, field);
    mirror.assign(rows, std::vector<long long>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const int v = entry(rng);
            m.set(i, j, v);
            mirror[i][j] = v;
        }
    return m;
}

}  // namespace

TEST_CASE("rank agrees with the elimination oracle on random matrices", "[gf]") {
    std::mt19937 rng(123456);
    std::uniform_int_distribution<std::size_t> dim(0, 40);
    for (int p : {2, 3, 5}) {
        const PrimeField field(p);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t rows = dim(rng), cols = dim(rng);
            oracles::IntMatrix mirror;
            const GfMatrix m = random_matrix(rng, rows, cols, field, mirror);
            const std::size_t expected = oracles::rank_mod_p(mirror, p);
            CHECK(lhom::rank(m) == expected);

            const GfMatrix snf = lhom::smith_normal_form(m);
            CHECK(lhom::rank(snf) == expected);
            CHECK(lhom::zero_col_count(snf) == cols - expected);
            CHECK(lhom::nonzero_col_count(snf) == expected);
            // SNF really is diagonal with leading ones
            for (std::size_t i = 0; i < snf.rows(); ++i)
                for (std::size_t j = 0; j < snf.cols(); ++j)
                    CHECK(snf.at(i, j) ==
                          ((i == j && i < expected) ? 1u : 0u));
        }
    }
}
