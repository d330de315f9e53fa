// Tour of the pipeline: make a tiny synthetic "embedding" of five words on a
// great circle, sweep one epsilon, and print the resulting clusters.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "lhom/lhom.hpp"

int main(int argc, char** argv) {
    using namespace lhom;

    const std::string out_dir = argc > 1 ? argv[1] : "sweep-tour-out";

    // Five words spaced 72 degrees apart on a great circle in R^3. Every
    // point's neighborhood looks like a circle's, so at a scale that links
    // each point to its two neighbors the whole pentagon is one cluster.
    WordEmbedding emb;
    const std::vector<std::string> words = {"alpha", "bravo", "charlie", "delta", "echo"};
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < words.size(); ++i) {
        const double theta = 2.0 * pi * static_cast<double>(i) / 5.0;
        emb.insert(words[i], {std::cos(theta), std::sin(theta), 0.0});
    }

    const WordCloud cloud = normalize_to_sphere(emb, words);

    SweepConfig config;
    config.input_path = "(in-memory)";
    config.eps_start = 60.0;
    config.eps_end = 80.0;
    config.eps_step = 10.0;
    config.max_degree = 2;
    config.out_dir = out_dir;

    const SweepResult result = run_sweep(config, cloud);
    for (const EpsilonReport& r : result.reports) {
        std::cout << "eps " << format_eps(r.eps) << ": " << r.cluster_count << " clusters\n";
        for (const Cluster& c : r.clustering.clusters) {
            std::cout << "  [";
            for (std::size_t i = 0; i < c.members.size(); ++i)
                std::cout << (i ? " " : "")
                          << cloud.words[static_cast<std::size_t>(c.members[i])];
            std::cout << "] profile (";
            for (std::size_t i = 0; i < c.profile.size(); ++i)
                std::cout << (i ? ", " : "") << c.profile[i];
            std::cout << ")\n";
        }
    }
    std::cout << "outputs in " << std::filesystem::absolute(out_dir).string() << "\n";
    return 0;
}
