#include <cstddef>
#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lhom/lhom.hpp"

namespace {

lhom::LinkTarget parse_link_target(const std::string& spec) {
    const auto pos = spec.rfind(':');
    if (pos == std::string::npos || pos == 0 || pos + 1 == spec.size())
        throw std::invalid_argument("--export-link expects WORD:DEGREES, got '" + spec + "'");
    lhom::LinkTarget target;
    target.word = spec.substr(0, pos);
    const std::string deg = spec.substr(pos + 1);
    std::size_t used = 0;
    try {
        target.eps = std::stod(deg, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != deg.size())
        throw std::invalid_argument("--export-link expects WORD:DEGREES, got '" + spec + "'");
    return target;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Betti profiles and local-homology clusters of a word cloud on the unit sphere,\n"
        "swept over a grid of geodesic scales."};

    lhom::SweepConfig config;
    config.workers = lhom::default_workers();
    std::string format = "text";
    std::vector<std::string> link_specs;

    app.add_option("--input", config.input_path, "Vector file (text or word2vec binary)")
        ->required();
    app.add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"text", "word2vec-bin"}))
        ->capture_default_str();
    app.add_option("--words", config.words_path,
                   "Wordlist file (one token per line); default: every input token");
    app.add_option("--eps-start", config.eps_start, "First epsilon of the grid, degrees")
        ->required();
    app.add_option("--eps-end", config.eps_end, "Last epsilon of the grid, degrees (inclusive)")
        ->required();
    app.add_option("--eps-step", config.eps_step, "Grid step, degrees")
        ->capture_default_str();
    app.add_option("--max-degree", config.max_degree, "Deepest homological degree to compute")
        ->capture_default_str();
    app.add_option("--mod", config.modulus, "Prime field modulus")->capture_default_str();
    app.add_option("--workers", config.workers, "Worker threads for profile computation")
        ->capture_default_str();
    app.add_option("--out", config.out_dir, "Output directory")->required();
    app.add_option("--export-link", link_specs,
                   "Export one word's epsilon-neighborhood graph (WORD:DEGREES; repeatable)")
        ->take_all();
    app.add_flag("--skip-missing", config.skip_missing,
                 "Skip wordlist entries absent from the input instead of failing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    config.format =
        format == "text" ? lhom::InputFormat::text : lhom::InputFormat::word2vec_binary;

    try {
        for (const std::string& spec : link_specs)
            config.link_exports.push_back(parse_link_target(spec));

        lhom::validate_config(config);
        std::vector<std::string> warnings;
        const lhom::WordCloud cloud = lhom::load_input(config, &warnings);
        for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
        std::cout << "loaded " << cloud.words.size() << " words (dimension "
                  << cloud.cloud.dimension() << ")\n";

        const lhom::SweepResult result = lhom::run_sweep(config, cloud);
        for (const lhom::EpsilonReport& r : result.reports) {
            std::size_t nontrivial = 0;
            for (const lhom::Cluster& c : r.clustering.clusters)
                if (!c.singleton) ++nontrivial;
            std::cout << "eps " << lhom::format_eps(r.eps) << ": " << r.complex_size
                      << " simplices, " << r.kept_edge_count << " kept edges, "
                      << r.cluster_count << " clusters (" << nontrivial
                      << " non-singleton)\n";
        }
        std::cout << "wrote " << result.csv_path.string() << '\n';
        for (const auto& p : result.cluster_paths) std::cout << "wrote " << p.string() << '\n';
        for (const auto& p : result.link_paths) std::cout << "wrote " << p.string() << '\n';
        std::cout << "wrote " << result.summary_path.string() << '\n';
    } catch (const lhom::StageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == lhom::ErrorKind::input ? 1 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
