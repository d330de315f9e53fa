#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lhom/cluster.hpp"
#include "lhom/embedding.hpp"
#include "lhom/gf.hpp"
#include "lhom/parallel.hpp"
#include "lhom/vr.hpp"

namespace lhom {

enum class InputFormat { text, word2vec_binary };

struct LinkTarget {
    std::string word;
    double eps = 0.0;
};

struct SweepConfig {
    std::string input_path;
    InputFormat format = InputFormat::text;
    std::string words_path;  // empty: use every token in the input, file order
    double eps_start = 0.0;
    double eps_end = 0.0;
    double eps_step = 1.0;
    int max_degree = 4;
    int modulus = 2;
    std::size_t workers = 1;
    std::string out_dir;
    std::vector<LinkTarget> link_exports;
    bool skip_missing = false;
};

/// Whether a failure is the caller's input (exit code 1) or a defect met
/// during computation (exit code 2).
enum class ErrorKind { input, computation };

class StageError : public std::runtime_error {
public:
    StageError(ErrorKind kind, std::string stage, const std::string& message)
        : std::runtime_error(stage + ": " + message), kind_(kind), stage_(std::move(stage)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& stage() const { return stage_; }

private:
    ErrorKind kind_;
    std::string stage_;
};

namespace detail {

template <typename Fn>
auto staged(ErrorKind kind, const char* stage, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(kind, stage, e.what());
    }
}

}  // namespace detail

/// Shortest decimal representation of an epsilon, used in filenames and CSV.
inline std::string format_eps(double eps) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", eps);
    return buf;
}

/// Distances are always printed with two decimals.
inline std::string format_distance(double d) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", d);
    return buf;
}

inline std::vector<double> epsilon_grid(double start, double end, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("epsilon step must be > 0");
    if (start > end) throw std::invalid_argument("epsilon start must be <= end");
    std::vector<double> grid;
    const double slack = step * 1e-9;
    for (std::size_t i = 0;; ++i) {
        const double eps = start + static_cast<double>(i) * step;
        if (eps > end + slack) break;
        grid.push_back(eps);
    }
    return grid;
}

inline void validate_config(const SweepConfig& config) {
    detail::staged(ErrorKind::input, "config", [&] {
        if (config.input_path.empty()) throw std::invalid_argument("no input path");
        if (config.out_dir.empty()) throw std::invalid_argument("no output directory");
        if (!(config.eps_step > 0.0)) throw std::invalid_argument("epsilon step must be > 0");
        if (config.eps_start > config.eps_end)
            throw std::invalid_argument("epsilon start must be <= end");
        if (config.eps_start < 0.0 || config.eps_end > 180.0)
            throw std::invalid_argument("epsilon grid must lie in [0, 180] degrees");
        if (config.max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
        if (config.workers == 0) throw std::invalid_argument("workers must be >= 1");
        PrimeField(config.modulus);  // validates primality
        for (const LinkTarget& t : config.link_exports) {
            if (t.word.empty()) throw std::invalid_argument("empty link-export word");
            if (t.eps < 0.0 || t.eps > 180.0)
                throw std::invalid_argument("link-export epsilon must lie in [0, 180]");
        }
    });
}

/// Load, select, and normalize the input words into a unit-sphere cloud.
inline WordCloud load_input(const SweepConfig& config,
                            std::vector<std::string>* warnings = nullptr) {
    std::vector<std::string> words;
    if (!config.words_path.empty())
        words = detail::staged(ErrorKind::input, "wordlist",
                               [&] { return load_wordlist(config.words_path); });

    WordEmbedding emb = detail::staged(ErrorKind::input, "load-vectors", [&] {
        if (config.format == InputFormat::text) return load_text_vectors(config.input_path);
        std::optional<std::unordered_set<std::string>> filter;
        if (!words.empty()) filter.emplace(words.begin(), words.end());
        return load_word2vec_binary(config.input_path, filter);
    });

    if (words.empty()) words = emb.tokens();
    return detail::staged(ErrorKind::input, "normalize", [&] {
        return normalize_to_sphere(emb, words, {config.skip_missing, warnings});
    });
}

/// An epsilon-neighborhood snapshot around one word: every neighbor with its
/// geodesic distance to the center, and the edges among the neighbors.
struct LinkGraphExport {
    std::string center;
    double eps = 0.0;
    struct Node {
        VertexId id;
        std::string word;
        double distance;  // degrees to the center
    };
    std::vector<Node> nodes;                      // ascending by vertex id
    std::vector<std::pair<VertexId, VertexId>> edges;  // ascending pairs
};

inline LinkGraphExport export_link(const WordCloud& wc, const std::string& word, double eps) {
    auto it = wc.index.find(word);
    if (it == wc.index.end())
        throw std::invalid_argument("word '" + word + "' is not in the cloud");
    if (eps < 0.0 || eps > 180.0)
        throw std::invalid_argument("link epsilon must lie in [0, 180]");
    const auto center = static_cast<std::size_t>(it->second);

    LinkGraphExport out;
    out.center = word;
    out.eps = eps;
    for (std::size_t v = 0; v < wc.cloud.size(); ++v) {
        if (v == center) continue;
        const double d = wc.cloud.distance(center, v);
        if (d <= eps)
            out.nodes.push_back({static_cast<VertexId>(v), wc.words[v], d});
    }
    for (std::size_t a = 0; a < out.nodes.size(); ++a)
        for (std::size_t b = a + 1; b < out.nodes.size(); ++b) {
            const auto i = static_cast<std::size_t>(out.nodes[a].id);
            const auto j = static_cast<std::size_t>(out.nodes[b].id);
            if (wc.cloud.distance(i, j) <= eps)
                out.edges.emplace_back(out.nodes[a].id, out.nodes[b].id);
        }
    return out;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";  // line break inside a label
            continue;
        }
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

/// Filesystem-safe word for use inside output filenames.
inline std::string sanitize_for_filename(const std::string& word) {
    std::string out;
    for (char c : word) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
        out += ok ? c : '_';
    }
    return out.empty() ? std::string("_") : out;
}

inline double round2(double d) { return std::round(d * 100.0) / 100.0; }

}  // namespace detail

inline void write_link_dot(const LinkGraphExport& link, std::ostream& os) {
    os << "graph " << detail::dot_quote(link.center + "@" + format_eps(link.eps)) << " {\n";
    for (const auto& n : link.nodes)
        os << "  " << detail::dot_quote(n.word) << " [label="
           << detail::dot_quote(n.word + "\n" + format_distance(n.distance)) << "];\n";
    std::unordered_map<VertexId, const LinkGraphExport::Node*> by_id;
    for (const auto& n : link.nodes) by_id.emplace(n.id, &n);
    for (const auto& [i, j] : link.edges)
        os << "  " << detail::dot_quote(by_id.at(i)->word) << " -- "
           << detail::dot_quote(by_id.at(j)->word) << ";\n";
    os << "}\n";
}

inline void write_link_json(const LinkGraphExport& link, std::ostream& os) {
    nlohmann::ordered_json j;
    j["center"] = link.center;
    j["epsilon"] = link.eps;
    j["nodes"] = nlohmann::ordered_json::array();
    std::unordered_map<VertexId, const LinkGraphExport::Node*> by_id;
    for (const auto& n : link.nodes) {
        by_id.emplace(n.id, &n);
        j["nodes"].push_back({{"word", n.word}, {"distance", detail::round2(n.distance)}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : link.edges)
        j["edges"].push_back({by_id.at(a)->word, by_id.at(b)->word});
    os << j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
}

struct EpsilonReport {
    double eps = 0.0;
    std::size_t complex_size = 0;
    std::size_t kept_edge_count = 0;
    std::size_t cluster_count = 0;
    double milliseconds = 0.0;
    Clustering clustering;
};

struct SweepResult {
    std::vector<EpsilonReport> reports;
    std::filesystem::path csv_path;
    std::filesystem::path summary_path;
    std::vector<std::filesystem::path> cluster_paths;
    std::vector<std::filesystem::path> link_paths;
    std::vector<std::string> warnings;
};

namespace detail {

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    staged(ErrorKind::input, "write-output", [&] {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
        out << content;
        if (!out) throw std::runtime_error("write failed: " + path.string());
        return 0;
    });
}

inline nlohmann::ordered_json cluster_json(const Clustering& clustering, const WordCloud& wc,
                                           double eps) {
    nlohmann::ordered_json j;
    j["epsilon"] = eps;
    j["cluster_count"] = clustering.clusters.size();
    j["clusters"] = nlohmann::ordered_json::array();
    for (const Cluster& c : clustering.clusters) {
        nlohmann::ordered_json jc;
        jc["members"] = nlohmann::ordered_json::array();
        for (VertexId v : c.members) jc["members"].push_back(wc.words[static_cast<std::size_t>(v)]);
        jc["profile"] = c.profile;
        jc["singleton"] = c.singleton;
        j["clusters"].push_back(std::move(jc));
    }
    return j;
}

}  // namespace detail

/// Run the full sweep over an already-loaded cloud: per epsilon, build the
/// complex, compute all vertex/edge profiles and the clustering, and write
/// profiles.csv, clusters-<eps>.json, summary.json, and any link exports.
inline SweepResult run_sweep(const SweepConfig& config, const WordCloud& wc) {
    validate_config(config);
    const PrimeField field(config.modulus);
    const std::vector<double> grid = epsilon_grid(config.eps_start, config.eps_end,
                                                  config.eps_step);
    const std::filesystem::path out_dir(config.out_dir);
    detail::staged(ErrorKind::input, "write-output", [&] {
        std::filesystem::create_directories(out_dir);
        return 0;
    });

    const auto t0 = std::chrono::steady_clock::now();
    SweepResult result;
    for (double eps : grid) {
        const auto te0 = std::chrono::steady_clock::now();
        EpsilonReport report;
        report.eps = eps;
        report.clustering = detail::staged(ErrorKind::computation, "cluster", [&] {
            return cluster(wc.cloud, eps, config.max_degree, field, config.workers);
        });
        report.complex_size = report.clustering.complex_size;
        report.kept_edge_count = report.clustering.kept.size();
        report.cluster_count = report.clustering.clusters.size();
        report.milliseconds = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - te0)
                                  .count();

        const auto path = out_dir / ("clusters-" + format_eps(eps) + ".json");
        detail::write_text_file(
            path, detail::cluster_json(report.clustering, wc, eps)
                          .dump(2, ' ', false, nlohmann::json::error_handler_t::replace) +
                      "\n");
        result.cluster_paths.push_back(path);
        result.reports.push_back(std::move(report));
    }

    // profiles.csv: one row per (word, epsilon), sorted by word then epsilon.
    std::vector<std::size_t> word_order(wc.words.size());
    for (std::size_t i = 0; i < word_order.size(); ++i) word_order[i] = i;
    std::sort(word_order.begin(), word_order.end(),
              [&](std::size_t a, std::size_t b) { return wc.words[a] < wc.words[b]; });

    std::string csv = "word,epsilon";
    for (int k = 0; k <= config.max_degree; ++k) csv += ",b" + std::to_string(k);
    csv += '\n';
    for (std::size_t v : word_order) {
        for (const EpsilonReport& report : result.reports) {
            csv += detail::csv_field(wc.words[v]) + "," + format_eps(report.eps);
            const BettiProfile& p =
                report.clustering.table.vertex(static_cast<VertexId>(v));
            for (int b : p) csv += "," + std::to_string(b);
            csv += '\n';
        }
    }
    result.csv_path = out_dir / "profiles.csv";
    detail::write_text_file(result.csv_path, csv);

    for (const LinkTarget& target : config.link_exports) {
        const LinkGraphExport link = detail::staged(ErrorKind::input, "export-link", [&] {
            return export_link(wc, target.word, target.eps);
        });
        const std::string stem =
            "link-" + detail::sanitize_for_filename(target.word) + "-" + format_eps(target.eps);
        std::ostringstream dot, json;
        write_link_dot(link, dot);
        write_link_json(link, json);
        const auto dot_path = out_dir / (stem + ".dot");
        const auto json_path = out_dir / (stem + ".json");
        detail::write_text_file(dot_path, dot.str());
        detail::write_text_file(json_path, json.str());
        result.link_paths.push_back(dot_path);
        result.link_paths.push_back(json_path);
    }

    nlohmann::ordered_json summary;
    summary["input"] = config.input_path;
    summary["format"] = config.format == InputFormat::text ? "text" : "word2vec-bin";
    summary["word_count"] = wc.words.size();
    summary["dimension"] = wc.cloud.dimension();
    summary["grid"] = {{"start", config.eps_start},
                       {"end", config.eps_end},
                       {"step", config.eps_step}};
    summary["max_degree"] = config.max_degree;
    summary["modulus"] = config.modulus;
    summary["workers"] = config.workers;
    summary["per_epsilon"] = nlohmann::ordered_json::array();
    for (const EpsilonReport& report : result.reports)
        summary["per_epsilon"].push_back({{"epsilon", report.eps},
                                          {"simplices", report.complex_size},
                                          {"kept_edges", report.kept_edge_count},
                                          {"clusters", report.cluster_count},
                                          {"milliseconds", report.milliseconds}});
    summary["total_milliseconds"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    result.summary_path = out_dir / "summary.json";
    detail::write_text_file(result.summary_path,
                            summary.dump(2, ' ', false,
                                         nlohmann::json::error_handler_t::replace) +
                                "\n");
    return result;
}

/// Load the configured input, then sweep it.
inline SweepResult run_sweep(const SweepConfig& config) {
    validate_config(config);
    std::vector<std::string> warnings;
    const WordCloud wc = load_input(config, &warnings);
    SweepResult result = run_sweep(config, wc);
    result.warnings = std::move(warnings);
    return result;
}

}  // namespace lhom
