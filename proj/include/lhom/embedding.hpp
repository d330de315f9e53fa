#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lhom/simplex.hpp"
#include "lhom/vr.hpp"

namespace lhom {

/// Token -> vector mapping with a fixed dimension, preserving insertion order.
class WordEmbedding {
public:
    std::size_t size() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }

    /// Vector dimension; meaningful only once the embedding is nonempty.
    std::size_t dimension() const { return dim_; }

    const std::vector<std::string>& tokens() const { return tokens_; }

    bool contains(const std::string& token) const { return index_.count(token) != 0; }

    const std::vector<double>& vector_of(const std::string& token) const {
        auto it = index_.find(token);
        if (it == index_.end())
            throw std::out_of_range("WordEmbedding: unknown token '" + token + "'");
        return vectors_[it->second];
    }

    void insert(std::string token, std::vector<double> vec) {
        if (!tokens_.empty() && vec.size() != dim_)
            throw std::invalid_argument("WordEmbedding: vector for '" + token +
                                        "' has dimension " + std::to_string(vec.size()) +
                                        ", expected " + std::to_string(dim_));
        if (!index_.emplace(token, tokens_.size()).second)
            throw std::invalid_argument("WordEmbedding: duplicate token '" + token + "'");
        dim_ = vec.size();
        tokens_.push_back(std::move(token));
        vectors_.push_back(std::move(vec));
    }

private:
    std::vector<std::string> tokens_;
    std::vector<std::vector<double>> vectors_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t dim_ = 0;
};

namespace detail {

inline void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace detail

/// Load text-format vectors: one line per token, "token v1 v2 ... vd".
/// The dimension is taken from the first line (or expected_dim) and enforced.
inline WordEmbedding load_text_vectors(const std::string& path,
                                       std::optional<std::size_t> expected_dim = {}) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open vector file: " + path);

    WordEmbedding emb;
    std::optional<std::size_t> dim = expected_dim;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        detail::strip_cr(line);
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string token;
        ss >> token;
        std::vector<double> vec;
        double v;
        while (ss >> v) vec.push_back(v);
        if (!ss.eof())
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": malformed vector component");
        if (vec.empty())
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": no vector components");
        if (dim && vec.size() != *dim)
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected " +
                                     std::to_string(*dim) + " components, got " +
                                     std::to_string(vec.size()));
        dim = vec.size();
        try {
            emb.insert(std::move(token), std::move(vec));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return emb;
}

/// Write text-format vectors with round-trip-exact decimal components.
inline void save_text_vectors(const std::string& path, const WordEmbedding& emb) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    char buf[64];
    for (const std::string& token : emb.tokens()) {
        out << token;
        for (double v : emb.vector_of(token)) {
            std::snprintf(buf, sizeof buf, " %.17g", v);
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

/// Load word2vec binary vectors: header "<count> <dim>\n", then per record a
/// token terminated by a space followed by dim little-endian float32 values
/// and an optional newline. With a wordlist, other records are skipped in a
/// streaming pass and reading stops once every listed token has been seen.
inline WordEmbedding load_word2vec_binary(
    const std::string& path,
    const std::optional<std::unordered_set<std::string>>& wordlist = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open vector file: " + path);
    in.seekg(0, std::ios::end);
    const std::int64_t file_size = in.tellg();
    in.seekg(0, std::ios::beg);

    std::string header;
    if (!std::getline(in, header))
        throw std::runtime_error(path + ": malformed header (no newline)");
    std::istringstream hs(header);
    std::int64_t count = -1, dim = -1;
    std::string extra;
    hs >> count >> dim;
    if (!hs || hs >> extra || count < 0 || dim <= 0)
        throw std::runtime_error(path + ": malformed header '" + header + "'");

    WordEmbedding emb;
    std::size_t remaining = wordlist ? wordlist->size() : 0;
    const std::int64_t record_bytes = dim * 4;
    std::vector<unsigned char> raw(static_cast<std::size_t>(record_bytes));

    for (std::int64_t r = 0; r < count; ++r) {
        if (wordlist && remaining == 0) break;

        std::string token;
        int ch = in.get();
        if (ch == '\n') ch = in.get();  // records may be newline-separated
        while (ch != ' ' && ch != EOF) {
            token.push_back(static_cast<char>(ch));
            ch = in.get();
        }
        if (ch == EOF)
            throw std::runtime_error(path + ": truncated at byte " +
                                     std::to_string(file_size) + " (record " +
                                     std::to_string(r) + " of " + std::to_string(count) + ")");

        const std::int64_t offset = in.tellg();
        if (offset + record_bytes > file_size)
            throw std::runtime_error(path + ": truncated at byte " + std::to_string(offset) +
                                     " (record " + std::to_string(r) + " of " +
                                     std::to_string(count) + ")");

        if (wordlist && wordlist->count(token) == 0) {
            in.seekg(record_bytes, std::ios::cur);
            continue;
        }

        in.read(reinterpret_cast<char*>(raw.data()), record_bytes);
        std::vector<double> vec(static_cast<std::size_t>(dim));
        for (std::size_t i = 0; i < vec.size(); ++i) {
            std::uint32_t u = static_cast<std::uint32_t>(raw[4 * i]) |
                              static_cast<std::uint32_t>(raw[4 * i + 1]) << 8 |
                              static_cast<std::uint32_t>(raw[4 * i + 2]) << 16 |
                              static_cast<std::uint32_t>(raw[4 * i + 3]) << 24;
            vec[i] = static_cast<double>(std::bit_cast<float>(u));
        }
        emb.insert(std::move(token), std::move(vec));
        if (wordlist) --remaining;
    }
    return emb;
}

/// Load a wordlist: one token per line; blank lines and lines whose first
/// non-space character is '#' are ignored.
inline std::vector<std::string> load_wordlist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open wordlist: " + path);
    std::vector<std::string> words;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        detail::strip_cr(line);
        const auto begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos || line[begin] == '#') continue;
        const auto end = line.find_last_not_of(" \t");
        const std::string token = line.substr(begin, end - begin + 1);
        if (token.find_first_of(" \t") != std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected one token per line");
        words.push_back(token);
    }
    return words;
}

/// An ordered word selection projected onto the unit sphere. Vertex i of the
/// cloud is words[i]; the index map inverts that.
struct WordCloud {
    std::vector<std::string> words;
    MetricCloud cloud;
    std::unordered_map<std::string, VertexId> index;
};

struct NormalizeOptions {
    /// Drop words absent from the embedding (with a warning) instead of failing.
    bool skip_missing = false;
    /// When non-null, receives human-readable warnings (duplicates, skips).
    std::vector<std::string>* warnings = nullptr;
};

/// Build a WordCloud by normalizing the selected words' vectors to unit norm.
/// Missing words are an error listing every one of them (unless skipped);
/// zero vectors cannot be normalized and are always an error.
inline WordCloud normalize_to_sphere(const WordEmbedding& emb,
                                     const std::vector<std::string>& words,
                                     const NormalizeOptions& opts = {}) {
    std::vector<std::string> missing;
    std::vector<std::string> selected;
    selected.reserve(words.size());
    for (const std::string& w : words) {
        if (emb.contains(w)) selected.push_back(w);
        else missing.push_back(w);
    }
    if (!missing.empty()) {
        std::string joined;
        for (const std::string& w : missing) {
            if (!joined.empty()) joined += ", ";
            joined += w;
        }
        if (!opts.skip_missing)
            throw std::runtime_error("words not present in the embedding: " + joined);
        if (opts.warnings)
            opts.warnings->push_back("skipping words not present in the embedding: " + joined);
    }

    WordCloud wc;
    wc.words = std::move(selected);
    std::vector<std::vector<double>> points;
    points.reserve(wc.words.size());
    std::map<std::vector<double>, std::string> seen;
    for (std::size_t i = 0; i < wc.words.size(); ++i) {
        const std::string& w = wc.words[i];
        std::vector<double> v = emb.vector_of(w);
        double norm2 = 0.0;
        for (double x : v) norm2 += x * x;
        if (norm2 == 0.0)
            throw std::runtime_error("word '" + w + "' has a zero vector");
        const double norm = std::sqrt(norm2);
        for (double& x : v) x /= norm;
        if (opts.warnings) {
            auto [it, fresh] = seen.emplace(v, w);
            if (!fresh)
                opts.warnings->push_back("words '" + it->second + "' and '" + w +
                                         "' normalize to identical points");
        }
        wc.index.emplace(w, static_cast<VertexId>(i));
        points.push_back(std::move(v));
    }
    wc.cloud = MetricCloud::from_points(std::move(points), Metric::geodesic_sphere);
    return wc;
}

}  // namespace lhom
