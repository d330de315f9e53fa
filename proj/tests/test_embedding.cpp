#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "lhom/lhom.hpp"

using lhom::WordEmbedding;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "lhom-embedding-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

void append_le_float(std::string& buf, float v) {
    std::uint32_t u;
    static_assert(sizeof u == sizeof v);
    std::memcpy(&u, &v, sizeof u);
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>(u >> (8 * i) & 0xff));
}

}  // namespace

TEST_CASE("text vectors load", "[embedding]") {
    const auto path = temp_file("basic.txt");
    write_file(path, "a 1.0 0.0\nb 0.0 1.0\n");
    const WordEmbedding emb = lhom::load_text_vectors(path.string());
    REQUIRE(emb.size() == 2);
    CHECK(emb.dimension() == 2);
    CHECK(emb.vector_of("a") == std::vector<double>{1.0, 0.0});
    CHECK(emb.vector_of("b") == std::vector<double>{0.0, 1.0});
    CHECK(emb.tokens() == std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(emb.vector_of("c"), std::out_of_range);
}

TEST_CASE("text loader rejects ragged and malformed lines", "[embedding]") {
    const auto ragged = temp_file("ragged.txt");
    write_file(ragged, "a 1.0 0.0\nb 0.0 1.0 0.5\n");
    CHECK_THROWS_WITH(lhom::load_text_vectors(ragged.string()),
                      Catch::Matchers::ContainsSubstring(":2"));

    const auto dup = temp_file("dup.txt");
    write_file(dup, "tok 1.0\ntok 2.0\n");
    CHECK_THROWS_WITH(lhom::load_text_vectors(dup.string()),
                      Catch::Matchers::ContainsSubstring("tok"));

    const auto junk = temp_file("junk.txt");
    write_file(junk, "a 1.0 zebra\n");
    CHECK_THROWS(lhom::load_text_vectors(junk.string()));

    const auto bare = temp_file("bare.txt");
    write_file(bare, "a\n");
    CHECK_THROWS(lhom::load_text_vectors(bare.string()));

    const auto wrongdim = temp_file("wrongdim.txt");
    write_file(wrongdim, "a 1.0 2.0\n");
    CHECK_THROWS(lhom::load_text_vectors(wrongdim.string(), 3));
    CHECK_NOTHROW(lhom::load_text_vectors(wrongdim.string(), 2));

    CHECK_THROWS(lhom::load_text_vectors("/nonexistent/path/vectors.txt"));
}

TEST_CASE("empty and CRLF text files", "[embedding]") {
    const auto empty = temp_file("empty.txt");
    write_file(empty, "");
    CHECK(lhom::load_text_vectors(empty.string()).empty());

    const auto crlf = temp_file("crlf.txt");
    write_file(crlf, "a 1.0 0.0\r\nb 0.0 1.0\r\n");
    CHECK(lhom::load_text_vectors(crlf.string()).size() == 2);
}

TEST_CASE("text round-trip is exact at full precision", "[embedding]") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    WordEmbedding emb;
    for (int i = 0; i < 20; ++i)
        emb.insert("w" + std::to_string(i),
                   {coord(rng), coord(rng), coord(rng) * 1e-7, coord(rng) * 1e9});

    const auto path = temp_file("roundtrip.txt");
    lhom::save_text_vectors(path.string(), emb);
    const WordEmbedding back = lhom::load_text_vectors(path.string());

    REQUIRE(back.size() == emb.size());
    CHECK(back.tokens() == emb.tokens());
    for (const std::string& t : emb.tokens()) CHECK(back.vector_of(t) == emb.vector_of(t));
}

TEST_CASE("word2vec binary loads", "[embedding]") {
    std::string blob = "2 3\n";
    blob += "alpha ";
    for (float v : {1.0f, 0.5f, -2.0f}) append_le_float(blob, v);
    blob += "\nbeta ";
    for (float v : {0.25f, 8.0f, 0.125f}) append_le_float(blob, v);
    blob += "\n";

    const auto path = temp_file("vecs.bin");
    write_file(path, blob);
    const WordEmbedding emb = lhom::load_word2vec_binary(path.string());
    REQUIRE(emb.size() == 2);
    CHECK(emb.dimension() == 3);
    CHECK(emb.vector_of("alpha") == std::vector<double>{1.0, 0.5, -2.0});
    CHECK(emb.vector_of("beta") == std::vector<double>{0.25, 8.0, 0.125});
}

TEST_CASE("word2vec wordlist filter skips records", "[embedding]") {
    std::string blob = "5 2\n";
    for (const char* tok : {"one", "two", "bank", "four", "five"}) {
        blob += tok;
        blob += ' ';
        append_le_float(blob, 1.0f);
        append_le_float(blob, 2.0f);
        blob += '\n';
    }
    const auto path = temp_file("filter.bin");
    write_file(path, blob);

    const std::optional<std::unordered_set<std::string>> filter{{"bank"}};
    const WordEmbedding emb = lhom::load_word2vec_binary(path.string(), filter);
    REQUIRE(emb.size() == 1);
    CHECK(emb.contains("bank"));
    CHECK(emb.vector_of("bank") == std::vector<double>{1.0, 2.0});
}

TEST_CASE("word2vec header and truncation errors", "[embedding]") {
    const auto bad_header = temp_file("badheader.bin");
    write_file(bad_header, "two three\nxxxx");
    CHECK_THROWS_WITH(lhom::load_word2vec_binary(bad_header.string()),
                      Catch::Matchers::ContainsSubstring("header"));

    std::string blob = "2 3\nalpha ";
    for (float v : {1.0f, 0.5f, -2.0f}) append_le_float(blob, v);
    blob += "\nbeta ";
    append_le_float(blob, 0.25f);  // promises 3 floats, delivers 1
    const auto truncated = temp_file("truncated.bin");
    write_file(truncated, blob);
    CHECK_THROWS_WITH(lhom::load_word2vec_binary(truncated.string()),
                      Catch::Matchers::ContainsSubstring("byte"));

    const auto no_space = temp_file("nospace.bin");
    write_file(no_space, "1 2\nalphabetagamma");
    CHECK_THROWS_WITH(lhom::load_word2vec_binary(no_space.string()),
                      Catch::Matchers::ContainsSubstring("truncated"));
}

TEST_CASE("wordlist loads with comments and blanks", "[embedding]") {
    const auto path = temp_file("words.txt");
    write_file(path, "# header comment\n\nbank\n  river\t\n# trailing\nwater\n\n");
    CHECK(lhom::load_wordlist(path.string()) ==
          std::vector<std::string>{"bank", "river", "water"});

    const auto two_tok = temp_file("twotok.txt");
    write_file(two_tok, "bank river\n");
    CHECK_THROWS(lhom::load_wordlist(two_tok.string()));
}

TEST_CASE("normalize_to_sphere projects and validates", "[embedding]") {
    WordEmbedding emb;
    emb.insert("a", {3.0, 4.0});
    emb.insert("b", {0.0, 1.0});
    emb.insert("z", {0.0, 0.0});

    const lhom::WordCloud wc = lhom::normalize_to_sphere(emb, {"a", "b"});
    REQUIRE(wc.words == std::vector<std::string>{"a", "b"});
    CHECK(wc.cloud.point(0)[0] == Catch::Approx(0.6).epsilon(1e-12));
    CHECK(wc.cloud.point(0)[1] == Catch::Approx(0.8).epsilon(1e-12));
    // already-unit vector passes through unchanged
    CHECK(wc.cloud.point(1)[1] == 1.0);
    CHECK(wc.index.at("a") == 0);
    CHECK(wc.index.at("b") == 1);

    // every point within 1e-9 of unit norm
    for (std::size_t i = 0; i < wc.cloud.size(); ++i) {
        double norm2 = 0.0;
        for (double x : wc.cloud.point(i)) norm2 += x * x;
        CHECK(std::abs(std::sqrt(norm2) - 1.0) <= 1e-9);
    }

    CHECK_THROWS_WITH(lhom::normalize_to_sphere(emb, {"z"}),
                      Catch::Matchers::ContainsSubstring("zero"));
}

TEST_CASE("missing words are all reported, or skipped on request", "[embedding]") {
    WordEmbedding emb;
    emb.insert("real", {1.0, 0.0});

    CHECK_THROWS_WITH(lhom::normalize_to_sphere(emb, {"ghost", "real", "phantom"}),
                      Catch::Matchers::ContainsSubstring("ghost") &&
                          Catch::Matchers::ContainsSubstring("phantom"));

    std::vector<std::string> warnings;
    const lhom::WordCloud wc =
        lhom::normalize_to_sphere(emb, {"ghost", "real", "phantom"}, {true, &warnings});
    CHECK(wc.words == std::vector<std::string>{"real"});
    REQUIRE(warnings.size() == 1);
    CHECK_THAT(warnings[0], Catch::Matchers::ContainsSubstring("ghost"));
}

TEST_CASE("duplicate normalized points warn, not fail", "[embedding]") {
    WordEmbedding emb;
    emb.insert("x", {2.0, 0.0});
    emb.insert("y", {4.0, 0.0});  // same direction, same normalized point

    std::vector<std::string> warnings;
    const lhom::WordCloud wc = lhom::normalize_to_sphere(emb, {"x", "y"}, {false, &warnings});
    CHECK(wc.words.size() == 2);
    REQUIRE(warnings.size() == 1);
    CHECK_THAT(warnings[0], Catch::Matchers::ContainsSubstring("identical"));
}
