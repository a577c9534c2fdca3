#include "kblocked/constructions.hpp"
#include "kblocked/document.hpp"
#include "kblocked/svg.hpp"

#include <doctest.h>

#include <filesystem>
#include <regex>
#include <set>

using namespace kblocked;

namespace {

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("config documents round trip exactly")
{
    std::vector<RationalPoint> pts = {RationalPoint{Rational(1, 3), Rational(-7, 2)},
                                      RationalPoint{Rational(5), Rational(0)}};
    ConfigDocument doc{ColouredPointSet(PointConfig(2, pts), {1, 0}), {{"name", "tiny"}, {"seed", "0"}}};
    auto text = dump_document(doc);
    CHECK(text.find("\"1/3\"") != std::string::npos);
    CHECK(text.find("\"-7/2\"") != std::string::npos);
    auto back = parse_config_document(text);
    CHECK(back.set == doc.set);
    CHECK(back.metadata == doc.metadata);

    auto g3 = grid_3d(3);
    CHECK(parse_config_document(dump_document(ConfigDocument{g3, {}})).set == g3);
}

TEST_CASE("line cover documents round trip")
{
    LineCoverDocument doc{turan_lines(4, 3)};
    auto parsed = parse_document(dump_document(doc));
    auto* cover = std::get_if<LineCoverDocument>(&parsed);
    REQUIRE(cover != nullptr);
    CHECK(cover->cover.lines == doc.cover.lines);
    CHECK(cover->cover.k == 4);
    CHECK(cover->cover.n == 3);
}

TEST_CASE("malformed documents are rejected")
{
    const char* bad[] = {
        "",
        "[]",
        "{\"format\": \"other\"}",
        "{\"format\": \"kblocked-config\", \"version\": 1, \"dim\": 2}",
        "{\"format\": \"kblocked-config\", \"version\": 1, \"dim\": 2, \"points\": [{\"coords\": [0, 1], \"colour\": 0}]}",
        "{\"format\": \"kblocked-config\", \"version\": 1, \"dim\": 2, \"points\": [{\"coords\": [\"0\"], \"colour\": 0}]}",
        "{\"format\": \"kblocked-config\", \"version\": 1, \"dim\": 2, \"points\": [{\"coords\": [\"0\", \"1/0\"], \"colour\": 0}]}",
        "{\"format\": \"kblocked-config\", \"version\": 1, \"dim\": 2, \"points\": [{\"coords\": [\"0\", \"1\"], \"colour\": 1}]}",
        "{\"format\": \"kblocked-config\", \"version\": 1, \"dim\": 2, \"points\": [{\"coords\": [\"0\", \"1\"], \"colour\": 0}, "
        "{\"coords\": [\"0\", \"1\"], \"colour\": 0}]}",
        "{\"format\": \"kblocked-linecover\", \"version\": 1, \"k\": 3, \"lines\": []}",
    };
    for (const char* text : bad) CHECK_THROWS_AS(parse_document(text), DocumentError);
    CHECK_THROWS_AS(parse_config_document(dump_document(LineCoverDocument{turan_lines(3, 2)})), DocumentError);
    CHECK_THROWS_AS(read_document_file("/nonexistent/file.json"), DocumentError);
}

TEST_CASE("golden files match the registry")
{
    for (const auto& name : canonical_names()) {
        auto path = std::filesystem::path(KBLOCKED_DATA_DIR) / (name + ".json");
        auto doc = read_document_file(path.string());
        auto* cfg = std::get_if<ConfigDocument>(&doc);
        REQUIRE(cfg != nullptr);
        CHECK(cfg->set == canonical(name));
        CHECK(verify_blocked(cfg->set).ok);
        CHECK(cfg->metadata.at("name") == name);
    }
}

TEST_CASE("SVG export")
{
    auto svg = render_svg(canonical("K4221"));
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count(svg, "<circle") == 9);
    CHECK(svg.find("</svg>") != std::string::npos);
    // Blocked pairs of K(4,2,2,1): C(4,2) + 1 + 1 = 8 segments.
    CHECK(count(svg, "<line") == 8);
    std::set<std::string> fills;
    std::regex fill_re("<circle[^>]*fill=\"(#[0-9a-f]{6})\"");
    for (std::sregex_iterator it(svg.begin(), svg.end(), fill_re), end; it != end; ++it) fills.insert((*it)[1]);
    CHECK(fills.size() == 4);
    CHECK(render_svg(canonical("K4221")) == svg);

    auto k3333 = render_svg(canonical("K3333"));
    CHECK(count(k3333, "<circle") == 12);

    auto one = render_svg(ColouredPointSet(PointConfig::from_integers({{2, 3}}), {0}));
    CHECK(count(one, "<circle") == 1);
    CHECK(one.find("nan") == std::string::npos);

    CHECK_THROWS(render_svg(grid_3d(3)));
}
