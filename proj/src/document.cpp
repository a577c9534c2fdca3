#include "kblocked/document.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace kblocked {

using nlohmann::json;

std::string dump_document(const ConfigDocument& doc)
{
    json points = json::array();
    for (std::size_t i = 0; i < doc.set.size(); ++i) {
        json coords = json::array();
        for (const auto& c : doc.set.config()[i].coords) coords.push_back(c.to_string());
        points.push_back({{"coords", coords}, {"colour", doc.set.colour(i)}});
    }
    json out = {{"format", kConfigFormat},
                {"version", 1},
                {"dim", doc.set.dim()},
                {"points", points}};
    if (!doc.metadata.empty()) out["metadata"] = doc.metadata;
    return out.dump(2) + "\n";
}

std::string dump_document(const LineCoverDocument& doc)
{
    json out = {{"format", kLineCoverFormat},
                {"version", 1},
                {"k", doc.cover.k},
                {"n", doc.cover.n},
                {"lines", doc.cover.lines}};
    return out.dump(2) + "\n";
}

namespace {

ConfigDocument config_from_json(const json& j)
{
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
        throw DocumentError("'dim' must be a positive integer");
    const auto dim = j["dim"].get<std::size_t>();
    if (!j.contains("points") || !j["points"].is_array()) throw DocumentError("'points' must be an array");

    std::vector<RationalPoint> pts;
    std::vector<int> colours;
    for (const auto& item : j["points"]) {
        if (!item.is_object() || !item.contains("coords") || !item["coords"].is_array())
            throw DocumentError("each point needs a 'coords' array");
        if (!item.contains("colour") || !item["colour"].is_number_integer())
            throw DocumentError("each point needs an integer 'colour'");
        RationalPoint p;
        for (const auto& c : item["coords"]) {
            if (!c.is_string()) throw DocumentError("coordinates must be rational strings \"p/q\"");
            try {
                p.coords.push_back(Rational::parse(c.get<std::string>()));
            } catch (const std::invalid_argument& e) {
                throw DocumentError(e.what());
            }
        }
        if (p.dim() != dim) throw DocumentError("point " + p.to_string() + " does not match 'dim'");
        pts.push_back(std::move(p));
        colours.push_back(item["colour"].get<int>());
    }

    ConfigDocument doc;
    try {
        doc.set = ColouredPointSet(PointConfig(dim, std::move(pts)), std::move(colours));
    } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
    }
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object()) throw DocumentError("'metadata' must be an object");
        for (const auto& [key, value] : j["metadata"].items()) {
            if (!value.is_string()) throw DocumentError("metadata values must be strings");
            doc.metadata[key] = value.get<std::string>();
        }
    }
    return doc;
}

LineCoverDocument cover_from_json(const json& j)
{
    LineCoverDocument doc;
    if (!j.contains("k") || !j["k"].is_number_integer() || !j.contains("n") || !j["n"].is_number_integer())
        throw DocumentError("line cover needs integer 'k' and 'n'");
    doc.cover.k = j["k"].get<int>();
    doc.cover.n = j["n"].get<int>();
    if (!j.contains("lines") || !j["lines"].is_array()) throw DocumentError("'lines' must be an array");
    for (const auto& line : j["lines"]) {
        if (!line.is_array()) throw DocumentError("each line must be an array of vertex indices");
        std::vector<int> vs;
        for (const auto& v : line) {
            if (!v.is_number_integer()) throw DocumentError("vertex indices must be integers");
            vs.push_back(v.get<int>());
        }
        doc.cover.lines.push_back(std::move(vs));
    }
    return doc;
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace

Document parse_document(const std::string& text)
{
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("format") || !j["format"].is_string())
        throw DocumentError("document needs a string 'format' field");
    const auto format = j["format"].get<std::string>();
    if (format == kConfigFormat) return config_from_json(j);
    if (format == kLineCoverFormat) return cover_from_json(j);
    throw DocumentError("unknown document format '" + format + "'");
}

ConfigDocument parse_config_document(const std::string& text)
{
    auto doc = parse_document(text);
    if (auto* c = std::get_if<ConfigDocument>(&doc)) return std::move(*c);
    throw DocumentError("expected a point configuration document");
}

Document read_document_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace kblocked
