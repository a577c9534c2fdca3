#pragma once

#include "kblocked/blocked.hpp"
#include "kblocked/constructions.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <variant>

namespace kblocked {

// Malformed or invalid document text.
class DocumentError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// JSON form:
//   {"format": "kblocked-config", "version": 1, "dim": 2,
//    "points": [{"coords": ["0", "1/2"], "colour": 0}, ...],
//    "metadata": {"name": "...", "seed": "...", "provenance": "..."}}
struct ConfigDocument
{
    ColouredPointSet set;
    std::map<std::string, std::string> metadata;
};

// JSON form:
//   {"format": "kblocked-linecover", "version": 1, "k": 3, "n": 2, "lines": [[0, 3, 1], ...]}
struct LineCoverDocument
{
    LineCover cover;
};

using Document = std::variant<ConfigDocument, LineCoverDocument>;

inline constexpr const char* kConfigFormat = "kblocked-config";
inline constexpr const char* kLineCoverFormat = "kblocked-linecover";

std::string dump_document(const ConfigDocument& doc);
std::string dump_document(const LineCoverDocument& doc);

// Throws DocumentError.
Document parse_document(const std::string& text);
ConfigDocument parse_config_document(const std::string& text);

Document read_document_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace kblocked
