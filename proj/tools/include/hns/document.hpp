#pragma once

#include <optional>
#include <string>

#include "hns/core.hpp"

namespace hns {

/// On-disk description of a system: a JSON object with a name, the six
/// structural constants, and an optional description.
struct SystemDocument {
    std::string name;
    StructuralConstants constants;
    std::optional<std::string> description;
};

/// Parses a system document. Missing keys, unknown constant keys, duplicate
/// keys, and non-numeric values raise ParseError with the offending key.
SystemDocument parse_system(const std::string& text);

/// Deterministic serialization (12 significant digits); parse(serialize(d))
/// reproduces d.
std::string serialize(const SystemDocument& doc);

/// Reads and parses a document from a file path.
SystemDocument load_system(const std::string& path);

/// %.12g rendering used for all CLI numeric output.
std::string format_number(double v);

}  // namespace hns
