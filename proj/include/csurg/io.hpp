#pragma once

#include "csurg/classify.hpp"
#include "csurg/diagram.hpp"
#include "csurg/dual_invariants.hpp"
#include "csurg/expansion.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace csurg {

/// Insertion-ordered so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const SurgeryDiagram& d);
Json to_json(const ExpandedPresentation& e);
Json to_json(const DualKnotInvariants& inv);
Json to_json(const BennequinReport& report);
Json to_json(const Verdict& v);

/// Throws Error(ParseError) for wrong shapes or bad rational strings and
/// Error(ValidationError) for diagrams that fail validation. Messages name
/// the offending field.
SurgeryDiagram diagram_from_json(const Json& j);

/// Canonical text form: two-space indented JSON with a trailing newline.
std::string serialize_diagram(const SurgeryDiagram& d);
SurgeryDiagram parse_diagram(std::string_view text);
SurgeryDiagram parse_diagram_file(const std::filesystem::path& path);

}  // namespace csurg
