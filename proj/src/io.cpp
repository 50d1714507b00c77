#include "csurg/io.hpp"

#include "csurg/error.hpp"

#include <fstream>
#include <sstream>

namespace csurg {

namespace {

Json rational_or_null(const std::optional<Rational>& r) { return r ? Json(r->to_string()) : Json(nullptr); }

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorKind::ParseError, where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorKind::ParseError, where + "." + key + ": missing");
  return *it;
}

std::int64_t as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, where + ": expected an integer");
  return v.get<std::int64_t>();
}

std::optional<Rational> as_coefficient(const Json& v, const std::string& where) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) throw Error(ErrorKind::ParseError, where + ": expected a \"p/q\" string or null");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, where + ": " + e.what());
  }
}

}  // namespace

Json to_json(const SurgeryDiagram& d) {
  Json j;
  j["ambient"] = std::string(to_string(d.ambient()));
  if (!d.comment().empty()) j["comment"] = d.comment();
  Json comps = Json::array();
  for (const auto& c : d.components()) {
    Json cj;
    cj["id"] = c.knot.id;
    cj["tb"] = c.knot.tb;
    cj["rot"] = c.knot.rot;
    cj["euler_char"] = c.knot.euler_char;
    cj["contact_coefficient"] = rational_or_null(c.contact_coefficient);
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  j["linking"] = d.linking();
  return j;
}

Json to_json(const ExpandedPresentation& e) {
  Json j = to_json(e.derived_diagram);
  j["zigzag_policy"] = e.policy.to_string();
  Json steps = Json::array();
  for (const auto& s : e.steps) {
    Json sj;
    sj["source_id"] = s.source_id;
    sj["component_id"] = s.component_id;
    sj["coefficient"] = s.coefficient.to_string();
    sj["stabilizations"] = s.stabilizations();
    sj["stabilization_signs"] = s.stabilization_signs;
    sj["parent_tb"] = s.parent_tb;
    sj["tb"] = s.tb;
    sj["rot"] = s.rot;
    steps.push_back(std::move(sj));
  }
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const DualKnotInvariants& inv) {
  Json j;
  j["tb_q"] = inv.tb_q.to_string();
  j["rot_q"] = inv.rot_q.to_string();
  j["order"] = inv.order.str();
  j["euler_char"] = inv.euler_char;
  if (!inv.notes.empty()) j["notes"] = inv.notes;
  return j;
}

Json to_json(const BennequinReport& report) {
  Json j;
  j["lhs"] = report.lhs.to_string();
  j["rhs"] = report.rhs.to_string();
  j["satisfied"] = report.satisfied;
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  if (!v.component.empty()) j["component"] = v.component;
  j["conclusion"] = std::string(to_string(v.conclusion));
  j["rule"] = v.rule;
  j["trace"] = v.trace;
  return j;
}

SurgeryDiagram diagram_from_json(const Json& j) {
  const std::string root = "diagram";
  const Json& ambient = require(j, "ambient", root);
  if (!ambient.is_string()) throw Error(ErrorKind::ParseError, "ambient: expected a string");
  const AmbientStatus status = parse_ambient(ambient.get<std::string>());

  std::string comment;
  if (auto it = j.find("comment"); it != j.end()) {
    if (!it->is_string()) throw Error(ErrorKind::ParseError, "comment: expected a string");
    comment = it->get<std::string>();
  }

  const Json& comps = require(j, "components", root);
  if (!comps.is_array()) throw Error(ErrorKind::ParseError, "components: expected an array");
  std::vector<SurgeryComponent> components;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = "components[" + std::to_string(i) + "]";
    const Json& c = comps[i];
    const Json& id = require(c, "id", where);
    if (!id.is_string()) throw Error(ErrorKind::ParseError, where + ".id: expected a string");
    SurgeryComponent sc;
    sc.knot.id = id.get<std::string>();
    sc.knot.tb = as_int(require(c, "tb", where), where + ".tb");
    sc.knot.rot = as_int(require(c, "rot", where), where + ".rot");
    sc.knot.euler_char = as_int(require(c, "euler_char", where), where + ".euler_char");
    sc.contact_coefficient = as_coefficient(require(c, "contact_coefficient", where), where + ".contact_coefficient");
    components.push_back(std::move(sc));
  }

  const Json& lk = require(j, "linking", root);
  if (!lk.is_array()) throw Error(ErrorKind::ParseError, "linking: expected an array of arrays");
  LinkingTable linking;
  for (std::size_t i = 0; i < lk.size(); ++i) {
    const std::string where = "linking[" + std::to_string(i) + "]";
    if (!lk[i].is_array()) throw Error(ErrorKind::ParseError, where + ": expected an array");
    std::vector<std::int64_t> row;
    for (std::size_t k = 0; k < lk[i].size(); ++k) {
      row.push_back(as_int(lk[i][k], where + "[" + std::to_string(k) + "]"));
    }
    linking.push_back(std::move(row));
  }
  return SurgeryDiagram(status, std::move(components), std::move(linking), std::move(comment));
}

std::string serialize_diagram(const SurgeryDiagram& d) { return to_json(d).dump(2) + "\n"; }

SurgeryDiagram parse_diagram(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return diagram_from_json(j);
}

SurgeryDiagram parse_diagram_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_diagram(buffer.str());
}

}  // namespace csurg
