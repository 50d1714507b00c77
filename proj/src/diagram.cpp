#include "csurg/diagram.hpp"

#include "csurg/error.hpp"

#include <set>
#include <utility>

namespace csurg {

std::string_view to_string(AmbientStatus status) {
  switch (status) {
    case AmbientStatus::Tight: return "tight";
    case AmbientStatus::Overtwisted: return "overtwisted";
    case AmbientStatus::Unknown: return "unknown";
  }
  return "unknown";
}

AmbientStatus parse_ambient(std::string_view text) {
  if (text == "tight") return AmbientStatus::Tight;
  if (text == "overtwisted") return AmbientStatus::Overtwisted;
  if (text == "unknown") return AmbientStatus::Unknown;
  throw Error(ErrorKind::ParseError, "ambient: expected tight|overtwisted|unknown, got '" + std::string(text) + "'");
}

SurgeryDiagram::SurgeryDiagram(AmbientStatus ambient, std::vector<SurgeryComponent> components, LinkingTable linking,
                               std::string comment)
    : ambient_(ambient), components_(std::move(components)), linking_(std::move(linking)), comment_(std::move(comment)) {
  const std::size_t n = components_.size();
  std::set<std::string, std::less<>> ids;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = components_[i];
    const std::string field = "components[" + std::to_string(i) + "]";
    if (c.knot.id.empty()) throw Error(ErrorKind::ValidationError, field + ".id: empty");
    if (!ids.insert(c.knot.id).second) {
      throw Error(ErrorKind::ValidationError, field + ".id: duplicate id '" + c.knot.id + "'");
    }
    if (c.knot.euler_char > 1) {
      throw Error(ErrorKind::ValidationError, field + ".euler_char: must be <= 1, got " + std::to_string(c.knot.euler_char));
    }
    if (c.contact_coefficient && c.contact_coefficient->is_zero()) {
      throw Error(ErrorKind::ValidationError, field + ".contact_coefficient: must be nonzero");
    }
  }
  if (linking_.size() != n) {
    throw Error(ErrorKind::ValidationError,
                "linking: expected " + std::to_string(n) + " rows, got " + std::to_string(linking_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (linking_[i].size() != n) {
      throw Error(ErrorKind::ValidationError, "linking[" + std::to_string(i) + "]: expected " + std::to_string(n) +
                                                  " entries, got " + std::to_string(linking_[i].size()));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (linking_[i][i] != 0) {
      throw Error(ErrorKind::ValidationError, "linking[" + std::to_string(i) + "][" + std::to_string(i) +
                                                  "]: diagonal must be 0");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (linking_[i][j] != linking_[j][i]) {
        throw Error(ErrorKind::ValidationError, "linking[" + std::to_string(i) + "][" + std::to_string(j) +
                                                    "]: not symmetric (" + std::to_string(linking_[i][j]) +
                                                    " vs " + std::to_string(linking_[j][i]) + ")");
      }
    }
  }
}

std::optional<std::size_t> SurgeryDiagram::find(std::string_view id) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].knot.id == id) return i;
  return std::nullopt;
}

std::size_t SurgeryDiagram::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorKind::ValidationError, "no component with id '" + std::string(id) + "'");
}

Rational topological_coefficient(const SurgeryComponent& c) {
  if (!c.contact_coefficient) {
    throw Error(ErrorKind::MissingCoefficient, "component '" + c.knot.id + "' has no contact coefficient");
  }
  return Rational(c.knot.tb) + *c.contact_coefficient;
}

namespace {

void require_positive_n(const PlusOneChainSpec& spec) {
  if (spec.n < 1) throw Error(ErrorKind::RangeError, "n must be >= 1, got " + std::to_string(spec.n));
}

}  // namespace

SquareMatrix build_linking_matrix(const PlusOneChainSpec& spec) {
  require_positive_n(spec);
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<Rational> e(n * n, Rational(spec.tb));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Rational(spec.tb + 1);
  return SquareMatrix(n, std::move(e));
}

SquareMatrix build_extended_matrix(const PlusOneChainSpec& spec) {
  SquareMatrix inner = build_linking_matrix(spec);
  const std::size_t n = inner.dimension() + 1;
  std::vector<Rational> e(n * n);
  for (std::size_t j = 1; j < n; ++j) {
    e[j] = spec.tb;
    e[j * n] = spec.tb;
    for (std::size_t i = 1; i < n; ++i) e[i * n + j] = inner.at(i - 1, j - 1);
  }
  return SquareMatrix(n, std::move(e));
}

GeneralMatrices build_general_matrices(const SurgeryDiagram& d, std::size_t dual_index) {
  if (dual_index >= d.size()) {
    throw Error(ErrorKind::ValidationError, "dual index " + std::to_string(dual_index) + " out of range");
  }
  const auto& dual = d.components()[dual_index];
  if (dual.surgered()) {
    throw Error(ErrorKind::ValidationError, "dual component '" + dual.knot.id + "' must not carry a coefficient");
  }
  GeneralMatrices out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& c = d.components()[i];
    if (!c.surgered()) continue;
    const Rational& r = *c.contact_coefficient;
    if (r != Rational(1) && r != Rational(-1)) {
      throw Error(ErrorKind::UnexpandedCoefficient,
                  "component '" + c.knot.id + "' has contact coefficient " + r.to_string() + "; expand to +-1 first");
    }
    out.surgered.push_back(i);
  }
  const std::size_t k = out.surgered.size();
  std::vector<Rational> m(k * k);
  std::vector<Rational> m0((k + 1) * (k + 1));
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t ia = out.surgered[a];
    const std::int64_t to_dual = d.lk(dual_index, ia);
    out.dual_linking.push_back(to_dual);
    m0[a + 1] = to_dual;
    m0[(a + 1) * (k + 1)] = to_dual;
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t ib = out.surgered[b];
      Rational entry = a == b ? topological_coefficient(d.components()[ia]) : Rational(d.lk(ia, ib));
      m[a * k + b] = entry;
      m0[(a + 1) * (k + 1) + (b + 1)] = entry;
    }
  }
  out.linking = SquareMatrix(k, std::move(m));
  out.extended = SquareMatrix(k + 1, std::move(m0));
  return out;
}

SurgeryDiagram chain_diagram(const PlusOneChainSpec& spec, AmbientStatus ambient) {
  require_positive_n(spec);
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<SurgeryComponent> comps;
  comps.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    comps.push_back({{"L" + std::to_string(i + 1), spec.tb, spec.rot, spec.euler_char}, Rational(1)});
  }
  comps.push_back({{"L'", spec.tb, spec.rot, spec.euler_char}, std::nullopt});
  LinkingTable linking(n + 1, std::vector<std::int64_t>(n + 1, spec.tb));
  for (std::size_t i = 0; i <= n; ++i) linking[i][i] = 0;
  return SurgeryDiagram(ambient, std::move(comps), std::move(linking));
}

SurgeryDiagram reverse_orientation(const SurgeryDiagram& d, std::size_t index) {
  if (index >= d.size()) throw Error(ErrorKind::ValidationError, "component index out of range");
  auto comps = d.components();
  auto linking = d.linking();
  comps[index].knot.rot = -comps[index].knot.rot;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j == index) continue;
    linking[index][j] = -linking[index][j];
    linking[j][index] = -linking[j][index];
  }
  return SurgeryDiagram(d.ambient(), std::move(comps), std::move(linking), d.comment());
}

std::vector<std::string> lint(const SurgeryDiagram& d) {
  std::vector<std::string> warnings;
  for (const auto& c : d.components()) {
    const auto& k = c.knot;
    if ((k.tb + k.rot + k.euler_char) % 2 != 0) {
      warnings.push_back("component '" + k.id + "': tb + rot + euler_char is odd; not realizable by a "
                         "nullhomologous Legendrian knot");
    }
    if (k.euler_char % 2 == 0) {
      warnings.push_back("component '" + k.id + "': even euler_char; Seifert surface is not connected with one "
                         "boundary circle");
    }
  }
  return warnings;
}

}  // namespace csurg
