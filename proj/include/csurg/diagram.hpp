#pragma once

#include "csurg/matrix.hpp"
#include "csurg/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csurg {

enum class AmbientStatus { Tight, Overtwisted, Unknown };

std::string_view to_string(AmbientStatus status);
/// Accepts "tight", "overtwisted", "unknown". Throws Error(ParseError).
AmbientStatus parse_ambient(std::string_view text);

/// Classical invariants of one oriented nullhomologous Legendrian knot.
struct LegendrianKnotData {
  std::string id;
  std::int64_t tb = 0;
  std::int64_t rot = 0;
  /// Euler characteristic of a minimal genus Seifert surface.
  std::int64_t euler_char = 1;

  friend bool operator==(const LegendrianKnotData&, const LegendrianKnotData&) = default;
};

struct SurgeryComponent {
  LegendrianKnotData knot;
  /// Relative to the contact framing. Empty means the component is not
  /// surgered (typically the knot whose dual invariants are wanted).
  std::optional<Rational> contact_coefficient;

  bool surgered() const noexcept { return contact_coefficient.has_value(); }

  friend bool operator==(const SurgeryComponent&, const SurgeryComponent&) = default;
};

using LinkingTable = std::vector<std::vector<std::int64_t>>;

/**
 * A Legendrian surgery diagram: oriented knots with classical invariants,
 * their pairwise linking numbers and optional contact surgery coefficients.
 *
 * Construction validates the diagram and throws Error(ValidationError)
 * naming the offending field. The diagonal of the linking table is unused
 * and must be zero; framings come from tb + coefficient.
 */
class SurgeryDiagram {
 public:
  SurgeryDiagram() = default;
  SurgeryDiagram(AmbientStatus ambient, std::vector<SurgeryComponent> components, LinkingTable linking,
                 std::string comment = {});

  AmbientStatus ambient() const noexcept { return ambient_; }
  const std::vector<SurgeryComponent>& components() const noexcept { return components_; }
  const LinkingTable& linking() const noexcept { return linking_; }
  const std::string& comment() const noexcept { return comment_; }

  std::size_t size() const noexcept { return components_.size(); }
  std::int64_t lk(std::size_t i, std::size_t j) const { return linking_.at(i).at(j); }

  /// Index of the component with the given id; Error(ValidationError) if absent.
  std::size_t index_of(std::string_view id) const;
  std::optional<std::size_t> find(std::string_view id) const;

  friend bool operator==(const SurgeryDiagram&, const SurgeryDiagram&) = default;

 private:
  AmbientStatus ambient_ = AmbientStatus::Unknown;
  std::vector<SurgeryComponent> components_;
  LinkingTable linking_;
  std::string comment_;
};

/// Contact (+1/n) surgery on a knot, presented as n push-offs.
struct PlusOneChainSpec {
  std::int64_t tb = 0;
  std::int64_t rot = 0;
  std::int64_t euler_char = 1;
  std::int64_t n = 1;
};

/// tb + contact coefficient. Throws Error(MissingCoefficient) for an
/// unsurgered component.
Rational topological_coefficient(const SurgeryComponent& c);

/// n x n, diagonal tb + 1, off-diagonal tb. Throws Error(RangeError) if n < 1.
SquareMatrix build_linking_matrix(const PlusOneChainSpec& spec);

/// (n+1) x (n+1): zero corner, border tb, lower-right block the linking matrix.
SquareMatrix build_extended_matrix(const PlusOneChainSpec& spec);

struct GeneralMatrices {
  /// Framings tb_i + r_i on the diagonal, linking numbers off it.
  SquareMatrix linking;
  /// `linking` bordered by the dual component's linking numbers, zero corner.
  SquareMatrix extended;
  /// lk(dual, surgered_i) in surgered order.
  std::vector<std::int64_t> dual_linking;
  /// Diagram indices of the surgered components, in matrix order.
  std::vector<std::size_t> surgered;
};

/**
 * Linking and extended linking matrices for computing invariants of the knot
 * at `dual_index` in the manifold obtained by the diagram's surgeries.
 *
 * Every surgered component must carry a contact coefficient of +1 or -1
 * (expand first); otherwise Error(UnexpandedCoefficient). The dual component
 * must be unsurgered. Other unsurgered components are ignored.
 */
GeneralMatrices build_general_matrices(const SurgeryDiagram& d, std::size_t dual_index);

/// The diagram realizing contact (+1/n) surgery on a knot K as n push-offs
/// L1..Ln with coefficient +1, plus an (n+1)-st unsurgered push-off "L'".
/// Push-offs are named "L1".."Ln"; all pairwise linking numbers equal tb.
SurgeryDiagram chain_diagram(const PlusOneChainSpec& spec, AmbientStatus ambient = AmbientStatus::Unknown);

/// Reverses the orientation of one component: rot changes sign, as do its
/// linking numbers with every other component.
SurgeryDiagram reverse_orientation(const SurgeryDiagram& d, std::size_t index);

/// Non-fatal checks: tb + rot + euler_char should be even for a
/// nullhomologous knot, and euler_char should be odd (one boundary circle).
std::vector<std::string> lint(const SurgeryDiagram& d);

}  // namespace csurg
