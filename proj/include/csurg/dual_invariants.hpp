#pragma once

#include "csurg/diagram.hpp"
#include "csurg/expansion.hpp"
#include "csurg/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace csurg {

/// Rational classical invariants of a surgery-dual Legendrian knot.
struct DualKnotInvariants {
  Rational tb_q;
  Rational rot_q;
  /// Homological order r of the dual knot; at least 1.
  BigInt order = 1;
  /// Euler characteristic of the rational Seifert surface, inherited from the
  /// original knot's Seifert surface.
  std::int64_t euler_char = 1;
  /// Diagnostics from the general path (not part of the value).
  std::vector<std::string> notes;

  friend bool operator==(const DualKnotInvariants& a, const DualKnotInvariants& b) {
    return a.tb_q == b.tb_q && a.rot_q == b.rot_q && a.order == b.order && a.euler_char == b.euler_char;
  }
};

/// General linking-matrix route for the knot at `dual_index`:
///   tb_q  = tb + det(M0) / det(M)
///   rot_q = rot - <rot vector of surgered knots, M^-1 * lk vector>
/// The order is the order of the dual's class in H1 = coker M.
/// Throws Error(NonNullhomologousDual) when det(M) == 0.
DualKnotInvariants dual_invariants_matrix(const SurgeryDiagram& d, std::size_t dual_index);
DualKnotInvariants dual_invariants_matrix(const SurgeryDiagram& d, std::string_view dual_id);

/// Closed forms for the dual of contact (+1/n) surgery:
/// tb/(n tb + 1), rot/(n tb + 1), order |n tb + 1|.
/// Throws Error(NonNullhomologousDual) when n tb + 1 == 0, Error(RangeError) if n < 1.
DualKnotInvariants dual_invariants_closed_form(std::int64_t tb, std::int64_t rot, std::int64_t euler_char,
                                               std::int64_t n);

/// Appends the dual of surgered component `index`: an unsurgered Legendrian
/// push-off named id + "'" with the component's tb, rot and euler_char,
/// linking it tb times and every other component as the original does.
SurgeryDiagram with_dual_pushoff(const SurgeryDiagram& d, std::size_t index);

/// Dual invariants of component `id`. For a surgered component this is the
/// surgery dual (its push-off after surgery); for an unsurgered one, the knot
/// itself in the surgered manifold. Other coefficients are expanded to +-1
/// first with the given zigzag policy.
DualKnotInvariants dual_invariants_of(const SurgeryDiagram& d, std::string_view id, const ZigzagPolicy& policy = {});

/// |n tb + 1|; zero means the dual is not rationally nullhomologous.
BigInt homological_order(std::int64_t tb, std::int64_t n);

}  // namespace csurg
