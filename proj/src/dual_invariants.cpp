#include "csurg/dual_invariants.hpp"

#include "csurg/error.hpp"
#include "csurg/matrix.hpp"

namespace csurg {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

bool divides(const BigInt& d, const BigInt& n) { return BigInt(n % d).is_zero(); }

}  // namespace

DualKnotInvariants dual_invariants_matrix(const SurgeryDiagram& d, std::size_t dual_index) {
  const GeneralMatrices mats = build_general_matrices(d, dual_index);
  const auto& dual = d.components()[dual_index].knot;

  const Rational det_m = det(mats.linking);
  if (det_m.is_zero()) {
    throw Error(ErrorKind::NonNullhomologousDual,
                "det M = 0: the dual of '" + dual.id + "' is not rationally nullhomologous, so tb_Q and rot_Q are undefined");
  }
  const Rational det_m0 = det(mats.extended);

  RationalVector lk(mats.dual_linking.begin(), mats.dual_linking.end());
  RationalVector rots;
  for (std::size_t i : mats.surgered) rots.emplace_back(d.components()[i].knot.rot);
  const RationalVector weights = solve(mats.linking, lk);

  DualKnotInvariants out;
  out.tb_q = Rational(dual.tb) + det_m0 / det_m;
  out.rot_q = Rational(dual.rot) - inner_product(rots, weights);
  out.euler_char = dual.euler_char;

  // Order of the class lk in coker M: smallest r with r * M^-1 lk integral.
  BigInt order = 1;
  for (const auto& w : weights) order = lcm(order, w.den());
  out.order = order;
  if (!divides(out.tb_q.den(), out.order) || !divides(out.rot_q.den(), out.order)) {
    out.notes.push_back("refined order " + out.order.str() + " not divisible by invariant denominators; using |det M|");
    out.order = abs_big(det_m.num());
  }
  return out;
}

DualKnotInvariants dual_invariants_matrix(const SurgeryDiagram& d, std::string_view dual_id) {
  return dual_invariants_matrix(d, d.index_of(dual_id));
}

SurgeryDiagram with_dual_pushoff(const SurgeryDiagram& d, std::size_t index) {
  if (index >= d.size()) throw Error(ErrorKind::ValidationError, "component index out of range");
  auto comps = d.components();
  const auto& source = comps[index].knot;
  comps.push_back({{source.id + "'", source.tb, source.rot, source.euler_char}, std::nullopt});
  LinkingTable linking = d.linking();
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t value = i == index ? source.tb : d.lk(index, i);
    linking[i].push_back(value);
  }
  std::vector<std::int64_t> last;
  for (std::size_t i = 0; i < n; ++i) last.push_back(linking[i][n]);
  last.push_back(0);
  linking.push_back(std::move(last));
  return SurgeryDiagram(d.ambient(), std::move(comps), std::move(linking), d.comment());
}

DualKnotInvariants dual_invariants_of(const SurgeryDiagram& d, std::string_view id, const ZigzagPolicy& policy) {
  const std::size_t index = d.index_of(id);
  SurgeryDiagram working = d;
  std::string dual_id(id);
  if (d.components()[index].surgered()) {
    working = with_dual_pushoff(d, index);
    dual_id = working.components().back().knot.id;
  }
  const ExpandedPresentation expanded = expand_diagram(working, policy);
  return dual_invariants_matrix(expanded.derived_diagram, dual_id);
}

BigInt homological_order(std::int64_t tb, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::RangeError, "n must be >= 1, got " + std::to_string(n));
  return abs_big(BigInt(n) * tb + 1);
}

DualKnotInvariants dual_invariants_closed_form(std::int64_t tb, std::int64_t rot, std::int64_t euler_char,
                                               std::int64_t n) {
  const BigInt order = homological_order(tb, n);
  if (order.is_zero()) {
    throw Error(ErrorKind::NonNullhomologousDual, "n*tb + 1 = 0 (tb=" + std::to_string(tb) + ", n=" +
                                                      std::to_string(n) + "): dual is not rationally nullhomologous");
  }
  const BigInt denom = BigInt(n) * tb + 1;
  DualKnotInvariants out;
  out.tb_q = Rational(BigInt(tb), denom);
  out.rot_q = Rational(BigInt(rot), denom);
  out.order = order;
  out.euler_char = euler_char;
  return out;
}

}  // namespace csurg
