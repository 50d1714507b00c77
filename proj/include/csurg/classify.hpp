#pragma once

#include "csurg/diagram.hpp"
#include "csurg/dual_invariants.hpp"
#include "csurg/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csurg {

enum class Conclusion { Overtwisted, Tight, Inconclusive };

std::string_view to_string(Conclusion c);

namespace rule {
inline constexpr std::string_view kThm1 = "thm1";
inline constexpr std::string_view kThm2 = "thm2";
inline constexpr std::string_view kLemmaTight = "lemma-tight";
inline constexpr std::string_view kBennequinViolation = "bennequin-violation";
inline constexpr std::string_view kNone = "none";
}  // namespace rule

/// Trace entries starting with this tag mark a knot refuting the conjecture
/// that contact (+n) surgery is overtwisted for tb <= -2 and n < |tb|.
inline constexpr std::string_view kConwayCounterexample = "conway-counterexample";

/**
 * Outcome of a decision rule. Conclusion is Inconclusive exactly when rule is
 * "none"; the trace lists the exact facts the conclusion rests on.
 */
struct Verdict {
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string rule = std::string(rule::kNone);
  std::vector<std::string> trace;
  /// Component the verdict is about; empty for diagram-free calls.
  std::string component;

  bool has_flag(std::string_view tag) const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct BennequinReport {
  Rational lhs;  // tb_q + |rot_q|
  Rational rhs;  // -euler_char / order
  bool satisfied = true;

  friend bool operator==(const BennequinReport&, const BennequinReport&) = default;
};

/// Exact test of tb_Q + |rot_Q| <= -chi(Sigma)/r. A violation certifies that
/// the contact manifold containing the knot is overtwisted.
BennequinReport bennequin_check(const DualKnotInvariants& inv);

/// Overtwisted by "bennequin-violation" when the report is violated.
Verdict verdict_from_bennequin(const DualKnotInvariants& inv, const BennequinReport& report);

/// Contact (+1/n) surgery on a knot in a tight manifold with tb < 0,
/// euler_char <= 0 and rot > -euler_char is overtwisted. With
/// both_orientations, |rot| is tested instead of rot.
Verdict classify_thm1(AmbientStatus ambient, const LegendrianKnotData& k, std::int64_t n,
                      bool both_orientations = true);

/// Contact (+1/n) surgery in an overtwisted manifold is overtwisted.
Verdict classify_thm2(AmbientStatus ambient, const Rational& coefficient);

/// If contact (+1) surgery is tight, so is contact (+p/q) for coprime
/// p > q >= 1. Throws Error(NotCoprime).
Verdict classify_lemma_tight(bool plus_one_known_tight, std::int64_t p, std::int64_t q);

struct ComponentFacts {
  bool plus_one_known_tight = false;
};

struct ClassifyOptions {
  std::map<std::string, ComponentFacts, std::less<>> facts;
  /// Contact coefficient to test on unsurgered components.
  std::optional<Rational> query;
  bool both_orientations = true;
};

/**
 * Applies every rule that fits each surgered (or queried) component and
 * returns one verdict per such component, in diagram order.
 *
 * Throws Error(InconsistentAssumptions) when the facts contradict the
 * diagram, e.g. a (+1)-tight assumption in an overtwisted ambient manifold.
 */
std::vector<Verdict> classify_diagram(const SurgeryDiagram& d, const ClassifyOptions& options = {});

}  // namespace csurg
