#pragma once

#include "csurg/diagram.hpp"
#include "csurg/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace csurg {

/// How the zigzags required by a negative expansion are signed. The choice
/// changes the resulting contact structure, so it is recorded with the output.
struct ZigzagPolicy {
  enum class Kind { AllNegative, AllPositive, Balanced, Explicit };

  Kind kind = Kind::AllNegative;
  /// Consumed in order across all stabilizations of an expansion (Explicit only).
  std::vector<int> signs;

  /// "all-negative", "all-positive", "balanced", or "explicit:+,-,+".
  static ZigzagPolicy parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const ZigzagPolicy&, const ZigzagPolicy&) = default;
};

/// One contact (+1) or (-1) surgery of an expanded presentation.
struct ExpansionStep {
  /// Original diagram component this knot is a push-off of.
  std::string source_id;
  /// Id of the corresponding component in the derived diagram.
  std::string component_id;
  Rational coefficient;
  /// Each -1 lowers rot by one, each +1 raises it; every entry lowers tb by one.
  std::vector<int> stabilization_signs;
  /// tb and rot of the knot this step was pushed off from (before zigzags).
  std::int64_t parent_tb = 0;
  std::int64_t parent_rot = 0;
  /// Effective invariants of the surgered knot after zigzags.
  std::int64_t tb = 0;
  std::int64_t rot = 0;

  std::size_t stabilizations() const noexcept { return stabilization_signs.size(); }

  friend bool operator==(const ExpansionStep&, const ExpansionStep&) = default;
};

struct ExpandedPresentation {
  std::vector<ExpansionStep> steps;
  SurgeryDiagram derived_diagram;
  ZigzagPolicy policy;
};

/// Negative continued fraction [a1, ..., am] with r = a1 - 1/(a2 - 1/(... - 1/am)),
/// a1 <= -1 and ai <= -2 for i >= 2, computed greedily with ai = floor.
/// Throws Error(RangeError) unless r < 0.
std::vector<BigInt> negative_continued_fraction(const Rational& r);

/// Evaluates a1 - 1/(a2 - 1/(... - 1/am)). Throws std::domain_error on an
/// empty list or a zero intermediate denominator.
Rational evaluate_negative_continued_fraction(const std::vector<BigInt>& digits);

/// Contact (+1/n) surgery as n successive unstabilized push-offs with (+1).
ExpandedPresentation expand_positive_unit_fraction(const LegendrianKnotData& k, std::int64_t n);

/// Contact (+p/q), p > q >= 1 coprime: (+1) on the knot, then the expansion
/// of contact -p/(p-q) on its push-off. Errors: NotCoprime, RangeError.
ExpandedPresentation expand_positive_rational(const LegendrianKnotData& k, std::int64_t p, std::int64_t q,
                                              const ZigzagPolicy& policy = {});

/// Contact r < 0 surgery as a chain of (-1) surgeries on successively
/// stabilized push-offs. Error: RangeError if r >= 0.
ExpandedPresentation expand_negative_rational(const LegendrianKnotData& k, const Rational& r,
                                              const ZigzagPolicy& policy = {});

/// Expands every surgered component; the derived diagram carries only +-1
/// coefficients. Error(Unsupported) for positive coefficients other than
/// 1/n and p/q with p > q.
ExpandedPresentation expand_diagram(const SurgeryDiagram& d, const ZigzagPolicy& policy = {});

}  // namespace csurg
