#pragma once

#include "csurg/matrix.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace csurg {

struct SelftestCheck {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First mismatch, empty on success.
  std::string detail;
};

struct SelftestResult {
  std::vector<SelftestCheck> checks;

  bool ok() const;
  const SelftestCheck* first_failure() const;
};

using DeterminantFn = std::function<Rational(const SquareMatrix&)>;

/// Runs the identity grids: linking/extended determinants, closed form vs
/// linking-matrix dual invariants, the Bennequin violation chain, the tb = -3
/// counterexample, the (+n)-tight verdicts, the S1 x S2 degenerate case and
/// continued-fraction round trips. `determinant` replaces det() in the
/// determinant identities (fault injection).
SelftestResult run_selftest(const DeterminantFn& determinant = [](const SquareMatrix& m) { return det(m); });

}  // namespace csurg
