#include "csurg/selftest.hpp"

#include "csurg/bundled.hpp"
#include "csurg/classify.hpp"
#include "csurg/diagram.hpp"
#include "csurg/dual_invariants.hpp"
#include "csurg/error.hpp"
#include "csurg/expansion.hpp"

#include <numeric>
#include <sstream>

namespace csurg {

bool SelftestResult::ok() const { return first_failure() == nullptr; }

const SelftestCheck* SelftestResult::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

// Laplace expansion along the first row; independent of the Bareiss path.
Rational cofactor_det(const SquareMatrix& m) {
  const std::size_t n = m.dimension();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Rational total;
  for (std::size_t col = 0; col < n; ++col) {
    if (m.at(0, col).is_zero()) continue;
    std::vector<Rational> minor;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) minor.push_back(m.at(i, j));
    Rational term = m.at(0, col) * cofactor_det(SquareMatrix(n - 1, std::move(minor)));
    total += col % 2 == 0 ? term : -term;
  }
  return total;
}

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  template <typename Describe>
  void expect(bool condition, Describe describe) {
    ++result_.cases;
    if (!condition && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }

  SelftestCheck done() { return std::move(result_); }

 private:
  SelftestCheck result_;
};

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

SelftestCheck figure1_tb(const DeterminantFn& determinant) {
  Check check("tb = tb0 + det M0/det M = -3 on the counterexample diagram");
  const SurgeryDiagram d = bundled::figure1();
  const std::size_t dual = d.index_of("L");
  const GeneralMatrices mats = build_general_matrices(d, dual);
  const Rational tb = Rational(d.components()[dual].knot.tb) + determinant(mats.extended) / determinant(mats.linking);
  check.expect(tb == Rational(-3), [&] { return cat("got ", tb); });
  const DualKnotInvariants inv = dual_invariants_matrix(d, dual);
  check.expect(inv.tb_q == Rational(-3), [&] { return cat("dual_invariants_matrix tb_q = ", inv.tb_q); });
  return check.done();
}

SelftestCheck linking_det_grid(const DeterminantFn& determinant) {
  Check check("det(M) = ntb+1 and det(M0) = -ntb^2, tb in [-10,-1], n in [1,10]");
  for (std::int64_t tb = -10; tb <= -1; ++tb) {
    for (std::int64_t n = 1; n <= 10; ++n) {
      const PlusOneChainSpec spec{tb, 0, 1, n};
      const SquareMatrix m = build_linking_matrix(spec);
      const SquareMatrix m0 = build_extended_matrix(spec);
      const Rational dm = determinant(m);
      const Rational dm0 = determinant(m0);
      check.expect(dm == Rational(n * tb + 1), [&] { return cat("det(M) = ", dm, " for tb=", tb, " n=", n); });
      check.expect(dm0 == Rational(-n * tb * tb), [&] { return cat("det(M0) = ", dm0, " for tb=", tb, " n=", n); });
      if (n <= 6) {
        check.expect(dm == cofactor_det(m), [&] { return cat("det(M) != cofactor oracle, tb=", tb, " n=", n); });
        check.expect(dm0 == cofactor_det(m0), [&] { return cat("det(M0) != cofactor oracle, tb=", tb, " n=", n); });
      }
    }
  }
  return check.done();
}

SelftestCheck closed_form_grid() {
  Check check("closed form tb/(ntb+1), rot/(ntb+1) equals the linking-matrix path");
  for (std::int64_t tb = -10; tb <= -1; ++tb) {
    for (std::int64_t rot = -10; rot <= 10; ++rot) {
      for (std::int64_t n = 1; n <= 8; ++n) {
        if (n * tb + 1 == 0) continue;
        const PlusOneChainSpec spec{tb, rot, -1, n};
        const SurgeryDiagram d = chain_diagram(spec);
        const DualKnotInvariants matrix = dual_invariants_matrix(d, d.size() - 1);
        const DualKnotInvariants closed = dual_invariants_closed_form(tb, rot, -1, n);
        check.expect(matrix == closed, [&] {
          return cat("tb=", tb, " rot=", rot, " n=", n, ": matrix (", matrix.tb_q, ", ", matrix.rot_q, ", ",
                     matrix.order.str(), ") vs closed (", closed.tb_q, ", ", closed.rot_q, ", ", closed.order.str(), ")");
        });
      }
    }
  }
  return check.done();
}

SelftestCheck bennequin_chain_grid() {
  Check check("dual knots violate tb_Q + |rot_Q| <= -chi/r when rot > -chi; equality at rot = -chi");
  for (std::int64_t chi : {-1, -3, -5}) {
    for (std::int64_t tb = -10; tb <= -1; ++tb) {
      for (std::int64_t n = 1; n <= 8; ++n) {
        if (n * tb + 1 == 0) continue;
        // rot <= -chi - tb: the knot itself must satisfy the Bennequin bound.
        for (std::int64_t rot = -chi; rot <= -chi - tb; ++rot) {
          const DualKnotInvariants inv = dual_invariants_closed_form(tb, rot, chi, n);
          const BennequinReport report = bennequin_check(inv);
          const Rational middle(BigInt(chi + 2 * rot), inv.order);
          if (rot == -chi) {
            // Only the lower bound is tight here; the mechanism certifies nothing.
            check.expect(middle == report.rhs && report.lhs >= middle,
                         [&] { return cat("boundary rot=-chi not an equality: tb=", tb, " n=", n, " chi=", chi); });
          } else {
            check.expect(!report.satisfied && report.lhs >= middle && middle > report.rhs,
                         [&] { return cat("no strict violation: tb=", tb, " rot=", rot, " n=", n, " chi=", chi); });
          }
        }
      }
    }
  }
  return check.done();
}

SelftestCheck counterexample_verdicts() {
  Check check("contact (+n) on the tb = -3 knot is tight for n in [2,10]; flagged for n = 2");
  const SurgeryDiagram d = bundled::figure1();
  for (std::int64_t n = 2; n <= 10; ++n) {
    ClassifyOptions options;
    options.facts["L"].plus_one_known_tight = true;
    options.query = Rational(n);
    const auto verdicts = classify_diagram(d, options);
    const Verdict* v = nullptr;
    for (const auto& x : verdicts)
      if (x.component == "L") v = &x;
    check.expect(v && v->conclusion == Conclusion::Tight && v->rule == rule::kLemmaTight,
                 [&] { return cat("n=", n, ": not tight"); });
    const bool flagged = v && v->has_flag(kConwayCounterexample);
    check.expect(flagged == (n < 3), [&] { return cat("n=", n, ": counterexample flag ", flagged); });
  }
  return check.done();
}

SelftestCheck degenerate_s1xs2() {
  Check check("contact (+1) on the tb = -1 unknot: dual not rationally nullhomologous");
  bool raised = false;
  try {
    dual_invariants_of(bundled::s1xs2(), "U");
  } catch (const Error& e) {
    raised = e.kind() == ErrorKind::NonNullhomologousDual;
  }
  check.expect(raised, [] { return std::string("NonNullhomologousDual not raised"); });
  return check.done();
}

SelftestCheck continued_fractions() {
  Check check("negative continued fractions of -p/q, 1 <= q < p <= 40, evaluate back exactly");
  for (std::int64_t p = 2; p <= 40; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const Rational r(BigInt(-p), BigInt(q));
      const auto digits = negative_continued_fraction(r);
      bool bounds = digits.front() <= -1;
      for (std::size_t i = 1; i < digits.size(); ++i) bounds = bounds && digits[i] <= -2;
      check.expect(bounds && evaluate_negative_continued_fraction(digits) == r,
                   [&] { return cat("-", p, "/", q, " failed"); });
    }
  }
  const auto e = expand_positive_rational({"K", -2, 0, 1}, 5, 2);
  const bool shape = e.steps.size() == 3 && e.steps[0].coefficient == Rational(1) &&
                     e.steps[1].coefficient == Rational(-1) && e.steps[2].coefficient == Rational(-1) &&
                     negative_continued_fraction(Rational(-5, 3)) == std::vector<BigInt>{-2, -3};
  check.expect(shape, [] { return std::string("+5/2 is not (+1) then [-2,-3]"); });
  return check.done();
}

}  // namespace

SelftestResult run_selftest(const DeterminantFn& determinant) {
  SelftestResult result;
  result.checks.push_back(figure1_tb(determinant));
  result.checks.push_back(linking_det_grid(determinant));
  result.checks.push_back(closed_form_grid());
  result.checks.push_back(bennequin_chain_grid());
  result.checks.push_back(counterexample_verdicts());
  result.checks.push_back(degenerate_s1xs2());
  result.checks.push_back(continued_fractions());
  return result;
}

}  // namespace csurg
