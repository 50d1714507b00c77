#include "csurg/classify.hpp"

#include "csurg/error.hpp"
#include "csurg/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace csurg {

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Overtwisted: return "overtwisted";
    case Conclusion::Tight: return "tight";
    case Conclusion::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

bool Verdict::has_flag(std::string_view tag) const {
  return std::any_of(trace.begin(), trace.end(), [&](const std::string& t) { return t.starts_with(tag); });
}

namespace {

std::string str(const Rational& r) { return r.to_string(); }

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Verdict inconclusive(std::vector<std::string> trace, std::string reason) {
  trace.push_back(std::move(reason));
  return Verdict{Conclusion::Inconclusive, std::string(rule::kNone), std::move(trace), {}};
}

constexpr std::string_view kBoundSource =
    "bound form tb_Q + |rot_Q| <= -chi(Sigma)/r, reconstructed from the dual (+1/n) computation";

}  // namespace

BennequinReport bennequin_check(const DualKnotInvariants& inv) {
  if (inv.order < 1) throw Error(ErrorKind::RangeError, "homological order must be >= 1");
  BennequinReport report;
  report.lhs = inv.tb_q + inv.rot_q.abs();
  report.rhs = Rational(BigInt(-inv.euler_char), inv.order);
  report.satisfied = report.lhs <= report.rhs;
  return report;
}

Verdict verdict_from_bennequin(const DualKnotInvariants& inv, const BennequinReport& report) {
  std::vector<std::string> trace{
      cat("tb_Q = ", str(inv.tb_q), ", rot_Q = ", str(inv.rot_q), ", chi(Sigma) = ", inv.euler_char,
          ", r = ", inv.order.str()),
      cat("tb_Q + |rot_Q| = ", str(report.lhs), ", -chi(Sigma)/r = ", str(report.rhs)),
  };
  if (report.satisfied) return inconclusive(std::move(trace), "rational Bennequin bound satisfied; no conclusion");
  trace.push_back(cat("rational Bennequin bound violated: ", str(report.lhs), " > ", str(report.rhs),
                      "; the knot cannot lie in a tight contact manifold (", kBoundSource, ")"));
  return Verdict{Conclusion::Overtwisted, std::string(rule::kBennequinViolation), std::move(trace), {}};
}

Verdict classify_thm1(AmbientStatus ambient, const LegendrianKnotData& k, std::int64_t n, bool both_orientations) {
  if (n < 1) throw Error(ErrorKind::RangeError, "n must be >= 1, got " + std::to_string(n));
  std::vector<std::string> trace{cat("contact (+1/", n, ") surgery on '", k.id, "': tb = ", k.tb, ", rot = ", k.rot,
                                     ", chi = ", k.euler_char, ", ambient ", to_string(ambient))};
  if (ambient != AmbientStatus::Tight) return inconclusive(std::move(trace), "thm1 needs a tight ambient manifold");
  if (k.tb + std::abs(k.rot) > -k.euler_char) {
    trace.push_back(cat("warning: tb + |rot| = ", k.tb + std::abs(k.rot), " > -chi = ", -k.euler_char,
                        "; input violates Bennequin's inequality for a tight manifold"));
  }
  if (k.euler_char > 0) return inconclusive(std::move(trace), "thm1 needs chi <= 0");
  if (k.tb >= 0) return inconclusive(std::move(trace), "thm1 needs tb < 0");

  std::int64_t rot = k.rot;
  if (rot <= -k.euler_char) {
    if (both_orientations && -rot > -k.euler_char) {
      rot = -rot;
      trace.push_back(cat("orientation reversed: rot -> ", rot, " (tb, chi and the surgery are unchanged)"));
    } else {
      return inconclusive(std::move(trace), cat("thm1 needs rot > -chi, have ", rot, " <= ", -k.euler_char));
    }
  }
  trace.push_back(cat("hypotheses hold: tb = ", k.tb, " < 0, rot = ", rot, " > -chi = ", -k.euler_char, " >= 0"));

  const BigInt order = homological_order(k.tb, n);
  if (order.is_zero()) {
    return inconclusive(std::move(trace),
                        "n*tb + 1 = 0: dual knot is not rationally nullhomologous, Bennequin mechanism unavailable");
  }
  const DualKnotInvariants inv = dual_invariants_closed_form(k.tb, rot, k.euler_char, n);
  const BennequinReport report = bennequin_check(inv);
  const Rational middle(BigInt(k.euler_char + 2 * rot), order);
  trace.push_back(cat("dual knot: tb_Q = tb/(n tb + 1) = ", str(inv.tb_q), ", rot_Q = rot/(n tb + 1) = ",
                      str(inv.rot_q), ", r = |n tb + 1| = ", order.str()));
  trace.push_back(cat("tb_Q + |rot_Q| = ", str(report.lhs), " >= (chi + 2 rot)/r = ", str(middle),
                      " > -chi/r = ", str(report.rhs)));
  if (report.satisfied) {
    // The chain above forbids this; refuse to conclude if arithmetic disagrees.
    return inconclusive(std::move(trace), "internal: expected a Bennequin violation but the bound holds");
  }
  trace.push_back(cat("rational Bennequin bound violated by the dual knot (", kBoundSource, ")"));
  return Verdict{Conclusion::Overtwisted, std::string(rule::kThm1), std::move(trace), k.id};
}

Verdict classify_thm2(AmbientStatus ambient, const Rational& coefficient) {
  std::vector<std::string> trace{cat("contact (", str(coefficient), ") surgery, ambient ", to_string(ambient))};
  if (ambient != AmbientStatus::Overtwisted) {
    return inconclusive(std::move(trace), "thm2 needs an overtwisted ambient manifold");
  }
  if (coefficient.num() != 1) {
    return inconclusive(std::move(trace), "thm2 needs a coefficient of the form +1/n");
  }
  trace.push_back(cat("(+1/", coefficient.den().str(), ") = ", coefficient.den().str(),
                      " contact (+1) surgeries on push-offs; each (+1) surgery in an overtwisted manifold is "
                      "overtwisted, else Legendrian surgery on the dual would undo it from a tight manifold"));
  return Verdict{Conclusion::Overtwisted, std::string(rule::kThm2), std::move(trace), {}};
}

Verdict classify_lemma_tight(bool plus_one_known_tight, std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw Error(ErrorKind::RangeError, "p and q must be positive");
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorKind::NotCoprime, std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
  }
  std::vector<std::string> trace{cat("contact (+", p, "/", q, ") surgery")};
  if (!plus_one_known_tight) return inconclusive(std::move(trace), "contact (+1) surgery not known to be tight");
  if (q - p >= 0) return inconclusive(std::move(trace), cat("lemma-tight needs q - p < 0, have ", q - p));
  const Rational rest(BigInt(-p), BigInt(p - q));
  const auto digits = negative_continued_fraction(rest);
  std::string cf;
  for (std::size_t i = 0; i < digits.size(); ++i) cf += (i ? "," : "") + digits[i].str();
  trace.push_back(cat("premise: contact (+1) surgery is tight"));
  trace.push_back(cat("(+", p, "/", q, ") = (+1) on the knot, then contact ", str(rest), " = [", cf,
                      "] on its push-off as ", digits.size(), " Legendrian (-1) surgeries with zigzags"));
  trace.push_back("Legendrian surgery preserves tightness, so the result is tight");
  return Verdict{Conclusion::Tight, std::string(rule::kLemmaTight), std::move(trace), {}};
}

namespace {

// tb of component `index` in the manifold given by the other surgeries, if
// it is an integral (nullhomologous) knot there.
struct EffectiveTb {
  std::optional<Rational> tb;
  std::vector<std::string> trace;
};

EffectiveTb effective_tb(const SurgeryDiagram& d, std::size_t index) {
  EffectiveTb out;
  auto comps = d.components();
  comps[index].contact_coefficient.reset();
  const SurgeryDiagram stripped(d.ambient(), std::move(comps), d.linking(), d.comment());
  const bool others = std::any_of(stripped.components().begin(), stripped.components().end(),
                                  [](const SurgeryComponent& c) { return c.surgered(); });
  const auto& k = d.components()[index].knot;
  if (!others) {
    out.tb = Rational(k.tb);
    return out;
  }
  try {
    const ExpandedPresentation expanded = expand_diagram(stripped);
    const std::size_t dual = expanded.derived_diagram.index_of(k.id);
    const GeneralMatrices mats = build_general_matrices(expanded.derived_diagram, dual);
    const DualKnotInvariants inv = dual_invariants_matrix(expanded.derived_diagram, dual);
    out.trace.push_back(cat("tb('", k.id, "') in the surgered manifold = tb0 + det M0/det M = ", k.tb, " + ",
                            str(det(mats.extended)), "/", str(det(mats.linking)), " = ", str(inv.tb_q),
                            " (M = ", mats.linking, ", M0 = ", mats.extended, ")"));
    if (inv.order != 1) {
      out.trace.push_back(cat("'", k.id, "' has homological order ", inv.order.str(),
                              " in the surgered manifold; not nullhomologous"));
      return out;
    }
    out.tb = inv.tb_q;
  } catch (const Error& e) {
    out.trace.push_back(cat("tb('", k.id, "') in the surgered manifold unavailable: ", e.what()));
  }
  return out;
}

bool is_standard_unknot(const LegendrianKnotData& k) { return k.tb == -1 && k.rot == 0 && k.euler_char == 1; }

bool only_legendrian_surgeries_besides(const SurgeryDiagram& d, std::size_t index) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i == index || !d.components()[i].surgered()) continue;
    if (*d.components()[i].contact_coefficient != Rational(-1)) return false;
  }
  return true;
}

bool others_surgered(const SurgeryDiagram& d, std::size_t index) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i != index && d.components()[i].surgered()) return true;
  return false;
}

void check_assumptions(const SurgeryDiagram& d, const ClassifyOptions& options) {
  for (const auto& [id, facts] : options.facts) {
    const std::size_t index = d.index_of(id);
    if (!facts.plus_one_known_tight) continue;
    if (d.ambient() == AmbientStatus::Overtwisted) {
      throw Error(ErrorKind::InconsistentAssumptions,
                  "'" + id + "': (+1) surgery assumed tight, but (+1) surgery in an overtwisted manifold is "
                  "always overtwisted");
    }
    if (others_surgered(d, index)) continue;
    const Verdict plus_one = classify_thm1(d.ambient(), d.components()[index].knot, 1, options.both_orientations);
    if (plus_one.conclusion == Conclusion::Overtwisted) {
      throw Error(ErrorKind::InconsistentAssumptions,
                  "'" + id + "': (+1) surgery assumed tight, but thm1 shows it is overtwisted");
    }
  }
}

}  // namespace

std::vector<Verdict> classify_diagram(const SurgeryDiagram& d, const ClassifyOptions& options) {
  check_assumptions(d, options);
  std::vector<Verdict> verdicts;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& comp = d.components()[i];
    std::optional<Rational> coefficient = comp.contact_coefficient;
    if (!coefficient) coefficient = options.query;
    if (!coefficient) continue;
    const Rational& c = *coefficient;
    const auto facts_it = options.facts.find(comp.knot.id);
    const bool plus_one_tight = facts_it != options.facts.end() && facts_it->second.plus_one_known_tight;
    const bool alone = !others_surgered(d, i);

    std::vector<Verdict> candidates;
    std::vector<std::string> notes;
    if (alone) {
      candidates.push_back(classify_thm2(d.ambient(), c));
      if (c.sign() > 0 && c.num() == 1) {
        candidates.push_back(classify_thm1(d.ambient(), comp.knot, static_cast<std::int64_t>(c.den()),
                                           options.both_orientations));
      }
    } else {
      notes.push_back("other components are surgered; thm1 and thm2 need the knot in the ambient manifold itself");
    }
    if (c.sign() > 0 && c.num() > c.den()) {
      Verdict lemma = classify_lemma_tight(plus_one_tight, static_cast<std::int64_t>(c.num()),
                                           static_cast<std::int64_t>(c.den()));
      if (lemma.conclusion == Conclusion::Tight) {
        auto& t = lemma.trace;
        t.insert(t.begin() + 1, cat("assumed: contact (+1) surgery on '", comp.knot.id, "' is tight"));
        if (is_standard_unknot(comp.knot) && d.ambient() == AmbientStatus::Tight &&
            only_legendrian_surgeries_besides(d, i)) {
          t.insert(t.begin() + 2,
                   "consistent with: (+1) surgery on a standard tb = -1 unknot gives the tight, Stein fillable "
                   "S1 x S2, and the remaining (-1) surgeries keep it Stein fillable");
        }
        if (c.is_integer()) {
          const EffectiveTb eff = effective_tb(d, i);
          t.insert(t.end(), eff.trace.begin(), eff.trace.end());
          const Rational n = c;
          if (eff.tb && *eff.tb <= Rational(-2) && Rational(2) <= n && n < eff.tb->abs()) {
            t.push_back(cat(kConwayCounterexample, ": tb = ", str(*eff.tb), " <= -2 and 2 <= n = ", str(n),
                            " < |tb|, yet contact (+", str(n), ") surgery is tight"));
          }
        }
      }
      candidates.push_back(std::move(lemma));
    }

    const bool any_tight = std::any_of(candidates.begin(), candidates.end(),
                                       [](const Verdict& v) { return v.conclusion == Conclusion::Tight; });
    const bool any_ot = std::any_of(candidates.begin(), candidates.end(),
                                    [](const Verdict& v) { return v.conclusion == Conclusion::Overtwisted; });
    if (any_tight && any_ot) {
      throw Error(ErrorKind::InconsistentAssumptions, "'" + comp.knot.id + "': rules conclude both tight and overtwisted");
    }

    Verdict chosen;
    auto conclusive = std::find_if(candidates.begin(), candidates.end(),
                                   [](const Verdict& v) { return v.conclusion != Conclusion::Inconclusive; });
    if (conclusive != candidates.end()) {
      chosen = std::move(*conclusive);
    } else {
      chosen.trace.push_back(cat("contact (", str(c), ") surgery on '", comp.knot.id, "': no rule applies"));
      for (const auto& v : candidates)
        if (!v.trace.empty()) chosen.trace.push_back(v.trace.back());
    }
    chosen.trace.insert(chosen.trace.end(), notes.begin(), notes.end());
    chosen.component = comp.knot.id;
    verdicts.push_back(std::move(chosen));
  }
  return verdicts;
}

}  // namespace csurg
