#include "csurg/expansion.hpp"

#include "csurg/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>

namespace csurg {

ZigzagPolicy ZigzagPolicy::parse(std::string_view text) {
  if (text == "all-negative") return {Kind::AllNegative, {}};
  if (text == "all-positive") return {Kind::AllPositive, {}};
  if (text == "balanced") return {Kind::Balanced, {}};
  constexpr std::string_view prefix = "explicit:";
  if (text.starts_with(prefix)) {
    ZigzagPolicy policy{Kind::Explicit, {}};
    std::string_view rest = text.substr(prefix.size());
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view token = rest.substr(0, comma);
      if (token == "+" || token == "+1" || token == "1") {
        policy.signs.push_back(1);
      } else if (token == "-" || token == "-1") {
        policy.signs.push_back(-1);
      } else {
        throw Error(ErrorKind::ParseError, "zigzag sign '" + std::string(token) + "' is not + or -");
      }
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return policy;
  }
  throw Error(ErrorKind::ParseError, "unknown zigzag policy '" + std::string(text) + "'");
}

std::string ZigzagPolicy::to_string() const {
  switch (kind) {
    case Kind::AllNegative: return "all-negative";
    case Kind::AllPositive: return "all-positive";
    case Kind::Balanced: return "balanced";
    case Kind::Explicit: break;
  }
  std::string out = "explicit:";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) out += ',';
    out += signs[i] > 0 ? '+' : '-';
  }
  return out;
}

std::vector<BigInt> negative_continued_fraction(const Rational& r) {
  if (r.sign() >= 0) throw Error(ErrorKind::RangeError, "negative expansion needs r < 0, got " + r.to_string());
  std::vector<BigInt> digits;
  Rational rest = r;
  while (true) {
    BigInt a = floor(rest);
    digits.push_back(a);
    Rational gap = Rational(a) - rest;  // in (-1, 0]
    if (gap.is_zero()) break;
    rest = gap.reciprocal();
  }
  return digits;
}

Rational evaluate_negative_continued_fraction(const std::vector<BigInt>& digits) {
  if (digits.empty()) throw std::domain_error("empty continued fraction");
  Rational value(digits.back());
  for (std::size_t i = digits.size() - 1; i-- > 0;) value = Rational(digits[i]) - value.reciprocal();
  return value;
}

namespace {

class SignSource {
 public:
  explicit SignSource(const ZigzagPolicy& policy) : policy_(policy) {}

  std::vector<int> take(std::size_t count) {
    std::vector<int> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      switch (policy_.kind) {
        case ZigzagPolicy::Kind::AllNegative: out.push_back(-1); break;
        case ZigzagPolicy::Kind::AllPositive: out.push_back(1); break;
        case ZigzagPolicy::Kind::Balanced: out.push_back(i % 2 == 0 ? -1 : 1); break;
        case ZigzagPolicy::Kind::Explicit:
          if (next_ == policy_.signs.size()) {
            throw Error(ErrorKind::RangeError, "explicit zigzag list has " + std::to_string(policy_.signs.size()) +
                                                   " signs, expansion needs more");
          }
          out.push_back(policy_.signs[next_++]);
          break;
      }
    }
    return out;
  }

  void finish() const {
    if (policy_.kind == ZigzagPolicy::Kind::Explicit && next_ != policy_.signs.size()) {
      throw Error(ErrorKind::RangeError, "explicit zigzag list has " + std::to_string(policy_.signs.size()) +
                                             " signs, expansion used " + std::to_string(next_));
    }
  }

 private:
  const ZigzagPolicy& policy_;
  std::size_t next_ = 0;
};

struct PlannedStep {
  int coefficient;
  std::size_t stabilizations;
};

// A chain of knots, each a Legendrian push-off of the previous one (the first
// of the source), with zigzags added before surgery.
std::vector<ExpansionStep> realize_chain(const LegendrianKnotData& source, const std::vector<PlannedStep>& plan,
                                         SignSource& signs, bool keep_id) {
  std::vector<ExpansionStep> steps;
  std::int64_t tb = source.tb;
  std::int64_t rot = source.rot;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    ExpansionStep step;
    step.source_id = source.id;
    step.component_id = keep_id ? source.id : source.id + "#" + std::to_string(i + 1);
    step.coefficient = plan[i].coefficient;
    step.stabilization_signs = signs.take(plan[i].stabilizations);
    step.parent_tb = tb;
    step.parent_rot = rot;
    tb -= static_cast<std::int64_t>(step.stabilizations());
    for (int s : step.stabilization_signs) rot += s;
    step.tb = tb;
    step.rot = rot;
    steps.push_back(std::move(step));
  }
  return steps;
}

std::int64_t to_int64_checked(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::RangeError, "value out of 64-bit range: " + v.str());
  }
  return static_cast<std::int64_t>(v);
}

std::vector<PlannedStep> plan_negative(const Rational& r) {
  auto digits = negative_continued_fraction(r);
  std::vector<PlannedStep> plan;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const std::int64_t a = to_int64_checked(digits[i]);
    // a1 <= -1 and ai <= -2, so these are |a1 + 1| and |ai + 2|.
    const std::int64_t stabs = i == 0 ? -(a + 1) : -(a + 2);
    plan.push_back({-1, static_cast<std::size_t>(stabs)});
  }
  return plan;
}

std::vector<PlannedStep> plan_positive(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw Error(ErrorKind::RangeError, "p and q must be positive");
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorKind::NotCoprime, std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
  }
  if (q >= p) {
    throw Error(ErrorKind::RangeError,
                "contact +" + std::to_string(p) + "/" + std::to_string(q) + " needs q - p < 0");
  }
  std::vector<PlannedStep> plan{{1, 0}};
  auto rest = plan_negative(Rational(-p, p - q));
  plan.insert(plan.end(), rest.begin(), rest.end());
  return plan;
}

std::vector<PlannedStep> plan_unit_fraction(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::RangeError, "n must be >= 1, got " + std::to_string(n));
  return std::vector<PlannedStep>(static_cast<std::size_t>(n), PlannedStep{1, 0});
}

// Derived-diagram bookkeeping for one expanded original component.
struct Block {
  std::size_t original;
  std::vector<SurgeryComponent> knots;
};

SurgeryDiagram assemble(AmbientStatus ambient, const std::vector<Block>& blocks, const LinkingTable& original_lk,
                        std::string comment) {
  std::vector<SurgeryComponent> comps;
  std::vector<std::pair<std::size_t, std::size_t>> origin;  // (block, position in chain)
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t k = 0; k < blocks[b].knots.size(); ++k) {
      comps.push_back(blocks[b].knots[k]);
      origin.emplace_back(b, k);
    }
  }
  const std::size_t n = comps.size();
  LinkingTable lk(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto [bi, ki] = origin[i];
      const auto [bj, kj] = origin[j];
      if (bi == bj) {
        // Within a chain the later knot is a push-off of the earlier one.
        lk[i][j] = blocks[bi].knots[std::min(ki, kj)].knot.tb;
      } else {
        lk[i][j] = original_lk[blocks[bi].original][blocks[bj].original];
      }
    }
  }
  return SurgeryDiagram(ambient, std::move(comps), std::move(lk), std::move(comment));
}

Block block_from_steps(std::size_t original, const LegendrianKnotData& source, const std::vector<ExpansionStep>& steps) {
  Block block{original, {}};
  for (const auto& s : steps) {
    block.knots.push_back({{s.component_id, s.tb, s.rot, source.euler_char}, s.coefficient});
  }
  return block;
}

ExpandedPresentation single_knot(const LegendrianKnotData& k, const std::vector<PlannedStep>& plan,
                                 const ZigzagPolicy& policy) {
  SignSource signs(policy);
  LegendrianKnotData source = k;
  if (source.id.empty()) source.id = "K";
  ExpandedPresentation out;
  out.policy = policy;
  out.steps = realize_chain(source, plan, signs, false);
  signs.finish();
  out.derived_diagram = assemble(AmbientStatus::Unknown, {block_from_steps(0, source, out.steps)}, {{0}}, {});
  return out;
}

}  // namespace

ExpandedPresentation expand_positive_unit_fraction(const LegendrianKnotData& k, std::int64_t n) {
  return single_knot(k, plan_unit_fraction(n), ZigzagPolicy{});
}

ExpandedPresentation expand_positive_rational(const LegendrianKnotData& k, std::int64_t p, std::int64_t q,
                                              const ZigzagPolicy& policy) {
  return single_knot(k, plan_positive(p, q), policy);
}

ExpandedPresentation expand_negative_rational(const LegendrianKnotData& k, const Rational& r,
                                              const ZigzagPolicy& policy) {
  return single_knot(k, plan_negative(r), policy);
}

ExpandedPresentation expand_diagram(const SurgeryDiagram& d, const ZigzagPolicy& policy) {
  SignSource signs(policy);
  ExpandedPresentation out;
  out.policy = policy;
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& c = d.components()[i];
    if (!c.surgered()) {
      blocks.push_back({i, {c}});
      continue;
    }
    const Rational& r = *c.contact_coefficient;
    std::vector<PlannedStep> plan;
    bool keep_id = false;
    if (r == Rational(1) || r == Rational(-1)) {
      plan = {{r == Rational(1) ? 1 : -1, 0}};
      keep_id = true;
    } else if (r.sign() < 0) {
      plan = plan_negative(r);
    } else if (r.num() == 1) {
      plan = plan_unit_fraction(to_int64_checked(r.den()));
    } else if (r.num() > r.den()) {
      plan = plan_positive(to_int64_checked(r.num()), to_int64_checked(r.den()));
    } else {
      throw Error(ErrorKind::Unsupported, "component '" + c.knot.id + "': contact coefficient " + r.to_string() +
                                              " is neither 1/n nor p/q with p > q");
    }
    auto steps = realize_chain(c.knot, plan, signs, keep_id);
    blocks.push_back(block_from_steps(i, c.knot, steps));
    out.steps.insert(out.steps.end(), steps.begin(), steps.end());
  }
  signs.finish();
  out.derived_diagram = assemble(d.ambient(), blocks, d.linking(), d.comment());
  return out;
}

}  // namespace csurg
