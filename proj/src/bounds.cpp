#include "convertbw/bounds.hpp"

#include <utility>

namespace convertbw {

namespace {

Rat rat(long v) { return Rat(v); }

struct P {
  long lam, kF, rF, rI, ell, kI;
  explicit P(const CodeParams& p)
      : lam(static_cast<long>(p.lambda)),
        kF(static_cast<long>(p.kF)),
        rF(static_cast<long>(p.rF)),
        rI(static_cast<long>(p.rI)),
        ell(static_cast<long>(p.ell)),
        kI(static_cast<long>(p.kI())) {}
};

Rat thm2_case1_value(const P& v) {
  return rat(v.lam * v.kF * v.ell) - Rat((v.kF - v.rF) * v.rI * v.ell, v.rF);
}

Rat thm2_case2_value(const P& v) {
  return Rat(v.lam * v.rF * v.ell * ((v.lam - 1) * v.kF + v.rI),
             (v.lam - 1) * v.rF + v.rI);
}

Rat thm3_case1_value(const P& v) { return rat(v.lam * v.rF * v.ell); }

Rat thm3_case2_value(const P& v) {
  return Rat(v.lam * v.lam * v.kF * v.kF * v.rF * v.ell,
             v.kF * v.rI - v.rF * v.rI + v.lam * v.kF * v.rF);
}

Rat thm3_case3_value(const P& v) {
  long s = (v.lam - 1) * v.rF + v.kF;
  return rat(v.rI * v.ell) +
         Rat(v.lam * v.kF * ((v.lam - 1) * v.rF - (v.rI - v.kF)) * v.ell, s);
}

Rat thm3_case4_value(const P& v) {
  return Rat((v.lam - 1) * v.rF * v.rI * v.ell, v.rI - v.kF);
}

BoundResult make(Rat value, Regime regime) {
  BigInt c = value.ceil();
  return BoundResult{std::move(value), regime, std::move(c)};
}

}  // namespace

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Thm1: return "THM1";
    case Regime::Thm2Case1: return "THM2_CASE1";
    case Regime::Thm2Case2: return "THM2_CASE2";
    case Regime::Thm3Case1: return "THM3_CASE1";
    case Regime::Thm3Case2: return "THM3_CASE2";
    case Regime::Thm3Case3: return "THM3_CASE3";
    case Regime::Thm3Case4: return "THM3_CASE4";
    case Regime::PriorLow: return "PRIOR_LOW";
    case Regime::PriorHigh: return "PRIOR_HIGH";
  }
  return "?";
}

BigInt regime_discriminant(const CodeParams& p) {
  P v(p);
  return BigInt(v.lam) * v.kF * v.kF - BigInt(v.lam - 1) * (v.kF - v.rF) * v.rI;
}

BoundResult bound_thm1(const CodeParams& p) {
  if (!(p.kF <= p.rF)) throw RegimeMismatch("requires kF <= rF");
  P v(p);
  return make(rat(v.kI * v.ell), Regime::Thm1);
}

BoundResult bound_thm2(const CodeParams& p) {
  if (!(p.rF < p.kF)) throw RegimeMismatch("requires rF < kF");
  if (!(p.rI <= p.kF)) throw RegimeMismatch("requires rI <= kF");
  P v(p);
  // The two case formulas overlap at rI == rF and must agree there.
  if (v.rI == v.rF && thm2_case1_value(v) != thm2_case2_value(v)) {
    throw CaseConflict("THM2 case formulas disagree at rI == rF");
  }
  if (v.rI <= v.rF) return make(thm2_case1_value(v), Regime::Thm2Case1);
  return make(thm2_case2_value(v), Regime::Thm2Case2);
}

BoundResult bound_thm3(const CodeParams& p) {
  if (!(p.rF < p.kF)) throw RegimeMismatch("requires rF < kF");
  if (!(p.kF < p.rI)) throw RegimeMismatch("requires kF < rI");
  P v(p);
  BigInt d = regime_discriminant(p);
  long s = (v.lam - 1) * v.rF + v.kF;

  std::vector<std::pair<Regime, Rat>> matching;
  if (v.kI <= v.rI) matching.emplace_back(Regime::Thm3Case1, thm3_case1_value(v));
  if (v.kI > v.rI && d >= 0) matching.emplace_back(Regime::Thm3Case2, thm3_case2_value(v));
  if (v.rI < s && d <= 0) matching.emplace_back(Regime::Thm3Case3, thm3_case3_value(v));
  if (v.kI > v.rI && v.rI >= s && d <= 0) {
    matching.emplace_back(Regime::Thm3Case4, thm3_case4_value(v));
  }
  if (matching.empty()) {
    throw InternalCheckFailed("no THM3 case matched");  // cases cover the regime
  }
  for (const auto& [regime, value] : matching) {
    if (value != matching.front().second) {
      throw CaseConflict("THM3 case formulas disagree at a boundary: " +
                         regime_name(matching.front().first) + "=" +
                         matching.front().second.str() + " vs " + regime_name(regime) +
                         "=" + value.str());
    }
  }
  return make(matching.front().second, matching.front().first);
}

BoundResult bound_prior(const CodeParams& p) {
  P v(p);
  if (v.rI <= v.lam * v.rF) {
    Rat excess = Rat(v.kF, v.rF) - rat(1);
    if (excess < rat(0)) excess = rat(0);
    return make(rat(v.lam * v.kF * v.ell) - rat(v.rI * v.ell) * excess, Regime::PriorLow);
  }
  return make(rat(v.lam * std::min(v.rF, v.kF) * v.ell), Regime::PriorHigh);
}

BoundResult lower_bound(const CodeParams& p) {
  if (p.kF <= p.rF) return bound_thm1(p);
  if (p.rI <= p.kF) return bound_thm2(p);
  return bound_thm3(p);
}

Comparison compare(const CodeParams& p) {
  BoundResult ours = lower_bound(p);
  BoundResult prior = bound_prior(p);
  Rat delta = ours.value - prior.value;
  bool strict = delta > rat(0);
  return Comparison{std::move(ours.value), std::move(prior.value), std::move(delta),
                    strict, ours.regime, prior.regime};
}

std::vector<IdentityCheck> section4_identities(const CodeParams& p) {
  P v(p);
  std::vector<IdentityCheck> out;
  auto push = [&out](std::string name, Rat lhs, Rat rhs, bool inequality) {
    IdentityCheck chk{std::move(name), std::move(lhs), std::move(rhs), false, inequality};
    chk.equal = chk.lhs == chk.rhs;
    if (!chk.equal || !chk.inequality_holds) {
      throw IdentityViolation("identity " + chk.name + " failed: " + chk.lhs.str() +
                              " vs " + chk.rhs.str());
    }
    out.push_back(std::move(chk));
  };

  // Ratio of the prior bound to ours for rF <= rI <= kF (where ours is the
  // THM2_CASE2 expression).
  if (v.rF < v.kF && v.rF <= v.rI && v.rI <= v.kF) {
    Rat ours = thm2_case2_value(v);
    if (v.rI <= v.lam * v.rF) {
      Rat lhs = thm2_case1_value(v) / ours;  // prior's low branch equals case 1 here
      Rat rhs = rat(1) - Rat(v.rI * (v.kF - v.rF) * (v.rI - v.rF),
                             v.lam * v.rF * v.rF * ((v.lam - 1) * v.kF + v.rI));
      push("ratio_low", lhs, std::move(rhs), lhs <= rat(1));
    } else {
      Rat lhs = rat(v.lam * v.rF * v.ell) / ours;
      Rat rhs = Rat((v.lam - 1) * v.rF + v.rI, (v.lam - 1) * v.kF + v.rI);
      push("ratio_high", lhs, std::move(rhs), lhs <= rat(1));
    }
  }

  if (v.rF < v.kF && v.kF < v.rI && v.rI < v.kI) {
    BigInt d = regime_discriminant(p);
    long s = (v.lam - 1) * v.rF + v.kF;
    if (d >= 0) {
      Rat ours = thm3_case2_value(v);
      if (v.rI >= v.lam * v.rF) {
        Rat lhs = rat(v.lam * v.rF * v.ell) / ours;
        Rat rhs = Rat(v.rI * (v.kF - v.rF) + v.lam * v.kF * v.rF,
                      v.lam * v.kF * (v.kF - v.rF) + v.lam * v.kF * v.rF);
        push("thm3_item1", lhs, std::move(rhs), lhs < rat(1));
      } else {
        Rat prior_low = rat(v.lam * v.kF * v.ell) -
                        rat(v.rI * v.ell) * (Rat(v.kF, v.rF) - rat(1));
        Rat lhs = prior_low / ours;
        BigInt a = BigInt(v.lam) * v.kF * v.rF;
        BigInt b = BigInt(v.rI) * (v.kF - v.rF);
        Rat rhs = Rat(a * a - b * b, a * a);
        push("thm3_item2", lhs, std::move(rhs), lhs < rat(1));
      }
    }
    if (d <= 0 && v.rI < s) {
      Rat ours = thm3_case3_value(v);
      if (v.rI >= v.lam * v.rF) {
        Rat alt = rat(v.rI * v.ell) +
                  rat(v.lam * v.kF * v.ell) * (rat(1) - Rat(v.rI, s));
        push("thm3_item3", ours, std::move(alt), ours > rat(v.lam * v.rF * v.ell));
      } else {
        Rat alt = rat(v.lam * v.kF * v.ell) -
                  rat(v.rI * v.ell) * (Rat(v.lam * v.kF, s) - rat(1));
        Rat prior_low = rat(v.lam * v.kF * v.ell) -
                        rat(v.rI * v.ell) * (Rat(v.kF, v.rF) - rat(1));
        bool slope_ok = Rat(v.lam * v.kF, s) < Rat(v.kF, v.rF);
        push("thm3_item4", ours, std::move(alt), slope_ok && ours > prior_low);
      }
    }
    if (d <= 0 && v.rI >= s) {
      Rat ours = thm3_case4_value(v);
      Rat lhs = rat(v.lam * v.rF * v.ell) / ours;
      Rat rhs = Rat(v.lam * v.rI - v.kI, (v.lam - 1) * v.rI);
      push("thm3_item5", lhs, std::move(rhs), lhs < rat(1));
    }
  }
  return out;
}

}  // namespace convertbw
