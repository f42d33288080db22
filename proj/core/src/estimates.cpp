#include <algorithm>
#include <array>
#include <stdexcept>

#include "mcsh/estimates.hpp"

namespace mcsh {

namespace {

// g(s) > 0 (strict) or g(s) >= 0.
struct Atom {
  ParamExpr g;
  bool strict = true;
};

const std::array<std::string, kConditionCount>& names() {
  static const std::array<std::string, kConditionCount> n = {
      "b0+b1+b2 > 1/2",
      "b0+b1 > 0",
      "b0+b2 > 0",
      "b1+b2 > 0",
      "s0+s1+s2 > 3/2-(b0+b1+b2)",
      "s0+s1+s2 > 1-min(b0+b1,b0+b2,b1+b2)",
      "s0+s1+s2 > 1/2-min(b0,b1,b2)",
      "s0+s1+s2 > 3/4",
      "(s0+b0)+2s1+2s2 > 1",
      "2s0+(s1+b1)+2s2 > 1",
      "2s0+2s1+(s2+b2) > 1",
      "s1+s2 >= max(0,-b0)",
      "s0+s2 >= max(0,-b1)",
      "s0+s1 >= max(0,-b2)",
  };
  return n;
}

ParamExpr constant(const Rational& q) { return {Rational(0), EpsVal(q)}; }

// The atoms of all conditions, each with g = lhs - rhs.
std::array<std::vector<Atom>, kConditionCount> atoms_of(const EstimateParams& p) {
  const ParamExpr S = p.s0 + p.s1 + p.s2;
  const ParamExpr B = p.b0 + p.b1 + p.b2;
  const Rational half(1, 2), one(1), three_halves(3, 2), three_quarters(3, 4);
  std::array<std::vector<Atom>, kConditionCount> a;
  a[0] = {{B - constant(half), true}};
  a[1] = {{p.b0 + p.b1, true}};
  a[2] = {{p.b0 + p.b2, true}};
  a[3] = {{p.b1 + p.b2, true}};
  a[4] = {{S + B - constant(three_halves), true}};
  a[5] = {{S + p.b0 + p.b1 - constant(one), true},
          {S + p.b0 + p.b2 - constant(one), true},
          {S + p.b1 + p.b2 - constant(one), true}};
  a[6] = {{S + p.b0 - constant(half), true},
          {S + p.b1 - constant(half), true},
          {S + p.b2 - constant(half), true}};
  a[7] = {{S - constant(three_quarters), true}};
  a[8] = {{p.s0 + p.b0 + 2 * p.s1 + 2 * p.s2 - constant(one), true}};
  a[9] = {{2 * p.s0 + p.s1 + p.b1 + 2 * p.s2 - constant(one), true}};
  a[10] = {{2 * p.s0 + 2 * p.s1 + p.s2 + p.b2 - constant(one), true}};
  a[11] = {{p.s1 + p.s2, false}, {p.s1 + p.s2 + p.b0, false}};
  a[12] = {{p.s0 + p.s2, false}, {p.s0 + p.s2 + p.b1, false}};
  a[13] = {{p.s0 + p.s1, false}, {p.s0 + p.s1 + p.b2, false}};
  return a;
}

bool satisfies(const EpsVal& v, bool strict) { return strict ? v > EpsVal(0) : v >= EpsVal(0); }

// Decision at one end of the range; inward = +1 at the lower end, -1 at the upper end.
bool endpoint_ok(const Atom& a, const Endpoint& e, int inward) {
  const EpsVal v = a.g.at(e.value);
  if (e.closed) return satisfies(v, a.strict);
  if (v.base() > 0) return true;
  if (v.base() < 0) return false;
  const Rational slope = a.g.slope * inward;
  if (slope > 0) return true;
  if (slope < 0) return false;
  return a.strict ? v.eps_order() > 0 : v.eps_order() >= 0;
}

std::string witness(const Endpoint& e) {
  return e.closed ? "s=" + to_string(e.value) : "s->" + to_string(e.value) + " (open)";
}

// First failing endpoint of an affine inequality over the range, if any.
std::optional<std::string> check_atom(const Atom& a, const SRange& r) {
  if (!endpoint_ok(a, r.lo, +1)) return witness(r.lo);
  if (!endpoint_ok(a, r.hi, -1)) return witness(r.hi);
  return std::nullopt;
}

}  // namespace

const std::string& condition_name(int i) {
  if (i < 0 || i >= kConditionCount) throw std::out_of_range("condition_name: index out of range");
  return names()[static_cast<std::size_t>(i)];
}

Verdict check_conditions(const EstimateParams& p) {
  p.range.validate();
  const auto atoms = atoms_of(p);
  Verdict v;
  for (int i = 0; i < kConditionCount; ++i) {
    for (const Atom& a : atoms[static_cast<std::size_t>(i)]) {
      if (auto w = check_atom(a, p.range)) {
        v.violations.push_back({condition_name(i), *w});
        break;
      }
    }
  }
  v.holds = v.violations.empty();
  return v;
}

std::vector<ConditionRow> explain(const EstimateParams& p, const Rational& s) {
  p.range.validate();
  if (!p.range.contains(s))
    throw std::out_of_range("explain: s = " + to_string(s) + " outside " + to_string(p.range));
  const EpsVal s0 = p.s0.at(s), s1 = p.s1.at(s), s2 = p.s2.at(s);
  const EpsVal b0 = p.b0.at(s), b1 = p.b1.at(s), b2 = p.b2.at(s);
  const EpsVal S = s0 + s1 + s2, B = b0 + b1 + b2;
  const EpsVal zero(0), one(1), half(Rational(1, 2));
  const EpsVal min_pair = std::min({b0 + b1, b0 + b2, b1 + b2});
  const EpsVal min_b = std::min({b0, b1, b2});

  const std::array<std::pair<EpsVal, EpsVal>, kConditionCount> lr = {{
      {B, half},
      {b0 + b1, zero},
      {b0 + b2, zero},
      {b1 + b2, zero},
      {S, EpsVal(Rational(3, 2)) - B},
      {S, one - min_pair},
      {S, half - min_b},
      {S, EpsVal(Rational(3, 4))},
      {s0 + b0 + 2 * s1 + 2 * s2, one},
      {2 * s0 + s1 + b1 + 2 * s2, one},
      {2 * s0 + 2 * s1 + s2 + b2, one},
      {s1 + s2, std::max(zero, -b0)},
      {s0 + s2, std::max(zero, -b1)},
      {s0 + s1, std::max(zero, -b2)},
  }};
  std::vector<ConditionRow> rows;
  rows.reserve(kConditionCount);
  for (int i = 0; i < kConditionCount; ++i) {
    const auto& [l, r] = lr[static_cast<std::size_t>(i)];
    ConditionRow row{condition_name(i), l, r, i < 11, false};
    row.satisfied = row.strict ? l > r : l >= r;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<std::string> check_inequality(const ScalarInequality& q) {
  q.range.validate();
  const Atom a{q.lhs - q.rhs, q.strict};
  return check_atom(a, q.range);
}

}  // namespace mcsh
