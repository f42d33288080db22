#pragma once

// Exact checker for the conditions of the two-dimensional bilinear
// wave-Sobolev product estimate
//
//   || u v ||_{X^{-s0,-b0}} <~ || u ||_{X^{s1,b1}} || v ||_{X^{s2,b2}},
//
// with exponents that are affine in a regularity parameter s and may carry
// the "a+", "a-" infinitesimal shifts. Numbers are exact rationals plus an
// integer multiple of one formal positive infinitesimal eps.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcsh {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-7/4", "0". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// q + k eps, ordered lexicographically by (q, k). a+ is (a, 1), a-- is (a, -2).
class EpsVal {
 public:
  EpsVal() = default;
  EpsVal(Rational base, int eps_order = 0) : base_(std::move(base)), eps_(eps_order) {}  // NOLINT
  EpsVal(int base) : base_(base) {}                                                       // NOLINT

  [[nodiscard]] const Rational& base() const { return base_; }
  [[nodiscard]] int eps_order() const { return eps_; }

  EpsVal& operator+=(const EpsVal& o) {
    base_ += o.base_;
    eps_ += o.eps_;
    return *this;
  }
  EpsVal& operator-=(const EpsVal& o) {
    base_ -= o.base_;
    eps_ -= o.eps_;
    return *this;
  }
  friend EpsVal operator+(EpsVal a, const EpsVal& b) { return a += b; }
  friend EpsVal operator-(EpsVal a, const EpsVal& b) { return a -= b; }
  friend EpsVal operator-(const EpsVal& a) { return {-a.base_, -a.eps_}; }
  friend EpsVal operator*(int k, const EpsVal& a) { return {a.base_ * k, a.eps_ * k}; }

  friend bool operator==(const EpsVal& a, const EpsVal& b) {
    return a.base_ == b.base_ && a.eps_ == b.eps_;
  }
  friend std::strong_ordering operator<=>(const EpsVal& a, const EpsVal& b) {
    if (a.base_ < b.base_) return std::strong_ordering::less;
    if (a.base_ > b.base_) return std::strong_ordering::greater;
    return a.eps_ <=> b.eps_;
  }

 private:
  Rational base_{0};
  int eps_ = 0;
};

/// "19/20-eps", "3/4", "1/2+2eps".
std::string to_string(const EpsVal& v);

/// slope * s + offset.
struct ParamExpr {
  Rational slope{0};
  EpsVal offset{};

  [[nodiscard]] EpsVal at(const Rational& s) const { return EpsVal(slope * s) + offset; }

  friend ParamExpr operator+(const ParamExpr& a, const ParamExpr& b) {
    return {a.slope + b.slope, a.offset + b.offset};
  }
  friend ParamExpr operator-(const ParamExpr& a, const ParamExpr& b) {
    return {a.slope - b.slope, a.offset - b.offset};
  }
  friend ParamExpr operator-(const ParamExpr& a) { return {-a.slope, -a.offset}; }
  friend ParamExpr operator*(int k, const ParamExpr& a) { return {a.slope * k, k * a.offset}; }
  friend bool operator==(const ParamExpr&, const ParamExpr&) = default;
};

/// Mini-grammar: rational literals, "s", "+", "-", "*", parentheses, and a
/// trailing run of "+"/"-" markers applying eps shifts to the whole
/// expression ("2*s-1/4--" is 2s - 1/4 - 2 eps). The Unicode minus sign is
/// accepted for "-". Throws std::invalid_argument on malformed or non-affine
/// input.
ParamExpr parse_param_expr(std::string_view text);
std::string to_string(const ParamExpr& e);

struct Endpoint {
  Rational value{0};
  bool closed = false;
};

/// Interval of s with open or closed ends, e.g. "(1/2,5/8]".
struct SRange {
  Endpoint lo, hi;

  /// Throws std::invalid_argument unless lo < hi, or lo == hi with both closed.
  void validate() const;
  [[nodiscard]] bool contains(const Rational& s) const;
};

SRange parse_range(std::string_view text);
std::string to_string(const SRange& r);

struct EstimateParams {
  ParamExpr s0, s1, s2, b0, b1, b2;
  SRange range;
};

/// Number of listed conditions of the product estimate.
inline constexpr int kConditionCount = 14;

/// Human-readable name of condition i in [0, kConditionCount).
const std::string& condition_name(int i);

struct Violation {
  std::string condition;
  std::string witness;  // "s=1/2" at a closed end, "s->5/8 (open)" at an open end
};

struct Verdict {
  bool holds = true;
  std::vector<Violation> violations;
};

/// Decides every condition for all s in the range. Each condition is a
/// conjunction of affine inequalities g(s) > 0 or g(s) >= 0 and is checked at
/// both endpoints; at an open endpoint, a zero base value is accepted only if
/// the slope makes g positive immediately inside the range, or, for zero
/// slope, if the eps order satisfies the comparison.
Verdict check_conditions(const EstimateParams& p);

struct ConditionRow {
  std::string condition;
  EpsVal left;
  EpsVal right;
  bool strict = true;
  bool satisfied = false;
};

/// Left- and right-hand sides of all conditions at one s in the range.
/// Throws std::out_of_range if s lies outside the range.
std::vector<ConditionRow> explain(const EstimateParams& p, const Rational& s);

/// Scalar inequality lhs > rhs (or >=) over a range, used for the Sobolev
/// embedding steps that accompany some estimates.
struct ScalarInequality {
  ParamExpr lhs, rhs;
  bool strict = true;
  SRange range;
};

/// Empty optional if the inequality holds on the whole range, otherwise a
/// witness description.
std::optional<std::string> check_inequality(const ScalarInequality& q);

// --- corpus ------------------------------------------------------------------------------

struct CorpusEntry {
  enum class Kind { Estimate, Inequality };
  std::string id;
  Kind kind = Kind::Estimate;
  EstimateParams estimate{};
  ScalarInequality inequality{};
  std::string note;
};

struct CorpusResult {
  std::string id;
  std::string range;
  Verdict verdict;
};

/// Corpus text format: one entry per line, fields separated by "|".
///   estimate   | id | s0 | b0 | s1 | b1 | s2 | b2 | range [| note]
///   inequality | id | lhs | > or >= | rhs | range [| note]
/// Blank lines and lines starting with "#" are ignored.
std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<CorpusResult> verify_corpus(const std::vector<CorpusEntry>& corpus);

/// Parameter sets of the bilinear estimates used for the Lorenz-gauge
/// Maxwell-Chern-Simons-Higgs nonlinearity, both regularity regimes.
std::string_view builtin_corpus_text();
std::vector<CorpusResult> verify_builtin_corpus();

/// Verdict report, CSV with header id,range,holds,violations.
std::string corpus_report_csv(const std::vector<CorpusResult>& results);

}  // namespace mcsh
