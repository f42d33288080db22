#include <cctype>
#include <stdexcept>
#include <string>

#include "mcsh/estimates.hpp"

namespace mcsh {

namespace {

std::string trim(std::string_view t) {
  std::size_t a = 0, b = t.size();
  while (a < b && std::isspace(static_cast<unsigned char>(t[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(t[b - 1]))) --b;
  return std::string(t.substr(a, b - a));
}

// U+2212 MINUS SIGN -> '-', whitespace dropped.
std::string normalize(std::string_view t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.compare(i, 3, "\xE2\x88\x92") == 0) {
      out.push_back('-');
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(t[i]))) {
      out.push_back(t[i]);
    }
  }
  return out;
}

bool all_digits(std::string_view t) {
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

class ExprParser {
 public:
  explicit ExprParser(std::string text) : t_(std::move(text)) {}

  ParamExpr parse() {
    ParamExpr e = expr();
    if (pos_ != t_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_param_expr: " + what + " at position " + std::to_string(pos_) +
                                " in \"" + t_ + "\"");
  }

  bool eat(char c) {
    if (pos_ < t_.size() && t_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamExpr expr() {
    ParamExpr e = term();
    for (;;) {
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }

  ParamExpr term() {
    if (eat('-')) return -term();
    if (eat('+')) return term();
    ParamExpr e = factor();
    while (eat('*')) e = multiply(e, factor());
    return e;
  }

  ParamExpr multiply(const ParamExpr& a, const ParamExpr& b) const {
    const bool a_const = a.slope == 0, b_const = b.slope == 0;
    if (a.offset.eps_order() != 0 || b.offset.eps_order() != 0) fail("product with eps shift");
    if (!a_const && !b_const) fail("non-affine product");
    if (a_const) return {a.offset.base() * b.slope, EpsVal(a.offset.base() * b.offset.base())};
    return {b.offset.base() * a.slope, EpsVal(a.offset.base() * b.offset.base())};
  }

  ParamExpr factor() {
    if (eat('(')) {
      ParamExpr e = expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (eat('s')) return {Rational(1), EpsVal(0)};
    const std::size_t start = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected number, 's' or '('");
    if (pos_ < t_.size() && t_[pos_] == '/') {
      ++pos_;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }
    return {Rational(0), EpsVal(parse_rational(std::string_view(t_).substr(start, pos_ - start)))};
  }

  std::string t_;
  std::size_t pos_ = 0;
};

std::string format_endpoint(const Endpoint& e) { return to_string(e.value); }

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string t = normalize(text);
  bool neg = false;
  std::string_view v = t;
  if (!v.empty() && (v.front() == '-' || v.front() == '+')) {
    neg = v.front() == '-';
    v.remove_prefix(1);
  }
  const auto slash = v.find('/');
  const std::string_view num = v.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : v.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("parse_rational: malformed \"" + std::string(text) + "\"");
  const boost::multiprecision::cpp_int n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw std::invalid_argument("parse_rational: zero denominator in \"" + std::string(text) + "\"");
  Rational q(n, d);
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const EpsVal& v) {
  std::string out = to_string(v.base());
  const int k = v.eps_order();
  if (k == 0) return out;
  out += k > 0 ? "+" : "-";
  const int m = k > 0 ? k : -k;
  if (m != 1) out += std::to_string(m);
  return out + "eps";
}

ParamExpr parse_param_expr(std::string_view text) {
  std::string t = normalize(text);
  int eps = 0;
  // Trailing markers: a run of '+'/'-' with nothing after it.
  while (!t.empty() && (t.back() == '+' || t.back() == '-')) {
    eps += t.back() == '+' ? 1 : -1;
    t.pop_back();
  }
  if (t.empty()) throw std::invalid_argument("parse_param_expr: empty expression \"" + std::string(text) + "\"");
  ParamExpr e = ExprParser(t).parse();
  e.offset += EpsVal(Rational(0), eps);
  return e;
}

std::string to_string(const ParamExpr& e) {
  std::string out;
  if (e.slope != 0) {
    if (e.slope == 1)
      out = "s";
    else if (e.slope == -1)
      out = "-s";
    else
      out = to_string(e.slope) + "*s";
  }
  const std::string off = to_string(e.offset);
  if (out.empty()) return off;
  if (e.offset == EpsVal(0)) return out;
  if (e.offset.base() == 0) {
    // Only an eps shift: "s+eps", "2*s-2eps".
    return out + off.substr(1);
  }
  if (off.front() == '-') return out + off;
  return out + "+" + off;
}

void SRange::validate() const {
  if (lo.value < hi.value) return;
  if (lo.value == hi.value && lo.closed && hi.closed) return;
  throw std::invalid_argument("range " + to_string(*this) + " is empty");
}

bool SRange::contains(const Rational& s) const {
  const bool above = lo.closed ? s >= lo.value : s > lo.value;
  const bool below = hi.closed ? s <= hi.value : s < hi.value;
  return above && below;
}

SRange parse_range(std::string_view text) {
  const std::string t = trim(normalize(text));
  if (t.size() < 5) throw std::invalid_argument("parse_range: malformed \"" + std::string(text) + "\"");
  const char open = t.front(), close = t.back();
  if ((open != '(' && open != '[') || (close != ')' && close != ']'))
    throw std::invalid_argument("parse_range: expected brackets in \"" + std::string(text) + "\"");
  const auto comma = t.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("parse_range: missing ',' in \"" + std::string(text) + "\"");
  SRange r;
  r.lo = {parse_rational(t.substr(1, comma - 1)), open == '['};
  r.hi = {parse_rational(t.substr(comma + 1, t.size() - comma - 2)), close == ']'};
  r.validate();
  return r;
}

std::string to_string(const SRange& r) {
  return std::string(r.lo.closed ? "[" : "(") + format_endpoint(r.lo) + "," + format_endpoint(r.hi) +
         (r.hi.closed ? "]" : ")");
}

}  // namespace mcsh
