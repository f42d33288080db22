#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mcsh/gauge.hpp"

namespace mcsh {

SpectralField nullform_q12(const SpectralField& u, const SpectralField& v, Sign, Sign) {
  return dealiased_product(riesz(u, 2), riesz(v, 1)) - dealiased_product(riesz(u, 1), riesz(v, 2));
}

SpectralField nullform_qtilde(const SpectralField& u, const SpectralField& v, Sign s1, Sign s2) {
  // (+/-1 R_j u) R^j v = -(+/-1) R_j u R_j v
  SpectralField out = sign_value(s2) * dealiased_product(u, v);
  out += sign_value(s1) * (dealiased_product(riesz(u, 1), riesz(v, 1)) +
                           dealiased_product(riesz(u, 2), riesz(v, 2)));
  return out;
}

double bracket(double x) { return std::sqrt(1.0 + x * x); }
double bracket(const Vec2& v) { return std::sqrt(1.0 + v.x * v.x + v.y * v.y); }

namespace {

double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

}  // namespace

double sigma1(const NullFormSample& s) {
  const double a = sign_value(s.sign1), b = sign_value(s.sign2);
  return ((a * s.xi.y) * (b * s.eta.x) - (a * s.xi.x) * (b * s.eta.y)) /
         (bracket(s.xi) * bracket(s.eta));
}

double sigma2(const NullFormSample& s) {
  const double a = sign_value(s.sign1), b = sign_value(s.sign2);
  return b - a * (s.xi.x * s.eta.x + s.xi.y * s.eta.y) / (bracket(s.xi) * bracket(s.eta));
}

double angle(const NullFormSample& s) {
  if ((s.xi.x == 0.0 && s.xi.y == 0.0) || (s.eta.x == 0.0 && s.eta.y == 0.0))
    throw std::invalid_argument("angle: zero wave vector");
  const double a = sign_value(s.sign1), b = sign_value(s.sign2);
  const Vec2 p{a * s.xi.x, a * s.xi.y};
  const Vec2 q{b * s.eta.x, b * s.eta.y};
  const double cross = p.x * q.y - p.y * q.x;
  const double dot = p.x * q.x + p.y * q.y;
  return std::atan2(std::abs(cross), dot);
}

AngleBound angle_bound(const NullFormSample& s) {
  const double a = sign_value(s.sign1), b = sign_value(s.sign2);
  const double lo = std::min(bracket(s.xi), bracket(s.eta));
  const double modulation = bracket(-s.tau + a * norm(s.xi)) + bracket(-s.lambda + b * norm(s.eta));
  const Vec2 sum{s.xi.x + s.eta.x, s.xi.y + s.eta.y};
  const double cone = bracket(std::abs(s.lambda + s.tau) - norm(sum));
  AngleBound out;
  out.first = std::sqrt(modulation / lo);
  out.second_ratio = cone / lo;
  out.second = std::sqrt(out.second_ratio);
  return out;
}

}  // namespace mcsh
