#include "lpackets/covers.hpp"

#include <cmath>

namespace lpk {

namespace {

constexpr double kPi = 3.14159265358979323846;

double pair_d(const IntVec& r, const std::vector<double>& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    s += r[i].convert_to<double>() * t[i];
  return s;
}

}  // namespace

double wall_margin(const BasedRootDatum& d, const TorusPoint& t) {
  double margin = 1.0;
  for (const IntVec& r : d.roots) {
    double x = pair_d(r, t.t);
    margin = std::min(margin, std::abs(x - std::round(x)));
  }
  return margin;
}

bool is_regular(const BasedRootDatum& d, const TorusPoint& t, double margin) {
  return wall_margin(d, t) > margin;
}

TorusPoint act(const WeylElement& w, const TorusPoint& t) {
  return TorusPoint{w.act_point(t.t)};
}

TorusPoint shift(const TorusPoint& t, const IntVec& mu) {
  TorusPoint out = t;
  for (std::size_t i = 0; i < out.t.size(); ++i)
    out.t[i] += mu[i].convert_to<double>();
  return out;
}

Complex eval_char(const RatVec& lambda, const TorusPoint& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.t.size(); ++i)
    s += to_double(lambda[i]) * t.t[i];
  return std::polar(1.0, 2.0 * kPi * s);
}

Complex weyl_denominator(const BasedRootDatum& d, const std::vector<int>& roots,
                         const TorusPoint& t) {
  Complex z(1.0, 0.0);
  for (int i : roots) {
    double th = kPi * pair_d(d.roots[i], t.t);
    z *= Complex(0.0, 2.0 * std::sin(th));
  }
  return z;
}

Complex weyl_denominator(const BasedRootDatum& d, const PositiveSystem& pos,
                         const TorusPoint& t) {
  return weyl_denominator(d, pos.roots, t);
}

double abs_dt(const BasedRootDatum& d, const TorusPoint& t) {
  double p = 1.0;
  for (const IntVec& r : d.roots) {
    double th = 2.0 * kPi * pair_d(r, t.t);
    p *= std::abs(Complex(1.0 - std::cos(th), -std::sin(th)));
  }
  return p;
}

Complex arg_unit(Complex z) {
  double a = std::abs(z);
  if (a == 0.0) throw Error("arg_unit: zero input");
  return z / a;
}

Complex d_arg(const BasedRootDatum& d, const std::vector<int>& roots,
              const TorusPoint& t) {
  return arg_unit(weyl_denominator(d, roots, t));
}

Complex d_arg(const BasedRootDatum& d, const PositiveSystem& pos,
              const TorusPoint& t) {
  return d_arg(d, pos.roots, t);
}

}  // namespace lpk
