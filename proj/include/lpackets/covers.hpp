// Evaluation model for the elliptic torus and its double covers.
// A cover point is an angle vector t (the point exp(2*pi*i*t)); every
// half-integral character evaluates canonically as exp(2*pi*i<lambda,t>),
// which resolves all square roots: alpha^(1/2)(t) = exp(pi*i<alpha,t>).

#ifndef LPACKETS_COVERS_HPP_
#define LPACKETS_COVERS_HPP_

#include "lpackets/rootdata.hpp"

namespace lpk {

struct TorusPoint {
  std::vector<double> t;
};

// smallest distance of any <alpha,t> to Z: 0 exactly on a wall
double wall_margin(const BasedRootDatum& d, const TorusPoint& t);
bool is_regular(const BasedRootDatum& d, const TorusPoint& t,
                double margin = 0.0);

TorusPoint act(const WeylElement& w, const TorusPoint& t);
TorusPoint shift(const TorusPoint& t, const IntVec& mu);  // deck translate

// exp(2*pi*i <lambda, t>), unit modulus
Complex eval_char(const RatVec& lambda, const TorusPoint& t);

// D_B(t) = prod_{alpha>0} (alpha^(1/2) - alpha^(-1/2))(t)
//        = prod_{alpha>0} 2i sin(pi <alpha,t>); zero exactly at walls
Complex weyl_denominator(const BasedRootDatum& d, const PositiveSystem& pos,
                         const TorusPoint& t);
// same product restricted to an explicit root-index subset
Complex weyl_denominator(const BasedRootDatum& d, const std::vector<int>& roots,
                         const TorusPoint& t);

// |D_T(exp 2 pi i t)| = prod over all roots |1 - alpha(t)|
double abs_dt(const BasedRootDatum& d, const TorusPoint& t);

Complex arg_unit(Complex z);  // z/|z|, rejects 0

Complex d_arg(const BasedRootDatum& d, const PositiveSystem& pos,
              const TorusPoint& t);
Complex d_arg(const BasedRootDatum& d, const std::vector<int>& roots,
              const TorusPoint& t);

}  // namespace lpk

#endif  // LPACKETS_COVERS_HPP_
