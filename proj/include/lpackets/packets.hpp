// Discrete parameters, compound L-packets, component groups,
// Harish-Chandra characters, genericity, and the pairing <pi, s>.
//
// Convention (frozen against the matrix oracle and the A1/C2 identities):
// a packet member is a coset u*W_R, with character
//   (-1)^q(form) sum_{w in W_R} (tau/d)(u w t)
// and invariant  inv = cls(form) + (rho^vee - u rho^vee) mod 2X_*,
// which is constant on u*W_R because w in W_R(mu_qs) forces
// rho^vee - w rho^vee in 2X_*.

#ifndef LPACKETS_PACKETS_HPP_
#define LPACKETS_PACKETS_HPP_

#include "lpackets/covers.hpp"
#include "lpackets/realforms.hpp"

namespace lpk {

struct DiscreteParameter {
  BasedRootDatum datum;
  RatVec lambda;           // regular, base-dominant, genuine
  PositiveSystem chamber;  // the lambda-dominant system (= based system)
};

// validates: regular, dominant for the based system, lambda - rho in X^*
DiscreteParameter make_parameter(const BasedRootDatum& d, const RatVec& lambda);

struct PacketMember {
  WeylElement u;              // minimal-length representative of u*W_R
  CohomologyClassS inv_class; // reduced 0/1 coordinates
};

struct Packet {
  DiscreteParameter param;
  Grading form;
  std::vector<WeylElement> real_weyl;
  int q_form = 0;
  std::vector<PacketMember> members;
};

Packet enumerate_packet(const DiscreteParameter& param, const Grading& form,
                        const std::vector<WeylElement>& w);

// pure = S-hat[2] = X_*/2X_* ; rigid = (1/2)X^* / Q(G) (the dual-side
// lattice (1/2)X_*(T-hat)/Q^vee(G-hat) read through X_*(T-hat) = X^*(S))
struct ComponentGroup {
  FiniteAbelianGroup pure, rigid;
};

ComponentGroup component_group(const DiscreteParameter& param);

Complex hc_character(const Packet& p, const PacketMember& member,
                     const TorusPoint& t);

// (-1)^q sum over `group` of (tau/d) at w t, with d over `pos_roots`
Complex stable_character(const BasedRootDatum& d, const RatVec& lambda,
                         const std::vector<int>& pos_roots, int q,
                         const std::vector<WeylElement>& group,
                         const TorusPoint& t);
// the G-side stable character of the quasi-split form
Complex stable_character(const DiscreteParameter& param,
                         const std::vector<WeylElement>& w,
                         const TorusPoint& t);

int pairing_sign(const PacketMember& member, const DualTorsionElement& s);
Complex pairing(const PacketMember& member, const DualTorsionElement& s);

// Genericity on the quasi-split form. member_whittaker[i] is the index of
// the Whittaker datum of member i, or -1 when the member is not generic.
// Whittaker data are the cosets W_R \ W_R^ad (Lemma-style index), with
// datum 0 the distinguished one carried by member [e].
struct GenericityInfo {
  std::vector<int> member_whittaker;
  std::vector<int> generic_members;
  int whittaker_count = 0;
};

GenericityInfo generic_members(const Packet& p,
                               const std::vector<WeylElement>& w);

}  // namespace lpk

#endif  // LPACKETS_PACKETS_HPP_
