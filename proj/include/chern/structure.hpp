#ifndef CHERN_STRUCTURE_HPP
#define CHERN_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chern/hilbert.hpp"
#include "chern/ideal.hpp"

namespace chern {

struct StructureConfig {
  int trials = 8;      // genericity retries per randomized search
  int c_max = 5;       // largest superficiality threshold attempted
  int s_max = 10;      // largest reduction number attempted
  int nmax = 12;       // sampling bound shared with the coefficient fits
};

// depth of R = S/L as the length of a maximal regular sequence of generic
// linear forms, with m-torsion detected by saturation. Exact for graded
// rings; the nonzerodivisor certificates (L : l) = L are exact always, so a
// success is a certificate and a failure is loud.
int depth(const RingPtr& R, uint64_t seed, const StructureConfig& cfg = {});

struct CmReport {
  int dim;
  int depth;
  bool cohen_macaulay;
};

CmReport is_cohen_macaulay(const RingPtr& R, uint64_t seed, const StructureConfig& cfg = {});

// System of parameters: dim R linear forms with L + (elements) verified
// zero-dimensional at construction.
struct Sop {
  std::vector<Polynomial> elements;
};

Sop random_sop(const RingPtr& R, uint64_t seed, const StructureConfig& cfg = {});

// Lift a system of parameters of S/p to elements of S whose partial ideals
// drop the dimension of S one step at a time: a_i = b_i + λ c_1 + ... + λ^s c_s
// with (c_1..c_s) generating p and λ drawn afresh per element.
Sop lift_sop(const RingPtr& S_amb, const Ideal& p, const std::vector<Polynomial>& x,
             uint64_t seed, const StructureConfig& cfg = {});

struct SuperficialCertificate {
  Polynomial h;
  int c;
  int range_lo;
  int range_hi;  // (I^{n+1} : h) ∩ I^c = I^n verified for n in [range_lo, range_hi]
};

SuperficialCertificate find_superficial(const Ideal& I, uint64_t seed, int N,
                                        const StructureConfig& cfg = {});

// replay the defining equalities of a stored certificate
bool verify_superficial(const Ideal& I, const SuperficialCertificate& cert);

struct ReductionCertificate {
  int s;  // J * I^s = I^{s+1}
};

std::optional<ReductionCertificate> reduction_check(const Ideal& J, const Ideal& I, int s_max);

// Coefficient descent across a superficial element: e_i match below d-1 and
// the signed torsion correction λ(0 : h) enters at i = d-1.
struct DescentReport {
  EVector above;        // e(I, R), dimension d
  EVector below;        // e(I/(h), R/hR), dimension d-1
  long torsion_length;  // λ(0 :_R h)
  bool identities_hold;
};

DescentReport superficial_descent_check(const Ideal& I, const SuperficialCertificate& cert,
                                        const StructureConfig& cfg = {});

}  // namespace chern

#endif
