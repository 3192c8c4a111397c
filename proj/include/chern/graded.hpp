#ifndef CHERN_GRADED_HPP
#define CHERN_GRADED_HPP

#include <optional>
#include <vector>

#include "chern/ideal.hpp"

namespace chern {

// Submodule of a free graded module S^r over a polynomial ring, given by
// homogeneous generator vectors (all column shifts zero, so each generator
// has one consistent total degree). Torsion-free by construction.
class GradedSubmodule {
 public:
  GradedSubmodule(RingPtr ring, int rank, std::vector<std::vector<Polynomial>> gens);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<Polynomial>>& gens() const { return gens_; }
  const std::vector<int>& gen_degrees() const { return degs_; }
  // smallest generator degree; 0 for the zero module
  int generation_degree() const;
  bool single_degree() const;

 private:
  RingPtr ring_;
  int rank_;
  std::vector<std::vector<Polynomial>> gens_;
  std::vector<int> degs_;
};

struct HilbertFunctionTable {
  std::vector<long> values;  // values[n] = dim of the degree-n piece

  long at(int n) const { return (n >= 0 && n < (int)values.size()) ? values[n] : 0; }
  int max_degree() const { return static_cast<int>(values.size()) - 1; }
};

// dim_k of the degree-n piece of S/L (standard-monomial count; L must be
// homogeneous) or of a graded submodule (row reduction over F_p).
long graded_dim(const RingPtr& quotient_ring, int n);
long graded_dim(const GradedSubmodule& M, int n);

// Independent engine for quotients: row reduction on generator multiples,
// no Gröbner basis involved. Test oracle for the standard-monomial count.
long graded_dim_by_rank(const RingPtr& quotient_ring, int n);

HilbertFunctionTable hilbert_function(const RingPtr& quotient_ring, int n_max);
HilbertFunctionTable hilbert_function(const GradedSubmodule& M, int n_max);

HilbertFunctionTable partial_sum_table(const HilbertFunctionTable& H);

// 2(d + max generator degree) + 8
int default_degree_bound(const RingPtr& ring, int max_gen_degree);

struct FreenessProbe {
  bool free_up_to_bound;
  int witness_degree;               // -1 when free up to the bound
  int bound;
  std::vector<std::pair<int, int>> mu;  // (degree, minimal generator count)
};

// Compare against the free module on the minimal generators. A deficit
// certifies a syzygy; agreement is only "free up to the bound" (certified
// freeness additionally needs e_1 = a*e_0, see the experiment layer).
FreenessProbe freeness_probe(const GradedSubmodule& M, int bound);

}  // namespace chern

#endif
