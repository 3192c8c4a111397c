#ifndef CHERN_IDEAL_HPP
#define CHERN_IDEAL_HPP

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "chern/ring.hpp"

namespace chern {

// Handle on a finitely generated ideal. In a quotient ring R = S/L the
// handle's generators are representatives in S, and every Gröbner-level
// computation runs on the effective generating set L + gens, i.e. on the
// preimage of the R-ideal. The reduced-basis cache is write-once per term
// order; concurrent readers are fine, the first writer wins.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  std::vector<Polynomial> effective_gens() const;

  // Reduced Gröbner basis under the ring order (cached, unique).
  const std::vector<Polynomial>& groebner() const;
  std::vector<Polynomial> groebner(const TermOrder& ord) const;

  bool is_zero() const { return gens_.empty() && !ring_->is_quotient(); }

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::pair<TermOrder, std::vector<Polynomial>>> entries;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace chern

#endif
