#include "chern/ideal.hpp"

#include "chern/groebner.hpp"

namespace chern {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw InputError("null ring in ideal");
  gens_.reserve(gens.size());
  for (Polynomial& g : gens) {
    Polynomial h = ring_->normalize(g.terms());
    if (!h.is_zero()) gens_.push_back(std::move(h));
  }
}

std::vector<Polynomial> Ideal::effective_gens() const {
  std::vector<Polynomial> out = ring_->quotient_gens();
  out.insert(out.end(), gens_.begin(), gens_.end());
  return out;
}

const std::vector<Polynomial>& Ideal::groebner() const {
  std::scoped_lock lk(cache_->mu);
  for (const auto& [ord, gb] : cache_->entries)
    if (ord == ring_->order()) return gb;
  auto gb = buchberger(*ring_, effective_gens(), ring_->order());
  cache_->entries.emplace_back(ring_->order(), std::move(gb));
  return cache_->entries.back().second;
}

std::vector<Polynomial> Ideal::groebner(const TermOrder& ord) const {
  std::scoped_lock lk(cache_->mu);
  for (const auto& [o, gb] : cache_->entries)
    if (o == ord) return gb;
  auto gb = buchberger(*ring_, effective_gens(), ord);
  cache_->entries.emplace_back(ord, gb);
  return gb;
}

}  // namespace chern
