#pragma once

#include "bruhat/weyl_group.hpp"

#include <span>
#include <utility>
#include <vector>

namespace bruhat {

/// Smallest d >= 1 with phi^d(J) = J; the residue field of J is F_{p^d}.
int definition_degree(const TypeSubset& J, const DiagramAutomorphism& phi);

using Orbit = std::vector<WeylElement>;

/// Orbits of the cyclic group generated by `generator` (acting through
/// apply_automorphism) on a stable element set. Each orbit is sorted by
/// reduced word; orbits are sorted by (length, first reduced word). Throws
/// ConsistencyError when the set is not stable.
std::vector<Orbit> galois_orbits(const WeylGroup& group, std::span<const WeylElement> elements,
                                 const DiagramAutomorphism& generator);

/// Orbits with the induced order: [a] <= [b] iff some y' in a and y in b
/// satisfy y' <= y in the Bruhat order.
class OrbitPoset {
 public:
  OrbitPoset() = default;
  OrbitPoset(std::vector<Orbit> orbits, std::vector<std::vector<int>> representative_words,
             std::vector<std::vector<bool>> relation);

  std::size_t size() const { return orbits_.size(); }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  const Orbit& orbit(std::size_t id) const { return orbits_.at(id); }
  const WeylElement& representative(std::size_t id) const { return orbits_.at(id).front(); }
  const std::vector<int>& representative_word(std::size_t id) const { return words_.at(id); }

  bool leq(std::size_t a, std::size_t b) const { return relation_.at(a).at(b); }
  const std::vector<std::vector<bool>>& relation() const { return relation_; }

  /// Ids a with [a] <= [b], including b itself.
  std::vector<std::size_t> down_set(std::size_t b) const;

  /// Covering relations (lower, upper) of the order.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

 private:
  std::vector<Orbit> orbits_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<bool>> relation_;
};

/// Builds the induced order and verifies it is antisymmetric and transitive;
/// throws ConsistencyError otherwise.
OrbitPoset orbit_poset(const WeylGroup& group, std::vector<Orbit> orbits, BruhatOrder& order);

/// Transitive reduction of a partial order given as a full relation matrix.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<std::vector<bool>>& leq);

}  // namespace bruhat
