#include "bruhat/galois.hpp"

#include "bruhat/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace bruhat {

int definition_degree(const TypeSubset& J, const DiagramAutomorphism& phi) {
  J.check_rank(phi.rank());
  TypeSubset image = J.image(phi);
  int d = 1;
  while (image != J) {
    image = image.image(phi);
    ++d;
  }
  if (phi.order() % d != 0) throw ConsistencyError("definition degree does not divide the automorphism order");
  return d;
}

std::vector<Orbit> galois_orbits(const WeylGroup& group, std::span<const WeylElement> elements,
                                 const DiagramAutomorphism& generator) {
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], k);

  std::vector<bool> done(elements.size(), false);
  std::vector<std::pair<std::vector<int>, Orbit>> keyed;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (done[k]) continue;
    std::vector<std::pair<std::vector<int>, WeylElement>> members;
    std::size_t current = k;
    while (!done[current]) {
      done[current] = true;
      members.emplace_back(reduced_word(group, elements[current]), elements[current]);
      const WeylElement image = apply_automorphism(group, generator, elements[current]);
      auto it = index.find(image);
      if (it == index.end())
        throw ConsistencyError("element set is not stable under the Galois generator: " +
                               word_to_string(members.back().first) + " leaves the set");
      current = it->second;
    }
    if (current != k) throw ConsistencyError("Galois generator does not act as a permutation on the element set");
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Orbit orbit;
    for (auto& m : members) orbit.push_back(std::move(m.second));
    keyed.emplace_back(std::move(members.front().first), std::move(orbit));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.front().length() != b.second.front().length())
      return a.second.front().length() < b.second.front().length();
    return a.first < b.first;
  });
  std::vector<Orbit> out;
  for (auto& [word, orbit] : keyed) out.push_back(std::move(orbit));
  return out;
}

OrbitPoset::OrbitPoset(std::vector<Orbit> orbits, std::vector<std::vector<int>> representative_words,
                       std::vector<std::vector<bool>> relation)
    : orbits_(std::move(orbits)), words_(std::move(representative_words)), relation_(std::move(relation)) {}

std::vector<std::size_t> OrbitPoset::down_set(std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (leq(a, b)) out.push_back(a);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> OrbitPoset::hasse_edges() const {
  return transitive_reduction(relation_);
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (c != a && c != b && leq[a][c] && leq[c][b]) covered = false;
      if (covered) edges.emplace_back(a, b);
    }
  return edges;
}

OrbitPoset orbit_poset(const WeylGroup& group, std::vector<Orbit> orbits, BruhatOrder& order) {
  const std::size_t n = orbits.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) {
        rel[a][b] = true;
        continue;
      }
      for (const auto& lo : orbits[a]) {
        for (const auto& hi : orbits[b])
          if (order.leq(lo, hi)) {
            rel[a][b] = true;
            break;
          }
        if (rel[a][b]) break;
      }
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && rel[a][b] && rel[b][a])
        throw ConsistencyError("induced orbit order is not antisymmetric between orbits " + std::to_string(a) +
                               " and " + std::to_string(b));
      for (std::size_t c = 0; c < n; ++c)
        if (rel[a][b] && rel[b][c] && !rel[a][c])
          throw ConsistencyError("induced orbit order is not transitive");
    }
  std::vector<std::vector<int>> words;
  for (const auto& o : orbits) words.push_back(reduced_word(group, o.front()));
  return OrbitPoset(std::move(orbits), std::move(words), std::move(rel));
}

}  // namespace bruhat
