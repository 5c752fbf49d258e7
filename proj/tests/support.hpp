#pragma once

#include "bruhat/weyl_group.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace bruhat::test {

inline WeylGroup group(const char* name) { return WeylGroup(DynkinSpec::parse(name)); }

inline WeylElement word(const WeylGroup& g, std::initializer_list<int> letters) {
  const std::vector<int> w(letters);
  return g.from_word(w);
}

inline std::vector<int> word_lengths(const std::vector<WeylElement>& elems) {
  std::vector<int> out;
  for (const auto& e : elems) out.push_back(e.length());
  std::sort(out.begin(), out.end());
  return out;
}

/// Random element as the product of a random word of the given length.
inline WeylElement random_element(const WeylGroup& g, std::mt19937& rng, int letters) {
  std::uniform_int_distribution<int> node(0, g.rank() - 1);
  WeylElement w = g.identity();
  for (int k = 0; k < letters; ++k) w = g.times_simple(w, node(rng));
  return w;
}

/// Random subset of 0..rank-1, each node kept with probability 1/2.
inline TypeSubset random_subset(int rank, std::mt19937& rng) {
  std::bernoulli_distribution keep(0.5);
  std::vector<int> nodes;
  for (int i = 0; i < rank; ++i)
    if (keep(rng)) nodes.push_back(i);
  return TypeSubset(std::move(nodes));
}

/// Every subset of 0..rank-1.
inline std::vector<TypeSubset> all_subsets(int rank) {
  std::vector<TypeSubset> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    out.emplace_back(std::move(nodes));
  }
  return out;
}

}  // namespace bruhat::test
