#pragma once

// Brute-force counterparts of the engine. Every routine here works by
// enumeration or closure and shares no algorithm with the code it checks.

#include "bruhat/atlas.hpp"

#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace bruhat {

using ElementSet = std::unordered_set<WeylElement, WeylElementHash>;

/// All products of subwords of `word` (dynamic programming over prefixes).
ElementSet subword_products(const WeylGroup& group, std::span<const int> word);

/// x <= w iff x is a subword product of a reduced word of w. Throws
/// ValidationError when `word` is not a reduced word for w.
bool brute_bruhat(const WeylGroup& group, const WeylElement& x, const WeylElement& w, std::span<const int> word);

/// Partition of W into W_J w W_K by closure under left multiplication with
/// s_j (j in J) and right multiplication with s_k (k in K). The unique
/// minimal-length element leads each class; classes are ordered by it.
std::vector<std::vector<WeylElement>> brute_double_cosets(const WeylGroup& group, const TypeSubset& J,
                                                          const TypeSubset& K,
                                                          std::size_t bound = kDefaultElementBound);

struct VerificationCheck {
  std::string name;
  std::string scope;
  bool passed = true;
  std::string counterexample;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool passed() const;
  const VerificationCheck* find(std::string_view name) const;
};

/// Re-derives ^J W^K, the EO fibers, dimensions and closures by brute force
/// and compares them with the atlas. Never throws on a mismatch; failures
/// are report entries carrying a counterexample.
VerificationReport verify_atlas(const Atlas& atlas);

}  // namespace bruhat
