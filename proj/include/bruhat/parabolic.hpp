#pragma once

#include "bruhat/weyl_group.hpp"

#include <vector>

namespace bruhat {

bool is_min_left(const WeylGroup& group, const WeylElement& w, const TypeSubset& J);
bool is_min_right(const WeylGroup& group, const WeylElement& w, const TypeSubset& K);
bool is_min_double(const WeylGroup& group, const WeylElement& w, const TypeSubset& J, const TypeSubset& K);

/// ^J W: minimal-length representatives of W_J \ W, breadth-first by length.
std::vector<WeylElement> min_left_reps(const WeylGroup& group, const TypeSubset& J,
                                       std::size_t bound = kDefaultElementBound);
/// W^K: minimal-length representatives of W / W_K.
std::vector<WeylElement> min_right_reps(const WeylGroup& group, const TypeSubset& K,
                                        std::size_t bound = kDefaultElementBound);
/// ^J W^K = ^J W  intersected with  W^K.
std::vector<WeylElement> min_double_reps(const WeylGroup& group, const TypeSubset& J, const TypeSubset& K,
                                         std::size_t bound = kDefaultElementBound);

/// The three coset-representative lists of one (J, K) pair, computed from a
/// single enumeration of W.
class CosetSystem {
 public:
  CosetSystem(const WeylGroup& group, TypeSubset J, TypeSubset K, std::size_t bound = kDefaultElementBound);

  const TypeSubset& J() const { return J_; }
  const TypeSubset& K() const { return K_; }
  const std::vector<WeylElement>& left_reps() const { return left_; }
  const std::vector<WeylElement>& right_reps() const { return right_; }
  const std::vector<WeylElement>& double_reps() const { return double_; }

 private:
  TypeSubset J_;
  TypeSubset K_;
  std::vector<WeylElement> left_;
  std::vector<WeylElement> right_;
  std::vector<WeylElement> double_;
};

/// pi(w): the minimal-length element of w W_K, for w in ^J W.
WeylElement project_to_double(const WeylGroup& group, const WeylElement& w, const TypeSubset& J,
                              const TypeSubset& K);

/// J_x = K  intersected with  x^{-1} J x, for x in ^J W^K.
TypeSubset induced_subset(const WeylGroup& group, const WeylElement& x, const TypeSubset& J, const TypeSubset& K);

/// x_{J,K} = w_{0,J_x} w_{0,K}, the longest element of ^{J_x} W_K.
WeylElement x_lower(const WeylGroup& group, const WeylElement& x, const TypeSubset& J, const TypeSubset& K);

struct UpperElement {
  WeylElement element;  ///< x^{J,K} = x x_{J,K}
  int dimension;        ///< l(x^{J,K})
};

/// x^{J,K}, the longest element of ^J W meeting W_J x W_K. Throws
/// ConsistencyError if the length additivity l(x x_{J,K}) = l(x) + l(x_{J,K})
/// or the membership x^{J,K} in ^J W fails.
UpperElement x_upper(const WeylGroup& group, const WeylElement& x, const TypeSubset& J, const TypeSubset& K);

/// l(x) + l(w_{0,K}) - l(w_{0,J_x}).
int ell_JK(const WeylGroup& group, const WeylElement& x, const TypeSubset& J, const TypeSubset& K);

/// ^{L} W_K: minimal left representatives of W_L inside the parabolic W_K (L a subset of K).
std::vector<WeylElement> min_left_reps_in_parabolic(const WeylGroup& group, const TypeSubset& L,
                                                    const TypeSubset& K,
                                                    std::size_t bound = kDefaultElementBound);

}  // namespace bruhat
