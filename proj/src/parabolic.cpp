#include "bruhat/parabolic.hpp"

#include "bruhat/error.hpp"

namespace bruhat {

namespace {

bool no_descent_in(const WeylElement& probe, const TypeSubset& S) {
  for (int i : S)
    if (WeylGroup::is_negative(probe.action().col(i))) return false;
  return true;
}

void require_double_rep(const WeylGroup& group, const WeylElement& x, const TypeSubset& J, const TypeSubset& K) {
  J.check_rank(group.rank());
  K.check_rank(group.rank());
  group.check_member(x);
  if (!is_min_double(group, x, J, K))
    throw ValidationError(word_to_string(reduced_word(group, x)) + " is not a minimal double coset representative for J=" +
                          J.to_string() + ", K=" + K.to_string());
}

}  // namespace

bool is_min_left(const WeylGroup& group, const WeylElement& w, const TypeSubset& J) {
  return no_descent_in(inverse(group, w), J);
}

bool is_min_right(const WeylGroup&, const WeylElement& w, const TypeSubset& K) { return no_descent_in(w, K); }

bool is_min_double(const WeylGroup& group, const WeylElement& w, const TypeSubset& J, const TypeSubset& K) {
  return is_min_right(group, w, K) && is_min_left(group, w, J);
}

std::vector<WeylElement> min_left_reps(const WeylGroup& group, const TypeSubset& J, std::size_t bound) {
  return CosetSystem(group, J, TypeSubset{}, bound).left_reps();
}

std::vector<WeylElement> min_right_reps(const WeylGroup& group, const TypeSubset& K, std::size_t bound) {
  return CosetSystem(group, TypeSubset{}, K, bound).right_reps();
}

std::vector<WeylElement> min_double_reps(const WeylGroup& group, const TypeSubset& J, const TypeSubset& K,
                                         std::size_t bound) {
  return CosetSystem(group, J, K, bound).double_reps();
}

CosetSystem::CosetSystem(const WeylGroup& group, TypeSubset J, TypeSubset K, std::size_t bound)
    : J_(std::move(J)), K_(std::move(K)) {
  J_.check_rank(group.rank());
  K_.check_rank(group.rank());
  for (const auto& w : enumerate_group(group, bound)) {
    const bool left = no_descent_in(inverse(group, w), J_);
    const bool right = no_descent_in(w, K_);
    if (left) left_.push_back(w);
    if (right) right_.push_back(w);
    if (left && right) double_.push_back(w);
  }
  if (left_.size() * parabolic_order(group, J_) != group.order() ||
      right_.size() * parabolic_order(group, K_) != group.order())
    throw ConsistencyError("coset representative counts do not match |W|/|W_J|");
}

WeylElement project_to_double(const WeylGroup& group, const WeylElement& w, const TypeSubset& J,
                              const TypeSubset& K) {
  J.check_rank(group.rank());
  K.check_rank(group.rank());
  if (!is_min_left(group, w, J))
    throw ValidationError(word_to_string(reduced_word(group, w)) + " is not in ^J W for J=" + J.to_string());
  WeylElement x = w;
  for (bool shrank = true; shrank;) {
    shrank = false;
    for (int k : K)
      if (WeylGroup::is_negative(x.action().col(k))) {
        x = group.times_simple(x, k);
        shrank = true;
        break;
      }
  }
  return x;
}

TypeSubset induced_subset(const WeylGroup& group, const WeylElement& x, const TypeSubset& J, const TypeSubset& K) {
  require_double_rep(group, x, J, K);
  const WeylElement x_inv = inverse(group, x);
  std::vector<int> out;
  for (int k : K) {
    const WeylElement conjugate = group.product(group.product(x, group.simple_reflection(k)), x_inv);
    for (int j : J)
      if (conjugate == group.simple_reflection(j)) {
        out.push_back(k);
        break;
      }
  }
  return TypeSubset(std::move(out));
}

WeylElement x_lower(const WeylGroup& group, const WeylElement& x, const TypeSubset& J, const TypeSubset& K) {
  const TypeSubset Jx = induced_subset(group, x, J, K);
  return group.product(longest_element(group, Jx), longest_element(group, K));
}

UpperElement x_upper(const WeylGroup& group, const WeylElement& x, const TypeSubset& J, const TypeSubset& K) {
  const WeylElement lower = x_lower(group, x, J, K);
  WeylElement upper = group.product(x, lower);
  if (upper.length() != x.length() + lower.length())
    throw ConsistencyError("length additivity fails for x=" + word_to_string(reduced_word(group, x)));
  if (!is_min_left(group, upper, J))
    throw ConsistencyError("x^{J,K} is not in ^J W for x=" + word_to_string(reduced_word(group, x)));
  const int dim = upper.length();
  return {std::move(upper), dim};
}

int ell_JK(const WeylGroup& group, const WeylElement& x, const TypeSubset& J, const TypeSubset& K) {
  const TypeSubset Jx = induced_subset(group, x, J, K);
  return x.length() + longest_element(group, K).length() - longest_element(group, Jx).length();
}

std::vector<WeylElement> min_left_reps_in_parabolic(const WeylGroup& group, const TypeSubset& L,
                                                    const TypeSubset& K, std::size_t bound) {
  if (L.intersect(K) != L) throw ValidationError(L.to_string() + " is not contained in " + K.to_string());
  std::vector<WeylElement> out;
  for (const auto& y : enumerate_parabolic(group, K, bound))
    if (is_min_left(group, y, L)) out.push_back(y);
  return out;
}

}  // namespace bruhat
