#pragma once

#include "bruhat/root_data.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace bruhat {

enum class Side { Left, Right };

/// Subset of the simple reflections, stored as sorted node ids.
class TypeSubset {
 public:
  TypeSubset() = default;
  TypeSubset(std::initializer_list<int> nodes) : TypeSubset(std::vector<int>(nodes)) {}
  explicit TypeSubset(std::vector<int> nodes);

  static TypeSubset all(int rank);

  bool contains(int node) const;
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const std::vector<int>& nodes() const { return nodes_; }
  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }

  TypeSubset intersect(const TypeSubset& other) const;
  TypeSubset image(const DiagramAutomorphism& phi) const;

  /// Throws ValidationError when a node is outside 0..rank-1.
  void check_rank(int rank) const;

  std::string to_string() const;

  friend bool operator==(const TypeSubset&, const TypeSubset&) = default;
  friend auto operator<=>(const TypeSubset&, const TypeSubset&) = default;

 private:
  std::vector<int> nodes_;
};

/// Byte string of the action matrix in column-major order: the images of the
/// simple roots, one signed root-coordinate vector after another.
using CanonicalKey = std::string;

/// Element of a finite Weyl group, represented by its action on the root
/// lattice in simple-root coordinates (column j is w(alpha_j)). Constructed
/// through WeylGroup only.
class WeylElement {
 public:
  const IntMatrix& action() const { return action_; }
  int length() const { return length_; }
  int rank() const { return static_cast<int>(action_.rows()); }
  CanonicalKey key() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action_ == b.action_; }

 private:
  friend class WeylGroup;
  WeylElement(IntMatrix action, int length) : action_(std::move(action)), length_(length) {}

  IntMatrix action_;
  int length_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

class WeylGroup {
 public:
  explicit WeylGroup(CartanMatrix cartan);
  explicit WeylGroup(const DynkinSpec& spec) : WeylGroup(cartan_from_spec(spec)) {}

  int rank() const { return cartan_.rank(); }
  const CartanMatrix& cartan() const { return cartan_; }
  const PositiveRootTable& roots() const { return roots_; }
  /// Closed-form |W|.
  std::size_t order() const { return order_; }

  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;

  /// w * s_i, with the length updated from the sign of w(alpha_i).
  WeylElement times_simple(const WeylElement& w, int i) const;
  /// s_i * w.
  WeylElement simple_times(int i, const WeylElement& w) const;

  /// w * v, composing the actions.
  WeylElement product(const WeylElement& w, const WeylElement& v) const;

  /// s_{i_1} s_{i_2} ... s_{i_k}.
  WeylElement from_word(std::span<const int> word) const;

  /// Wraps an action matrix; throws ValidationError unless it permutes the
  /// signed roots.
  WeylElement from_action(IntMatrix action) const;

  /// Number of positive roots sent to negative roots.
  int inversion_count(const IntMatrix& action) const;

  /// True when the column is a negative root.
  static bool is_negative(const IntVector& root_image);

  void check_member(const WeylElement& w) const;
  void check_node(int i) const;

 private:
  CartanMatrix cartan_;
  PositiveRootTable roots_;
  std::size_t order_ = 0;
};

inline constexpr std::size_t kDefaultElementBound = 1'000'000;

WeylElement identity(const WeylGroup& group);
WeylElement multiply(const WeylGroup& group, const WeylElement& w, const WeylElement& v);
WeylElement inverse(const WeylGroup& group, const WeylElement& w);
inline int length(const WeylElement& w) { return w.length(); }

bool is_descent(const WeylGroup& group, const WeylElement& w, int i, Side side);
TypeSubset descents(const WeylGroup& group, const WeylElement& w, Side side);

/// Reduced word obtained by repeatedly peeling off the smallest left descent.
std::vector<int> reduced_word(const WeylGroup& group, const WeylElement& w);
std::string word_to_string(std::span<const int> word);

/// w_{0,J}, the longest element of the parabolic subgroup W_J.
WeylElement longest_element(const WeylGroup& group, const TypeSubset& J);

/// iota with s_{iota(i)} = w_0 s_i w_0.
std::vector<int> opposition_involution(const WeylGroup& group);
TypeSubset opposition(const WeylGroup& group, const TypeSubset& J);

/// Letter-wise image of the reduced word under the diagram automorphism.
WeylElement apply_automorphism(const WeylGroup& group, const DiagramAutomorphism& phi, const WeylElement& w);

/// All elements of W, each once, breadth-first by length.
std::vector<WeylElement> enumerate_group(const WeylGroup& group, std::size_t bound = kDefaultElementBound);

/// All elements of the parabolic subgroup W_J, breadth-first by length.
std::vector<WeylElement> enumerate_parabolic(const WeylGroup& group, const TypeSubset& J,
                                             std::size_t bound = kDefaultElementBound);

/// Closed-form |W_J|.
std::size_t parabolic_order(const WeylGroup& group, const TypeSubset& J);

/// Bruhat order by the lifting property, memoized on key pairs. Not
/// synchronized: give each worker thread its own instance.
class BruhatOrder {
 public:
  explicit BruhatOrder(const WeylGroup& group) : group_(&group) {}

  bool leq(const WeylElement& x, const WeylElement& w);
  std::size_t cache_size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  const WeylGroup* group_;
  std::unordered_map<std::string, bool> memo_;
};

bool bruhat_leq(const WeylGroup& group, const WeylElement& x, const WeylElement& w);

}  // namespace bruhat
