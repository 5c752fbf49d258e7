#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<int, Eigen::Dynamic, 1>;

enum class FactorType : char { A = 'A', B = 'B', C = 'C', D = 'D' };

struct DynkinFactor {
  FactorType type;
  int rank;

  friend bool operator==(const DynkinFactor&, const DynkinFactor&) = default;
};

/// Ordered product of classical Dynkin diagrams. Nodes are numbered 0..n-1,
/// consecutively inside each factor, Bourbaki order inside a factor.
class DynkinSpec {
 public:
  explicit DynkinSpec(std::vector<DynkinFactor> factors);

  /// Parses "C2", "A1xA1", "A2 x C3" (case-insensitive letters).
  static DynkinSpec parse(std::string_view text);

  const std::vector<DynkinFactor>& factors() const { return factors_; }
  int rank() const { return rank_; }
  int offset(std::size_t factor) const { return offsets_.at(factor); }
  std::size_t factor_of(int node) const;
  std::string to_string() const;

  friend bool operator==(const DynkinSpec& a, const DynkinSpec& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<DynkinFactor> factors_;
  std::vector<int> offsets_;
  int rank_ = 0;
};

/// Integer Cartan matrix with a(i, j) = <alpha_i, alpha_j^vee>, i.e. row root
/// paired against column coroot. The simple reflection s_i therefore acts by
/// s_i(alpha_j) = alpha_j - a(j, i) alpha_i.
class CartanMatrix {
 public:
  /// Validates a(i,i) = 2, a(i,j) <= 0 off the diagonal and the zero pattern
  /// being symmetric. Finiteness is not checked here.
  explicit CartanMatrix(IntMatrix a);

  const IntMatrix& matrix() const { return a_; }
  int rank() const { return static_cast<int>(a_.rows()); }
  int operator()(int i, int j) const { return a_(i, j); }

  /// Connected components of the diagram, each a sorted node list.
  std::vector<std::vector<int>> components() const;

  friend bool operator==(const CartanMatrix& x, const CartanMatrix& y) { return x.a_ == y.a_; }

 private:
  IntMatrix a_;
};

CartanMatrix cartan_from_spec(const DynkinSpec& spec);

/// Positive roots in simple-root coordinates, sorted by height and then
/// lexicographically, so simple roots come first in node order.
class PositiveRootTable {
 public:
  PositiveRootTable() = default;
  PositiveRootTable(std::vector<IntVector> roots, std::vector<std::vector<int>> components);

  std::size_t size() const { return roots_.size(); }
  const IntVector& operator[](std::size_t i) const { return roots_[i]; }
  const std::vector<IntVector>& roots() const { return roots_; }

  /// Index of a positive root, or -1 when `coords` is not a positive root.
  int index_of(const IntVector& coords) const;

  /// Number of positive roots supported on each connected component.
  std::vector<std::size_t> counts_per_component() const;
  const std::vector<std::vector<int>>& components() const { return components_; }

  /// Highest root of the component containing `node`.
  const IntVector& highest_root(int node) const;

 private:
  std::vector<IntVector> roots_;
  std::vector<std::vector<int>> components_;
  std::map<std::vector<int>, int> index_;
};

PositiveRootTable positive_roots(const CartanMatrix& cartan);

/// Node permutation preserving the Cartan matrix.
class DiagramAutomorphism {
 public:
  static DiagramAutomorphism identity(int rank);

  const std::vector<int>& permutation() const { return perm_; }
  int rank() const { return static_cast<int>(perm_.size()); }
  int order() const { return order_; }
  int operator()(int node) const { return perm_.at(node); }
  bool is_identity() const { return order_ == 1; }

  /// (this * other)(i) = this(other(i)).
  DiagramAutomorphism compose(const DiagramAutomorphism& other) const;
  DiagramAutomorphism power(int k) const;

  friend bool operator==(const DiagramAutomorphism& a, const DiagramAutomorphism& b) {
    return a.perm_ == b.perm_;
  }

 private:
  friend DiagramAutomorphism validate_automorphism(std::span<const int>, const CartanMatrix&);
  explicit DiagramAutomorphism(std::vector<int> perm);

  std::vector<int> perm_;
  int order_ = 1;
};

DiagramAutomorphism validate_automorphism(std::span<const int> perm, const CartanMatrix& cartan);

/// A cocharacter mu given only through m_i = <mu, alpha_i>.
struct CocharSpec {
  std::vector<int> pairings;

  friend bool operator==(const CocharSpec&, const CocharSpec&) = default;
};

/// <mu, alpha> for a root alpha given in simple-root coordinates.
int pairing(const CocharSpec& mu, const IntVector& root);

/// Closed-form count of positive roots of a factor.
std::size_t positive_root_count(const DynkinFactor& factor);

/// Closed-form Weyl group order, component by component, identified from the
/// rank and positive-root count of each component. Saturates at SIZE_MAX.
std::size_t weyl_group_order(const PositiveRootTable& roots);

}  // namespace bruhat
