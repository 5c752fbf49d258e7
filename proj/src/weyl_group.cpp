#include "bruhat/weyl_group.hpp"

#include "bruhat/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace bruhat {

TypeSubset::TypeSubset(std::vector<int> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

TypeSubset TypeSubset::all(int rank) {
  std::vector<int> v(rank);
  std::iota(v.begin(), v.end(), 0);
  return TypeSubset(std::move(v));
}

bool TypeSubset::contains(int node) const { return std::binary_search(nodes_.begin(), nodes_.end(), node); }

TypeSubset TypeSubset::intersect(const TypeSubset& other) const {
  std::vector<int> out;
  std::set_intersection(nodes_.begin(), nodes_.end(), other.nodes_.begin(), other.nodes_.end(),
                        std::back_inserter(out));
  return TypeSubset(std::move(out));
}

TypeSubset TypeSubset::image(const DiagramAutomorphism& phi) const {
  std::vector<int> out;
  out.reserve(nodes_.size());
  for (int i : nodes_) out.push_back(phi(i));
  return TypeSubset(std::move(out));
}

void TypeSubset::check_rank(int rank) const {
  for (int i : nodes_)
    if (i < 0 || i >= rank)
      throw ValidationError("node " + std::to_string(i) + " outside 0.." + std::to_string(rank - 1));
}

std::string TypeSubset::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(nodes_[k]);
  }
  return s + "}";
}

CanonicalKey WeylElement::key() const {
  CanonicalKey k(static_cast<std::size_t>(action_.size()), '\0');
  for (Eigen::Index i = 0; i < action_.size(); ++i) k[i] = static_cast<char>(action_.data()[i]);
  return k;
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  const int* d = w.action().data();
  for (Eigen::Index i = 0; i < w.action().size(); ++i) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(d[i]));
    h *= 0x100000001b3ULL;
  }
  return h;
}

WeylGroup::WeylGroup(CartanMatrix cartan)
    : cartan_(std::move(cartan)), roots_(positive_roots(cartan_)), order_(weyl_group_order(roots_)) {}

WeylElement WeylGroup::identity() const { return WeylElement(IntMatrix::Identity(rank(), rank()), 0); }

WeylElement WeylGroup::simple_reflection(int i) const { return times_simple(identity(), i); }

void WeylGroup::check_node(int i) const {
  if (i < 0 || i >= rank())
    throw ValidationError("simple reflection " + std::to_string(i) + " outside 0.." + std::to_string(rank() - 1));
}

void WeylGroup::check_member(const WeylElement& w) const {
  if (w.rank() != rank())
    throw ValidationError("element of rank " + std::to_string(w.rank()) + " used in a group of rank " +
                          std::to_string(rank()));
}

bool WeylGroup::is_negative(const IntVector& root_image) { return (root_image.array() < 0).any(); }

WeylElement WeylGroup::times_simple(const WeylElement& w, int i) const {
  check_node(i);
  check_member(w);
  // (w s_i)(alpha_j) = w(alpha_j) - <alpha_j, alpha_i^vee> w(alpha_i)
  const IntVector image_i = w.action_.col(i);
  IntMatrix m = w.action_ - image_i * cartan_.matrix().col(i).transpose();
  m.col(i) = -image_i;
  const int len = is_negative(image_i) ? w.length_ - 1 : w.length_ + 1;
  return WeylElement(std::move(m), len);
}

WeylElement WeylGroup::simple_times(int i, const WeylElement& w) const {
  check_node(i);
  check_member(w);
  // s_i(v) = v - <v, alpha_i^vee> alpha_i, applied to every column
  IntMatrix m = w.action_;
  m.row(i) -= cartan_.matrix().col(i).transpose() * w.action_;
  const int len = inversion_count(m);
  return WeylElement(std::move(m), len);
}

WeylElement WeylGroup::product(const WeylElement& w, const WeylElement& v) const {
  check_member(w);
  check_member(v);
  IntMatrix m = w.action_ * v.action_;
  const int len = inversion_count(m);
  return WeylElement(std::move(m), len);
}

WeylElement WeylGroup::from_word(std::span<const int> word) const {
  WeylElement w = identity();
  for (int i : word) w = times_simple(w, i);
  return w;
}

int WeylGroup::inversion_count(const IntMatrix& action) const {
  int count = 0;
  for (const auto& beta : roots_.roots())
    if (is_negative(action * beta)) ++count;
  return count;
}

WeylElement WeylGroup::from_action(IntMatrix action) const {
  if (action.rows() != rank() || action.cols() != rank())
    throw ValidationError("action matrix has the wrong shape");
  for (const auto& beta : roots_.roots()) {
    IntVector image = action * beta;
    if (is_negative(image)) image = -image;
    if (roots_.index_of(image) < 0) throw ValidationError("matrix does not permute the roots");
  }
  const int len = inversion_count(action);
  // Strip right descents; a genuine Weyl group element reaches the identity.
  WeylElement probe(action, len);
  while (probe.length_ > 0) {
    int i = 0;
    while (i < rank() && !is_negative(probe.action_.col(i))) ++i;
    if (i == rank()) break;
    probe = times_simple(probe, i);
  }
  if (probe.action_ != IntMatrix::Identity(rank(), rank()))
    throw ValidationError("matrix is a root-system automorphism outside the Weyl group");
  return WeylElement(std::move(action), len);
}

WeylElement identity(const WeylGroup& group) { return group.identity(); }

WeylElement multiply(const WeylGroup& group, const WeylElement& w, const WeylElement& v) {
  return group.product(w, v);
}

WeylElement inverse(const WeylGroup& group, const WeylElement& w) {
  // Peeling right descents gives w = s_{r_k} ... s_{r_1}, so w^{-1} = s_{r_1} ... s_{r_k}.
  std::vector<int> peeled;
  WeylElement v = w;
  while (v.length() > 0) {
    int i = 0;
    while (!WeylGroup::is_negative(v.action().col(i))) ++i;
    peeled.push_back(i);
    v = group.times_simple(v, i);
  }
  return group.from_word(peeled);
}

bool is_descent(const WeylGroup& group, const WeylElement& w, int i, Side side) {
  group.check_node(i);
  if (side == Side::Right) return WeylGroup::is_negative(w.action().col(i));
  return WeylGroup::is_negative(inverse(group, w).action().col(i));
}

TypeSubset descents(const WeylGroup& group, const WeylElement& w, Side side) {
  const WeylElement probe = side == Side::Right ? w : inverse(group, w);
  std::vector<int> out;
  for (int i = 0; i < group.rank(); ++i)
    if (WeylGroup::is_negative(probe.action().col(i))) out.push_back(i);
  return TypeSubset(std::move(out));
}

std::vector<int> reduced_word(const WeylGroup& group, const WeylElement& w) {
  // Left descents of w are the right descents of w^{-1}.
  std::vector<int> word;
  WeylElement v = inverse(group, w);
  while (v.length() > 0) {
    int i = 0;
    while (!WeylGroup::is_negative(v.action().col(i))) ++i;
    word.push_back(i);
    v = group.times_simple(v, i);
  }
  return word;
}

std::string word_to_string(std::span<const int> word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

WeylElement longest_element(const WeylGroup& group, const TypeSubset& J) {
  J.check_rank(group.rank());
  WeylElement w = group.identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : J)
      if (!WeylGroup::is_negative(w.action().col(i))) {
        w = group.times_simple(w, i);
        grew = true;
        break;
      }
  }
  return w;
}

std::vector<int> opposition_involution(const WeylGroup& group) {
  const WeylElement w0 = longest_element(group, TypeSubset::all(group.rank()));
  std::vector<int> iota(group.rank());
  for (int i = 0; i < group.rank(); ++i) {
    // w_0(alpha_i) = -alpha_{iota(i)}
    const IntVector image = -w0.action().col(i);
    const int idx = group.roots().index_of(image);
    if (idx < 0 || idx >= group.rank()) throw ConsistencyError("w_0 does not send simple roots to negatives of simple roots");
    iota[i] = idx;
  }
  return iota;
}

TypeSubset opposition(const WeylGroup& group, const TypeSubset& J) {
  J.check_rank(group.rank());
  const auto iota = opposition_involution(group);
  std::vector<int> out;
  for (int i : J) out.push_back(iota[i]);
  return TypeSubset(std::move(out));
}

WeylElement apply_automorphism(const WeylGroup& group, const DiagramAutomorphism& phi, const WeylElement& w) {
  if (phi.rank() != group.rank()) throw ValidationError("automorphism rank does not match the group");
  std::vector<int> word = reduced_word(group, w);
  for (int& letter : word) letter = phi(letter);
  return group.from_word(word);
}

namespace {

std::vector<WeylElement> breadth_first(const WeylGroup& group, const TypeSubset& generators, std::size_t expected) {
  std::vector<WeylElement> out;
  out.reserve(expected);
  std::unordered_set<WeylElement, WeylElementHash> seen;
  out.push_back(group.identity());
  seen.insert(out.back());
  std::size_t layer_begin = 0;
  while (layer_begin < out.size()) {
    const std::size_t layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k)
      for (int i : generators) {
        if (WeylGroup::is_negative(out[k].action().col(i))) continue;
        WeylElement next = group.times_simple(out[k], i);
        if (seen.insert(next).second) out.push_back(std::move(next));
      }
    layer_begin = layer_end;
  }
  if (out.size() != expected)
    throw ConsistencyError("enumerated " + std::to_string(out.size()) + " elements, closed form gives " +
                           std::to_string(expected));
  return out;
}

}  // namespace

std::size_t parabolic_order(const WeylGroup& group, const TypeSubset& J) {
  J.check_rank(group.rank());
  if (J.empty()) return 1;
  const auto& nodes = J.nodes();
  const auto k = static_cast<Eigen::Index>(nodes.size());
  IntMatrix sub(k, k);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = group.cartan()(nodes[r], nodes[c]);
  return weyl_group_order(positive_roots(CartanMatrix(std::move(sub))));
}

std::vector<WeylElement> enumerate_group(const WeylGroup& group, std::size_t bound) {
  if (group.order() > bound) throw BoundExceeded(group.order(), bound);
  return breadth_first(group, TypeSubset::all(group.rank()), group.order());
}

std::vector<WeylElement> enumerate_parabolic(const WeylGroup& group, const TypeSubset& J, std::size_t bound) {
  const std::size_t order = parabolic_order(group, J);
  if (order > bound) throw BoundExceeded(order, bound);
  return breadth_first(group, J, order);
}

bool BruhatOrder::leq(const WeylElement& x, const WeylElement& w) {
  group_->check_member(x);
  group_->check_member(w);
  if (x.length() > w.length()) return false;
  if (x.length() == w.length()) return x == w;

  std::string memo_key = x.key();
  memo_key += w.key();
  if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;

  // Lifting property, right-handed: for a right descent s of w,
  // x <= w  iff  xs <= ws (when xs < x)  or  x <= ws (when xs > x).
  WeylElement xs = x;
  WeylElement ws = w;
  bool result = false;
  while (true) {
    if (xs.length() > ws.length()) break;
    if (xs.length() == ws.length()) {
      result = xs == ws;
      break;
    }
    int i = 0;
    while (!WeylGroup::is_negative(ws.action().col(i))) ++i;
    ws = group_->times_simple(ws, i);
    if (WeylGroup::is_negative(xs.action().col(i))) xs = group_->times_simple(xs, i);
  }
  memo_.emplace(std::move(memo_key), result);
  return result;
}

bool bruhat_leq(const WeylGroup& group, const WeylElement& x, const WeylElement& w) {
  BruhatOrder order(group);
  return order.leq(x, w);
}

}  // namespace bruhat
