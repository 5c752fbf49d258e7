#include "bruhat/root_data.hpp"

#include "bruhat/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace bruhat {

namespace {

int minimum_rank(FactorType type) {
  switch (type) {
    case FactorType::A: return 1;
    case FactorType::B:
    case FactorType::C: return 2;
    case FactorType::D: return 3;
  }
  return 1;
}

std::string factor_name(const DynkinFactor& f) {
  return std::string(1, static_cast<char>(f.type)) + std::to_string(f.rank);
}

std::vector<int> to_std(const IntVector& v) { return {v.data(), v.data() + v.size()}; }

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t factorial(int n) {
  std::size_t r = 1;
  for (int k = 2; k <= n; ++k) r = saturating_mul(r, static_cast<std::size_t>(k));
  return r;
}

}  // namespace

DynkinSpec::DynkinSpec(std::vector<DynkinFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ValidationError("Dynkin spec has no factors");
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto& f = factors_[k];
    if (f.type != FactorType::A && f.type != FactorType::B && f.type != FactorType::C &&
        f.type != FactorType::D)
      throw ValidationError("factor " + std::to_string(k) + ": only classical types A-D are supported");
    if (f.rank < minimum_rank(f.type))
      throw ValidationError("factor " + std::to_string(k) + " (" + factor_name(f) + "): type " +
                            static_cast<char>(f.type) + " requires rank >= " +
                            std::to_string(minimum_rank(f.type)));
    offsets_.push_back(rank_);
    rank_ += f.rank;
  }
}

DynkinSpec DynkinSpec::parse(std::string_view text) {
  std::vector<DynkinFactor> factors;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_space();
    if (pos >= text.size()) throw ValidationError("malformed Dynkin spec '" + std::string(text) + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos++])));
    if (letter < 'A' || letter > 'G')
      throw ValidationError("malformed Dynkin spec '" + std::string(text) + "'");
    if (letter > 'D')
      throw ValidationError(std::string("type ") + letter + " is not classical; only A-D are supported");
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ValidationError("missing rank in Dynkin spec '" + std::string(text) + "'");
    factors.push_back({static_cast<FactorType>(letter), std::stoi(std::string(text.substr(start, pos - start)))});
    skip_space();
    if (pos >= text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X' && text[pos] != '*')
      throw ValidationError("malformed Dynkin spec '" + std::string(text) + "'");
    ++pos;
  }
  return DynkinSpec(std::move(factors));
}

std::size_t DynkinSpec::factor_of(int node) const {
  if (node < 0 || node >= rank_) throw ValidationError("node " + std::to_string(node) + " out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), node);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

std::string DynkinSpec::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) out += "x";
    out += factor_name(factors_[k]);
  }
  return out;
}

CartanMatrix::CartanMatrix(IntMatrix a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols() || a_.rows() == 0)
    throw ValidationError("Cartan matrix must be square and non-empty");
  for (int i = 0; i < a_.rows(); ++i) {
    if (a_(i, i) != 2) throw ValidationError("Cartan matrix diagonal entry " + std::to_string(i) + " is not 2");
    for (int j = 0; j < a_.cols(); ++j) {
      if (i == j) continue;
      if (a_(i, j) > 0)
        throw ValidationError("Cartan matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") is positive");
      if ((a_(i, j) == 0) != (a_(j, i) == 0))
        throw ValidationError("Cartan matrix zero pattern not symmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    }
  }
}

std::vector<std::vector<int>> CartanMatrix::components() const {
  const int n = rank();
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> comp{s};
    label[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (label[j] < 0 && a_(comp[k], j) != 0) {
          label[j] = label[s];
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

CartanMatrix cartan_from_spec(const DynkinSpec& spec) {
  const int n = spec.rank();
  IntMatrix a = 2 * IntMatrix::Identity(n, n);
  for (std::size_t k = 0; k < spec.factors().size(); ++k) {
    const auto [type, r] = spec.factors()[k];
    const int o = spec.offset(k);
    auto bond = [&](int i, int j, int a_ij, int a_ji) {
      a(o + i, o + j) = a_ij;
      a(o + j, o + i) = a_ji;
    };
    switch (type) {
      case FactorType::A:
        for (int i = 0; i + 1 < r; ++i) bond(i, i + 1, -1, -1);
        break;
      case FactorType::B:
        // last node short: <long, short^vee> = -2
        for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, -1, -1);
        bond(r - 2, r - 1, -2, -1);
        break;
      case FactorType::C:
        // last node long
        for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, -1, -1);
        bond(r - 2, r - 1, -1, -2);
        break;
      case FactorType::D:
        for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, -1, -1);
        bond(r - 3, r - 1, -1, -1);
        break;
    }
  }
  return CartanMatrix(std::move(a));
}

PositiveRootTable::PositiveRootTable(std::vector<IntVector> roots, std::vector<std::vector<int>> components)
    : roots_(std::move(roots)), components_(std::move(components)) {
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(to_std(roots_[i]), static_cast<int>(i));
}

int PositiveRootTable::index_of(const IntVector& coords) const {
  auto it = index_.find(to_std(coords));
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::size_t> PositiveRootTable::counts_per_component() const {
  std::vector<std::size_t> counts(components_.size(), 0);
  for (const auto& r : roots_)
    for (std::size_t c = 0; c < components_.size(); ++c)
      if (std::any_of(components_[c].begin(), components_[c].end(), [&](int i) { return r(i) != 0; })) {
        ++counts[c];
        break;
      }
  return counts;
}

const IntVector& PositiveRootTable::highest_root(int node) const {
  const IntVector* best = nullptr;
  for (const auto& r : roots_)
    if (r(node) != 0 && (!best || r.sum() >= best->sum())) best = &r;
  if (!best) throw ValidationError("node " + std::to_string(node) + " has no roots");
  return *best;
}

PositiveRootTable positive_roots(const CartanMatrix& cartan) {
  const int n = cartan.rank();
  const IntMatrix& a = cartan.matrix();
  // The largest classical root system of rank n is B_n/C_n with n^2 positive roots.
  const std::size_t limit = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

  std::vector<IntVector> roots;
  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < n; ++i) {
    roots.push_back(IntVector::Unit(n, i));
    seen.emplace(to_std(roots.back()), i);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
      const int coroot_pairing = roots[k].dot(a.col(i));
      if (coroot_pairing == 0) continue;
      IntVector image = roots[k];
      image(i) -= coroot_pairing;
      if ((image.array() < 0).any()) continue;
      if (seen.emplace(to_std(image), 0).second) {
        roots.push_back(std::move(image));
        if (roots.size() > limit)
          throw ValidationError("root closure exceeds the classical bound of " + std::to_string(limit) +
                                " positive roots: Cartan matrix is not of finite classical type");
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const IntVector& x, const IntVector& y) {
    if (x.sum() != y.sum()) return x.sum() < y.sum();
    return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(), y.data() + y.size(),
                                        std::greater<>());
  });
  return PositiveRootTable(std::move(roots), cartan.components());
}

DiagramAutomorphism::DiagramAutomorphism(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<int> p = perm_;
  order_ = 1;
  auto is_id = [](const std::vector<int>& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i] != static_cast<int>(i)) return false;
    return true;
  };
  while (!is_id(p)) {
    std::vector<int> next(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) next[i] = perm_[p[i]];
    p = std::move(next);
    ++order_;
  }
}

DiagramAutomorphism DiagramAutomorphism::identity(int rank) {
  std::vector<int> p(rank);
  std::iota(p.begin(), p.end(), 0);
  return DiagramAutomorphism(std::move(p));
}

DiagramAutomorphism DiagramAutomorphism::compose(const DiagramAutomorphism& other) const {
  if (other.rank() != rank()) throw ValidationError("composing automorphisms of different rank");
  std::vector<int> p(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = perm_[other.perm_[i]];
  return DiagramAutomorphism(std::move(p));
}

DiagramAutomorphism DiagramAutomorphism::power(int k) const {
  k %= order_;
  if (k < 0) k += order_;
  DiagramAutomorphism r = identity(rank());
  for (int i = 0; i < k; ++i) r = compose(r);
  return r;
}

DiagramAutomorphism validate_automorphism(std::span<const int> perm, const CartanMatrix& cartan) {
  const int n = cartan.rank();
  if (static_cast<int>(perm.size()) != n)
    throw ValidationError("permutation has " + std::to_string(perm.size()) + " entries, expected " +
                          std::to_string(n));
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || hit[perm[i]])
      throw ValidationError("permutation is not a bijection on 0.." + std::to_string(n - 1));
    hit[perm[i]] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cartan(perm[i], perm[j]) != cartan(i, j))
        throw ValidationError("permutation does not preserve the Cartan matrix at pair (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
  return DiagramAutomorphism(std::vector<int>(perm.begin(), perm.end()));
}

int pairing(const CocharSpec& mu, const IntVector& root) {
  if (mu.pairings.size() != static_cast<std::size_t>(root.size()))
    throw ValidationError("cocharacter has " + std::to_string(mu.pairings.size()) +
                          " pairings but the root has " + std::to_string(root.size()) + " coordinates");
  return Eigen::Map<const IntVector>(mu.pairings.data(), root.size()).dot(root);
}

std::size_t positive_root_count(const DynkinFactor& f) {
  const auto n = static_cast<std::size_t>(f.rank);
  switch (f.type) {
    case FactorType::A: return n * (n + 1) / 2;
    case FactorType::B:
    case FactorType::C: return n * n;
    case FactorType::D: return n * (n - 1);
  }
  return 0;
}

std::size_t weyl_group_order(const PositiveRootTable& roots) {
  const auto counts = roots.counts_per_component();
  std::size_t order = 1;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    const auto r = static_cast<int>(roots.components()[c].size());
    const auto n = static_cast<std::size_t>(r);
    std::size_t factor_order = 0;
    // A3 and D3 coincide, as do A1 and C1; either reading gives the same order.
    if (counts[c] == n * (n + 1) / 2)
      factor_order = factorial(r + 1);
    else if (counts[c] == n * n)
      factor_order = saturating_mul(std::size_t{1} << std::min<std::size_t>(n, 63), factorial(r));
    else if (counts[c] == n * (n - 1))
      factor_order = saturating_mul(std::size_t{1} << std::min<std::size_t>(n - 1, 63), factorial(r));
    else
      throw ValidationError("component " + std::to_string(c) + " is not of classical type");
    order = saturating_mul(order, factor_order);
  }
  return order;
}

}  // namespace bruhat
