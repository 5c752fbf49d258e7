#include "bruhat/oracle.hpp"

#include "bruhat/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

namespace bruhat {

ElementSet subword_products(const WeylGroup& group, std::span<const int> word) {
  ElementSet reached{group.identity()};
  for (int letter : word) {
    std::vector<WeylElement> extended;
    extended.reserve(reached.size());
    for (const auto& u : reached) extended.push_back(group.product(u, group.simple_reflection(letter)));
    reached.insert(extended.begin(), extended.end());
  }
  return reached;
}

bool brute_bruhat(const WeylGroup& group, const WeylElement& x, const WeylElement& w, std::span<const int> word) {
  if (static_cast<int>(word.size()) != w.length() || !(group.from_word(word) == w))
    throw ValidationError("word is not a reduced word of the element");
  return subword_products(group, word).contains(x);
}

std::vector<std::vector<WeylElement>> brute_double_cosets(const WeylGroup& group, const TypeSubset& J,
                                                          const TypeSubset& K, std::size_t bound) {
  const auto elements = enumerate_group(group, bound);
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], k);

  std::vector<std::size_t> parent(elements.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (int j : J) unite(k, index.at(group.product(group.simple_reflection(j), elements[k])));
    for (int i : K) unite(k, index.at(group.product(elements[k], group.simple_reflection(i))));
  }

  std::map<std::size_t, std::vector<WeylElement>> classes;
  for (std::size_t k = 0; k < elements.size(); ++k) classes[find(k)].push_back(elements[k]);

  std::vector<std::vector<WeylElement>> out;
  for (auto& [root, members] : classes) {
    std::stable_sort(members.begin(), members.end(),
                     [](const WeylElement& a, const WeylElement& b) { return a.length() < b.length(); });
    if (members.size() > 1 && members[0].length() == members[1].length())
      throw ConsistencyError("double coset without a unique minimal element");
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (a.front().length() != b.front().length()) return a.front().length() < b.front().length();
    return index.at(a.front()) < index.at(b.front());
  });
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const VerificationCheck* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string word_of(const WeylGroup& group, const WeylElement& w) { return word_to_string(reduced_word(group, w)); }

class ReportBuilder {
 public:
  ReportBuilder(VerificationReport& report, std::string scope) : report_(report), scope_(std::move(scope)) {}

  /// Runs `body`, which returns an empty string on success or a counterexample.
  template <typename Body>
  void check(std::string name, Body&& body) {
    VerificationCheck c{std::move(name), scope_, true, {}};
    try {
      c.counterexample = body();
    } catch (const std::exception& e) {
      c.counterexample = std::string("exception: ") + e.what();
    }
    c.passed = c.counterexample.empty();
    report_.checks.push_back(std::move(c));
  }

 private:
  VerificationReport& report_;
  std::string scope_;
};

}  // namespace

VerificationReport verify_atlas(const Atlas& atlas) {
  VerificationReport report;
  const WeylGroup& group = atlas.group;
  const TypeSubset& J = atlas.J;
  const TypeSubset& K = atlas.K;
  const std::size_t bound = atlas.input.options.element_bound;
  ReportBuilder rb(report, atlas.input.spec.to_string() + " J=" + J.to_string() + " K=" + K.to_string());

  std::vector<std::vector<WeylElement>> classes;
  std::vector<WeylElement> all;
  std::vector<WeylElement> sub_J;
  std::vector<WeylElement> sub_K;
  try {
    classes = brute_double_cosets(group, J, K, bound);
    all = enumerate_group(group, bound);
    sub_J = enumerate_parabolic(group, J, bound);
    sub_K = enumerate_parabolic(group, K, bound);
  } catch (const std::exception& e) {
    report.checks.push_back({"setup", "", false, e.what()});
    return report;
  }

  ElementSet brute_double;
  for (const auto& c : classes) brute_double.insert(c.front());

  // ^J W by brute force: w is shortest in W_J w.
  std::vector<WeylElement> brute_left;
  for (const auto& w : all) {
    bool minimal = true;
    for (const auto& u : sub_J)
      if (group.product(u, w).length() < w.length()) {
        minimal = false;
        break;
      }
    if (minimal) brute_left.push_back(w);
  }

  // pi(w): shortest element of w W_K, found by scanning the coset.
  std::unordered_map<WeylElement, ElementSet, WeylElementHash> brute_fiber;
  for (const auto& w : brute_left) {
    WeylElement best = w;
    for (const auto& v : sub_K) {
      WeylElement p = group.product(w, v);
      if (p.length() < best.length()) best = std::move(p);
    }
    brute_fiber[best].insert(w);
  }

  rb.check("double-coset-representatives", [&]() -> std::string {
    ElementSet atlas_members;
    for (const auto& s : atlas.strata)
      for (const auto& x : s.orbit)
        if (!atlas_members.insert(x).second) return "element " + word_of(group, x) + " lies in two orbits";
    for (const auto& x : brute_double)
      if (!atlas_members.contains(x)) return "missing minimal double coset representative " + word_of(group, x);
    if (atlas_members.size() != brute_double.size()) return "atlas has elements outside ^J W^K";
    return {};
  });

  rb.check("eo-fiber-partition", [&]() -> std::string {
    std::size_t total = 0;
    for (const auto& s : atlas.strata) {
      const auto it = brute_fiber.find(s.rep);
      if (it == brute_fiber.end()) return "no EO stratum projects to " + word_of(group, s.rep);
      ElementSet mine;
      for (const auto& e : s.eo_fiber) mine.insert(e.element);
      if (mine.size() != s.eo_fiber.size()) return "repeated EO stratum over " + word_of(group, s.rep);
      if (mine != it->second) return "EO fiber over " + word_of(group, s.rep) + " differs from pi^{-1}";
      for (const auto& x : s.orbit) {
        const auto jt = brute_fiber.find(x);
        if (jt == brute_fiber.end() || jt->second.size() != mine.size())
          return "EO fiber size not constant on the orbit of " + word_of(group, s.rep);
        total += jt->second.size();
      }
    }
    if (total != brute_left.size())
      return "fibers cover " + std::to_string(total) + " of " + std::to_string(brute_left.size()) + " elements of ^J W";
    return {};
  });

  rb.check("length-additivity", [&]() -> std::string {
    for (const auto& s : atlas.strata)
      for (const auto& e : s.eo_fiber) {
        const WeylElement y = group.product(inverse(group, s.rep), e.element);
        if (e.element.length() != s.rep.length() + y.length() || e.length != e.element.length())
          return "l(xy) != l(x) + l(y) for xy = " + word_of(group, e.element);
      }
    return {};
  });

  rb.check("dimensions", [&]() -> std::string {
    for (const auto& s : atlas.strata) {
      int top = -1;
      for (const auto& w : brute_fiber.at(s.rep)) top = std::max(top, w.length());
      if (s.dim != top)
        return "stratum " + std::to_string(s.id) + " (" + word_of(group, s.rep) + ") has dim " +
               std::to_string(s.dim) + ", brute force gives " + std::to_string(top);
      if (s.codim != atlas.moduli_dim - s.dim) return "codim mismatch at stratum " + std::to_string(s.id);
    }
    return {};
  });

  rb.check("howlett", [&]() -> std::string {
    for (const auto& x : brute_double) {
      const int formula = ell_JK(group, x, J, K);
      const int direct = group.product(x, x_lower(group, x, J, K)).length();
      if (formula != direct)
        return "x = " + word_of(group, x) + ": ell_JK = " + std::to_string(formula) + ", l(x x_JK) = " +
               std::to_string(direct);
    }
    return {};
  });

  rb.check("single-eo", [&]() -> std::string {
    for (const auto& x : brute_double) {
      const WeylElement x_inv = inverse(group, x);
      // x^{-1} J x as a set of reflections, compared with K
      ElementSet conj;
      for (int j : J) conj.insert(group.product(group.product(x_inv, group.simple_reflection(j)), x));
      ElementSet ks;
      for (int k : K) ks.insert(group.simple_reflection(k));
      const bool by_conjugation = conj == ks;
      const bool by_size = brute_fiber.at(x).size() == 1;
      if (by_conjugation != by_size) return "criteria disagree at x = " + word_of(group, x);
    }
    for (const auto& s : atlas.strata)
      if (s.single_eo != (brute_fiber.at(s.rep).size() == 1))
        return "single_eo flag wrong at stratum " + std::to_string(s.id);
    return {};
  });

  // Brute-force orbit order through subword products.
  const std::size_t n = atlas.strata.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  rb.check("closures", [&]() -> std::string {
    std::vector<ElementSet> below(n);
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& y : atlas.strata[b].orbit) {
        const auto lower = subword_products(group, reduced_word(group, y));
        below[b].insert(lower.begin(), lower.end());
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        rel[a][b] = std::any_of(atlas.strata[a].orbit.begin(), atlas.strata[a].orbit.end(),
                                [&](const WeylElement& y) { return below[b].contains(y); });
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> expected;
      for (std::size_t a = 0; a < n; ++a)
        if (rel[a][b]) expected.push_back(a);
      if (atlas.strata[b].closure != expected) return "closure of stratum " + std::to_string(b) + " differs";
    }
    return {};
  });

  rb.check("antisymmetry", [&]() -> std::string {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rel[a][b] && rel[b][a]) return "strata " + std::to_string(a) + " and " + std::to_string(b) + " dominate each other";
    return {};
  });

  rb.check("maximal-stratum", [&]() -> std::string {
    int top = -1;
    for (const auto& w : brute_left) top = std::max(top, w.length());
    if (atlas.moduli_dim != top)
      return "moduli dimension " + std::to_string(atlas.moduli_dim) + ", longest element of ^J W has length " +
             std::to_string(top);
    std::size_t count = 0;
    for (const auto& s : atlas.strata) {
      if (!s.is_maximal) continue;
      ++count;
      if (s.orbit.size() != 1) return "maximal stratum orbit is not a singleton";
      if (s.dim != top) return "maximal stratum has dim " + std::to_string(s.dim) + ", expected " + std::to_string(top);
      if (s.closure.size() != n) return "maximal stratum closure is not the whole atlas";
    }
    if (count != 1) return std::to_string(count) + " strata flagged maximal";
    return {};
  });

  rb.check("galois-orbits", [&]() -> std::string {
    const DiagramAutomorphism gen = atlas.input.phi.power(atlas.degree);
    for (const auto& s : atlas.strata) {
      ElementSet orbit(s.orbit.begin(), s.orbit.end());
      for (const auto& x : s.orbit) {
        // image under the generator computed on the action matrix: P x P^{-1}
        IntMatrix P = IntMatrix::Zero(group.rank(), group.rank());
        for (int i = 0; i < group.rank(); ++i) P(gen(i), i) = 1;
        const WeylElement image = group.from_action(P * x.action() * P.transpose());
        if (!orbit.contains(image)) return "orbit of stratum " + std::to_string(s.id) + " is not stable";
        if (image.length() != x.length()) return "automorphism changed a length";
      }
    }
    return {};
  });

  return report;
}

}  // namespace bruhat
