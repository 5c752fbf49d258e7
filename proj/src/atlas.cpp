#include "bruhat/atlas.hpp"

#include "bruhat/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bruhat {

namespace {

std::string describe_root(const IntVector& r) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < r.size(); ++i) os << (i ? "," : "") << r(i);
  os << ")";
  return os.str();
}

/// K = x^{-1} J x as sets of reflections.
bool conjugates_onto(const WeylGroup& group, const WeylElement& x, const TypeSubset& J, const TypeSubset& K) {
  if (J.size() != K.size()) return false;
  const WeylElement x_inv = inverse(group, x);
  std::vector<int> image;
  for (int j : J) {
    const WeylElement c = group.product(group.product(x_inv, group.simple_reflection(j)), x);
    if (c.length() != 1) return false;
    // a length-one element is the simple reflection of its only descent
    image.push_back(descents(group, c, Side::Right).nodes().front());
  }
  return TypeSubset(std::move(image)) == K;
}

}  // namespace

PELCase PELCase::make(DynkinSpec spec, std::vector<int> permutation, std::optional<CocharSpec> mu,
                      std::optional<TypeSubset> J, CaseOptions options) {
  const CartanMatrix cartan = cartan_from_spec(spec);
  if (permutation.empty()) {
    permutation.resize(spec.rank());
    std::iota(permutation.begin(), permutation.end(), 0);
  }
  DiagramAutomorphism phi = validate_automorphism(permutation, cartan);
  if (mu.has_value() == J.has_value()) throw ValidationError("exactly one of mu and J must be given");
  if (mu && mu->pairings.size() != static_cast<std::size_t>(spec.rank()))
    throw ValidationError("mu has " + std::to_string(mu->pairings.size()) + " pairings, expected " +
                          std::to_string(spec.rank()));
  if (J) J->check_rank(spec.rank());
  if (options.element_bound == 0) throw ValidationError("element bound must be positive");
  return PELCase{std::move(spec), std::move(phi), std::move(mu), std::move(J), options};
}

TypeSubset derive_J(const PositiveRootTable& roots, const CocharSpec& mu, bool minuscule_check) {
  std::vector<int> J;
  for (std::size_t i = 0; i < mu.pairings.size(); ++i) {
    if (mu.pairings[i] < 0)
      throw ValidationError("mu is not dominant: <mu, alpha_" + std::to_string(i) + "> = " +
                            std::to_string(mu.pairings[i]));
    if (mu.pairings[i] == 0) J.push_back(static_cast<int>(i));
  }
  if (minuscule_check)
    for (const auto& root : roots.roots()) {
      const int p = pairing(mu, root);
      if (p > 1)
        throw ValidationError("mu is not minuscule: pairing with root " + describe_root(root) + " is " +
                              std::to_string(p));
    }
  return TypeSubset(std::move(J));
}

TypeSubset derive_K(const WeylGroup& group, const TypeSubset& J, const DiagramAutomorphism& phi) {
  return opposition(group, J.image(phi));
}

std::vector<WeylElement> eo_fiber(const WeylGroup& group, const WeylElement& x, const TypeSubset& J,
                                  const TypeSubset& K, std::size_t bound) {
  const TypeSubset Jx = induced_subset(group, x, J, K);
  std::vector<WeylElement> out;
  for (const auto& y : min_left_reps_in_parabolic(group, Jx, K, bound)) {
    WeylElement xy = group.product(x, y);
    if (xy.length() != x.length() + y.length())
      throw ConsistencyError("EO fiber product is not length-additive");
    out.push_back(std::move(xy));
  }
  return out;
}

int moduli_dimension(const WeylGroup& group, const TypeSubset& J) {
  return longest_element(group, TypeSubset::all(group.rank())).length() - longest_element(group, J).length();
}

MuOrdinaryReport mu_ordinary_report(const TypeSubset& J, const DiagramAutomorphism& phi) {
  const bool v = J.image(phi) == J;
  return {v, v, v, v, v};
}

DynkinSpec siegel_spec(int g) {
  if (g < 1) throw ValidationError("Siegel genus must be positive");
  if (g == 1) return DynkinSpec({{FactorType::A, 1}});
  return DynkinSpec({{FactorType::C, g}});
}

TypeSubset siegel_type(int g) {
  std::vector<int> J(std::max(g - 1, 0));
  std::iota(J.begin(), J.end(), 0);
  return TypeSubset(std::move(J));
}

int siegel_dimension(int g, int a_number) { return (g * (g + 1) - a_number * (a_number + 1)) / 2; }

namespace {

std::optional<int> siegel_genus(const PELCase& input, const TypeSubset& J) {
  const int g = input.spec.rank();
  if (!input.phi.is_identity()) return std::nullopt;
  if (!(input.spec == siegel_spec(g))) return std::nullopt;
  if (J != siegel_type(g)) return std::nullopt;
  return g;
}

}  // namespace

Atlas build_atlas(const PELCase& input) {
  WeylGroup group(input.spec);
  const std::size_t bound = input.options.element_bound;
  if (group.order() > bound) throw BoundExceeded(group.order(), bound);
  if (input.phi.rank() != group.rank()) throw ValidationError("automorphism rank does not match the group");

  std::vector<std::string> notes;
  TypeSubset J;
  if (input.J) {
    J = *input.J;
    J.check_rank(group.rank());
  } else {
    J = derive_J(group.roots(), *input.mu, input.options.minuscule_check);
    if (!input.options.minuscule_check) {
      for (const auto& root : group.roots().roots())
        if (pairing(*input.mu, root) > 1) {
          notes.push_back("warning: mu is not minuscule (pairing " + std::to_string(pairing(*input.mu, root)) +
                          " with root " + describe_root(root) +
                          "); the atlas is computed from J alone and has no PEL interpretation");
          break;
        }
    }
  }

  const TypeSubset K = derive_K(group, J, input.phi);
  const int degree = definition_degree(J, input.phi);
  const DiagramAutomorphism generator = input.phi.power(degree);
  if (K.image(generator) != K) throw ConsistencyError("K is not stable under phi^d although J is");

  const CosetSystem cosets(group, J, K, bound);
  BruhatOrder order(group);
  OrbitPoset poset = orbit_poset(group, galois_orbits(group, cosets.double_reps(), generator), order);

  const int moduli_dim = moduli_dimension(group, J);
  const auto siegel_g = siegel_genus(input, J);

  const WeylElement* longest = &cosets.double_reps().front();
  for (const auto& x : cosets.double_reps())
    if (x.length() > longest->length()) longest = &x;

  std::vector<StratumRecord> strata;
  std::size_t orbit_total = 0;
  std::size_t fiber_total = 0;
  for (std::size_t id = 0; id < poset.size(); ++id) {
    const WeylElement& x = poset.representative(id);
    StratumRecord rec{.id = id,
                      .rep = x,
                      .rep_word = poset.representative_word(id),
                      .orbit = poset.orbit(id),
                      .dim = 0,
                      .codim = 0,
                      .eo_fiber = {},
                      .single_eo = false,
                      .closure = {},
                      .is_maximal = false,
                      .siegel_a = std::nullopt};
    const UpperElement upper = x_upper(group, x, J, K);
    if (upper.dimension != ell_JK(group, x, J, K))
      throw ConsistencyError("the two length formulas disagree at " + word_to_string(rec.rep_word));
    rec.dim = upper.dimension;
    rec.codim = moduli_dim - rec.dim;
    if (rec.dim < 0 || rec.codim < 0) throw ConsistencyError("stratum dimension out of range");

    int fiber_max = -1;
    for (auto& w : eo_fiber(group, x, J, K, bound)) {
      const int len = w.length();
      fiber_max = std::max(fiber_max, len);
      rec.eo_fiber.push_back({std::move(w), len});
    }
    if (fiber_max != rec.dim) throw ConsistencyError("EO fiber does not reach the stratum dimension");
    rec.single_eo = rec.eo_fiber.size() == 1;
    if (rec.single_eo != conjugates_onto(group, x, J, K))
      throw ConsistencyError("single-EO criteria disagree at " + word_to_string(rec.rep_word));

    rec.closure = poset.down_set(id);
    rec.is_maximal = std::find(rec.orbit.begin(), rec.orbit.end(), *longest) != rec.orbit.end();
    if (siegel_g) {
      for (int a = 0; a <= *siegel_g; ++a)
        if (siegel_dimension(*siegel_g, a) == rec.dim) rec.siegel_a = a;
    }
    orbit_total += rec.orbit.size();
    fiber_total += rec.orbit.size() * rec.eo_fiber.size();
    strata.push_back(std::move(rec));
  }

  if (orbit_total != cosets.double_reps().size()) throw ConsistencyError("orbits do not partition ^J W^K");
  if (fiber_total != cosets.left_reps().size()) throw ConsistencyError("EO fibers do not partition ^J W");
  const auto maximal = std::count_if(strata.begin(), strata.end(), [](const auto& s) { return s.is_maximal; });
  if (maximal != 1) throw ConsistencyError("expected exactly one maximal stratum");
  for (const auto& s : strata)
    if (s.is_maximal && (s.dim != moduli_dim || s.orbit.size() != 1 || s.closure.size() != strata.size()))
      throw ConsistencyError("maximal stratum is not open and dense of full dimension");

  MuOrdinaryReport mu_ord = mu_ordinary_report(J, input.phi);
  return Atlas{input,  std::move(group),   std::move(J),      K,       degree, moduli_dim,
               std::move(strata), std::move(poset), mu_ord, std::move(notes)};
}

std::vector<std::size_t> closure_set(const Atlas& atlas, std::size_t id) {
  if (id >= atlas.strata.size()) throw ValidationError("unknown stratum id " + std::to_string(id));
  return atlas.poset.down_set(id);
}

SiegelIdentification siegel_identify(int g, std::size_t bound) {
  CocharSpec mu{std::vector<int>(g, 0)};
  mu.pairings.back() = 1;
  const PELCase input = PELCase::make(siegel_spec(g), {}, mu, std::nullopt, CaseOptions{true, bound});
  const Atlas atlas = build_atlas(input);

  if (atlas.J != siegel_type(g) || atlas.K != atlas.J) throw ConsistencyError("Siegel case must have J = K");
  if (atlas.strata.size() != static_cast<std::size_t>(g + 1))
    throw ConsistencyError("Siegel genus " + std::to_string(g) + " has " + std::to_string(atlas.strata.size()) +
                           " strata, expected " + std::to_string(g + 1));

  SiegelIdentification out{g, {}};
  std::vector<bool> used(g + 1, false);
  for (const auto& s : atlas.strata) {
    if (!s.siegel_a) throw ConsistencyError("stratum dimension " + std::to_string(s.dim) + " is no d(i)");
    if (used[*s.siegel_a]) throw ConsistencyError("two strata share a-number " + std::to_string(*s.siegel_a));
    used[*s.siegel_a] = true;
    out.rows.push_back({s.rep_word, s.dim, *s.siegel_a});
  }
  for (const auto& x : atlas.strata)
    for (const auto& y : atlas.strata)
      if (atlas.poset.leq(x.id, y.id) != (*x.siegel_a >= *y.siegel_a))
        throw ConsistencyError("Bruhat order is not the reversed a-number order");
  if (std::none_of(atlas.strata.begin(), atlas.strata.end(),
                   [&](const auto& s) { return s.dim == g * (g + 1) / 2 && s.is_maximal; }))
    throw ConsistencyError("top Siegel stratum does not have dimension g(g+1)/2");
  std::sort(out.rows.begin(), out.rows.end(), [](const auto& a, const auto& b) { return a.a_number < b.a_number; });
  return out;
}

}  // namespace bruhat
