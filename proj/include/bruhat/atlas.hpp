#pragma once

#include "bruhat/galois.hpp"
#include "bruhat/parabolic.hpp"
#include "bruhat/root_data.hpp"
#include "bruhat/weyl_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bruhat {

struct CaseOptions {
  bool minuscule_check = true;
  std::size_t element_bound = kDefaultElementBound;

  friend bool operator==(const CaseOptions&, const CaseOptions&) = default;
};

/// One PEL-type input: Dynkin diagram, Frobenius diagram automorphism and
/// either the cocharacter pairings or the type J directly.
struct PELCase {
  DynkinSpec spec;
  DiagramAutomorphism phi;
  std::optional<CocharSpec> mu;
  std::optional<TypeSubset> J;
  CaseOptions options;

  /// Validates phi against the Cartan matrix and that exactly one of mu, J is set.
  static PELCase make(DynkinSpec spec, std::vector<int> permutation, std::optional<CocharSpec> mu,
                      std::optional<TypeSubset> J, CaseOptions options = {});

  friend bool operator==(const PELCase&, const PELCase&) = default;
};

/// J = {i : <mu, alpha_i> = 0}. Rejects negative pairings, and with
/// `minuscule_check` any positive root pairing outside {0, 1}.
TypeSubset derive_J(const PositiveRootTable& roots, const CocharSpec& mu, bool minuscule_check = true);

/// K = phi(J)^opp.
TypeSubset derive_K(const WeylGroup& group, const TypeSubset& J, const DiagramAutomorphism& phi);

/// {x y : y in ^{J_x} W_K}, the EO strata inside the Bruhat stratum of x.
std::vector<WeylElement> eo_fiber(const WeylGroup& group, const WeylElement& x, const TypeSubset& J,
                                  const TypeSubset& K, std::size_t bound = kDefaultElementBound);

/// l(w_0) - l(w_{0,J}) = dim G/P_J.
int moduli_dimension(const WeylGroup& group, const TypeSubset& J);

/// phi(J) = J, together with its equivalent readings. All flags carry the
/// same value.
struct MuOrdinaryReport {
  bool verdict = false;
  bool generic_bruhat_is_mu_ordinary = false;
  bool reflex_completion_is_Qp = false;
  bool ordinary_locus_nonempty = false;
  bool ordinary_equals_mu_ordinary = false;

  friend bool operator==(const MuOrdinaryReport&, const MuOrdinaryReport&) = default;
};

MuOrdinaryReport mu_ordinary_report(const TypeSubset& J, const DiagramAutomorphism& phi);

struct EOStratum {
  WeylElement element;
  int length;
};

struct StratumRecord {
  std::size_t id = 0;
  WeylElement rep;
  std::vector<int> rep_word;
  Orbit orbit;
  int dim = 0;
  int codim = 0;
  std::vector<EOStratum> eo_fiber;
  bool single_eo = false;
  std::vector<std::size_t> closure;
  bool is_maximal = false;
  std::optional<int> siegel_a;
};

struct Atlas {
  PELCase input;
  WeylGroup group;
  TypeSubset J;
  TypeSubset K;
  int degree = 1;
  int moduli_dim = 0;
  std::vector<StratumRecord> strata;
  OrbitPoset poset;
  MuOrdinaryReport mu_ordinary;
  std::vector<std::string> notes;

  const StratumRecord& stratum(std::size_t id) const { return strata.at(id); }
};

Atlas build_atlas(const PELCase& input);

/// Ids of all strata in the closure of `id`, including `id`.
std::vector<std::size_t> closure_set(const Atlas& atlas, std::size_t id);

/// Group of the Siegel case of genus g: C_g, or A_1 for g = 1.
DynkinSpec siegel_spec(int g);
/// J = K = all nodes but the long one.
TypeSubset siegel_type(int g);
/// d(i) = (g(g+1) - i(i+1)) / 2.
int siegel_dimension(int g, int a_number);

struct SiegelRow {
  std::vector<int> rep_word;
  int dim;
  int a_number;
};

struct SiegelIdentification {
  int g = 0;
  std::vector<SiegelRow> rows;  ///< sorted by a-number
};

/// Identifies ^J W^J with {0..g} through the stratum dimensions and checks
/// the count, the dimension multiset and the order reversal. Throws
/// ConsistencyError on any mismatch.
SiegelIdentification siegel_identify(int g, std::size_t bound = kDefaultElementBound);

}  // namespace bruhat
