#pragma once

#include "bruhat/atlas.hpp"
#include "bruhat/oracle.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

using Json = nlohmann::ordered_json;

/// Case file schema:
///   {"group": {"factors": [{"type": "C", "rank": 2}]},
///    "frobenius": {"permutation": [0, 1]},          (optional, default identity)
///    "mu": {"pairings": [0, 1]}  or  "J": [0],       (exactly one)
///    "options": {"minuscule_check": true, "element_bound": 1000000}}
/// Schema violations throw ValidationError naming the field path.
PELCase parse_case(const Json& doc);
PELCase parse_case_text(std::string_view text);
Json case_to_json(const PELCase& input);

/// Named scenarios: "siegel:<g>", "hilbert:<d>", "gu:<r>,<s>:inert|split".
PELCase corpus_preset(std::string_view name, CaseOptions options = {});

struct EODocEntry {
  std::vector<int> word;
  int length = 0;
  friend bool operator==(const EODocEntry&, const EODocEntry&) = default;
};

struct StratumDoc {
  std::size_t id = 0;
  std::vector<int> rep;
  std::vector<std::vector<int>> orbit;
  int dim = 0;
  int codim = 0;
  std::vector<EODocEntry> eo_fiber;
  bool single_eo = false;
  std::vector<std::size_t> closure;
  bool is_maximal = false;
  std::optional<int> siegel_a;
  friend bool operator==(const StratumDoc&, const StratumDoc&) = default;
};

/// Serializable form of an Atlas; elements appear as reduced words.
struct AtlasDocument {
  Json input;
  std::string group;
  std::vector<int> J;
  std::vector<int> K;
  int degree = 1;
  int moduli_dim = 0;
  MuOrdinaryReport mu_ordinary;
  std::vector<std::string> notes;
  std::vector<StratumDoc> strata;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;

  friend bool operator==(const AtlasDocument& a, const AtlasDocument& b);
};

AtlasDocument make_document(const Atlas& atlas);
Json document_to_json(const AtlasDocument& doc);
AtlasDocument document_from_json(const Json& j);

/// Graphviz digraph of the Hasse diagram, edges pointing from smaller to larger strata.
std::string emit_dot(const Atlas& atlas);
/// Fixed-width table: orbit-rep, dim, codim, #EO, single-EO, closure.
std::string emit_table(const Atlas& atlas);

std::string report_to_text(const VerificationReport& report);
Json report_to_json(const VerificationReport& report);

std::string siegel_table(const SiegelIdentification& id);

}  // namespace bruhat
