#include "bruhat/io.hpp"

#include "bruhat/error.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace bruhat {

namespace {

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ValidationError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(path + "." + key + ": missing");
  return *it;
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; }))
      throw ValidationError((path.empty() ? "" : path + ".") + it.key() + ": unknown field");
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path + ": expected a list of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer())
      throw ValidationError(path + "[" + std::to_string(k) + "]: expected an integer");
    out.push_back(j[k].get<int>());
  }
  return out;
}

int parse_int(std::string_view text, const std::string& what) {
  int v = 0;
  std::size_t used = 0;
  try {
    v = std::stoi(std::string(text), &used);
  } catch (const std::exception&) {
    throw ValidationError("invalid " + what + " '" + std::string(text) + "'");
  }
  if (used != text.size()) throw ValidationError("invalid " + what + " '" + std::string(text) + "'");
  return v;
}

}  // namespace

PELCase parse_case(const Json& doc) {
  if (!doc.is_object()) throw ValidationError("case file: expected an object");
  reject_unknown(doc, {"group", "frobenius", "mu", "J", "options"}, "");

  const Json& factors_j = require(require(doc, "group", ""), "factors", "group");
  if (!factors_j.is_array() || factors_j.empty()) throw ValidationError("group.factors: expected a non-empty list");
  std::vector<DynkinFactor> factors;
  for (std::size_t k = 0; k < factors_j.size(); ++k) {
    const std::string path = "group.factors[" + std::to_string(k) + "]";
    const Json& type = require(factors_j[k], "type", path);
    const Json& rank = require(factors_j[k], "rank", path);
    if (!type.is_string() || type.get<std::string>().size() != 1)
      throw ValidationError(path + ".type: expected one of \"A\", \"B\", \"C\", \"D\"");
    const char letter = type.get<std::string>()[0];
    if (letter < 'A' || letter > 'D') throw ValidationError(path + ".type: only classical types A-D are supported");
    if (!rank.is_number_integer()) throw ValidationError(path + ".rank: expected an integer");
    factors.push_back({static_cast<FactorType>(letter), rank.get<int>()});
  }
  DynkinSpec spec(std::move(factors));

  std::vector<int> permutation;
  if (auto it = doc.find("frobenius"); it != doc.end()) {
    permutation = int_list(require(*it, "permutation", "frobenius"), "frobenius.permutation");
    if (permutation.size() != static_cast<std::size_t>(spec.rank()))
      throw ValidationError("frobenius.permutation: expected " + std::to_string(spec.rank()) + " entries");
  }

  std::optional<CocharSpec> mu;
  std::optional<TypeSubset> J;
  const bool has_mu = doc.contains("mu");
  const bool has_J = doc.contains("J");
  if (has_mu == has_J) throw ValidationError("case file: exactly one of \"mu\" and \"J\" must be present");
  if (has_mu) {
    mu = CocharSpec{int_list(require(doc["mu"], "pairings", "mu"), "mu.pairings")};
    if (mu->pairings.size() != static_cast<std::size_t>(spec.rank()))
      throw ValidationError("mu.pairings: expected " + std::to_string(spec.rank()) + " entries");
  } else {
    std::vector<int> nodes = int_list(doc["J"], "J");
    for (std::size_t k = 0; k < nodes.size(); ++k)
      if (nodes[k] < 0 || nodes[k] >= spec.rank())
        throw ValidationError("J[" + std::to_string(k) + "]: node outside 0.." + std::to_string(spec.rank() - 1));
    J = TypeSubset(std::move(nodes));
  }

  CaseOptions options;
  if (auto it = doc.find("options"); it != doc.end()) {
    if (!it->is_object()) throw ValidationError("options: expected an object");
    reject_unknown(*it, {"minuscule_check", "element_bound"}, "options");
    if (auto m = it->find("minuscule_check"); m != it->end()) {
      if (!m->is_boolean()) throw ValidationError("options.minuscule_check: expected a boolean");
      options.minuscule_check = m->get<bool>();
    }
    if (auto b = it->find("element_bound"); b != it->end()) {
      if (!b->is_number_integer() || b->get<long long>() <= 0)
        throw ValidationError("options.element_bound: expected a positive integer");
      options.element_bound = b->get<std::size_t>();
    }
  }

  try {
    return PELCase::make(std::move(spec), std::move(permutation), std::move(mu), std::move(J), options);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("frobenius.permutation: ") + e.what());
  }
}

PELCase parse_case_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("case file is not valid JSON: ") + e.what());
  }
  return parse_case(doc);
}

Json case_to_json(const PELCase& input) {
  Json doc;
  Json factors = Json::array();
  for (const auto& f : input.spec.factors())
    factors.push_back({{"type", std::string(1, static_cast<char>(f.type))}, {"rank", f.rank}});
  doc["group"] = {{"factors", factors}};
  doc["frobenius"] = {{"permutation", input.phi.permutation()}};
  if (input.mu) doc["mu"] = {{"pairings", input.mu->pairings}};
  if (input.J) doc["J"] = input.J->nodes();
  doc["options"] = {{"minuscule_check", input.options.minuscule_check},
                    {"element_bound", input.options.element_bound}};
  return doc;
}

PELCase corpus_preset(std::string_view name, CaseOptions options) {
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) throw ValidationError("preset '" + std::string(name) + "' has no ':'");
  const std::string_view kind = name.substr(0, colon);
  const std::string_view arg = name.substr(colon + 1);

  if (kind == "siegel") {
    const int g = parse_int(arg, "Siegel genus");
    if (g < 1) throw ValidationError("Siegel genus must be positive");
    CocharSpec mu{std::vector<int>(g, 0)};
    mu.pairings.back() = 1;
    return PELCase::make(siegel_spec(g), {}, mu, std::nullopt, options);
  }
  if (kind == "hilbert") {
    // Res_{F/Q} GL_2 with p inert in a totally real F of degree d.
    const int d = parse_int(arg, "Hilbert degree");
    if (d < 1) throw ValidationError("Hilbert degree must be positive");
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = (i + 1) % d;
    return PELCase::make(DynkinSpec(std::vector<DynkinFactor>(d, {FactorType::A, 1})), perm,
                         CocharSpec{std::vector<int>(d, 1)}, std::nullopt, options);
  }
  if (kind == "gu") {
    const auto comma = arg.find(',');
    const auto second = arg.find(':');
    if (comma == std::string_view::npos || second == std::string_view::npos || second < comma)
      throw ValidationError("unitary preset must read gu:<r>,<s>:inert|split");
    const int r = parse_int(arg.substr(0, comma), "signature");
    const int s = parse_int(arg.substr(comma + 1, second - comma - 1), "signature");
    const std::string_view mode = arg.substr(second + 1);
    if (r < 0 || s < 0 || r + s < 2) throw ValidationError("unitary signature needs r, s >= 0 and r + s >= 2");
    if (mode != "inert" && mode != "split") throw ValidationError("unitary preset mode must be inert or split");
    const int n = r + s;
    CocharSpec mu{std::vector<int>(n - 1, 0)};
    if (r >= 1 && r <= n - 1) mu.pairings[r - 1] = 1;
    std::vector<int> perm(n - 1);
    for (int i = 0; i < n - 1; ++i) perm[i] = mode == "inert" ? n - 2 - i : i;
    return PELCase::make(DynkinSpec({{FactorType::A, n - 1}}), perm, mu, std::nullopt, options);
  }
  throw ValidationError("unknown preset '" + std::string(name) + "' (expected siegel:<g>, hilbert:<d>, gu:<r>,<s>:inert|split)");
}

bool operator==(const AtlasDocument& a, const AtlasDocument& b) {
  return a.input == b.input && a.group == b.group && a.J == b.J && a.K == b.K && a.degree == b.degree &&
         a.moduli_dim == b.moduli_dim && a.mu_ordinary == b.mu_ordinary && a.notes == b.notes &&
         a.strata == b.strata && a.hasse_edges == b.hasse_edges;
}

AtlasDocument make_document(const Atlas& atlas) {
  AtlasDocument doc;
  doc.input = case_to_json(atlas.input);
  doc.group = atlas.input.spec.to_string();
  doc.J = atlas.J.nodes();
  doc.K = atlas.K.nodes();
  doc.degree = atlas.degree;
  doc.moduli_dim = atlas.moduli_dim;
  doc.mu_ordinary = atlas.mu_ordinary;
  doc.notes = atlas.notes;
  for (const auto& s : atlas.strata) {
    StratumDoc sd;
    sd.id = s.id;
    sd.rep = s.rep_word;
    for (const auto& x : s.orbit) sd.orbit.push_back(reduced_word(atlas.group, x));
    sd.dim = s.dim;
    sd.codim = s.codim;
    for (const auto& e : s.eo_fiber) sd.eo_fiber.push_back({reduced_word(atlas.group, e.element), e.length});
    sd.single_eo = s.single_eo;
    sd.closure = s.closure;
    sd.is_maximal = s.is_maximal;
    sd.siegel_a = s.siegel_a;
    doc.strata.push_back(std::move(sd));
  }
  doc.hasse_edges = atlas.poset.hasse_edges();
  return doc;
}

Json document_to_json(const AtlasDocument& doc) {
  Json j;
  j["input"] = doc.input;
  Json mu = {{"verdict", doc.mu_ordinary.verdict},
             {"generic_bruhat_is_mu_ordinary", doc.mu_ordinary.generic_bruhat_is_mu_ordinary},
             {"reflex_completion_is_Qp", doc.mu_ordinary.reflex_completion_is_Qp},
             {"ordinary_locus_nonempty", doc.mu_ordinary.ordinary_locus_nonempty},
             {"ordinary_equals_mu_ordinary", doc.mu_ordinary.ordinary_equals_mu_ordinary}};
  j["metadata"] = {{"group", doc.group},   {"J", doc.J},
                   {"K", doc.K},           {"degree", doc.degree},
                   {"moduli_dim", doc.moduli_dim}, {"mu_ordinary", mu},
                   {"notes", doc.notes}};
  Json strata = Json::array();
  for (const auto& s : doc.strata) {
    Json fiber = Json::array();
    for (const auto& e : s.eo_fiber) fiber.push_back({{"word", e.word}, {"length", e.length}});
    Json sj = {{"id", s.id},         {"rep", s.rep},
               {"orbit", s.orbit},   {"dim", s.dim},
               {"codim", s.codim},   {"eo_fiber", fiber},
               {"single_eo", s.single_eo}, {"closure", s.closure},
               {"is_maximal", s.is_maximal}};
    if (s.siegel_a) sj["siegel_a"] = *s.siegel_a;
    strata.push_back(std::move(sj));
  }
  j["strata"] = std::move(strata);
  Json edges = Json::array();
  for (const auto& [lo, hi] : doc.hasse_edges) edges.push_back({lo, hi});
  j["hasse_edges"] = std::move(edges);
  return j;
}

AtlasDocument document_from_json(const Json& j) {
  AtlasDocument doc;
  try {
    doc.input = j.at("input");
    const Json& m = j.at("metadata");
    doc.group = m.at("group").get<std::string>();
    doc.J = m.at("J").get<std::vector<int>>();
    doc.K = m.at("K").get<std::vector<int>>();
    doc.degree = m.at("degree").get<int>();
    doc.moduli_dim = m.at("moduli_dim").get<int>();
    const Json& mu = m.at("mu_ordinary");
    doc.mu_ordinary = {mu.at("verdict").get<bool>(), mu.at("generic_bruhat_is_mu_ordinary").get<bool>(),
                       mu.at("reflex_completion_is_Qp").get<bool>(), mu.at("ordinary_locus_nonempty").get<bool>(),
                       mu.at("ordinary_equals_mu_ordinary").get<bool>()};
    doc.notes = m.at("notes").get<std::vector<std::string>>();
    for (const auto& sj : j.at("strata")) {
      StratumDoc s;
      s.id = sj.at("id").get<std::size_t>();
      s.rep = sj.at("rep").get<std::vector<int>>();
      s.orbit = sj.at("orbit").get<std::vector<std::vector<int>>>();
      s.dim = sj.at("dim").get<int>();
      s.codim = sj.at("codim").get<int>();
      for (const auto& e : sj.at("eo_fiber"))
        s.eo_fiber.push_back({e.at("word").get<std::vector<int>>(), e.at("length").get<int>()});
      s.single_eo = sj.at("single_eo").get<bool>();
      s.closure = sj.at("closure").get<std::vector<std::size_t>>();
      s.is_maximal = sj.at("is_maximal").get<bool>();
      if (sj.contains("siegel_a")) s.siegel_a = sj.at("siegel_a").get<int>();
      doc.strata.push_back(std::move(s));
    }
    for (const auto& e : j.at("hasse_edges"))
      doc.hasse_edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed atlas document: ") + e.what());
  }
  return doc;
}

std::string emit_dot(const Atlas& atlas) {
  std::ostringstream os;
  os << "digraph bruhat_strata {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (const auto& s : atlas.strata)
    os << "  n" << s.id << " [label=\"" << word_to_string(s.rep_word) << " / dim " << s.dim << " / #EO "
       << s.eo_fiber.size() << "\"];\n";
  for (const auto& [lo, hi] : atlas.poset.hasse_edges()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_table(const Atlas& atlas) {
  std::size_t rep_width = 9;
  for (const auto& s : atlas.strata) rep_width = std::max(rep_width, word_to_string(s.rep_word).size());
  std::ostringstream os;
  os << std::left << std::setw(4) << "id" << std::setw(static_cast<int>(rep_width) + 2) << "orbit-rep" << std::right
     << std::setw(5) << "dim" << std::setw(7) << "codim" << std::setw(5) << "#EO" << std::setw(11) << "single-EO"
     << "  closure\n";
  for (const auto& s : atlas.strata) {
    std::string closure;
    for (std::size_t k = 0; k < s.closure.size(); ++k) closure += (k ? "," : "") + std::to_string(s.closure[k]);
    os << std::left << std::setw(4) << s.id << std::setw(static_cast<int>(rep_width) + 2)
       << word_to_string(s.rep_word) << std::right << std::setw(5) << s.dim << std::setw(7) << s.codim
       << std::setw(5) << s.eo_fiber.size() << std::setw(11) << (s.single_eo ? "yes" : "no") << "  " << closure
       << "\n";
  }
  return os.str();
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.scope.empty()) os << " (" << c.scope << ")";
    if (!c.passed) os << ": " << c.counterexample;
    os << "\n";
  }
  os << (report.passed() ? "verification passed\n" : "verification FAILED\n");
  return os.str();
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json cj = {{"name", c.name}, {"scope", c.scope}, {"passed", c.passed}};
    if (!c.passed) cj["counterexample"] = c.counterexample;
    checks.push_back(std::move(cj));
  }
  return {{"passed", report.passed()}, {"checks", std::move(checks)}};
}

std::string siegel_table(const SiegelIdentification& id) {
  std::ostringstream os;
  os << "Siegel genus " << id.g << ": " << id.rows.size() << " Bruhat strata\n";
  os << std::right << std::setw(8) << "a-number" << std::setw(6) << "dim" << "  rep\n";
  for (const auto& r : id.rows)
    os << std::setw(8) << r.a_number << std::setw(6) << r.dim << "  " << word_to_string(r.rep_word) << "\n";
  return os.str();
}

}  // namespace bruhat
