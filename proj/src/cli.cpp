#include "bruhat/cli.hpp"

#include "bruhat/error.hpp"
#include "bruhat/io.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace bruhat {

namespace {

struct CommonOptions {
  std::string out_dir = ".";
  bool verify = false;
  bool no_minuscule_check = false;
  std::size_t bound = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_verify) {
  cmd->add_option("--out", opts.out_dir, "Directory for atlas.json, hasse.dot and table.txt");
  if (with_verify) cmd->add_flag("--verify", opts.verify, "Cross-check the atlas against brute-force oracles");
  cmd->add_flag("--no-minuscule-check", opts.no_minuscule_check, "Accept a non-minuscule cocharacter");
  cmd->add_option("--bound", opts.bound, "Maximal group order to enumerate")->check(CLI::PositiveNumber);
}

void apply_overrides(PELCase& input, const CommonOptions& opts) {
  if (opts.no_minuscule_check) input.options.minuscule_check = false;
  if (opts.bound > 0) input.options.element_bound = opts.bound;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
}

int emit_atlas(const PELCase& input, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const Atlas atlas = build_atlas(input);
  const std::filesystem::path dir(opts.out_dir);
  std::filesystem::create_directories(dir);
  write_file(dir / "atlas.json", document_to_json(make_document(atlas)).dump(2) + "\n");
  write_file(dir / "hasse.dot", emit_dot(atlas));
  const std::string table = emit_table(atlas);
  write_file(dir / "table.txt", table);

  out << atlas.input.spec.to_string() << "  J=" << atlas.J.to_string() << "  K=" << atlas.K.to_string()
      << "  degree=" << atlas.degree << "  moduli_dim=" << atlas.moduli_dim
      << "  mu_ordinary=" << (atlas.mu_ordinary.verdict ? "true" : "false") << "\n";
  for (const auto& note : atlas.notes) out << note << "\n";
  out << table;

  if (opts.verify) {
    const VerificationReport report = verify_atlas(atlas);
    write_file(dir / "verification.json", report_to_json(report).dump(2) + "\n");
    out << report_to_text(report);
    if (!report.passed()) {
      err << "verification failed\n";
      return kExitVerificationFailed;
    }
  }
  return kExitOk;
}

PELCase load_case(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot read case file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_case_text(buf.str());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bruhat and Ekedahl-Oort stratification atlas for PEL-type data", "bruhat-atlas"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string case_path;
  std::string preset;
  int genus = 0;

  auto* atlas_cmd = app.add_subcommand("atlas", "Build the atlas of a case file");
  atlas_cmd->add_option("casefile", case_path, "JSON case file")->required();
  add_common(atlas_cmd, opts, true);

  auto* verify_cmd = app.add_subcommand("verify", "Build the atlas and verify it against brute force");
  verify_cmd->add_option("casefile", case_path, "JSON case file")->required();
  add_common(verify_cmd, opts, false);

  auto* corpus_cmd = app.add_subcommand("corpus", "Build the atlas of a named preset");
  corpus_cmd->add_option("preset", preset, "siegel:<g> | hilbert:<d> | gu:<r>,<s>:inert|split")->required();
  add_common(corpus_cmd, opts, true);

  auto* siegel_cmd = app.add_subcommand("siegel", "Identify the Siegel strata with a-numbers");
  siegel_cmd->add_option("g", genus, "Genus")->required()->check(CLI::PositiveNumber);
  siegel_cmd->add_option("--bound", opts.bound, "Maximal group order to enumerate")->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"bruhat-atlas"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (*atlas_cmd || *verify_cmd) {
      PELCase input = load_case(case_path);
      apply_overrides(input, opts);
      if (*verify_cmd) opts.verify = true;
      return emit_atlas(input, opts, out, err);
    }
    if (*corpus_cmd) {
      PELCase input = corpus_preset(preset);
      apply_overrides(input, opts);
      return emit_atlas(input, opts, out, err);
    }
    if (*siegel_cmd) {
      out << siegel_table(siegel_identify(genus, opts.bound > 0 ? opts.bound : kDefaultElementBound));
      return kExitOk;
    }
  } catch (const ValidationError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const BoundExceeded& e) {
    err << "resource bound exceeded: " << e.what() << "\n";
    return kExitBoundExceeded;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace bruhat
