// ncflab: command-line front end.
//
//   ncflab analyze --anf "x1*x2*x3 + x1*x2 + x3" [--json] [--witnesses] [--block-sensitivity]
//   ncflab analyze --table 3:80
//   ncflab analyze --file specs.txt --json
//   ncflab enumerate 3 [--layers R] [--symmetry S] [--strongly-asymmetric]
//   ncflab count 4 [--kinds total,symmetry]
//   ncflab verify 4
//
// Exit codes: 0 success, 1 verification failure, 2 bad input, 3 guard exceeded.

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncflab/anf.hpp"
#include "ncflab/enumeration.hpp"
#include "ncflab/parallel.hpp"
#include "ncflab/report.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGuard = 3;

struct AnalyzeArgs {
  std::string anf;
  std::string table;
  std::string file;
  std::optional<int> arity;
  bool json = false;
  bool witnesses = false;
  bool block_sensitivity = false;
};

struct EnumerateArgs {
  int n = 0;
  std::optional<int> layers;
  std::optional<int> symmetry;
  bool strongly_asymmetric = false;
  bool json = false;
};

ncflab::AnalysisOptions analysis_options(const AnalyzeArgs& a, std::optional<int> max_n) {
  ncflab::AnalysisOptions o;
  o.witnesses = a.witnesses;
  o.block_sensitivity = a.block_sensitivity;
  if (max_n) {
    o.limits.certificate_max_arity = *max_n;
    o.limits.block_sensitivity_max_arity = *max_n;
    o.automorphism.brute_force_max_arity = *max_n;
  }
  return o;
}

std::string render(const ncflab::AnalysisReport& r, bool json) {
  return json ? ncflab::to_json(r).dump() + "\n" : ncflab::to_text(r);
}

int run_analyze(const AnalyzeArgs& a, std::optional<int> max_n) {
  const int sources = !a.anf.empty() + !a.table.empty() + !a.file.empty();
  if (sources != 1) {
    std::cerr << "analyze: give exactly one of --anf, --table, --file\n";
    return kExitBadInput;
  }
  const auto options = analysis_options(a, max_n);
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) {
      std::cerr << "analyze: cannot open " << a.file << "\n";
      return kExitBadInput;
    }
    // Everything is computed before anything is printed.
    std::string line;
    std::ostringstream out;
    bool first = true;
    while (std::getline(in, line)) {
      const auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      const auto f = ncflab::parse_function_spec(line, a.arity);
      if (!a.json && !first) out << "\n";
      out << render(ncflab::analyze(f, options), a.json);
      first = false;
    }
    std::cout << out.str();
    return 0;
  }
  ncflab::BooleanFunction f;
  if (!a.anf.empty()) {
    const auto p = a.arity ? ncflab::parse_anf(a.anf, *a.arity) : ncflab::parse_anf(a.anf);
    if (p.arity() > ncflab::kMaxDenseArity) throw ncflab::InputError("arity exceeds dense table limit");
    f = ncflab::anf_to_table(p);
  } else {
    f = ncflab::parse_hex_table(a.table);
  }
  std::cout << render(ncflab::analyze(f, options), a.json);
  return 0;
}

int run_enumerate(const EnumerateArgs& a, std::optional<int> max_n) {
  ncflab::EnumerationLimits limits;
  if (max_n) limits.max_arity = *max_n;
  if (a.n < 2) throw ncflab::InputError("enumerate requires n >= 2");
  if (a.n > limits.max_arity) throw ncflab::GuardError("enumeration", limits.max_arity, a.n);

  const auto structures = ncflab::layer_structures(a.n);
  std::vector<std::string> chunks(structures.size());
  const auto count = static_cast<std::int64_t>(structures.size());
  // Shards are printed in structure order, so output matches the serial stream.
#pragma omp parallel for num_threads(ncflab::worker_count()) schedule(dynamic, 1)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto& structure = structures[static_cast<std::size_t>(k)];
    if (a.layers && static_cast<int>(structure.size()) != *a.layers) continue;
    std::ostringstream out;
    ncflab::for_each_ncf_with_structure(a.n, structure, [&](const ncflab::LayerDecomposition& d) {
      const auto f = ncflab::compose(d);
      int s = -1;
      if (a.symmetry || a.strongly_asymmetric || a.json) s = ncflab::symmetry_level(f);
      if (a.symmetry && s != *a.symmetry) return;
      // For NCFs strong asymmetry is exactly s == n.
      if (a.strongly_asymmetric && s != a.n) return;
      if (a.json) {
        nlohmann::json j = {{"decomposition", ncflab::format_decomposition(d)},
                            {"table", ncflab::to_hex_table(f)},
                            {"layer_structure", ncflab::layer_structure(d)},
                            {"s", s}};
        out << j.dump() << "\n";
      } else {
        out << ncflab::format_decomposition(d) << "\t" << ncflab::to_hex_table(f) << "\n";
      }
    });
    chunks[static_cast<std::size_t>(k)] = out.str();
  }
  for (const auto& chunk : chunks) std::cout << chunk;
  return 0;
}

std::set<std::string> split_kinds(const std::string& text) {
  std::set<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto& known = ncflab::count_kinds();
    if (std::find(known.begin(), known.end(), item) == known.end()) {
      throw ncflab::InputError("unknown count kind '" + item + "'");
    }
    out.insert(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  ncflab::configure_workers_from_env();

  CLI::App app{"Analysis and enumeration of Boolean nested canalizing functions"};
  app.require_subcommand(1);
  std::optional<int> max_n;
  app.add_option("--max-n", max_n, "Override the size guard of the selected command");

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Full report for one function (or a file of them)");
  analyze->add_option("--anf", analyze_args.anf, "ANF expression, e.g. \"x1*x2 + x3\"");
  analyze->add_option("--table", analyze_args.table, "Truth table as n:HEX");
  analyze->add_option("--file", analyze_args.file, "Newline-delimited specs (ANF or n:HEX)");
  analyze->add_option("--arity", analyze_args.arity, "Arity for ANF input (default: largest index)");
  analyze->add_flag("--json", analyze_args.json, "Emit JSON");
  analyze->add_flag("--witnesses", analyze_args.witnesses, "List a minimal certificate per word");
  analyze->add_flag("--block-sensitivity", analyze_args.block_sensitivity, "Compute block sensitivity");
  analyze->add_option("--max-n", max_n, "Override the certificate/automorphism guards");

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "Stream every n-variable NCF");
  enumerate->add_option("n", enumerate_args.n, "Number of variables")->required();
  enumerate->add_option("--layers", enumerate_args.layers, "Only NCFs with R layers");
  enumerate->add_option("--symmetry", enumerate_args.symmetry, "Only s-symmetric NCFs");
  enumerate->add_flag("--strongly-asymmetric", enumerate_args.strongly_asymmetric, "Only strongly asymmetric NCFs");
  enumerate->add_flag("--json", enumerate_args.json, "Emit JSON lines");
  enumerate->add_option("--max-n", max_n, "Override the enumeration guard");

  int count_n = 0;
  std::string count_kinds;
  auto* count = app.add_subcommand("count", "Exact NCF counts as CSV");
  count->add_option("n", count_n, "Number of variables")->required();
  count->add_option("--kinds", count_kinds, "Comma list of total,layers,symmetry,strongly_asymmetric,strongly_asym_max_layers");
  count->add_option("--max-n", max_n, "Override the counting guard");

  int verify_n = 0;
  auto* verify = app.add_subcommand("verify", "Cross-check formulas against exhaustive enumeration");
  verify->add_option("n", verify_n, "Number of variables")->required();
  verify->add_option("--max-n", max_n, "Largest n for the exhaustive path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*analyze) return run_analyze(analyze_args, max_n);
    if (*enumerate) return run_enumerate(enumerate_args, max_n);
    if (*count) {
      const auto kinds = split_kinds(count_kinds);
      std::cout << ncflab::to_csv(ncflab::count_table(count_n, max_n.value_or(ncflab::kCountMaxArity)), kinds);
      return 0;
    }
    if (*verify) {
      ncflab::VerifyOptions options;
      if (max_n) options.exhaustive_max_arity = *max_n;
      const auto report = ncflab::verify(verify_n, options);
      std::cout << ncflab::to_json(report).dump(2) << "\n";
      return report.all_pass() ? 0 : kExitVerifyFailed;
    }
  } catch (const ncflab::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ncflab::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
