#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gsi/classification.hpp"
#include "gsi/enumeration.hpp"
#include "gsi/even_frobenius.hpp"
#include "gsi/gluing.hpp"
#include "gsi/render.hpp"
#include "gsi/semigroup.hpp"

namespace {

// exit codes: 0 ok, 1 negative mathematical answer, 2 usage or precondition error
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct Options {
  std::string format = "table";
  std::string out_path;
  int jobs = 1;
};

void add_common(CLI::App* cmd, Options& opt, bool with_jobs = false) {
  cmd->add_option("--format", opt.format, "output format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
  if (with_jobs) cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
}

int write_output(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(opt.out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << opt.out_path << "\n";
    return kExitError;
  }
  f << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroups: gluings, gap sets and GSI catalogs"};
  app.require_subcommand(1);

  std::vector<std::string> gens_args;
  std::string base_arg;
  gsi::Int d = 0, gamma = 0, bound = 0;
  Options opt;

  CLI::App* analyze = app.add_subcommand("analyze", "invariants and classification of <gens>");
  analyze->add_option("gens", gens_args, "generators, comma or space separated")->required();
  add_common(analyze, opt);

  CLI::App* gaps = app.add_subcommand("gaps", "gap partition of a GSI gluing");
  gaps->add_option("--base", base_arg, "generators of the base semigroup")->required();
  gaps->add_option("--d", d, "gluing factor")->required();
  gaps->add_option("--gamma", gamma, "gluing element")->required();
  add_common(gaps, opt);

  CLI::App* glue_cmd = app.add_subcommand("glue", "glue a semigroup with the naturals");
  glue_cmd->add_option("--base", base_arg)->required();
  glue_cmd->add_option("--d", d)->required();
  glue_cmd->add_option("--gamma", gamma)->required();
  add_common(glue_cmd, opt);

  CLI::App* enumerate = app.add_subcommand("enumerate", "all GSI semigroups with frobenius <= f");
  enumerate->add_option("f", bound, "frobenius bound")->required();
  add_common(enumerate, opt, true);

  CLI::App* even = app.add_subcommand("even", "find a GSI semigroup with even frobenius f");
  even->add_option("f", bound, "even frobenius number")->required();
  bool all_witnesses = false;
  even->add_flag("--all", all_witnesses, "list every witness of the search");
  add_common(even, opt);

  CLI::App* scan = app.add_subcommand("scan", "realizable even frobenius numbers up to a bound");
  scan->add_option("bound", bound, "scan bound (>= 38)")->required();
  add_common(scan, opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    const gsi::Format format = gsi::parse_format(opt.format);

    if (analyze->parsed()) {
      std::string joined;
      for (const std::string& piece : gens_args) joined += piece + " ";
      gsi::NumericalSemigroup s =
          gsi::NumericalSemigroup::from_generators(gsi::parse_generators(joined));
      return write_output(opt, gsi::render_analysis(s, gsi::classify(s), format));
    }

    if (gaps->parsed() || glue_cmd->parsed()) {
      gsi::NumericalSemigroup base =
          gsi::NumericalSemigroup::from_generators(gsi::parse_generators(base_arg));
      gsi::GluingSpec spec = gsi::make_gluing_spec(std::move(base), d, gamma);
      if (gaps->parsed())
        return write_output(opt, gsi::render_partition(spec, gsi::gsi_gaps(spec), format));
      return write_output(opt, gsi::render_gluing(spec, gsi::glue(spec), format));
    }

    if (enumerate->parsed()) {
      gsi::GsiCatalog catalog = gsi::enumerate_gsi_up_to(bound, opt.jobs);
      return write_output(opt, gsi::render_catalog(catalog, format));
    }

    if (even->parsed()) {
      if (all_witnesses) {
        const auto witnesses = gsi::find_all_gsi_with_even_frobenius(bound);
        if (witnesses.empty()) {
          write_output(opt, "none\n");
          return kExitNegative;
        }
        std::string text;
        for (const auto& w : witnesses) text += gsi::render_witness(w, format);
        return write_output(opt, text);
      }
      const auto witness = gsi::find_gsi_with_even_frobenius(bound);
      if (!witness) {
        write_output(opt, "none\n");
        return kExitNegative;
      }
      return write_output(opt, gsi::render_witness(*witness, format));
    }

    if (scan->parsed()) {
      std::cerr << "scanning even frobenius numbers up to " << bound << "\n";
      const auto records = gsi::even_scan_records(bound, opt.jobs);
      return write_output(opt, gsi::render_scan(records, format));
    }
  } catch (const gsi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}
