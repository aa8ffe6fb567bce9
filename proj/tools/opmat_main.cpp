#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "opmat/batch.hpp"
#include "opmat/selftest.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSingular = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitInputError = 3;

std::optional<double> env_rank_coeff() {
  const char* env = std::getenv("OPMAT_TOL");
  if (!env || !*env) return std::nullopt;
  try {
    return std::stod(env);
  } catch (const std::exception&) {
    throw opmat::ParseError("OPMAT_TOL: not a number");
  }
}

int run_analyze(const std::string& path, std::optional<double> tol_flag,
                const std::string& format, bool symmetrize) {
  std::optional<double> rc = env_rank_coeff();
  if (tol_flag) rc = tol_flag;
  const opmat::ParsedInstance parsed =
      opmat::load_instance_file(path, rc, symmetrize);
  const opmat::Report report =
      parsed.hamiltonian
          ? opmat::make_report(opmat::certify_hamiltonian(*parsed.ham))
          : opmat::make_report(opmat::analyze(parsed.instance).certificate);
  if (format == "text")
    std::cout << opmat::render_text(report);
  else
    std::cout << opmat::report_to_json(report).dump(2) << "\n";
  switch (report.verdict) {
    case opmat::Verdict::Invertible: return kExitOk;
    case opmat::Verdict::Singular: return kExitSingular;
    case opmat::Verdict::Indeterminate: return kExitIndeterminate;
  }
  return kExitOk;
}

int run_generate(const opmat::GeneratorSpec& spec, const std::string& out_path) {
  const opmat::Instance inst = opmat::generate(spec);
  const opmat::Json j =
      opmat::instance_to_json(inst, opmat::to_string(spec.kind) ==
                                            std::string("hamiltonian")
                                        ? "hamiltonian"
                                        : "general");
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw opmat::ParseError("cannot write file: " + out_path);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int run_batch(const opmat::BatchSpec& spec, bool serial, int threads,
              const std::string& out_path) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
  const std::vector<opmat::Report> reports =
      serial ? opmat::run_batch_serial(spec) : opmat::run_batch_parallel(spec);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw opmat::ParseError("cannot write file: " + out_path);
    for (const opmat::Report& r : reports)
      out << opmat::report_to_json(r).dump() << "\n";
  }
  std::cout << opmat::aggregate_reports(spec, reports).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invertibility certificates for 2x2 block operator matrices"};
  app.require_subcommand(1);

  std::string path, format = "json", out_path;
  std::optional<double> tol_flag;
  bool symmetrize = false;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Certify an instance file");
  analyze_cmd->add_option("file", path, "instance JSON file")->required();
  analyze_cmd->add_option("--tol", tol_flag, "override rank_coeff");
  analyze_cmd->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_flag("--symmetrize", symmetrize,
                        "average B, C with their adjoints (hamiltonian kind)");

  std::string kind_name = "dense";
  opmat::GeneratorSpec gspec;
  long long n = 0, p = -1, rank_a = -1, rank_b = -1, intersect = -1;
  unsigned long long seed = 0;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Emit a deterministic instance");
  generate_cmd->add_option("--kind", kind_name,
                           "dense|rank_structured|hamiltonian|special|singular_planted");
  generate_cmd->add_option("--n", n, "first-space dimension")->required();
  generate_cmd->add_option("--p", p, "second-space dimension (defaults to n "
                                     "for hamiltonian/special)");
  generate_cmd->add_option("--rank-a", rank_a,
                           "rank of A (rank_structured); dim X' (special)");
  generate_cmd->add_option("--rank-b", rank_b, "rank of B (rank_structured)");
  generate_cmd->add_option("--intersect", intersect,
                           "dim of range intersection (rank_structured)");
  generate_cmd->add_option("--seed", seed, "64-bit seed")->required();
  generate_cmd->add_option("-o,--output", out_path, "output file");

  opmat::BatchSpec bspec;
  std::string batch_kind = "dense";
  long long count = 0, max_dim = 8;
  unsigned long long batch_seed = 0;
  bool serial = false;
  int threads = 0;
  std::string batch_out;
  std::optional<double> batch_tol;
  CLI::App* batch_cmd =
      app.add_subcommand("batch", "Generate, certify and aggregate");
  batch_cmd->add_option("--kind", batch_kind, "instance kind");
  batch_cmd->add_option("--count", count, "number of instances")->required();
  batch_cmd->add_option("--seed", batch_seed, "64-bit seed")->required();
  batch_cmd->add_option("--max-dim", max_dim, "dimension bound");
  batch_cmd->add_flag("--serial", serial, "use the serial reference runner");
  batch_cmd->add_option("--threads", threads, "OpenMP thread count");
  batch_cmd->add_option("--tol", batch_tol, "override rank_coeff");
  batch_cmd->add_option("-o,--output", batch_out, "reports file (JSON lines)");

  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "Run fixture and invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (analyze_cmd->parsed())
      return run_analyze(path, tol_flag, format, symmetrize);

    if (generate_cmd->parsed()) {
      const auto kind = opmat::gen_kind_from(kind_name);
      if (!kind) throw opmat::ParseError("unknown kind: " + kind_name);
      gspec.kind = *kind;
      gspec.n = static_cast<opmat::Index>(n);
      if (p < 0 &&
          (*kind == opmat::GenKind::Hamiltonian ||
           *kind == opmat::GenKind::Special))
        p = n;
      if (p < 0) throw opmat::ParseError("--p is required for this kind");
      gspec.p = static_cast<opmat::Index>(p);
      gspec.rank_a = static_cast<opmat::Index>(rank_a);
      gspec.rank_b = static_cast<opmat::Index>(rank_b);
      gspec.dim_intersection = static_cast<opmat::Index>(intersect);
      gspec.seed = seed;
      if (const auto rc = env_rank_coeff()) gspec.tol.rank_coeff = *rc;
      return run_generate(gspec, out_path);
    }

    if (batch_cmd->parsed()) {
      const auto kind = opmat::gen_kind_from(batch_kind);
      if (!kind) throw opmat::ParseError("unknown kind: " + batch_kind);
      bspec.kind = *kind;
      bspec.count = static_cast<int>(count);
      bspec.seed = batch_seed;
      bspec.max_dim = static_cast<opmat::Index>(max_dim);
      if (const auto rc = env_rank_coeff()) bspec.tol.rank_coeff = *rc;
      if (batch_tol) bspec.tol.rank_coeff = *batch_tol;
      return run_batch(bspec, serial, threads, batch_out);
    }

    if (selftest_cmd->parsed())
      return opmat::run_selftest(std::cout) ? kExitOk : 1;
  } catch (const opmat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
