#include "opmat/batch.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace opmat {

GeneratorSpec batch_item_spec(const BatchSpec& spec, int index) {
  Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(index)));
  GeneratorSpec g;
  g.kind = spec.kind;
  g.tol = spec.tol;
  g.seed = rng.next_u64();
  g.n = rng.uniform_index(1, spec.max_dim);
  switch (spec.kind) {
    case GenKind::Dense:
    case GenKind::SingularPlanted:
      g.p = rng.uniform_index(1, spec.max_dim);
      break;
    case GenKind::Hamiltonian:
      g.p = g.n;
      break;
    case GenKind::Special:
      g.p = g.n;
      g.rank_a = rng.uniform_index(0, g.n);
      break;
    case GenKind::RankStructured: {
      g.p = rng.uniform_index(1, spec.max_dim);
      const Index lo_a = std::max<Index>(0, g.n - std::min(g.n, g.p));
      g.rank_a = rng.uniform_index(lo_a, g.n);
      g.rank_b = rng.uniform_index(g.n - g.rank_a, std::min(g.n, g.p));
      g.dim_intersection = g.rank_a + g.rank_b - g.n;
      break;
    }
  }
  return g;
}

Report run_batch_item(const BatchSpec& spec, int index) {
  const GeneratorSpec gspec = batch_item_spec(spec, index);
  const Instance inst = generate_conditioned(gspec);
  if (spec.kind == GenKind::Hamiltonian) {
    const HamiltonianInstance ham =
        HamiltonianInstance::validated(inst.a, inst.b, inst.c, inst.tol);
    return make_report(certify_hamiltonian(ham));
  }
  return make_report(analyze(inst).certificate);
}

std::vector<Report> run_batch_serial(const BatchSpec& spec) {
  std::vector<Report> out(static_cast<std::size_t>(std::max(0, spec.count)));
  for (int i = 0; i < spec.count; ++i)
    out[static_cast<std::size_t>(i)] = run_batch_item(spec, i);
  return out;
}

std::vector<Report> run_batch_parallel(const BatchSpec& spec) {
  const int count = std::max(0, spec.count);
  std::vector<Report> out(static_cast<std::size_t>(count));
  std::vector<std::string> failures(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = run_batch_item(spec, i);
    } catch (const std::exception& e) {
      failures[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (const std::string& f : failures)
    if (!f.empty()) throw SpecInconsistent("batch item failed: " + f);
  return out;
}

Json aggregate_reports(const BatchSpec& spec,
                       const std::vector<Report>& reports) {
  int invertible = 0, singular = 0, indeterminate = 0;
  int decisive = 0, agreed = 0;
  bool all_agree = true;
  std::array<std::map<Index, int>, 9> hist;
  static const char* dim_names[9] = {"X1", "X2", "X3", "Y1", "Y2",
                                     "Y3", "RA_perp", "RB_perp", "R_int"};
  for (const Report& r : reports) {
    switch (r.verdict) {
      case Verdict::Invertible: ++invertible; break;
      case Verdict::Singular: ++singular; break;
      case Verdict::Indeterminate: ++indeterminate; break;
    }
    if (r.verdict != Verdict::Indeterminate) {
      ++decisive;
      if (r.agreement) ++agreed;
    }
    all_agree = all_agree && r.agreement;
    if (r.dims) {
      const DecompositionDims& d = *r.dims;
      const Index values[9] = {d.x1, d.x2, d.x3,      d.y1,      d.y2,
                               d.y3, d.ra_perp, d.rb_perp, d.r_int};
      for (int k = 0; k < 9; ++k) ++hist[static_cast<std::size_t>(k)][values[k]];
    }
  }
  Json j;
  j["kind"] = to_string(spec.kind);
  j["count"] = reports.size();
  j["seed"] = spec.seed;
  j["max_dim"] = spec.max_dim;
  j["verdicts"] = {{"Invertible", invertible},
                   {"Singular", singular},
                   {"Indeterminate", indeterminate}};
  j["agreement"] = {
      {"checked", decisive},
      {"agreed", agreed},
      {"rate", decisive == 0 ? 1.0 : static_cast<double>(agreed) / decisive},
      {"all", all_agree}};
  Json h;
  for (int k = 0; k < 9; ++k) {
    Json entry;
    for (const auto& [dim, count] : hist[static_cast<std::size_t>(k)])
      entry[std::to_string(dim)] = count;
    h[dim_names[k]] = std::move(entry);
  }
  j["dims_histogram"] = std::move(h);
  return j;
}

}  // namespace opmat
