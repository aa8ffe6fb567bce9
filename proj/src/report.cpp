#include "opmat/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace opmat {

namespace {

Matrix parse_complex_matrix(const Json& j, const std::string& field,
                            Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw ShapeError("field '" + field + "': expected " +
                     std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ShapeError("field '" + field + "' row " + std::to_string(i) +
                       ": expected " + std::to_string(cols) + " entries");
    for (Index k = 0; k < cols; ++k) {
      const Json& entry = row[static_cast<std::size_t>(k)];
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number())
        throw ParseError("field '" + field + "'[" + std::to_string(i) + "][" +
                         std::to_string(k) + "]: expected [re, im]");
      m(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  if (!all_finite(m))
    throw ShapeError("field '" + field + "': non-finite entries");
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Index require_dim(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw ParseError(std::string("field '") + field +
                     "': expected a nonnegative integer");
  const auto v = j[field].get<long long>();
  if (v < 0)
    throw ParseError(std::string("field '") + field + "': must be >= 0");
  return static_cast<Index>(v);
}

ToleranceConfig parse_tol(const Json& j) {
  ToleranceConfig tol;
  if (!j.contains("tol")) return tol;
  const Json& t = j["tol"];
  if (!t.is_object()) throw ParseError("field 'tol': expected an object");
  const auto pick = [&t](const char* name, double& out) {
    if (!t.contains(name)) return;
    if (!t[name].is_number())
      throw ParseError(std::string("field 'tol.") + name + "': expected a number");
    out = t[name].get<double>();
  };
  pick("rank_coeff", tol.rank_coeff);
  pick("subspace_eq_tol", tol.subspace_eq_tol);
  pick("borderline_factor", tol.borderline_factor);
  try {
    tol.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("field 'tol': ") + e.what());
  }
  return tol;
}

Json finite_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

double number_or_nan(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

Reason reason_from(const std::string& s) {
  for (Reason r : {Reason::None, Reason::RowNotSurjective, Reason::CondIFailed,
                   Reason::ReducedNotSquare, Reason::ReducedSingular,
                   Reason::ReducedBorderline, Reason::TransferInconsistent})
    if (s == to_string(r)) return r;
  throw ParseError("field 'reason': unknown value '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
  for (Verdict v :
       {Verdict::Invertible, Verdict::Singular, Verdict::Indeterminate})
    if (s == to_string(v)) return v;
  throw ParseError("field 'verdict': unknown value '" + s + "'");
}

}  // namespace

ParsedInstance parse_instance_json(const Json& j,
                                   const std::optional<double>& rank_coeff_override,
                                   bool symmetrize) {
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  const Index n = require_dim(j, "n");
  const Index p = require_dim(j, "p");
  std::string kind = "general";
  if (j.contains("kind")) {
    if (!j["kind"].is_string())
      throw ParseError("field 'kind': expected a string");
    kind = j["kind"].get<std::string>();
    if (kind != "general" && kind != "hamiltonian")
      throw ParseError("field 'kind': expected 'general' or 'hamiltonian'");
  }
  ToleranceConfig tol = parse_tol(j);
  if (rank_coeff_override) {
    tol.rank_coeff = *rank_coeff_override;
    tol.validate();
  }

  const auto need = [&j](const char* field) -> const Json& {
    if (!j.contains(field))
      throw ParseError(std::string("field '") + field + "': missing");
    return j[field];
  };

  ParsedInstance out;
  if (kind == "hamiltonian") {
    if (p != n)
      throw ShapeError("hamiltonian kind: requires p == n");
    if (j.contains("D"))
      throw ParseError("field 'D': hamiltonian kind derives D = -A^H; omit it");
    Matrix a = parse_complex_matrix(need("A"), "A", n, n);
    Matrix b = parse_complex_matrix(need("B"), "B", n, n);
    Matrix c = parse_complex_matrix(need("C"), "C", n, n);
    if (symmetrize) {
      b = 0.5 * (b + b.adjoint()).eval();
      c = 0.5 * (c + c.adjoint()).eval();
    }
    out.hamiltonian = true;
    out.ham = HamiltonianInstance::validated(std::move(a), std::move(b),
                                             std::move(c), tol);
    out.instance = out.ham->as_general();
    return out;
  }
  Matrix a = parse_complex_matrix(need("A"), "A", n, n);
  Matrix b = parse_complex_matrix(need("B"), "B", n, p);
  Matrix c = parse_complex_matrix(need("C"), "C", p, n);
  Matrix d = parse_complex_matrix(need("D"), "D", p, p);
  out.instance = Instance::validated(std::move(a), std::move(b), std::move(c),
                                     std::move(d), tol);
  return out;
}

ParsedInstance load_instance_file(const std::string& path,
                                  const std::optional<double>& rank_coeff_override,
                                  bool symmetrize) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_instance_json(j, rank_coeff_override, symmetrize);
}

Json instance_to_json(const Instance& inst, const std::string& kind) {
  Json j;
  j["n"] = inst.n();
  j["p"] = inst.p();
  j["kind"] = kind;
  j["A"] = matrix_to_json(inst.a);
  j["B"] = matrix_to_json(inst.b);
  j["C"] = matrix_to_json(inst.c);
  if (kind != "hamiltonian") j["D"] = matrix_to_json(inst.d);
  j["tol"] = {{"rank_coeff", inst.tol.rank_coeff},
              {"subspace_eq_tol", inst.tol.subspace_eq_tol},
              {"borderline_factor", inst.tol.borderline_factor}};
  return j;
}

Json hamiltonian_to_json(const HamiltonianInstance& inst) {
  return instance_to_json(inst.as_general(), "hamiltonian");
}

Report make_report(const Certificate& cert) {
  Report r;
  r.verdict = cert.verdict;
  r.reason = cert.reason;
  r.cond_i_holds = cert.cond_i.holds;
  r.cond_i_sigma_min = cert.cond_i.sigma_min;
  r.reduced_rows = cert.reduced.rows();
  r.reduced_cols = cert.reduced.cols();
  r.reduced_sigma_min = cert.reduced_sigma_min;
  r.oracle_sigma_min = cert.oracle_sigma_min;
  r.agreement = cert.agreement;
  r.dims = cert.dims;
  r.zero_residual = cert.zero_residual;
  r.umv_residual = cert.umv_residual;
  r.witness = cert.witness;
  return r;
}

Json report_to_json(const Report& report) {
  Json j;
  j["verdict"] = to_string(report.verdict);
  j["reason"] = to_string(report.reason);
  j["cond_i"] = {{"holds", report.cond_i_holds},
                 {"sigma_min", finite_or_null(report.cond_i_sigma_min)}};
  j["reduced_shape"] = Json::array({report.reduced_rows, report.reduced_cols});
  j["reduced_sigma_min"] = finite_or_null(report.reduced_sigma_min);
  j["oracle_sigma_min"] = finite_or_null(report.oracle_sigma_min);
  j["agreement"] = report.agreement;
  if (report.dims) {
    const DecompositionDims& d = *report.dims;
    j["dims"] = {{"X1", d.x1},           {"X2", d.x2},
                 {"X3", d.x3},           {"Y1", d.y1},
                 {"Y2", d.y2},           {"Y3", d.y3},
                 {"RA_perp", d.ra_perp}, {"RB_perp", d.rb_perp},
                 {"R_int", d.r_int}};
  } else {
    j["dims"] = nullptr;
  }
  j["zero_residual"] = finite_or_null(report.zero_residual);
  j["umv_residual"] = finite_or_null(report.umv_residual);
  if (report.witness) {
    Json w = Json::array();
    for (Index i = 0; i < report.witness->size(); ++i)
      w.push_back(Json::array(
          {(*report.witness)(i).real(), (*report.witness)(i).imag()}));
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  try {
    r.verdict = verdict_from(j.at("verdict").get<std::string>());
    r.reason = reason_from(j.at("reason").get<std::string>());
    r.cond_i_holds = j.at("cond_i").at("holds").get<bool>();
    r.cond_i_sigma_min = number_or_nan(j.at("cond_i").at("sigma_min"));
    r.reduced_rows = j.at("reduced_shape").at(0).get<Index>();
    r.reduced_cols = j.at("reduced_shape").at(1).get<Index>();
    r.reduced_sigma_min = number_or_nan(j.at("reduced_sigma_min"));
    r.oracle_sigma_min = number_or_nan(j.at("oracle_sigma_min"));
    r.agreement = j.at("agreement").get<bool>();
    if (!j.at("dims").is_null()) {
      const Json& d = j.at("dims");
      r.dims = DecompositionDims{
          d.at("X1").get<Index>(),      d.at("X2").get<Index>(),
          d.at("X3").get<Index>(),      d.at("Y1").get<Index>(),
          d.at("Y2").get<Index>(),      d.at("Y3").get<Index>(),
          d.at("RA_perp").get<Index>(), d.at("RB_perp").get<Index>(),
          d.at("R_int").get<Index>()};
    }
    r.zero_residual = number_or_nan(j.at("zero_residual"));
    r.umv_residual = number_or_nan(j.at("umv_residual"));
    if (!j.at("witness").is_null()) {
      const Json& w = j.at("witness");
      Vector v(w.size());
      for (std::size_t i = 0; i < w.size(); ++i)
        v(static_cast<Index>(i)) =
            Complex(w[i].at(0).get<double>(), w[i].at(1).get<double>());
      r.witness = std::move(v);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  return r;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "verdict:            " << to_string(report.verdict) << "\n";
  out << "reason:             " << to_string(report.reason) << "\n";
  out << "cond (i):           " << (report.cond_i_holds ? "holds" : "fails");
  if (std::isfinite(report.cond_i_sigma_min))
    out << "  (sigma_min " << report.cond_i_sigma_min << ")";
  out << "\n";
  out << "reduced operator:   " << report.reduced_rows << " x "
      << report.reduced_cols;
  if (std::isfinite(report.reduced_sigma_min))
    out << ", sigma_min " << report.reduced_sigma_min;
  out << "\n";
  out << "oracle sigma_min:   " << report.oracle_sigma_min << "\n";
  out << "oracle agreement:   " << (report.agreement ? "yes" : "no") << "\n";
  if (report.dims) {
    const DecompositionDims& d = *report.dims;
    out << "dims:               X1=" << d.x1 << " X2=" << d.x2
        << " X3=" << d.x3 << " Y1=" << d.y1 << " Y2=" << d.y2
        << " Y3=" << d.y3 << " RA_perp=" << d.ra_perp
        << " RB_perp=" << d.rb_perp << " R_int=" << d.r_int << "\n";
  }
  if (std::isfinite(report.zero_residual))
    out << "zero residual:      " << report.zero_residual << "\n";
  if (std::isfinite(report.umv_residual))
    out << "umv residual:       " << report.umv_residual << "\n";
  if (report.witness) {
    out << "kernel witness:    ";
    for (Index i = 0; i < report.witness->size(); ++i) {
      const Complex z = (*report.witness)(i);
      out << " (" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace opmat
