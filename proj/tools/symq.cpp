// symq - batch front end for symmetry quotients of discrete operators and
// quantum graphs.  Every subcommand loads JSON fixtures, runs one pipeline
// and writes a canonical JSON report (two-space indent, shortest round-trip
// floats), so identical inputs always produce byte-identical output.
//
// Exit codes: 0 pass, 1 property-verification failure, 2 symmetry violation,
// 3 input error, 4 numerical failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "symq/divisors.hpp"
#include "symq/error.hpp"
#include "symq/io.hpp"
#include "symq/isospectral.hpp"
#include "symq/kernels.hpp"
#include "symq/quantum_graph.hpp"
#include "symq/quotient.hpp"

namespace {

using symq::Complex;
using symq::errc;
using symq::Error;
using symq::Matrix;
namespace io = symq::io;
using io::json;

int exit_code_for(errc code) {
  switch (code) {
    case errc::condition_not_met:
      return 1;
    case errc::not_pi_symmetric:
    case errc::not_a_homomorphism:
    case errc::not_unitary:
    case errc::reversal_edge:
      return 2;
    case errc::eig_fail:
    case errc::singular_a_ib:
    case errc::singular_a_ikb:
    case errc::grid_too_coarse:
      return 4;
    default:
      return 3;  // parse / shape / index / partition / subgroup / irrep list
  }
}

struct Tolerances {
  double rank = symq::tol::rank;
  double spec = symq::tol::spectrum;
  double residual = symq::tol::residual;
};

void add_tolerance_flags(CLI::App* cmd, Tolerances& t) {
  cmd->add_option("--tol-rank", t.rank, "rank / nullspace cutoff")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-spec", t.spec, "eigenvalue clustering tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-residual", t.residual, "residual pass tolerance")
      ->check(CLI::PositiveNumber);
}

symq::QuotientOptions quotient_options(const Tolerances& t) {
  symq::QuotientOptions opts;
  opts.rank_tol = t.rank;
  opts.residual_tol = t.residual;
  return opts;
}

/// "label=selector"; a bare selector doubles as its own label.
std::vector<std::pair<std::string, symq::Representation>> load_irreps(
    const std::vector<std::string>& specs, const symq::PermGroup& group) {
  std::vector<std::pair<std::string, symq::Representation>> irreps;
  for (const auto& s : specs) {
    auto pos = s.find('=');
    std::string label = pos == std::string::npos ? s : s.substr(0, pos);
    std::string selector = pos == std::string::npos ? s : s.substr(pos + 1);
    irreps.emplace_back(label, io::load_representation(selector, group));
  }
  return irreps;
}

std::string num(double x) { return json(x).dump(); }

/// The operator must commute with the listed group elements (checked via the
/// permutation action); violations abort with NotPiSymmetric.
void require_symmetric(const Matrix& op, const symq::Representation& pi,
                       const std::vector<int>& elements,
                       const std::vector<std::string>& names,
                       double residual_tol) {
  for (size_t k = 0; k < elements.size(); ++k) {
    const Matrix& p = pi.at(elements[k]);
    double r = symq::max_abs(p * op - op * p);
    if (r > residual_tol)
      throw Error(errc::not_pi_symmetric,
                  "operator does not commute with '" + names[k] +
                      "' (residual " + num(r) + ")");
  }
}

void require_symmetric(const Matrix& op, const symq::Representation& pi,
                       double residual_tol) {
  std::vector<std::string> names;
  for (const auto& [name, perm] : pi.group().generators()) names.push_back(name);
  require_symmetric(op, pi, pi.group().generator_elements(), names,
                    residual_tol);
}

Matrix load_square_operator(const std::string& path, int expected) {
  Matrix op = io::load_operator(path);
  if (op.rows() != op.cols() || op.rows() != expected)
    throw Error(errc::bad_shape, path + ": expected a " +
                                     std::to_string(expected) + "x" +
                                     std::to_string(expected) + " operator");
  return op;
}

json fundamental_json(const symq::FundamentalReport& r) {
  json j;
  j["commutation_residual"] = r.commutation_residual;
  j["orthonormality_residual"] = r.orthonormality_residual;
  j["pass"] = r.pass;
  return j;
}

json complex_list_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (Complex z : v) out.push_back(io::complex_json(z));
  return out;
}

json roots_json(const std::vector<symq::SecularRoot>& roots) {
  json out = json::array();
  for (const auto& r : roots) {
    json j;
    j["k"] = r.k;
    j["multiplicity"] = r.multiplicity;
    j["tangential"] = r.tangential;
    out.push_back(std::move(j));
  }
  return out;
}

// --- subcommand runners ------------------------------------------------------

int run_quotient(const std::string& group_path, const std::string& rep_sel,
                 const std::string& op_path, const std::string& mode,
                 const Tolerances& tols, const std::string& out) {
  symq::PermGroup group = io::load_group(group_path);
  Matrix op = load_square_operator(op_path, group.degree());
  symq::Representation pi = symq::Representation::permutation(group);
  require_symmetric(op, pi, tols.residual);
  symq::Representation rho = io::load_representation(rep_sel, group);

  symq::QuotientOptions opts = quotient_options(tols);
  symq::QuotientResult result =
      mode == "blocks"
          ? symq::quotient_blocks(op, rho, pi, opts)
          : symq::quotient(op, symq::kernel_space(rho, pi, tols.rank), opts);

  symq::FundamentalReport fund =
      symq::verify_fundamental(op, result, tols.residual);
  json report = io::quotient_result_json(result);
  report["fundamental"] = fundamental_json(fund);
  report["pass"] = fund.pass;
  io::write_text(out, io::dump(report));
  return fund.pass ? 0 : 1;
}

int run_spectrum(const std::string& op_path, const Tolerances& tols,
                 const std::string& out) {
  json in = io::load_json(op_path);
  Matrix m;
  if (in.contains("matrix")) {
    m = io::parse_matrix(in["matrix"]);  // a quotient report
  } else if (in.contains("entries")) {
    m = io::load_operator(op_path);
  } else {
    throw Error(errc::parse_error,
                op_path + ": expected an operator file ('entries') or a "
                          "quotient report ('matrix')");
  }
  if (m.rows() != m.cols())
    throw Error(errc::bad_shape, op_path + ": matrix is not square");

  bool hermitian = symq::is_hermitian(m);
  symq::Spectrum spec;
  if (m.rows() > 0) spec = symq::eig(m, hermitian, tols.spec);
  json report;
  report["hermitian"] = hermitian;
  report.update(io::spectrum_json(spec));
  io::write_text(out, io::dump(report));
  return 0;
}

int run_verify(const std::string& group_path, const std::string& op_path,
               const std::vector<std::string>& irrep_specs,
               const Tolerances& tols, const std::string& out) {
  symq::PermGroup group = io::load_group(group_path);
  Matrix op = load_square_operator(op_path, group.degree());
  symq::Representation pi = symq::Representation::permutation(group);
  require_symmetric(op, pi, tols.residual);
  auto irreps = load_irreps(irrep_specs, group);

  bool all_pass = true;
  json per_irrep = json::object();
  for (const auto& [label, rho] : irreps) {
    symq::QuotientResult q =
        symq::quotient_blocks(op, rho, pi, quotient_options(tols));
    symq::FundamentalReport fund =
        symq::verify_fundamental(op, q, tols.residual);
    symq::StructureReport structure = symq::verify_structure(op, rho, pi);

    json spectral = json::array();
    bool spectral_pass = true;
    if (q.matrix.rows() > 0) {
      symq::Spectrum spec = symq::eig(q.matrix, q.hermitian, tols.spec);
      for (Complex lambda : spec.eigenvalues) {
        symq::SpectralReport sr =
            symq::verify_spectral(op, rho, pi, lambda, 1, tols.rank);
        json e;
        e["lambda"] = io::complex_json(lambda);
        e["quotient_dim"] = sr.quotient_dim;
        e["intersection_dim"] = sr.intersection_dim;
        e["pass"] = sr.pass;
        spectral.push_back(std::move(e));
        spectral_pass = spectral_pass && sr.pass;
      }
    }

    bool pass = fund.pass && structure.pass && spectral_pass;
    json jr;
    jr["d"] = static_cast<int>(q.matrix.rows());
    jr["fundamental"] = fundamental_json(fund);
    json js;
    js["max_zero_block_entry"] = structure.max_zero_block_entry;
    js["max_locality_drift"] = structure.max_locality_drift;
    js["pass"] = structure.pass;
    jr["structure"] = std::move(js);
    jr["spectral"] = std::move(spectral);
    jr["pass"] = pass;
    per_irrep[label] = std::move(jr);
    all_pass = all_pass && pass;
  }

  symq::DecompositionReport dec =
      symq::verify_decomposition(op, pi, irreps, tols.spec);
  json jd;
  jd["max_pairing_distance"] = dec.max_pairing_distance;
  jd["pass"] = dec.pass;
  json accounting = json::array();
  for (const auto& e : dec.quotient_spectrum) {
    json x;
    x["eigenvalue"] = io::complex_json(e.eigenvalue);
    x["source"] = e.source;
    accounting.push_back(std::move(x));
  }
  jd["quotient_spectrum"] = std::move(accounting);
  jd["full_spectrum"] = complex_list_json(dec.full_spectrum);
  all_pass = all_pass && dec.pass;

  json report;
  report["irreps"] = std::move(per_irrep);
  report["decomposition"] = std::move(jd);
  report["pass"] = all_pass;
  io::write_text(out, io::dump(report));
  return all_pass ? 0 : 1;
}

int run_qg_quotient(const std::string& graph_path, const std::string& sym_path,
                    const std::string& rep_sel, const Tolerances& tols,
                    const std::string& out) {
  io::QuantumGraphFile qg = io::load_quantum_graph(graph_path);
  symq::EdgeSymmetry sym = io::load_edge_symmetry(sym_path, qg.graph);
  symq::Representation rho = io::load_representation(rep_sel, sym.edge_group);

  symq::QGSymmetryReport check =
      symq::check_pi_symmetric(qg.graph, sym, qg.conditions, tols.residual);
  if (!check.pass)
    throw Error(errc::not_pi_symmetric,
                check.violations.empty() ? "conditions are not invariant"
                                         : check.violations.front());
  symq::VertexConditions sc =
      symq::symmetrize_conditions(qg.conditions, tols.rank);
  symq::QGQuotient q =
      symq::quotient_graph(qg.graph, sym, rho, sc, tols.residual, tols.rank);

  json report;
  report["rep_degree"] = q.rep_degree;
  report["d"] = q.graph.edge_count();
  json edges = json::array();
  for (const auto& e : q.graph.edges) {
    json je;
    je["id"] = e.id;
    je["len"] = e.length;
    je["potential"] = e.potential;
    edges.push_back(std::move(je));
  }
  report["edges"] = std::move(edges);
  report["blocks"] = io::blocks_json(q.blocks);
  report["A_rho"] = io::matrix_json(q.a_rho);
  report["B_rho"] = io::matrix_json(q.b_rho);
  report["theta"] = io::matrix_json(q.theta);
  json sym_report;
  sym_report["max_condition_residual"] = check.max_condition_residual;
  sym_report["pass"] = check.pass;
  report["symmetry"] = std::move(sym_report);
  io::write_text(out, io::dump(report));
  return 0;
}

int run_qg_scatter(const std::string& graph_path, const std::string& sym_path,
                   const std::string& rep_sel, double k, const Tolerances& tols,
                   const std::string& out) {
  io::QuantumGraphFile qg = io::load_quantum_graph(graph_path);
  Matrix s = symq::scattering_matrix(qg.graph, qg.conditions, k, tols.rank);
  json report;
  report["k"] = k;
  report["S"] = io::matrix_json(s);
  if (!sym_path.empty()) {
    symq::EdgeSymmetry sym = io::load_edge_symmetry(sym_path, qg.graph);
    symq::Representation rho = io::load_representation(rep_sel, sym.edge_group);
    symq::VertexConditions sc =
        symq::symmetrize_conditions(qg.conditions, tols.rank);
    symq::QGQuotient q =
        symq::quotient_graph(qg.graph, sym, rho, sc, tols.residual, tols.rank);
    report["S_rho"] =
        io::matrix_json(symq::quotient_scattering(s, sym, q, tols.residual));
  }
  io::write_text(out, io::dump(report));
  return 0;
}

int run_qg_secular(const std::string& graph_path, double k_min, double k_max,
                   double grid_step, const std::string& out) {
  io::QuantumGraphFile qg = io::load_quantum_graph(graph_path);
  symq::SecularOptions opts;
  opts.grid_step = grid_step;
  auto roots = symq::secular_spectrum(qg.graph, qg.conditions, k_min, k_max, opts);
  json report;
  report["k_min"] = k_min;
  report["k_max"] = k_max;
  report["roots"] = roots_json(roots);
  io::write_text(out, io::dump(report));
  return 0;
}

int run_qg_compare(const std::string& graph_path, const std::string& sym_path,
                   const std::vector<std::string>& irrep_specs, double k_min,
                   double k_max, double grid_step, double k_tol,
                   const std::string& out) {
  io::QuantumGraphFile qg = io::load_quantum_graph(graph_path);
  symq::EdgeSymmetry sym = io::load_edge_symmetry(sym_path, qg.graph);
  auto irreps = load_irreps(irrep_specs, sym.edge_group);
  symq::SecularOptions opts;
  opts.grid_step = grid_step;
  symq::SecularComparison cmp = symq::compare_secular(
      qg.graph, qg.conditions, sym, irreps, k_min, k_max, opts, k_tol);
  json report;
  report["full"] = roots_json(cmp.full);
  report["combined"] = roots_json(cmp.combined);
  report["max_distance"] = cmp.max_distance;
  report["pass"] = cmp.pass;
  io::write_text(out, io::dump(report));
  return cmp.pass ? 0 : 1;
}

int run_isospectral(const std::string& group_path, const std::string& pair_path,
                    const std::string& op_path, const Tolerances& tols,
                    const std::string& out) {
  symq::PermGroup group = io::load_group(group_path);
  Matrix op = load_square_operator(op_path, group.degree());
  symq::Representation pi = symq::Representation::permutation(group);
  symq::SubgroupPair pair = io::load_pair(pair_path, group);

  // The construction only needs symmetry under the two subgroups.
  for (const symq::Subgroup* h : {&pair.h1, &pair.h2}) {
    std::vector<std::string> names;
    for (int g : h->generators) {
      std::string label;
      for (const auto& piece : group.word(g)) {
        if (!label.empty()) label += ".";
        label += piece;
      }
      names.push_back(label.empty() ? "id" : label);
    }
    require_symmetric(op, pi, h->generators, names, tols.residual);
  }

  symq::SunadaReport sunada = symq::sunada_condition(group, pair.h1, pair.h2);
  symq::IsospectralReport rep = symq::certify_isospectral(
      op, pi, pair, tols.spec, /*require_condition=*/false);

  json report;
  json js;
  js["holds"] = sunada.holds;
  json classes = json::array();
  for (const auto& c : sunada.classes) {
    json jc;
    jc["class_size"] = c.class_size;
    jc["in_h1"] = c.in_h1;
    jc["in_h2"] = c.in_h2;
    classes.push_back(std::move(jc));
  }
  js["classes"] = std::move(classes);
  report["sunada"] = std::move(js);
  report["condition_holds"] = rep.condition_holds;
  report["hermitian"] = rep.hermitian;
  report["spectra_match"] = rep.spectra_match;
  report["jordan_match"] = rep.jordan_match;
  report["max_pairing_distance"] = rep.max_pairing_distance;
  report["quotient1"] = io::matrix_json(rep.quotient1);
  report["quotient2"] = io::matrix_json(rep.quotient2);
  report["spectrum1"] = complex_list_json(rep.spectrum1);
  report["spectrum2"] = complex_list_json(rep.spectrum2);
  report["pass"] = rep.pass;
  io::write_text(out, io::dump(report));
  return rep.pass ? 0 : 1;
}

int run_divisor(const std::string& adj_path, const std::string& partition_path,
                const std::string& group_path, const Tolerances& tols,
                const std::string& out) {
  Matrix a = io::load_operator(adj_path);
  json report;
  bool pass = false;
  if (!partition_path.empty()) {
    symq::Partition blocks = io::load_partition(partition_path);
    symq::DivisorReport div = symq::check_divisor(a, blocks, tols.residual);
    report["front"] = div.front;
    report["rear"] = div.rear;
    report["front_matrix"] = io::matrix_json(div.front_matrix);
    report["rear_matrix"] = io::matrix_json(div.rear_matrix);
    pass = div.front;  // "divisor" unqualified means front divisor
  } else {
    symq::PermGroup group = io::load_group(group_path);
    if (a.rows() != group.degree())
      throw Error(errc::bad_shape,
                  adj_path + ": adjacency size does not match group degree");
    symq::Representation pi = symq::Representation::permutation(group);
    symq::DivisorQuotientReport rep = symq::divisor_vs_trivial_quotient(a, pi);
    symq::DivisorReport div =
        symq::check_divisor(a, rep.partition, tols.residual);
    report["partition"] = rep.partition;
    report["front"] = div.front;
    report["rear"] = div.rear;
    report["divisor"] = io::matrix_json(rep.divisor);
    report["quotient"] = io::matrix_json(rep.quotient);
    report["similarity"] = io::matrix_json(rep.similarity);
    report["max_difference"] = rep.max_difference;
    pass = rep.pass;
  }
  report["pass"] = pass;
  io::write_text(out, io::dump(report));
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("SYMQ_THREADS"))
    symq::kernels::set_thread_cap(std::atoi(cap));

  CLI::App app{"symmetry quotients of operators and quantum graphs"};
  app.require_subcommand(1);
  int rc = 0;

  // quotient -----------------------------------------------------------------
  std::string q_group, q_rep, q_op, q_out;
  std::string q_mode = "blocks";
  Tolerances q_tols;
  CLI::App* quotient = app.add_subcommand(
      "quotient", "compute the quotient operator for one representation");
  quotient->add_option("--group", q_group, "group JSON file")->required();
  quotient->add_option("--rep", q_rep,
                       "representation: trivial|regular|permutation|"
                       "sign:<gens>|file")->required();
  quotient->add_option("--operator", q_op, "operator JSON file")->required();
  quotient->add_option("--mode", q_mode, "plain: one unstructured kernel "
                       "basis; blocks: orbit-adapted basis")
      ->check(CLI::IsMember({"plain", "blocks"}));
  quotient->add_option("--out", q_out, "output path (default stdout)");
  add_tolerance_flags(quotient, q_tols);
  quotient->callback([&] {
    rc = run_quotient(q_group, q_rep, q_op, q_mode, q_tols, q_out);
  });

  // spectrum -----------------------------------------------------------------
  std::string s_op, s_out;
  Tolerances s_tols;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "clustered eigenvalues of an operator or quotient report");
  spectrum->add_option("--operator", s_op, "operator or quotient JSON file")
      ->required();
  spectrum->add_option("--out", s_out, "output path (default stdout)");
  add_tolerance_flags(spectrum, s_tols);
  spectrum->callback([&] { rc = run_spectrum(s_op, s_tols, s_out); });

  // verify -------------------------------------------------------------------
  std::string v_group, v_op, v_out;
  std::vector<std::string> v_irreps;
  Tolerances v_tols;
  CLI::App* verify = app.add_subcommand(
      "verify", "run all quotient property checks against a full irrep list");
  verify->add_option("--group", v_group, "group JSON file")->required();
  verify->add_option("--operator", v_op, "operator JSON file")->required();
  verify->add_option("--irrep", v_irreps,
                     "label=selector (repeat; the list must cover all irreps)")
      ->required();
  verify->add_option("--out", v_out, "output path (default stdout)");
  add_tolerance_flags(verify, v_tols);
  verify->callback(
      [&] { rc = run_verify(v_group, v_op, v_irreps, v_tols, v_out); });

  // qg -----------------------------------------------------------------------
  CLI::App* qg = app.add_subcommand("qg", "quantum graph pipelines");
  qg->require_subcommand(1);

  std::string gq_graph, gq_sym, gq_rep, gq_out;
  Tolerances gq_tols;
  CLI::App* qg_quotient =
      qg->add_subcommand("quotient", "quotient graph and conditions");
  qg_quotient->add_option("--graph", gq_graph, "quantum graph JSON file")
      ->required();
  qg_quotient->add_option("--symmetry", gq_sym, "edge symmetry JSON file")
      ->required();
  qg_quotient->add_option("--rep", gq_rep, "representation selector")
      ->required();
  qg_quotient->add_option("--out", gq_out, "output path (default stdout)");
  add_tolerance_flags(qg_quotient, gq_tols);
  qg_quotient->callback(
      [&] { rc = run_qg_quotient(gq_graph, gq_sym, gq_rep, gq_tols, gq_out); });

  std::string gs_graph, gs_sym, gs_rep, gs_out;
  double gs_k = 1.0;
  Tolerances gs_tols;
  CLI::App* qg_scatter =
      qg->add_subcommand("scatter", "bond scattering matrix at one k");
  qg_scatter->add_option("--graph", gs_graph, "quantum graph JSON file")
      ->required();
  qg_scatter->add_option("--k", gs_k, "wavenumber")->required();
  CLI::Option* gs_sym_opt =
      qg_scatter->add_option("--symmetry", gs_sym, "also emit S_rho");
  qg_scatter->add_option("--rep", gs_rep, "representation selector")
      ->needs(gs_sym_opt);
  gs_sym_opt->needs(qg_scatter->get_option("--rep"));
  qg_scatter->add_option("--out", gs_out, "output path (default stdout)");
  add_tolerance_flags(qg_scatter, gs_tols);
  qg_scatter->callback([&] {
    rc = run_qg_scatter(gs_graph, gs_sym, gs_rep, gs_k, gs_tols, gs_out);
  });

  std::string gr_graph, gr_out;
  double gr_kmin = 0.0, gr_kmax = 0.0, gr_step = 0.0;
  CLI::App* qg_secular =
      qg->add_subcommand("secular", "wavenumber spectrum on (k_min, k_max]");
  qg_secular->add_option("--graph", gr_graph, "quantum graph JSON file")
      ->required();
  qg_secular->add_option("--k-min", gr_kmin, "scan start (exclusive)")
      ->required();
  qg_secular->add_option("--k-max", gr_kmax, "scan end (inclusive)")
      ->required();
  qg_secular->add_option("--grid-step", gr_step,
                         "tracking grid step (default 0.01 / max length)");
  qg_secular->add_option("--out", gr_out, "output path (default stdout)");
  qg_secular->callback(
      [&] { rc = run_qg_secular(gr_graph, gr_kmin, gr_kmax, gr_step, gr_out); });

  std::string gc_graph, gc_sym, gc_out;
  std::vector<std::string> gc_irreps;
  double gc_kmin = 0.0, gc_kmax = 0.0, gc_step = 0.0, gc_ktol = 1e-7;
  CLI::App* qg_compare = qg->add_subcommand(
      "compare", "full secular spectrum vs union of irrep quotients");
  qg_compare->add_option("--graph", gc_graph, "quantum graph JSON file")
      ->required();
  qg_compare->add_option("--symmetry", gc_sym, "edge symmetry JSON file")
      ->required();
  qg_compare->add_option("--irrep", gc_irreps, "label=selector (repeat)")
      ->required();
  qg_compare->add_option("--k-min", gc_kmin, "scan start (exclusive)")
      ->required();
  qg_compare->add_option("--k-max", gc_kmax, "scan end (inclusive)")
      ->required();
  qg_compare->add_option("--grid-step", gc_step,
                         "tracking grid step (default 0.01 / max length)");
  qg_compare->add_option("--k-tol", gc_ktol, "root pairing tolerance")
      ->check(CLI::PositiveNumber);
  qg_compare->add_option("--out", gc_out, "output path (default stdout)");
  qg_compare->callback([&] {
    rc = run_qg_compare(gc_graph, gc_sym, gc_irreps, gc_kmin, gc_kmax, gc_step,
                        gc_ktol, gc_out);
  });

  // isospectral ----------------------------------------------------------------
  std::string i_group, i_pair, i_op, i_out;
  Tolerances i_tols;
  CLI::App* isospectral = app.add_subcommand(
      "isospectral", "certify a subgroup pair against one operator");
  isospectral->add_option("--group", i_group, "parent group JSON file")
      ->required();
  isospectral->add_option("--pair", i_pair, "subgroup pair JSON file")
      ->required();
  isospectral->add_option("--operator", i_op, "operator JSON file")->required();
  isospectral->add_option("--out", i_out, "output path (default stdout)");
  add_tolerance_flags(isospectral, i_tols);
  isospectral->callback(
      [&] { rc = run_isospectral(i_group, i_pair, i_op, i_tols, i_out); });

  // divisor --------------------------------------------------------------------
  std::string d_adj, d_partition, d_group, d_out;
  Tolerances d_tols;
  CLI::App* divisor = app.add_subcommand(
      "divisor", "front/rear divisor check; with --group also the "
                 "trivial-quotient similarity");
  divisor->add_option("--adjacency", d_adj, "adjacency matrix JSON file")
      ->required();
  CLI::Option* d_part_opt =
      divisor->add_option("--partition", d_partition, "partition JSON file");
  divisor->add_option("--group", d_group, "group JSON file (orbit partition)")
      ->excludes(d_part_opt);
  divisor->add_option("--out", d_out, "output path (default stdout)");
  add_tolerance_flags(divisor, d_tols);
  divisor->callback([&] {
    if (d_partition.empty() && d_group.empty())
      throw Error(errc::parse_error, "divisor needs --partition or --group");
    rc = run_divisor(d_adj, d_partition, d_group, d_tols, d_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;  // usage problems are input errors
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
