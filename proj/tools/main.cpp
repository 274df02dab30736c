// bschur: exact computations in the type B Hecke algebra and its Schur-type
// quotients: cell-module Gram forms, crystal graphs, simple-module indexing
// and quasi-hereditarity reports.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bschur/classify.hpp"
#include "bschur/engine.hpp"
#include "bschur/tensor.hpp"

using json = nlohmann::ordered_json;
using namespace bschur;

namespace {

struct CommonOpts {
  long n = 2;
  long m = -1;  // -1: default to 2n+1
  std::string e = "generic";
  std::string k = "generic";
  std::string format;
  std::string output;
  int jobs = default_jobs();
};

ParamSpec spec_of(const CommonOpts& o) {
  ParamSpec p;
  if (o.e != "generic") {
    try {
      p.e = std::stoi(o.e);
    } catch (...) {
      throw CLI::ValidationError("--e must be an integer >= 2 or 'generic'");
    }
    if (*p.e < 2) throw CLI::ValidationError("--e must be an integer >= 2 or 'generic'");
  }
  if (o.k != "generic") {
    try {
      p.k = std::stoi(o.k);
    } catch (...) {
      throw CLI::ValidationError("--k must be an integer or 'generic'");
    }
  }
  return p;
}

long effective_m(const CommonOpts& o) { return o.m >= 0 ? o.m : 2 * o.n + 1; }

void emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw DomainError("cannot open output file " + o.output);
  f << text;
}

void add_param_flags(CLI::App* cmd, CommonOpts& o, bool with_m = true) {
  cmd->add_option("--n", o.n, "rank")->check(CLI::Range(0, 64));
  if (with_m) cmd->add_option("--m", o.m, "dimension of the underlying space (default 2n+1)");
  cmd->add_option("--e", o.e, "multiplicative order of q, or 'generic'");
  cmd->add_option("--k", o.k, "exponent with Q = -q^k, or 'generic'");
  cmd->add_flag_callback("--Q-generic", [&o]() { o.k = "generic"; },
                         "force generic Q (same as --k generic)");
  cmd->add_option("--output", o.output, "write to file instead of stdout");
  cmd->add_option("--jobs", o.jobs, "worker threads (default BSCHUR_JOBS or 1)");
}

void guard_gram_rank(long n) {
  if (n > 4)
    throw BoundError("Gram computations are guarded at n <= 4 (dimension 2^n n!)");
}

// ---------------------------------------------------------------------------

int cmd_bipartitions(const CommonOpts& o) {
  std::ostringstream out;
  if (o.format == "json") {
    json arr = json::array();
    for (const Bipartition& b : enumerate_bipartitions(o.n)) arr.push_back(b.to_string());
    out << arr.dump(2) << "\n";
  } else {
    for (const Bipartition& b : enumerate_bipartitions(o.n)) out << b.to_string() << "\n";
  }
  emit(o, out.str());
  return 0;
}

int cmd_crystal(const CommonOpts& o) {
  if (o.n > 8) throw BoundError("crystal graphs are guarded at n <= 8");
  CrystalGraph g = crystal_graph(o.n, spec_of(o));
  std::ostringstream out;
  if (o.format == "dot") {
    out << g.to_dot();
  } else {
    json j;
    j["n_max"] = g.n_max;
    j["params"] = spec_of(o).to_string();
    j["vertices"] = json::array();
    for (const auto& v : g.vertices) j["vertices"].push_back(v.to_string());
    j["edges"] = json::array();
    for (const auto& e : g.edges)
      j["edges"].push_back({{"from", e.from.to_string()},
                            {"to", e.to.to_string()},
                            {"label", e.label.to_string()}});
    out << j.dump(2) << "\n";
  }
  emit(o, out.str());
  return 0;
}

int cmd_lnx(const CommonOpts& o) {
  ParamSpec p = spec_of(o);
  long m = effective_m(o);
  std::vector<Bipartition> shapes = enumerate_bipartitions(o.n);
  std::vector<LnxVerdict> verdicts(shapes.size());
  parallel_for(static_cast<long>(shapes.size()),
               [&](long i) { verdicts[static_cast<size_t>(i)] = is_lnx(shapes[static_cast<size_t>(i)], m, p); },
               o.jobs);
  std::ostringstream out;
  out << "shape\tverdict\tevidence\n";
  for (size_t i = 0; i < shapes.size(); ++i)
    out << shapes[i].to_string() << "\t" << to_string(verdicts[i].status) << "\t"
        << to_string(verdicts[i].evidence) << "\n";
  emit(o, out.str());
  return 0;
}

int cmd_qh(const CommonOpts& o) {
  QhVerdict v = is_quasi_hereditary(o.n, effective_m(o), spec_of(o));
  json j;
  j["n"] = o.n;
  j["m"] = effective_m(o);
  j["params"] = spec_of(o).to_string();
  j["qh"] = v.qh;
  j["certificate"] = v.certificate;
  emit(o, j.dump(2) + "\n");
  return 0;
}

int cmd_gram(const CommonOpts& o, const std::string& shape_text, const std::string& alphabet) {
  guard_gram_rank(o.n);
  Bipartition shape = parse_shape(shape_text);
  if (shape.size() != o.n)
    throw DomainError("gram: shape is not a bipartition of n");
  ParamSpec p = spec_of(o);
  Alphabet alph = alphabet == "standard" ? Alphabet::standard_kind()
                                         : Alphabet::for_m(effective_m(o));
  GramMatrix g = gram_matrix(murphy_engine(static_cast<int>(o.n), p), shape, alph);
  json j;
  j["shape"] = shape.to_string();
  j["alphabet"] = g.alphabet.to_string();
  j["status"] = to_string(g.status());
  j["index"] = json::array();
  for (const auto& t : g.index) j["index"].push_back(t.to_string());
  j["entries"] = json::array();
  for (const auto& row : g.entries) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    j["entries"].push_back(r);
  }
  emit(o, j.dump(2) + "\n");
  return 0;
}

int cmd_lnx_oracle(const CommonOpts& o) {
  guard_gram_rank(o.n);
  ParamSpec p = spec_of(o);
  long m = effective_m(o);
  const MurphyBasis& basis = murphy_engine(static_cast<int>(o.n), p);
  std::vector<Bipartition> shapes = enumerate_bipartitions(o.n);
  std::vector<CellStatus> statuses(shapes.size());
  parallel_for(static_cast<long>(shapes.size()),
               [&](long i) {
                 statuses[static_cast<size_t>(i)] =
                     cell_status(basis, shapes[static_cast<size_t>(i)], Alphabet::for_m(m));
               },
               o.jobs);
  std::ostringstream out;
  out << "shape\tcell_status\n";
  for (size_t i = 0; i < shapes.size(); ++i)
    out << shapes[i].to_string() << "\t" << to_string(statuses[i]) << "\n";
  emit(o, out.str());
  return 0;
}

int cmd_blocks(const CommonOpts& o, const std::string& parity_text) {
  Parity parity = parity_text == "even" ? Parity::even : Parity::odd;
  std::vector<BlockReport> reports = blocks(o.n, spec_of(o), parity);
  json arr = json::array();
  for (const BlockReport& r : reports) {
    json j;
    j["b"] = residue_fn_to_string(r.b);
    j["members"] = json::array();
    for (const auto& lam : r.members) j["members"].push_back(lam.to_string());
    j["alpha_coroot"] = json::array();
    for (const auto& [u, a] : r.alpha)
      j["alpha_coroot"].push_back({{"u", u.to_string()}, {"value", a}});
    j["dominant_form"] = residue_fn_to_string(r.reduction.reduced);
    json trace = json::array();
    for (const auto& step : r.reduction.trace)
      trace.push_back({{"u", step.u.to_string()}, {"delta", step.delta}});
    j["reduction_trace"] = trace;
    j["qh"] = r.qh;
    arr.push_back(j);
  }
  emit(o, arr.dump(2) + "\n");
  return 0;
}

int cmd_hecke_check(const CommonOpts& o) {
  if (o.n > 5) throw BoundError("hecke-check is guarded at n <= 5");
  ParamSpec p = spec_of(o);
  HeckeAlgebra H(static_cast<int>(o.n), p);
  const WeylGroupB& W = H.group();
  int n = static_cast<int>(o.n);
  json j;
  j["n"] = o.n;
  j["params"] = p.to_string();
  long expect_dim = 1;
  for (int i = 1; i <= n; ++i) expect_dim *= 2 * i;
  j["dimension"] = W.size();
  j["dimension_ok"] = W.size() == expect_dim;

  auto elt_zero = [&](const HeckeElt& x) { return H.is_zero(x); };
  bool quad = true, braid = true, comm = true;
  for (int i = 0; i < n; ++i) {
    HeckeElt lhs = H.sub(H.mul(H.T(i), H.T(i)),
                         H.add(H.scale(H.T(i), H.gen_param(i) - H.field().one()),
                               H.scale(H.one(), H.gen_param(i))));
    quad = quad && elt_zero(lhs);
  }
  if (n >= 2) {
    HeckeElt a = H.T_word({0, 1, 0, 1});
    HeckeElt b = H.T_word({1, 0, 1, 0});
    braid = braid && H.equal(a, b);
  }
  for (int i = 1; i + 1 < n; ++i)
    braid = braid && H.equal(H.T_word({i, i + 1, i}), H.T_word({i + 1, i, i + 1}));
  for (int i = 0; i < n; ++i)
    for (int jj = i + 2; jj < n; ++jj)
      comm = comm && H.equal(H.T_word({i, jj}), H.T_word({jj, i}));
  j["quadratic_ok"] = quad;
  j["braid_ok"] = braid;
  j["commutation_ok"] = comm;

  // symmetric Jucys-Murphy polynomials are central
  bool jm_central = true;
  if (n >= 1) {
    HeckeElt e1 = H.zero(), en = H.one();
    for (int i = 1; i <= n; ++i) {
      e1 = H.add(e1, H.jucys_murphy(i));
      en = H.mul(en, H.jucys_murphy(i));
    }
    for (int i = 0; i < n; ++i) {
      jm_central = jm_central && H.equal(H.mul(e1, H.T(i)), H.mul(H.T(i), e1));
      jm_central = jm_central && H.equal(H.mul(en, H.T(i)), H.mul(H.T(i), en));
    }
  }
  j["jm_symmetric_central_ok"] = jm_central;

  // parabolic invariant lines and module generators, over both parities
  bool unique_line = true, module_same = true;
  for (long m : {2 * o.n, 2 * o.n + 1}) {
    if (m < 1) continue;
    for (const Alpha& alpha : enumerate_Bnm(o.n, m)) {
      HeckeElt x = H.x_alpha_B(alpha);
      for (int i : G_alpha(alpha)) {
        HeckeElt lhs = H.sub(H.mul_gen_left(i, x), H.scale(x, H.gen_param(i)));
        unique_line = unique_line && elt_zero(lhs);
      }
      HeckeElt mel = H.m_element(lambda_of_alpha(alpha));
      for (int i : G_alpha(alpha)) {
        if (i == 0 && alpha.a0 <= 1) continue;
        HeckeElt lhs = H.sub(H.mul_gen_left(i, mel), H.scale(mel, H.gen_param(i)));
        module_same = module_same && elt_zero(lhs);
      }
    }
  }
  j["parabolic_line_ok"] = unique_line;
  j["module_generator_ok"] = module_same;

  bool all = j["dimension_ok"].get<bool>() && quad && braid && comm && jm_central &&
             unique_line && module_same;
  j["all_ok"] = all;
  emit(o, j.dump(2) + "\n");
  return all ? 0 : 1;
}

int cmd_table(const CommonOpts& o) {
  if (o.n != 2) throw DomainError("table: only --n 2 is published");
  struct Row {
    std::string label;
    long m;
  };
  std::vector<Row> rows = {{"m>=5 odd", 5}, {"m>=4 even", 4}, {"m=3", 3}, {"m=2", 2}, {"m=1", 1}};
  std::vector<std::pair<std::string, ParamSpec>> cols = {
      {"Q=-q", ParamSpec::at(std::nullopt, 1)},
      {"Q=-1", ParamSpec::at(std::nullopt, 0)},
      {"Q=-q^-1", ParamSpec::at(std::nullopt, -1)},
      {"generic", ParamSpec::generic()},
  };
  std::ostringstream out;
  out << "m";
  for (const auto& [label, spec] : cols) out << "\t" << label;
  out << "\n";
  for (const Row& row : rows) {
    out << row.label;
    for (const auto& [label, spec] : cols)
      out << "\t" << (is_quasi_hereditary(2, row.m, spec).qh ? "✓" : "✗");
    out << "\n";
  }
  emit(o, out.str());
  return 0;
}

int cmd_conjecture_scan(const CommonOpts& o, long r) {
  if (r < 1) throw DomainError("conjecture-scan: --r >= 1 required");
  guard_gram_rank(o.n);
  ParamSpec p = spec_of(o);
  long m = 2 * r - 1;
  long lo = 2 - o.n / 2, hi = std::min(o.n, r) - 1;
  bool predicted = !k_window_vanishes(p, lo, hi);
  bool actual = is_quasi_hereditary(o.n, m, p).qh;
  json j;
  j["status"] = "EXPERIMENTAL";
  j["n"] = o.n;
  j["r"] = r;
  j["m"] = m;
  j["params"] = p.to_string();
  j["window"] = {lo, hi};
  j["predicted_qh"] = predicted;
  j["actual_qh"] = actual;
  j["match"] = predicted == actual;
  emit(o, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact type B Hecke / Schur algebra computations"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string shape_text = "|";
  std::string alphabet = "B";
  std::string parity = "odd";
  long conj_r = 1;

  CLI::App* c_bip = app.add_subcommand("bipartitions", "list bipartitions of n");
  add_param_flags(c_bip, o, false);
  c_bip->add_option("--format", o.format, "json|tsv");

  CLI::App* c_crystal = app.add_subcommand("crystal", "crystal graph up to size n");
  add_param_flags(c_crystal, o, false);
  c_crystal->add_option("--format", o.format, "dot|json");

  CLI::App* c_lnx = app.add_subcommand("lnx", "classify bipartitions of n at dimension m");
  add_param_flags(c_lnx, o);

  CLI::App* c_qh = app.add_subcommand("qh", "quasi-hereditarity of the rank-n algebra");
  add_param_flags(c_qh, o);

  CLI::App* c_gram = app.add_subcommand("gram", "Gram matrix of a (truncated) cell module");
  add_param_flags(c_gram, o);
  c_gram->add_option("--shape", shape_text, "shape string, e.g. \"1,1|\"")->required();
  c_gram->add_option("--alphabet", alphabet, "standard|B");

  CLI::App* c_oracle = app.add_subcommand("lnx-oracle", "per-shape truncated cell status");
  add_param_flags(c_oracle, o);

  CLI::App* c_blocks = app.add_subcommand("blocks", "block decomposition and block qh");
  add_param_flags(c_blocks, o, false);
  c_blocks->add_option("--parity", parity, "odd|even");

  CLI::App* c_hecke = app.add_subcommand("hecke-check", "defining-relation and invariant suite");
  add_param_flags(c_hecke, o, false);

  CLI::App* c_table = app.add_subcommand("table", "rank-2 quasi-hereditarity table");
  add_param_flags(c_table, o, false);

  CLI::App* c_conj = app.add_subcommand("conjecture-scan",
                                        "small-m evidence scan (EXPERIMENTAL)");
  add_param_flags(c_conj, o);
  c_conj->add_option("--r", conj_r, "half-dimension: scans m = 2r-1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_bip->parsed()) return cmd_bipartitions(o);
    if (c_crystal->parsed()) return cmd_crystal(o);
    if (c_lnx->parsed()) return cmd_lnx(o);
    if (c_qh->parsed()) return cmd_qh(o);
    if (c_gram->parsed()) return cmd_gram(o, shape_text, alphabet);
    if (c_oracle->parsed()) return cmd_lnx_oracle(o);
    if (c_blocks->parsed()) return cmd_blocks(o, parity);
    if (c_hecke->parsed()) return cmd_hecke_check(o);
    if (c_table->parsed()) return cmd_table(o);
    if (c_conj->parsed()) return cmd_conjecture_scan(o, conj_r);
  } catch (const BoundError& e) {
    std::cerr << "bound: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
