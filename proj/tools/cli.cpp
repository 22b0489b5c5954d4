#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specjoin/closed_form.hpp"
#include "specjoin/constructions.hpp"
#include "specjoin/coronal.hpp"
#include "specjoin/cospectral.hpp"
#include "specjoin/error.hpp"
#include "specjoin/exact.hpp"
#include "specjoin/generators.hpp"
#include "specjoin/graph.hpp"
#include "specjoin/graph6.hpp"
#include "specjoin/invariants.hpp"
#include "specjoin/isomorphism.hpp"
#include "specjoin/jacobi.hpp"
#include "specjoin/nl.hpp"
#include "specjoin/spectrum.hpp"
#include "specjoin/switching.hpp"

namespace specjoin::cli {

namespace {

using nlohmann::ordered_json;

Graph read_graph(const std::string& path) {
  std::string line;
  if (path == "-") {
    if (!std::getline(std::cin, line))
      throw Error(ErrorKind::Parse, "no graph6 input on stdin");
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    if (!std::getline(in, line))
      throw Error(ErrorKind::Parse, "'" + path + "' is empty");
  }
  return parse_graph6(line);
}

void write_payload(const std::string& payload, const std::string& out_path,
                   std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << payload;
    return;
  }
  std::ofstream f(out_path);
  if (!f)
    throw Error(ErrorKind::Argument,
                "cannot open output file '" + out_path + "'");
  f << payload;
}

std::string fmt(double v) {
  char b[64];
  std::snprintf(b, sizeof(b), "%.12g", v);
  return b;
}

std::string fmt_sci(double v) {
  char b[64];
  std::snprintf(b, sizeof(b), "%.3e", v);
  return b;
}

std::string join_values(const std::vector<double>& values) {
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += fmt(values[i]);
  }
  return s;
}

// Position-wise max of |a_i − b_i| / max(1, |a_i|); infinity on length
// mismatch — the same normalization spectra_equal uses.
double max_rel_deviation(const std::vector<double>& a,
                         const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double dev = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    dev = std::max(dev,
                   std::fabs(a[i] - b[i]) / std::max(1.0, std::fabs(a[i])));
  return dev;
}

const char* tag_name(PartTag t) {
  switch (t) {
    case PartTag::OriginalOfG1:
      return "original_of_g1";
    case PartTag::SubdivisionVertex:
      return "subdivision_vertex";
    case PartTag::VertexOfG2:
      return "vertex_of_g2";
  }
  return "?";
}

// ---------------------------------------------------------------- gen

int do_gen(const std::string& family, const std::vector<int>& params,
           const std::string& out_path, std::ostream& out) {
  const Graph g = generate(family_from_string(family), params);
  write_payload(write_graph6(g) + "\n", out_path, out);
  return 0;
}

// ---------------------------------------------------------------- join

int do_join(const std::string& kind, const std::string& g1_path,
            const std::string& g2_path, const std::string& out_path,
            const std::string& labels_path, std::ostream& out) {
  const Graph g1 = read_graph(g1_path);
  const Graph g2 = read_graph(g2_path);
  const LabeledGraph j = kind == "sv" ? sv_join(g1, g2) : se_join(g1, g2);
  write_payload(write_graph6(j.graph) + "\n", out_path, out);
  if (!labels_path.empty()) {
    ordered_json lj;
    lj["n1"] = j.labels.n1;
    lj["m1"] = j.labels.m1;
    lj["n2"] = j.labels.n2;
    lj["tags"] = ordered_json::array();
    for (int v = 0; v < j.labels.size(); ++v)
      lj["tags"].push_back(tag_name(j.labels.label(v)));
    std::ofstream f(labels_path);
    if (!f)
      throw Error(ErrorKind::Argument,
                  "cannot open labels file '" + labels_path + "'");
    f << lj.dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- spectrum

void print_breakdown(const RegularProfile& p1, const RegularProfile& p2,
                     const ClosedFormSpectrum& cf, std::ostream& err) {
  err << "G1: n=" << p1.n << " m=" << p1.m << " r=" << p1.r << "\n";
  err << "G2: n=" << p2.n << " m=" << p2.m << " r=" << p2.r << "\n";
  err << "part (i): eigenvalue 0, multiplicity 1\n";
  err << "part (ii): eigenvalue 1, multiplicity " << cf.ones << "\n";
  err << "part (iii): "
      << (cf.linear_part.empty() ? std::string("none")
                                 : join_values(cf.linear_part))
      << "\n";
  err << "part (iv):";
  if (cf.quadratic_part.empty()) err << " none";
  for (const auto& q : cf.quadratic_part)
    err << " x^2 + (" << fmt(q.b) << ")x + (" << fmt(q.c) << ")";
  err << "\n";
  err << "part (v): x^2 + (" << fmt(cf.special_quadratic.b) << ")x + ("
      << fmt(cf.special_quadratic.c) << ")\n";
}

int do_spectrum(const std::string& g_path, const std::string& method,
                const std::string& g2_path, const std::string& format,
                double tol, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  Spectrum s;
  std::string method_label;
  if (method == "direct") {
    const Graph g = read_graph(g_path);
    s = nl_spectrum_direct(g);
    method_label = "direct";
  } else {
    if (g2_path.empty())
      throw Error(ErrorKind::Argument,
                  "--g2 is required for --method " + method);
    const Graph g1 = read_graph(g_path);
    const Graph g2 = read_graph(g2_path);
    const RegularProfile p1 = regular_profile(g1);
    const RegularProfile p2 = regular_profile(g2);
    const Spectrum mu = nl_spectrum_or_zeros(g1);
    const Spectrum nu = nl_spectrum_or_zeros(g2);
    const ClosedFormSpectrum cf =
        method == "closed-sv" ? sv_join_spectrum_closed(p1, mu, p2, nu)
                              : se_join_spectrum_closed(p1, mu, p2, nu);
    print_breakdown(p1, p2, cf, err);
    s = flatten(cf);
    method_label = method == "closed-sv" ? "closed-form-sv" : "closed-form-se";
  }
  s.group_tol = tol;
  write_payload(format == "csv" ? spectrum_csv(s)
                                : spectrum_json(s, method_label),
                out_path, out);
  return 0;
}

// ---------------------------------------------------------------- verify

int report(std::ostream& out, const std::string& name, bool pass) {
  out << (pass ? "PASS " : "FAIL ") << name << "\n";
  return pass ? 0 : 1;
}

int verify_spectrum_theorem(const Graph& g1, const Graph& g2, bool sv,
                            double tol, std::ostream& out) {
  const RegularProfile p1 = regular_profile(g1);
  const RegularProfile p2 = regular_profile(g2);
  const Spectrum mu = nl_spectrum_or_zeros(g1);
  const Spectrum nu = nl_spectrum_or_zeros(g2);
  const Spectrum closed =
      flatten(sv ? sv_join_spectrum_closed(p1, mu, p2, nu)
                 : se_join_spectrum_closed(p1, mu, p2, nu));
  const Graph join = (sv ? sv_join(g1, g2) : se_join(g1, g2)).graph;
  const Spectrum direct = nl_spectrum_direct(join);
  out << "closed-form: " << join_values(closed.values) << "\n";
  out << "direct:      " << join_values(direct.values) << "\n";
  out << "max relative deviation: "
      << fmt_sci(max_rel_deviation(closed.values, direct.values))
      << " (tolerance " << fmt_sci(tol) << ")\n";
  return report(out, sv ? "theorem 2.3" : "theorem 2.4",
                spectra_equal(closed, direct, tol));
}

int verify_trees_theorem(const Graph& g1, const Graph& g2, std::ostream& out) {
  const RegularProfile p1 = regular_profile(g1);
  const RegularProfile p2 = regular_profile(g2);
  const Spectrum mu = nl_spectrum_or_zeros(g1);
  const Spectrum nu = nl_spectrum_or_zeros(g2);
  bool all = true;
  for (const bool sv : {true, false}) {
    const char* kind = sv ? "sv" : "se";
    const mpz_class closed =
        sv ? sv_join_trees_exact(g1, g2) : se_join_trees_exact(g1, g2);
    const Graph join = (sv ? sv_join(g1, g2) : se_join(g1, g2)).graph;
    const mpz_class oracle = spanning_trees_matrix_tree(join);
    const long double product = sv ? sv_join_trees_product(p1, mu, p2, nu)
                                   : se_join_trees_product(p1, mu, p2, nu);
    const double deviation = static_cast<double>(
        std::fabs(product - mpq_class(oracle).get_d()) /
        mpq_class(oracle).get_d());
    out << kind << " closed form (exact): " << closed.get_str() << "\n";
    out << kind << " matrix-tree oracle:  " << oracle.get_str() << "\n";
    out << kind
        << " floating product relative deviation: " << fmt_sci(deviation)
        << " (tolerance 1.000e-06)\n";
    all = all && closed == oracle && deviation <= 1e-6;
  }
  return report(out, "theorem 3.4", all);
}

int verify_kirchhoff_theorem(const Graph& g1, const Graph& g2, double tol,
                             std::ostream& out) {
  const RegularProfile p1 = regular_profile(g1);
  const RegularProfile p2 = regular_profile(g2);
  const Spectrum mu = nl_spectrum_or_zeros(g1);
  const Spectrum nu = nl_spectrum_or_zeros(g2);
  bool all = true;
  for (const bool sv : {true, false}) {
    const char* kind = sv ? "sv" : "se";
    const double closed = sv ? sv_join_kirchhoff_closed(p1, mu, p2, nu)
                             : se_join_kirchhoff_closed(p1, mu, p2, nu);
    const Graph join = (sv ? sv_join(g1, g2) : se_join(g1, g2)).graph;
    const double spectral = degree_kirchhoff_spectral(join);
    const double resistance = degree_kirchhoff_resistance(join);
    out << kind << " closed form: " << fmt(closed) << "\n";
    out << kind << " spectral:    " << fmt(spectral) << "\n";
    out << kind << " resistance:  " << fmt(resistance) << "\n";
    all = all &&
          std::fabs(closed - spectral) <= tol * std::fabs(spectral) &&
          std::fabs(closed - resistance) <= 1e-6 * std::fabs(resistance);
  }
  return report(out, "theorem 3.3", all);
}

int verify_line_graph_lemma(const Graph& g, double tol, std::ostream& out) {
  const RegularProfile p = regular_profile(g);
  const std::vector<double> closed =
      line_graph_adjacency_spectrum(p, nl_spectrum_direct(g));
  const std::vector<double> direct =
      jacobi_eigenvalues(adjacency_matrix(line_graph(g)));
  out << "closed-form: " << join_values(closed) << "\n";
  out << "direct:      " << join_values(direct) << "\n";
  const double dev = max_rel_deviation(closed, direct);
  out << "max relative deviation: " << fmt_sci(dev) << " (tolerance "
      << fmt_sci(tol) << ")\n";
  return report(out, "lemma 2.1", dev <= tol);
}

int verify_rank_one_lemma(const Graph& g, std::ostream& out) {
  if (g.vertex_count() < 1)
    throw Error(ErrorKind::Domain, "lemma 2.2 needs a non-empty graph");
  int max_degree = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    max_degree = std::max(max_degree, g.degree(v));
  const double x = max_degree + 2.0;  // strictly above the spectral radius
  const double alpha = 0.3;
  const auto [lhs, rhs] = det_rank_one_identity(adjacency_matrix(g), alpha, x);
  out << "x = " << fmt(x) << ", alpha = " << fmt(alpha) << "\n";
  out << "det(xI - A - aJ):          " << fmt(lhs) << "\n";
  out << "(1 - a*Gamma)*det(xI - A): " << fmt(rhs) << "\n";
  const bool pass = std::fabs(lhs - rhs) <= 1e-8 * std::max(1.0, std::fabs(lhs));
  return report(out, "lemma 2.2", pass);
}

int verify_coronal_eq(const Graph& g, std::ostream& out) {
  const RegularProfile p = regular_profile(g);
  const SymMatrix l = normalized_laplacian(g);
  std::mt19937 rng(20240615u);
  std::uniform_real_distribution<double> dx(2.5, 6.0);
  std::uniform_real_distribution<double> da(0.0, 1.0);
  double dev = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double x = dx(rng);
    const double alpha = da(rng);
    dev = std::max(dev, std::fabs(coronal(l, x, alpha) -
                                  coronal_regular_closed(p.n, x, alpha)));
  }
  const double bound = 1e-10 * p.n;
  out << "20 samples, max |coronal - n/(x+alpha-1)| = " << fmt_sci(dev)
      << " (bound " << fmt_sci(bound) << ")\n";
  return report(out, "eq. (1)", dev <= bound);
}

int do_verify(const std::string& theorem, const std::string& g1_path,
              const std::string& g2_path, double tol, std::ostream& out) {
  const Graph g1 = read_graph(g1_path);
  const bool needs_g2 =
      theorem == "2.3" || theorem == "2.4" || theorem == "3.3" ||
      theorem == "3.4";
  if (needs_g2 && g2_path.empty())
    throw Error(ErrorKind::Argument,
                "--theorem " + theorem + " requires two graphs");
  if (theorem == "2.3" || theorem == "2.4")
    return verify_spectrum_theorem(g1, read_graph(g2_path), theorem == "2.3",
                                   tol, out);
  if (theorem == "3.4")
    return verify_trees_theorem(g1, read_graph(g2_path), out);
  if (theorem == "3.3")
    return verify_kirchhoff_theorem(g1, read_graph(g2_path), tol, out);
  if (theorem == "lemma2.1") return verify_line_graph_lemma(g1, tol, out);
  if (theorem == "lemma2.2") return verify_rank_one_lemma(g1, out);
  return verify_coronal_eq(g1, out);  // eq1
}

// ---------------------------------------------------------------- cospectral

int do_cospectral(const std::string& g_path, const std::string& h_path,
                  bool exact, bool iso, double tol,
                  const std::string& out_path, std::ostream& out) {
  const Graph g = read_graph(g_path);
  const Graph h = read_graph(h_path);
  bool equal = false;
  std::string payload;
  if (exact) {
    const CospectralCertificate cert = exact_cospectral(g, h, iso);
    equal = cert.equal;
    payload = certificate_json(cert);
  } else {
    const Spectrum a = nl_spectrum_direct(g);
    const Spectrum b = nl_spectrum_direct(h);
    equal = spectra_equal(a, b, tol);
    ordered_json j;
    j["equal"] = equal;
    j["method"] = "numeric";
    j["tolerance"] = tol;
    if (iso) j["isomorphic"] = is_isomorphic(g, h);
    payload = j.dump(2) + "\n";
  }
  write_payload(payload, out_path, out);
  return equal ? 0 : 1;
}

// ---------------------------------------------------------------- example32

std::vector<int> block_degree_sequence(int a_deg, int a_cnt, int b_deg,
                                       int b_cnt, int c_deg, int c_cnt) {
  std::vector<int> d;
  d.insert(d.end(), a_cnt, a_deg);
  d.insert(d.end(), b_cnt, b_deg);
  d.insert(d.end(), c_cnt, c_deg);
  return d;  // callers pass degrees in non-increasing order
}

int do_example32(bool json_mode, const std::string& out_path,
                 std::ostream& out) {
  const Graph q4 = hypercube(4);
  const Graph k2 = complete(2);

  std::vector<int> set_vertices;
  for (const int size : {2, 4, 6, 8}) {
    const auto sets = gm_search(q4, size);
    if (!sets.empty()) {
      set_vertices = sets.front().vertices;
      break;
    }
  }
  const bool switch_found = !set_vertices.empty();

  bool base_ok = false, sv_ok = false, se_ok = false;
  bool sv_deg_ok = false, se_deg_ok = false;
  if (switch_found) {
    const Graph switched = gm_switch(q4, SwitchingSet{set_vertices});
    const bool adjacency_equal =
        adjacency_charpoly(q4) == adjacency_charpoly(switched);
    const CospectralCertificate base =
        exact_cospectral(q4, switched, /*check_isomorphism=*/true);
    base_ok = adjacency_equal && base.equal && base.isomorphic.has_value() &&
              !*base.isomorphic;

    const CospectralJoinPair sv =
        build_cospectral_join_pair(q4, switched, k2, k2, JoinKind::SV);
    sv_ok = sv.certificate.equal;
    const CospectralJoinPair se =
        build_cospectral_join_pair(q4, switched, k2, k2, JoinKind::SE);
    se_ok = se.certificate.equal;

    const std::vector<int> sv_expected =
        block_degree_sequence(17, 2, 6, 16, 2, 32);
    const std::vector<int> se_expected =
        block_degree_sequence(33, 2, 4, 48, 0, 0);
    sv_deg_ok = sv.a.degree_sequence() == sv_expected &&
                sv.b.degree_sequence() == sv_expected;
    se_deg_ok = se.a.degree_sequence() == se_expected &&
                se.b.degree_sequence() == se_expected;
  }

  const bool all =
      switch_found && base_ok && sv_ok && se_ok && sv_deg_ok && se_deg_ok;

  std::string payload;
  if (json_mode) {
    ordered_json j;
    j["switching_set"] = set_vertices;
    j["switch_found"] = switch_found;
    j["base_pair_certified"] = base_ok;
    j["sv_pair_certified"] = sv_ok;
    j["se_pair_certified"] = se_ok;
    j["sv_degrees_match"] = sv_deg_ok;
    j["se_degrees_match"] = se_deg_ok;
    payload = j.dump(2) + "\n";
  } else {
    std::string set_text = "{";
    for (size_t i = 0; i < set_vertices.size(); ++i) {
      if (i) set_text += ", ";
      set_text += std::to_string(set_vertices[i]);
    }
    set_text += "}";
    auto line = [&](bool ok, const std::string& text) {
      payload += (ok ? "PASS " : "FAIL ") + text + "\n";
    };
    line(switch_found,
         "switching set found in Q4: " +
             (switch_found ? set_text + " (size " +
                                 std::to_string(set_vertices.size()) + ")"
                           : std::string("none")));
    line(base_ok,
         "Q4 vs switched Q4: adjacency- and normalized-Laplacian-cospectral "
         "(exact certificates), non-isomorphic");
    line(sv_ok, "sv join pair (order 50): exactly cospectral");
    line(se_ok, "se join pair (order 50): exactly cospectral");
    line(sv_deg_ok, "sv join degree sequence: (17^2, 6^16, 2^32)");
    line(se_deg_ok, "se join degree sequence: (33^2, 4^48)");
  }
  write_payload(payload, out_path, out);
  return all ? 0 : 1;
}

// ---------------------------------------------------------------- invariants

int do_invariants(const std::string& g_path, const std::string& out_path,
                  std::ostream& out) {
  const Graph g = read_graph(g_path);
  write_payload(invariant_report_json(invariant_report(g)), out_path, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "subdivision-vertex/-edge joins: normalized Laplacian spectra, "
      "spanning trees, degree-Kirchhoff indices, cospectral certificates"};
  app.require_subcommand(1);

  std::string gen_family, gen_out;
  std::vector<int> gen_params;
  auto* gen = app.add_subcommand("gen", "generate a named graph as graph6");
  gen->add_option("family", gen_family,
                  "cycle|complete|complete_bipartite|hypercube|petersen|"
                  "empty|shrikhande|rook4x4")
      ->required();
  gen->add_option("params", gen_params, "family-specific integer parameters");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  std::string join_kind, join_g1, join_g2, join_out, join_labels;
  auto* join = app.add_subcommand("join", "build a subdivision join");
  join->add_option("--kind", join_kind, "sv|se")
      ->required()
      ->check(CLI::IsMember({"sv", "se"}));
  join->add_option("g1", join_g1, "graph6 file for G1 ('-' = stdin)")
      ->required();
  join->add_option("g2", join_g2, "graph6 file for G2 ('-' = stdin)")
      ->required();
  join->add_option("--out", join_out, "output file (default stdout)");
  join->add_option("--labels", join_labels,
                   "write the PartLabels JSON sidecar to this path");

  std::string spec_g, spec_method = "direct", spec_g2, spec_format = "json",
              spec_out;
  double spec_tol = 1e-7;
  auto* spectrum =
      app.add_subcommand("spectrum", "normalized Laplacian spectrum");
  spectrum->add_option("g", spec_g, "graph6 file ('-' = stdin)")->required();
  spectrum->add_option("--method", spec_method, "direct|closed-sv|closed-se")
      ->check(CLI::IsMember({"direct", "closed-sv", "closed-se"}));
  spectrum->add_option("--g2", spec_g2, "second factor for closed methods");
  spectrum->add_option("--format", spec_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  spectrum->add_option("--tol", spec_tol,
                       "multiplicity grouping tolerance (default 1e-7)");
  spectrum->add_option("--out", spec_out, "output file (default stdout)");

  std::string ver_theorem, ver_g1, ver_g2;
  double ver_tol = 1e-9;
  auto* verify =
      app.add_subcommand("verify", "check a closed form against its oracle");
  verify->add_option("--theorem", ver_theorem,
                     "2.3|2.4|3.3|3.4|lemma2.1|lemma2.2|eq1")
      ->required()
      ->check(CLI::IsMember(
          {"2.3", "2.4", "3.3", "3.4", "lemma2.1", "lemma2.2", "eq1"}));
  verify->add_option("g1", ver_g1, "graph6 file ('-' = stdin)")->required();
  verify->add_option("g2", ver_g2, "second graph6 file (join theorems)");
  verify->add_option("--tol", ver_tol, "comparison tolerance (default 1e-9)");

  std::string cos_g, cos_h, cos_out;
  bool cos_exact = false, cos_iso = false;
  double cos_tol = 1e-9;
  auto* cospectral =
      app.add_subcommand("cospectral", "compare normalized Laplacian spectra");
  cospectral->add_option("g1", cos_g, "graph6 file ('-' = stdin)")->required();
  cospectral->add_option("g2", cos_h, "graph6 file")->required();
  cospectral->add_flag("--exact", cos_exact,
                       "exact integer pencil certificate");
  cospectral->add_flag("--iso", cos_iso, "also run the isomorphism test");
  cospectral->add_option("--tol", cos_tol,
                         "numeric comparison tolerance (default 1e-9)");
  cospectral->add_option("--out", cos_out, "output file (default stdout)");

  bool ex_json = false;
  std::string ex_out;
  auto* example32 = app.add_subcommand(
      "example32", "end-to-end cospectral-pair reproduction on Q4");
  example32->add_flag("--json", ex_json, "machine-readable report");
  example32->add_option("--out", ex_out, "output file (default stdout)");

  std::string inv_g, inv_out;
  auto* invariants = app.add_subcommand(
      "invariants", "spanning trees and degree-Kirchhoff report");
  invariants->add_option("g", inv_g, "graph6 file ('-' = stdin)")->required();
  invariants->add_option("--out", inv_out, "output file (default stdout)");

  std::vector<const char*> argv;
  argv.push_back("specjoin");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    (void)app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    (void)app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e, out, err);
    return 2;
  }

  try {
    if (*gen) return do_gen(gen_family, gen_params, gen_out, out);
    if (*join)
      return do_join(join_kind, join_g1, join_g2, join_out, join_labels, out);
    if (*spectrum)
      return do_spectrum(spec_g, spec_method, spec_g2, spec_format, spec_tol,
                         spec_out, out, err);
    if (*verify) return do_verify(ver_theorem, ver_g1, ver_g2, ver_tol, out);
    if (*cospectral)
      return do_cospectral(cos_g, cos_h, cos_exact, cos_iso, cos_tol, cos_out,
                           out);
    if (*example32) return do_example32(ex_json, ex_out, out);
    if (*invariants) return do_invariants(inv_g, inv_out, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Argument ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace specjoin::cli
