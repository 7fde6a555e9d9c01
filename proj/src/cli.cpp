#include "oscpoly/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "oscpoly/exactpoly.hpp"
#include "oscpoly/format.hpp"
#include "oscpoly/hankel.hpp"
#include "oscpoly/moments.hpp"
#include "oscpoly/orthopoly.hpp"
#include "oscpoly/quadrule.hpp"
#include "oscpoly/scan.hpp"
#include "oscpoly/types.hpp"

namespace oscpoly::cli {

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
  std::string format = "csv";
  std::string out;  // empty: stdout
  double tol_exist = 1e-8;
  double tol_zero = 1e-12;
  double cluster_tol = 1e-8;
};

hankel::Tolerances tols(const CommonOpts& c) { return {c.tol_exist, c.tol_zero}; }

// Output sink: --out PATH or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) {
      os_ = &std::cout;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw DomainError("cannot open output path '" + path + "'");
    os_ = &file_;
  }
  std::ostream& out() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
}

ordered_json json_or_inf(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : "-inf";
}

int do_moments(double omega, int kmax, const CommonOpts& c) {
  const auto seq = moments::moments(Frequency(omega), kmax);
  Sink sink(c.out);
  if (c.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (int k = 0; k <= kmax; ++k)
      rows.push_back({std::to_string(k), g17(seq.values[static_cast<size_t>(k)].real()),
                      g17(seq.values[static_cast<size_t>(k)].imag()),
                      moments::to_string(seq.method[static_cast<size_t>(k)])});
    write_csv(sink.out(), {"k", "re", "im", "method"}, rows);
  } else {
    ordered_json j;
    j["omega"] = omega;
    j["values"] = ordered_json::array();
    for (int k = 0; k <= kmax; ++k)
      j["values"].push_back({{"k", k},
                             {"re", seq.values[static_cast<size_t>(k)].real()},
                             {"im", seq.values[static_cast<size_t>(k)].imag()},
                             {"method", moments::to_string(seq.method[static_cast<size_t>(k)])}});
    sink.out() << j.dump(2) << "\n";
  }
  return 0;
}

int do_hankel(double omega, int n, const CommonOpts& c) {
  const auto rep = hankel::existence(Frequency(omega), n, tols(c));
  Sink sink(c.out);
  if (c.format == "csv") {
    write_csv(sink.out(),
              {"n", "omega", "delta_re", "delta_im", "abs_delta", "scale", "verdict", "cond"},
              {{std::to_string(n), g17(omega), g17(rep.delta.real()), g17(rep.delta.imag()),
                g17(std::abs(rep.delta)), g17(rep.scale), hankel::to_string(rep.verdict),
                g17(rep.condition_estimate)}});
  } else {
    ordered_json j;
    j["omega"] = omega;
    j["n"] = n;
    j["delta"] = {{"re", rep.delta.real()}, {"im", rep.delta.imag()}};
    j["abs_delta"] = std::abs(rep.delta);
    j["scale"] = rep.scale;
    j["verdict"] = hankel::to_string(rep.verdict);
    j["condition_estimate"] = json_or_inf(rep.condition_estimate);
    sink.out() << j.dump(2) << "\n";
  }
  return 0;
}

int do_poly(double omega, int n, const CommonOpts& c) {
  const auto p = orthopoly::monic_op(Frequency(omega), n, tols(c));
  Sink sink(c.out);
  if (c.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (int m = 0; m < n; ++m)
      rows.push_back({std::to_string(m), g17(p.coefficients[static_cast<size_t>(m)].real()),
                      g17(p.coefficients[static_cast<size_t>(m)].imag())});
    write_csv(sink.out(), {"m", "re", "im"}, rows);
  } else {
    ordered_json j;
    j["omega"] = omega;
    j["degree"] = n;
    j["coefficients"] = ordered_json::array();
    for (int m = 0; m < n; ++m)
      j["coefficients"].push_back({{"m", m},
                                   {"re", p.coefficients[static_cast<size_t>(m)].real()},
                                   {"im", p.coefficients[static_cast<size_t>(m)].imag()}});
    sink.out() << j.dump(2) << "\n";
  }
  return 0;
}

int do_rule(double omega, int n, const CommonOpts& c) {
  const auto rule = quadrule::gauss_rule(Frequency(omega), n, tols(c), c.cluster_tol);
  if (rule.verify_residual > 1e-8)
    std::cerr << "warning: moment residual " << g17(rule.verify_residual)
              << " on the degree n..2n-1 equations\n";
  Sink sink(c.out);
  if (c.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (size_t nu = 0; nu < rule.nodes.size(); ++nu)
      for (int k = 0; k < rule.multiplicities[nu]; ++k)
        rows.push_back({std::to_string(nu), std::to_string(rule.multiplicities[nu]),
                        std::to_string(k), g17(rule.nodes[nu].real()), g17(rule.nodes[nu].imag()),
                        g17(rule.weights[nu][static_cast<size_t>(k)].real()),
                        g17(rule.weights[nu][static_cast<size_t>(k)].imag())});
    write_csv(sink.out(),
              {"node", "mult", "k", "node_re", "node_im", "weight_re", "weight_im"}, rows);
  } else {
    ordered_json j;
    j["omega"] = omega;
    j["n"] = n;
    j["nodes"] = ordered_json::array();
    for (const auto& x : rule.nodes) j["nodes"].push_back({{"re", x.real()}, {"im", x.imag()}});
    j["multiplicities"] = rule.multiplicities;
    j["weights"] = ordered_json::array();
    for (const auto& wk : rule.weights) {
      ordered_json row = ordered_json::array();
      for (const auto& w : wk) row.push_back({{"re", w.real()}, {"im", w.imag()}});
      j["weights"].push_back(row);
    }
    j["verify_residual"] = rule.verify_residual;
    sink.out() << j.dump(2) << "\n";
  }
  return 0;
}

quadrule::IntegrandSpec make_integrand(const std::string& kind, int j,
                                       const std::vector<double>& coeffs, double c, double a) {
  if (kind == "monomial") return quadrule::IntegrandSpec::monomial(j);
  if (kind == "polynomial") return quadrule::IntegrandSpec::polynomial(coeffs);
  if (kind == "exponential") return quadrule::IntegrandSpec::exponential();
  if (kind == "cosine") return quadrule::IntegrandSpec::cosine(c);
  if (kind == "runge") return quadrule::IntegrandSpec::runge(a);
  throw DomainError("unknown integrand kind '" + kind + "'");
}

int do_integrate(double omega, int n, const quadrule::IntegrandSpec& f, const CommonOpts& c) {
  const auto rule = quadrule::gauss_rule(Frequency(omega), n, tols(c), c.cluster_tol);
  const Complex v = quadrule::integrate(rule, f);
  Sink sink(c.out);
  if (c.format == "csv") {
    write_csv(sink.out(), {"re", "im"}, {{g17(v.real()), g17(v.imag())}});
  } else {
    ordered_json j;
    j["re"] = v.real();
    j["im"] = v.imag();
    sink.out() << j.dump(2) << "\n";
  }
  return 0;
}

int do_certify(const std::string& t_str, int n, const CommonOpts& c) {
  const exactpoly::BigRational t = exactpoly::rational_from_string(t_str);
  const exactpoly::RationalPolynomial det = exactpoly::symbolic_hankel(n, t);
  const char* verdict =
      exactpoly::to_string(det.is_zero() ? exactpoly::Certificate::not_certified
                                         : exactpoly::Certificate::certified);
  Sink sink(c.out);
  if (c.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", std::to_string(n)});
    rows.push_back({"t", exactpoly::rational_to_string(t)});
    rows.push_back({"verdict", verdict});
    rows.push_back({"degree", std::to_string(det.degree())});
    for (int m = 0; m <= det.degree(); ++m)
      rows.push_back({"coeff_" + std::to_string(m), exactpoly::rational_to_string(det.coeff(m))});
    write_csv(sink.out(), {"field", "value"}, rows);
  } else {
    ordered_json j;
    j["n"] = n;
    j["t"] = exactpoly::rational_to_string(t);
    j["verdict"] = verdict;
    j["degree"] = det.degree();
    j["coefficients"] = ordered_json::array();
    for (int m = 0; m <= det.degree(); ++m)
      j["coefficients"].push_back(exactpoly::rational_to_string(det.coeff(m)));
    sink.out() << j.dump(2) << "\n";
  }
  return 0;
}

void write_plot_script(const std::string& csv_path, const std::vector<int>& ns) {
  const std::string gp_path = csv_path + ".gp";
  std::ofstream gp(gp_path, std::ios::binary);
  if (!gp) throw DomainError("cannot open output path '" + gp_path + "'");
  gp << "# |Delta_n(omega)| over the scan grid; load with: gnuplot -persist " << gp_path << "\n";
  gp << "set datafile separator \",\"\n";
  gp << "set logscale y\n";
  gp << "set xlabel \"omega\"\n";
  gp << "set ylabel \"|Delta_n(omega)|\"\n";
  gp << "set key top right\n";
  gp << "plot \\\n";
  for (size_t i = 0; i < ns.size(); ++i) {
    gp << "  \"" << csv_path << "\" skip 1 using ($1==" << ns[i]
       << " && strcol(4) eq \"grid\" ? $2 : NaN):3 with lines title \"n=" << ns[i] << "\"";
    gp << (i + 1 < ns.size() ? ", \\\n" : "\n");
  }
}

int do_scan(const ScanParams& params, bool plot, const CommonOpts& c) {
  if (plot && c.out.empty())
    throw DomainError("scan: --plot requires --out (the script references the data file)");
  const std::vector<ScanResult> results = scan_hankel(params);
  {
    Sink sink(c.out);
    if (c.format == "csv") {
      std::vector<std::vector<std::string>> rows;
      for (const ScanResult& res : results) {
        for (const ScanRow& r : res.rows)
          rows.push_back({std::to_string(res.n), g17(r.omega), g17(r.abs_delta), "grid"});
        for (const ScanMinimum& m : res.minima)
          rows.push_back({std::to_string(res.n), g17(m.omega), g17(m.abs_delta), "min"});
      }
      write_csv(sink.out(), {"n", "omega", "abs_delta", "kind"}, rows);
    } else {
      ordered_json j;
      j["series"] = ordered_json::array();
      for (const ScanResult& res : results) {
        ordered_json s;
        s["n"] = res.n;
        s["rows"] = ordered_json::array();
        for (const ScanRow& r : res.rows)
          s["rows"].push_back({{"omega", r.omega}, {"abs_delta", r.abs_delta}});
        s["minima"] = ordered_json::array();
        for (const ScanMinimum& m : res.minima)
          s["minima"].push_back({{"omega", m.omega}, {"abs_delta", m.abs_delta}});
        j["series"].push_back(s);
      }
      sink.out() << j.dump(2) << "\n";
    }
  }
  if (plot) write_plot_script(c.out, params.ns);
  return 0;
}

void add_common(CLI::App* sub, CommonOpts& c, bool with_cluster = false) {
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", c.out, "output path (default: stdout)");
  sub->add_option("--tol-exist", c.tol_exist, "existence threshold (scale-relative)")
      ->capture_default_str();
  sub->add_option("--tol-zero", c.tol_zero, "degeneracy threshold (scale-relative)")
      ->capture_default_str();
  if (with_cluster)
    sub->add_option("--cluster-tol", c.cluster_tol, "root clustering tolerance (absolute)")
        ->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"orthogonal polynomials and Gaussian quadrature for the weight e^{i w x} on [-1,1]"};
  app.require_subcommand(1);

  struct {
    double omega = 0.0;
    int kmax = 0;
    CommonOpts c;
  } mo;
  CLI::App* cmd_moments = app.add_subcommand("moments", "moments mu_0..mu_kmax");
  cmd_moments->add_option("--omega", mo.omega, "frequency (>= 0)")->required();
  cmd_moments->add_option("--kmax", mo.kmax, "highest moment index")->required();
  add_common(cmd_moments, mo.c);

  struct {
    double omega = 0.0;
    int n = 1;
    CommonOpts c;
  } ha;
  CLI::App* cmd_hankel = app.add_subcommand("hankel", "Hankel determinant and existence verdict");
  cmd_hankel->add_option("--omega", ha.omega, "frequency (> 0 for the scaled variant)")->required();
  cmd_hankel->add_option("--n", ha.n, "matrix order")->required();
  add_common(cmd_hankel, ha.c);

  struct {
    double omega = 0.0;
    int n = 1;
    CommonOpts c;
  } po;
  CLI::App* cmd_poly = app.add_subcommand("poly", "monic orthogonal polynomial coefficients");
  cmd_poly->add_option("--omega", po.omega, "frequency")->required();
  cmd_poly->add_option("--n", po.n, "degree")->required();
  add_common(cmd_poly, po.c);

  struct {
    double omega = 0.0;
    int n = 1;
    CommonOpts c;
  } ru;
  CLI::App* cmd_rule = app.add_subcommand("rule", "Gaussian quadrature nodes and weights");
  cmd_rule->add_option("--omega", ru.omega, "frequency")->required();
  cmd_rule->add_option("--n", ru.n, "number of points")->required();
  add_common(cmd_rule, ru.c, /*with_cluster=*/true);

  struct {
    double omega = 0.0;
    int n = 1;
    std::string kind = "monomial";
    int j = 0;
    std::vector<double> coeffs;
    double cosc = 1.0;
    double rungea = 25.0;
    CommonOpts c;
  } in;
  CLI::App* cmd_integrate =
      app.add_subcommand("integrate", "apply the n-point rule to a built-in integrand");
  cmd_integrate->add_option("--omega", in.omega, "frequency")->required();
  cmd_integrate->add_option("--n", in.n, "number of points")->required();
  cmd_integrate->add_option("--f", in.kind, "integrand kind")
      ->check(CLI::IsMember({"monomial", "polynomial", "exponential", "cosine", "runge"}))
      ->capture_default_str();
  cmd_integrate->add_option("--j", in.j, "monomial degree");
  cmd_integrate->add_option("--coeffs", in.coeffs, "polynomial coefficients c0,c1,...")
      ->delimiter(',');
  cmd_integrate->add_option("--c", in.cosc, "cosine frequency");
  cmd_integrate->add_option("--a", in.rungea, "runge parameter");
  add_common(cmd_integrate, in.c, /*with_cluster=*/true);

  struct {
    std::string t = "0/1";
    int n = 1;
    CommonOpts c;
  } ce;
  CLI::App* cmd_certify =
      app.add_subcommand("certify", "exact big-rational existence certificate for tan(w)/w = t");
  cmd_certify->add_option("--t", ce.t, "exact rational t as p/q")->required();
  cmd_certify->add_option("--n", ce.n, "degree")->required();
  add_common(cmd_certify, ce.c);

  struct {
    std::vector<int> ns;
    double omega_min = 0.0;
    double omega_max = 0.0;
    int points = 0;
    bool refine = false;
    bool plot = false;
    CommonOpts c;
  } sc;
  CLI::App* cmd_scan = app.add_subcommand("scan", "|Delta_n| over an omega grid");
  cmd_scan->add_option("--n", sc.ns, "degrees, comma-separated")->required()->delimiter(',');
  cmd_scan->add_option("--omega-min", sc.omega_min, "grid start (> 0)")->required();
  cmd_scan->add_option("--omega-max", sc.omega_max, "grid end")->required();
  cmd_scan->add_option("--points", sc.points, "grid size")->required();
  cmd_scan->add_flag("--refine", sc.refine, "golden-section refinement of interior minima");
  cmd_scan->add_flag("--plot", sc.plot, "also write a gnuplot script next to --out");
  add_common(cmd_scan, sc.c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_moments->parsed()) return do_moments(mo.omega, mo.kmax, mo.c);
    if (cmd_hankel->parsed()) return do_hankel(ha.omega, ha.n, ha.c);
    if (cmd_poly->parsed()) return do_poly(po.omega, po.n, po.c);
    if (cmd_rule->parsed()) return do_rule(ru.omega, ru.n, ru.c);
    if (cmd_integrate->parsed())
      return do_integrate(in.omega, in.n,
                          make_integrand(in.kind, in.j, in.coeffs, in.cosc, in.rungea), in.c);
    if (cmd_certify->parsed()) return do_certify(ce.t, ce.n, ce.c);
    if (cmd_scan->parsed()) {
      ScanParams params;
      params.ns = sc.ns;
      params.omega_min = sc.omega_min;
      params.omega_max = sc.omega_max;
      params.points = sc.points;
      params.refine = sc.refine;
      params.tol = tols(sc.c);
      return do_scan(params, sc.plot, sc.c);
    }
  } catch (const hankel::ExistenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}

}  // namespace oscpoly::cli
