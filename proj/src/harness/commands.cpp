#include "cplab/harness/commands.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cplab/contour/contour.hpp"
#include "cplab/contour/identities.hpp"
#include "cplab/contour/limit_scan.hpp"
#include "cplab/ensemble/enumeration.hpp"
#include "cplab/ensemble/monte_carlo.hpp"
#include "cplab/kernels/kernels.hpp"
#include "cplab/recursion/generating_function.hpp"
#include "cplab/recursion/second_moment.hpp"
#include "cplab/recursion/table_cache.hpp"

namespace cplab::harness {
namespace {

// Exact value of a decimal or "p/q" argument, rounded once.
BigFloat parse_big(const std::string& text) { return BigFloat(parse_rational(text)); }

std::string fmt(const BigFloat& x) { return x.to_string(20); }

nlohmann::json ensemble_json(const EnsembleSpec& e) {
  return {{"variant", to_string(e.variant())}, {"b", rational_to_string(e.b())}};
}

void require_pair(const std::string& mu, const std::string& nu) {
  if (mu.empty() != nu.empty()) throw std::invalid_argument("--mu and --nu must be given together");
}

void check_sizes(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("n and m must be non-negative");
}

}  // namespace

EnsembleSpec make_ensemble(const std::string& variant, const std::string& b) {
  Variant v = parse_variant(variant);
  if (b.empty()) return EnsembleSpec::gaussian(v);
  return {v, parse_rational(b)};
}

CommandOutcome run_exact(const ExactParams& p, const CommonParams& common) {
  check_sizes(p.n, p.m);
  require_pair(p.mu, p.nu);
  EnsembleSpec ens = make_ensemble(p.ensemble, p.b);
  CommandOutcome out;
  BivariatePolynomial f;
  std::string cache_state = "off";
  if (!common.cache_dir.empty()) {
    bool hit = false;
    MomentTable table = TableCache(common.cache_dir).get_or_build(ens, p.n, p.m, &hit);
    f = table.at(p.n, p.m);
    cache_state = hit ? "hit" : "miss";
  } else {
    f = second_moment(ens, p.n, p.m);
  }
  out.report = {{"ensemble", ensemble_json(ens)}, {"n", p.n},       {"m", p.m},
                {"polynomial", polynomial_to_json(f)}, {"text", f.to_string()}, {"cache", cache_state}};
  if (p.cross_check && p.n >= p.m) {
    bool same = second_moment_exact_alt(ens, p.n, p.m) == f;
    out.report["cross_check"] = same ? "equal" : "differ";
    if (!same) out.failures.push_back({"cross_check", "m- and n-direction recursions differ"});
  }
  if (!p.mu.empty()) {
    Rational v = f.eval(parse_rational(p.mu), parse_rational(p.nu));
    out.report["mu"] = p.mu;
    out.report["nu"] = p.nu;
    out.report["value"] = rational_to_string(v);
  }
  std::ostringstream text;
  text << "f(" << p.n << "," << p.m << ") = " << f.to_string() << "\n" << out.report.dump() << "\n";
  out.text = text.str();
  return out;
}

CommandOutcome run_gf_check(const GfCheckParams& p, const CommonParams&) {
  if (p.alpha < 0 || p.mmax < 0) throw std::invalid_argument("alpha and mmax must be non-negative");
  require_pair(p.mu, p.nu);
  EnsembleSpec ens = make_ensemble(p.ensemble, p.b);
  const bool pointwise = !p.mu.empty();
  Rational mu = pointwise ? parse_rational(p.mu) : Rational(0);
  Rational nu = pointwise ? parse_rational(p.nu) : Rational(0);

  auto closed = gf_coeffs_closed(ens, p.alpha, p.mmax);
  auto recursive = gf_coeffs_recursive(ens, p.alpha, p.mmax);
  std::optional<MomentTable> table;
  if (p.with_table) table = MomentTable::build(ens, p.mmax + p.alpha, p.mmax);

  CommandOutcome out;
  int equal = 0;
  nlohmann::json mismatches = nlohmann::json::array();
  for (int m = 0; m <= p.mmax; ++m) {
    std::vector<BivariatePolynomial> routes{closed[m], recursive[m]};
    if (table) {
      Rational scale = Rational(1) / Rational(factorial(m + p.alpha) * factorial(m));
      routes.push_back(table->at(m + p.alpha, m) * scale);
    }
    bool ok = true;
    for (std::size_t r = 1; r < routes.size(); ++r) {
      ok = ok && (pointwise ? routes[r].eval(mu, nu) == routes[0].eval(mu, nu) : routes[r] == routes[0]);
    }
    if (ok) {
      ++equal;
    } else {
      mismatches.push_back(m);
      out.failures.push_back({"gf_coefficient", "routes differ at m = " + std::to_string(m)});
    }
  }
  const int total = p.mmax + 1;
  out.report = {{"ensemble", ensemble_json(ens)},
                {"alpha", p.alpha},
                {"mmax", p.mmax},
                {"routes", p.with_table ? 3 : 2},
                {"pointwise", pointwise},
                {"equal", equal},
                {"mismatches", mismatches}};
  std::ostringstream text;
  if (out.passed()) {
    text << "PASS, " << total << " coefficients equal\n";
  } else {
    text << "FAIL, " << (total - equal) << " of " << total << " coefficients differ\n";
  }
  out.text = text.str();
  return out;
}

CommandOutcome run_contour(const ContourParams& p, const CommonParams& common) {
  EnsembleSpec ens = make_ensemble(p.ensemble, p.b);
  IntegrandRoute route;
  if (p.route == "auto") {
    route = IntegrandRoute::Auto;
  } else if (p.route == "series") {
    route = IntegrandRoute::Series;
  } else if (p.route == "bessel") {
    route = IntegrandRoute::Bessel;
  } else {
    throw std::invalid_argument("unknown route '" + p.route + "'");
  }
  ContourSpec spec;
  spec.n = p.n;
  spec.m = p.m;
  spec.radius = parse_big(p.radius);
  spec.tolerance = p.tolerance;
  spec.threads = common.threads;
  spec.validate();

  const Rational mu = parse_rational(p.mu);
  const Rational nu = parse_rational(p.nu);
  ContourResult r = contour_integral(spec, BigFloat(mu), BigFloat(nu), ens, route);
  Rational exact_q = second_moment_exact(ens, p.n, p.m).eval(mu, nu) / Rational(factorial(p.n) * factorial(p.m));
  BigFloat exact(exact_q);
  double rel = relative_difference(r.value, exact).to_double();

  CommandOutcome out;
  out.report = {{"ensemble", ensemble_json(ens)},
                {"n", p.n},
                {"m", p.m},
                {"mu", p.mu},
                {"nu", p.nu},
                {"radius", p.radius},
                {"contour_value", fmt(r.value)},
                {"exact_value", fmt(exact)},
                {"rel_error", rel},
                {"imag_residual", r.imag_residual.to_double()},
                {"nodes_used", r.nodes_used},
                {"precision_bits", r.precision_bits}};
  if (!(rel <= p.max_rel_error)) {
    out.failures.push_back({"contour_vs_exact", "relative error " + std::to_string(rel) + " exceeds " +
                                                    std::to_string(p.max_rel_error)});
  }
  out.text = out.report.dump(2) + "\n";
  return out;
}

CommandOutcome run_mc(const McParams& p, const CommonParams& common) {
  SampleConfig cfg;
  cfg.n = p.n;
  cfg.m = p.m;
  cfg.variant = parse_variant(p.ensemble);
  cfg.distribution = parse_distribution(p.distribution);
  cfg.sample_count = p.samples;
  cfg.seed = p.seed;
  cfg.threads = common.threads;
  cfg.validate();
  const Rational mu = parse_rational(p.mu);
  const Rational nu = parse_rational(p.nu);
  BigFloat exact(second_moment_exact(cfg.entry().ensemble(), p.n, p.m).eval(mu, nu));
  McResult r = mc_second_moment(cfg, BigFloat(mu), BigFloat(nu));

  CommandOutcome out;
  out.report = mc_report(cfg, BigFloat(mu), BigFloat(nu), r, exact);
  const auto& z = out.report["z_score"];
  if (z.is_null() || std::abs(z.get<double>()) > p.z_max) {
    out.failures.push_back({"mc_vs_exact", "z-score " + z.dump() + " beyond " + std::to_string(p.z_max)});
  }
  out.text = out.report.dump(2) + "\n";
  return out;
}

CommandOutcome run_brute(const BruteParams& p, const CommonParams&) {
  require_pair(p.mu, p.nu);
  Variant v = parse_variant(p.ensemble);
  EnsembleSpec ens = EntryDistribution(DistributionKind::Rademacher, v).ensemble();
  BivariatePolynomial brute = brute_force_polynomial(p.n, p.m, v);
  BivariatePolynomial exact = second_moment_exact(ens, p.n, p.m);

  CommandOutcome out;
  out.report = {{"ensemble", ensemble_json(ens)},
                {"n", p.n},
                {"m", p.m},
                {"states", std::uint64_t{1} << ((v == Variant::Complex ? 2 : 1) * p.n * p.m)},
                {"polynomial", polynomial_to_json(brute)},
                {"text", brute.to_string()},
                {"equals_recursion", brute == exact}};
  if (!p.mu.empty()) {
    Rational mu = parse_rational(p.mu);
    Rational nu = parse_rational(p.nu);
    out.report["value"] = rational_to_string(brute.eval(mu, nu));
    out.report["recursion_value"] = rational_to_string(exact.eval(mu, nu));
  }
  if (!(brute == exact)) {
    out.failures.push_back({"brute_vs_recursion", "enumeration differs from the recursion with b = " +
                                                      rational_to_string(ens.b())});
  }
  out.text = "E = " + brute.to_string() + "\n" + out.report.dump() + "\n";
  return out;
}

CommandOutcome run_limits(const LimitsParams& p, const CommonParams& common) {
  if (p.Ns.empty()) throw std::invalid_argument("--N needs at least one size");
  RegimeConfig cfg;
  cfg.regime = parse_regime(p.regime);
  cfg.xi = parse_big(p.xi);
  cfg.mu = parse_big(p.mu);
  cfg.nu = parse_big(p.nu);
  cfg.alpha = p.alpha;
  cfg.ensemble = make_ensemble(p.ensemble, p.b);
  if (p.method == "contour") {
    cfg.method = ScanMethod::Contour;
  } else if (p.method == "recursion") {
    cfg.method = ScanMethod::Recursion;
  } else {
    throw std::invalid_argument("unknown method '" + p.method + "'");
  }
  cfg.tolerance = p.tolerance;
  cfg.validate();

  std::vector<ScanRow> rows = limit_scan(cfg, p.Ns, common.threads);
  CommandOutcome out;
  std::ostringstream csv;
  write_scan_csv(csv, rows);
  out.csv = csv.str();
  out.text = out.csv;

  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& r : rows) {
    jrows.push_back({{"N", r.N}, {"scaled_value", fmt(r.scaled_value)}, {"abs_error", r.abs_error.to_double()}});
  }
  nlohmann::json ratios = nlohmann::json::array();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double prev = rows[i - 1].abs_error.to_double();
    double cur = rows[i].abs_error.to_double();
    double ratio = cur > 0 ? prev / cur : INFINITY;
    ratios.push_back(std::isfinite(ratio) ? nlohmann::json(ratio) : nlohmann::json(nullptr));
    if (p.require_monotone && !(cur < prev)) {
      out.failures.push_back({"monotone", "error does not decrease from N = " + std::to_string(rows[i - 1].N) +
                                              " to N = " + std::to_string(rows[i].N)});
    }
    if (p.min_ratio >= 0 && !(ratio >= p.min_ratio)) {
      out.failures.push_back({"min_ratio", "ratio " + std::to_string(ratio) + " at N = " + std::to_string(rows[i].N)});
    }
    if (p.max_ratio >= 0 && !(ratio <= p.max_ratio)) {
      out.failures.push_back({"max_ratio", "ratio " + std::to_string(ratio) + " at N = " + std::to_string(rows[i].N)});
    }
  }
  const BigFloat limit = predicted_limit(cfg);
  double final_rel = (rows.back().abs_error / abs(limit)).to_double();
  if (p.max_final_rel_error >= 0 && !(final_rel <= p.max_final_rel_error)) {
    out.failures.push_back({"final_error", "relative error " + std::to_string(final_rel) + " at N = " +
                                               std::to_string(rows.back().N)});
  }
  out.report = {{"regime", p.regime},       {"ensemble", ensemble_json(cfg.ensemble)},
                {"alpha", p.alpha},         {"xi", p.xi},
                {"mu", p.mu},               {"nu", p.nu},
                {"method", p.method},       {"predicted_limit", fmt(limit)},
                {"rows", jrows},            {"error_ratios", ratios},
                {"final_rel_error", final_rel}};
  return out;
}

CommandOutcome run_kernels(const KernelsParams& p, const CommonParams&) {
  KernelKind kind = parse_kernel_kind(p.kernel);
  if (p.points.empty()) throw std::invalid_argument("--points needs at least one value");
  std::vector<BigFloat> pts;
  for (const auto& s : p.points) pts.push_back(parse_big(s));
  const BigFloat h = parse_big(p.h);
  const bool check = p.check_d && is_differentiated(kind);
  const Regime regime = regime_of(kind);

  CommandOutcome out;
  std::ostringstream csv;
  csv << "kernel,alpha,x,y,value,d_numeric,d_error\n";
  int checked = 0;
  double worst = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      KernelPoint kp;
      kp.kind = kind;
      kp.x = pts[i];
      kp.y = pts[j];
      kp.alpha = p.alpha;
      BigFloat value = kernel_eval(kp);
      csv << to_string(kind) << ',' << p.alpha << ',' << p.points[i] << ',' << p.points[j] << ',' << fmt(value)
          << ',';
      bool usable = check && i != j && 4 * h <= abs(pts[i] - pts[j]) &&
                    (regime != Regime::Hard || (pts[i] > 2 * h && pts[j] > 2 * h));
      if (usable) {
        try {
          BigFloat d = apply_D_numeric(regime, pts[i], pts[j], h, p.alpha);
          double err = abs(value - d).to_double();
          worst = std::max(worst, err);
          ++checked;
          csv << fmt(d) << ',' << err;
          if (!(err <= p.d_tolerance)) {
            out.failures.push_back({"d_operator", "x = " + p.points[i] + ", y = " + p.points[j] +
                                                      ": error " + std::to_string(err)});
          }
        } catch (const StepTooLarge& e) {
          out.failures.push_back({"d_operator", e.what()});
          csv << ',';
        }
      } else {
        csv << ',';
      }
      csv << '\n';
    }
  }
  out.csv = csv.str();
  out.text = out.csv;
  out.report = {{"kernel", to_string(kind)}, {"alpha", p.alpha},       {"points", p.points},
                {"d_checked", checked},      {"d_max_error", worst},   {"d_tolerance", p.d_tolerance}};
  return out;
}

CommandOutcome run_identities(const IdentitiesParams& p, const CommonParams&) {
  const bool all = p.which == "all";
  if (!all && p.which != "bessel" && p.which != "laplace" && p.which != "airy") {
    throw std::invalid_argument("unknown identity set '" + p.which + "'");
  }
  CommandOutcome out;
  std::ostringstream csv;
  csv << "identity,parameters,quadrature,closed_form,rel_error,nodes_used\n";
  nlohmann::json rows = nlohmann::json::array();
  auto record = [&](const std::string& name, const std::string& params, const IdentityCheck& c, double tol) {
    double rel = c.rel_error().to_double();
    csv << name << ",\"" << params << "\"," << fmt(c.quadrature) << ',' << fmt(c.closed_form) << ',' << rel << ','
        << c.nodes_used << '\n';
    rows.push_back({{"identity", name}, {"parameters", params}, {"rel_error", rel}, {"tolerance", tol}});
    if (!(rel <= tol)) out.failures.push_back({name, params + ": relative error " + std::to_string(rel)});
  };
  const std::pair<const char*, const char*> bessel_pairs[] = {{"1", "2"}, {"1/2", "3"}, {"5/2", "7/10"}};
  if (all || p.which == "bessel") {
    for (int alpha = 0; alpha <= 2; ++alpha) {
      for (auto [mu, nu] : bessel_pairs) {
        auto c = bessel_product_identity_check(alpha, parse_big(mu), parse_big(nu));
        record("bessel_product", "alpha=" + std::to_string(alpha) + " mu=" + mu + " nu=" + nu, c,
               p.bessel_tolerance);
      }
    }
  }
  if (all || p.which == "laplace") {
    const std::pair<const char*, const char*> cases[] = {{"1", "1"}, {"2", "1"}, {"3/2", "5/2"}};
    for (auto [a, t] : cases) {
      record("laplace_sine", std::string("a=") + a + " t=" + t, laplace_sine_identity_check(parse_big(a), parse_big(t)),
             p.laplace_tolerance);
    }
  }
  if (all || p.which == "airy") {
    const std::pair<const char*, const char*> cases[] = {{"1/2", "-1/2"}, {"1", "1/5"}, {"-1", "-2"}};
    for (auto [mu, nu] : cases) {
      record("airy_integral", std::string("mu=") + mu + " nu=" + nu,
             airy_integral_identity_check(parse_big(mu), parse_big(nu)), p.airy_tolerance);
    }
  }
  out.csv = csv.str();
  out.text = out.csv;
  out.report = {{"which", p.which}, {"rows", rows}};
  return out;
}

}  // namespace cplab::harness
