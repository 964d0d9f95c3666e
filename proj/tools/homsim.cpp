// homsim: four-photon Hong-Ou-Mandel interference simulator.
//
// Subcommands:
//   pattern   compute one coincidence pattern, write <out>.csv + <out>.meta.json
//   figure2   write the three standard JSAs and the nine four-photon panels
//   check     run the validation suite (kernel engine vs oracle and friends)
//   terms     print the signed term expansion of a detection scheme

#include <cstdio>
#include <filesystem>
#include <numbers>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "homsim/analysis.hpp"
#include "homsim/checks.hpp"
#include "homsim/engine.hpp"
#include "homsim/io.hpp"
#include "homsim/oracle.hpp"
#include "homsim/twophoton.hpp"
#include "homsim/version.hpp"

namespace {

using namespace homsim;

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("sha256 init failed");
  }
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    if (in.gcount() > 0)
      EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return out;
}

struct JsaCliOptions {
  double rho = 0.0;
  double lambda_nm = 1584.0;
  double fwhm_nm = 2.0;
  double sigma = 0.0;  // rad/ps; 0 = derive from lambda/fwhm
  std::string jsa_file;
  int grid_points = 49;
  double span = 4.0;
};

struct BuiltJsa {
  SampledJsa jsa;
  JsaInfo info;
  double sigma = 0.0;
  double span_sigmas = std::numeric_limits<double>::quiet_NaN();
};

BuiltJsa build_jsa(const JsaCliOptions& o) {
  if (!o.jsa_file.empty()) {
    std::string base = o.jsa_file;
    const std::string suffix = ".jsa.csv";
    if (base.size() > suffix.size() &&
        base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0)
      base.resize(base.size() - suffix.size());
    LoadedJsa loaded = load_jsa(base);
    BuiltJsa out{normalize(loaded.jsa), {}, loaded.sigma_rad_per_ps, {}};
    out.info.source = "file";
    out.info.file = base + ".jsa.csv";
    out.info.sha256 = sha256_file(base + ".jsa.csv");
    return out;
  }
  const double sigma =
      o.sigma > 0.0 ? o.sigma : gaussian_sigma_from_fwhm(o.lambda_nm, o.fwhm_nm);
  const FrequencyGrid grid = make_grid(
      sigma, o.span, o.grid_points,
      2.0 * std::numbers::pi * kSpeedOfLightNmPerPs / o.lambda_nm);
  BuiltJsa out{gaussian_jsa({sigma, o.rho, o.lambda_nm}, grid), {}, sigma, o.span};
  out.info.source = "gaussian";
  out.info.rho = o.rho;
  out.info.sigma_rad_per_ps = sigma;
  out.info.lambda_nm = o.lambda_nm;
  out.info.fwhm_nm = o.sigma > 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                   : o.fwhm_nm;
  return out;
}

InterferencePattern compute_pattern(const BuiltJsa& b, Scheme scheme,
                                    const std::vector<double>& taus,
                                    const std::string& path, int oracle_cap,
                                    const EngineOptions& opts) {
  InterferencePattern p;
  if (!is_four_photon(scheme)) {
    p = two_photon_pattern(b.jsa, scheme, taus, opts);
  } else if (path == "kernel") {
    p = pattern(b.jsa, scheme, taus, opts);
  } else if (path == "eq8") {
    if (scheme != Scheme::TwoTwo)
      throw CLI::ValidationError("--path eq8 applies to scheme 2/2 only");
    p = pattern_symmetric_22(b.jsa, taus, opts);
  } else if (path == "oracle") {
    p = oracle_pattern(b.jsa, scheme, taus, oracle_cap);
  } else {
    throw CLI::ValidationError("unknown --path '" + path + "'");
  }
  p.meta.jsa = b.info;
  p.meta.span_sigmas = b.span_sigmas;
  return p;
}

int cmd_pattern(const JsaCliOptions& jsa_opts, const std::string& scheme_label_in,
                double tau_min, double tau_max, int tau_points,
                const std::string& path, int oracle_cap, const std::string& out,
                int threads) {
  const Scheme scheme = parse_scheme(scheme_label_in);
  EngineOptions opts;
  opts.threads = threads;
  const BuiltJsa b = build_jsa(jsa_opts);
  const auto taus = linspace(tau_min, tau_max, tau_points);
  const InterferencePattern p =
      compute_pattern(b, scheme, taus, path, oracle_cap, opts);
  write_pattern_csv(out + ".csv", p);
  write_pattern_meta(out + ".meta.json", p);
  std::cout << "wrote " << out << ".csv (" << tau_points << " points, scheme "
            << scheme_label(scheme) << ", baseline " << format_double(p.baseline)
            << ")\n";
  return 0;
}

int cmd_figure2(const std::string& out_dir, double rho_neg, double rho_pos,
                double lambda_nm, double fwhm_nm, int grid_points, double span,
                double tau_max, int tau_points, int threads) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  const double sigma = gaussian_sigma_from_fwhm(lambda_nm, fwhm_nm);
  const auto taus = linspace(0.0, tau_max, tau_points);
  EngineOptions opts;
  opts.threads = threads;

  const std::vector<std::pair<char, double>> classes = {
      {'a', 0.0}, {'b', rho_neg}, {'c', rho_pos}};
  const std::vector<std::pair<int, Scheme>> rows = {
      {2, Scheme::TwoTwo}, {3, Scheme::ThreeOne}, {4, Scheme::FourZero}};

  nlohmann::json index;
  for (const auto& [cls, rho] : classes) {
    JsaCliOptions jo;
    jo.rho = rho;
    jo.lambda_nm = lambda_nm;
    jo.fwhm_nm = fwhm_nm;
    jo.grid_points = grid_points;
    jo.span = span;
    const BuiltJsa b = build_jsa(jo);

    const std::string jsa_name = std::string(1, cls) + "1";
    const std::string jsa_base = (fs::path(out_dir) / jsa_name).string();
    save_jsa(jsa_base, b.jsa, lambda_nm, sigma);
    index[jsa_name] = {{"file", jsa_name + ".jsa.csv"},
                       {"kind", "jsa"},
                       {"rho", rho}};

    for (const auto& [row, scheme] : rows) {
      const std::string panel = std::string(1, cls) + std::to_string(row);
      InterferencePattern p =
          compute_pattern(b, scheme, taus, "kernel", 16, opts);
      const std::string base = (fs::path(out_dir) / panel).string();
      write_pattern_csv(base + ".csv", p);
      write_pattern_meta(base + ".meta.json", p);
      const MonotonicityReport report = classify_monotonic(p);
      index[panel] = {{"file", panel + ".csv"},
                      {"kind", "pattern"},
                      {"scheme", scheme_label(scheme)},
                      {"rho", rho},
                      {"class", monotonicity_label(report.cls)}};
      std::cout << panel << ": scheme " << scheme_label(scheme) << ", rho " << rho
                << " -> " << monotonicity_label(report.cls) << "\n";
    }
  }
  std::ofstream(fs::path(out_dir) / "index.json") << index.dump(2) << "\n";
  std::cout << "wrote " << out_dir << " (3 JSA grids, 9 pattern CSVs, index.json)\n";
  return 0;
}

int cmd_check(int grid_points, int eq8_points, double span, double tau_max,
              int tau_points, const std::string& report_path, int threads) {
  CheckOptions opts;
  opts.n_points = grid_points;
  opts.eq8_n_points = eq8_points;
  opts.span_sigmas = span;
  opts.tau_max = tau_max;
  opts.tau_points = tau_points;
  opts.threads = threads;
  const auto results = run_standard_checks(opts);
  double worst = 0.0;
  for (const auto& r : results) {
    std::printf("%-44s %s  max_dev=%.3e  threshold=%.1e\n", r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.max_deviation, r.threshold);
    if (r.name.find("residual") == std::string::npos)
      worst = std::max(worst, r.max_deviation);
  }
  if (!report_path.empty()) {
    std::ofstream(report_path) << checks_to_json(results) << "\n";
    std::cout << "report written to " << report_path << "\n";
  }
  const bool ok = all_passed(results);
  std::cout << (ok ? "all checks passed" : "CHECKS FAILED")
            << " (worst pattern deviation " << format_double(worst) << ")\n";
  return ok ? 0 : 1;
}

int cmd_terms(const std::string& scheme_label_in) {
  const Scheme scheme = parse_scheme(scheme_label_in);
  const TermTable table = table_for(scheme);
  std::cout << "scheme " << scheme_label(scheme) << ", prefactor 1/"
            << static_cast<long>(1.0 / table.prefactor + 0.5) << "\n";
  std::cout << "interference amplitude:\n";
  for (const auto& line : render_term_table(table)) std::cout << "  " << line << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homsim: multi-photon Hong-Ou-Mandel interference simulator"};
  app.set_version_flag("--version", std::string(homsim::kVersion));
  app.set_config("--config", "homsim.toml",
                 "read defaults from a key=value config file");
  app.require_subcommand(1);

  int threads = 0;
  auto add_threads_option = [&threads](CLI::App* cmd) {
    cmd->add_option("-t,--threads", threads, "worker thread cap (0 = auto)")
        ->envname("HOMSIM_THREADS");
  };
  add_threads_option(&app);

  // pattern
  auto* sp = app.add_subcommand("pattern", "compute one interference pattern");
  add_threads_option(sp);
  JsaCliOptions jo;
  std::string scheme_str;
  double tau_min = 0.0, tau_max = 10.0;
  int tau_points = 201;
  std::string path = "kernel";
  int oracle_cap = 16;
  std::string out = "pattern";
  sp->add_option("--scheme", scheme_str, "detection scheme: 2/2, 3/1, 4/0, 1/1, 2/0")
      ->required();
  auto* rho_opt = sp->add_option("--rho", jo.rho, "JSA correlation coefficient");
  auto* lam_opt = sp->add_option("--lambda", jo.lambda_nm, "center wavelength (nm)");
  auto* fwhm_opt = sp->add_option("--fwhm", jo.fwhm_nm, "photon bandwidth FWHM (nm)");
  auto* sig_opt = sp->add_option("--sigma", jo.sigma,
                                 "marginal spectral std (rad/ps); overrides --fwhm");
  auto* file_opt =
      sp->add_option("--jsa-file", jo.jsa_file, "load the JSA from <base>.jsa.csv");
  file_opt->excludes(rho_opt)->excludes(lam_opt)->excludes(fwhm_opt)->excludes(sig_opt);
  sp->add_option("--grid-points", jo.grid_points, "frequency grid points per axis");
  sp->add_option("--span", jo.span, "grid half-width in units of sigma");
  sp->add_option("--tau-min", tau_min, "first delay (ps)");
  sp->add_option("--tau-max", tau_max, "last delay (ps)");
  sp->add_option("--tau-points", tau_points, "number of delay samples")
      ->check(CLI::PositiveNumber);
  sp->add_option("--path", path, "engine path: kernel, eq8 or oracle")
      ->check(CLI::IsMember({"kernel", "eq8", "oracle"}));
  sp->add_option("--oracle-cap", oracle_cap, "grid cap for --path oracle");
  sp->add_option("-o,--out", out, "output prefix (<out>.csv, <out>.meta.json)");

  // figure2
  auto* sf = app.add_subcommand(
      "figure2", "standard panel sweep: three JSA classes x three schemes");
  add_threads_option(sf);
  std::string out_dir = "figure2";
  double rho_neg = -0.8, rho_pos = 0.98;
  double f2_lambda = 1584.0, f2_fwhm = 2.0, f2_span = 4.0, f2_tau_max = 10.0;
  int f2_points = 49, f2_tau_points = 201;
  sf->add_option("--out-dir", out_dir, "output directory");
  sf->add_option("--rho-neg", rho_neg, "negatively-correlated class rho");
  sf->add_option("--rho-pos", rho_pos, "positively-correlated class rho");
  sf->add_option("--lambda", f2_lambda, "center wavelength (nm)");
  sf->add_option("--fwhm", f2_fwhm, "photon bandwidth FWHM (nm)");
  sf->add_option("--grid-points", f2_points, "frequency grid points per axis");
  sf->add_option("--span", f2_span, "grid half-width in units of sigma");
  sf->add_option("--tau-max", f2_tau_max, "last delay (ps)");
  sf->add_option("--tau-points", f2_tau_points, "number of delay samples");

  // check
  auto* sc = app.add_subcommand("check", "run the validation suite");
  add_threads_option(sc);
  int ck_points = 8, ck_eq8 = 16, ck_tau_points = 21;
  double ck_span = 4.0, ck_tau_max = 10.0;
  std::string report_path;
  sc->add_option("--grid-points", ck_points, "grid for engine-vs-oracle");
  sc->add_option("--eq8-points", ck_eq8, "grid for the cosine-expansion check");
  sc->add_option("--span", ck_span, "grid half-width in units of sigma");
  sc->add_option("--tau-max", ck_tau_max, "last delay (ps)");
  sc->add_option("--tau-points", ck_tau_points, "number of delay samples");
  sc->add_option("--report", report_path, "write a JSON report here");

  // terms
  auto* st = app.add_subcommand("terms", "print the signed term expansion");
  std::string terms_scheme;
  st->add_option("--scheme", terms_scheme, "detection scheme")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sp->parsed())
      return cmd_pattern(jo, scheme_str, tau_min, tau_max, tau_points, path,
                         oracle_cap, out, threads);
    if (sf->parsed())
      return cmd_figure2(out_dir, rho_neg, rho_pos, f2_lambda, f2_fwhm, f2_points,
                         f2_span, f2_tau_max, f2_tau_points, threads);
    if (sc->parsed())
      return cmd_check(ck_points, ck_eq8, ck_span, ck_tau_max, ck_tau_points,
                       report_path, threads);
    if (st->parsed()) return cmd_terms(terms_scheme);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
