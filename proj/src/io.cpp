#include "homsim/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "homsim/version.hpp"

namespace homsim {

namespace {

using nlohmann::json;

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double parse_double(std::string_view token, const std::string& context) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  if (first != last && *first == '+') ++first;  // from_chars rejects leading '+'
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw std::runtime_error("malformed number '" + std::string(token) + "' in " +
                             context);
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

void write_pattern_csv(const std::string& path, const InterferencePattern& p) {
  std::string out = "tau_ps,probability,normalized\n";
  for (std::size_t i = 0; i < p.taus.size(); ++i) {
    out += format_double(p.taus[i]);
    out += ',';
    out += format_double(p.values[i]);
    out += ',';
    out += format_double(p.values[i] / p.baseline);
    out += '\n';
  }
  write_file(path, out);
}

void write_pattern_meta(const std::string& path, const InterferencePattern& p) {
  json j;
  j["scheme"] = scheme_label(p.scheme);
  j["prefactor"] = prefactor(p.scheme);
  json jsa;
  jsa["source"] = p.meta.jsa.source.empty() ? "unknown" : p.meta.jsa.source;
  if (!std::isnan(p.meta.jsa.rho)) jsa["rho"] = p.meta.jsa.rho;
  if (!std::isnan(p.meta.jsa.sigma_rad_per_ps))
    jsa["sigma_rad_per_ps"] = p.meta.jsa.sigma_rad_per_ps;
  if (!std::isnan(p.meta.jsa.lambda_nm)) jsa["lambda_nm"] = p.meta.jsa.lambda_nm;
  if (!std::isnan(p.meta.jsa.fwhm_nm)) jsa["fwhm_nm"] = p.meta.jsa.fwhm_nm;
  if (!p.meta.jsa.file.empty()) jsa["file"] = p.meta.jsa.file;
  if (!p.meta.jsa.sha256.empty()) jsa["sha256"] = p.meta.jsa.sha256;
  j["jsa"] = jsa;
  json grid;
  grid["n"] = p.meta.grid_n;
  grid["h"] = p.meta.grid_h;
  if (!std::isnan(p.meta.span_sigmas)) grid["span"] = p.meta.span_sigmas;
  j["grid"] = grid;
  j["baseline"] = p.baseline;
  j["engine"] = json{{"path", p.meta.engine_path}};
  j["version"] = p.meta.version.empty() ? kVersion : p.meta.version;
  write_file(path, j.dump(2) + "\n");
}

std::string report_to_json(const MonotonicityReport& report) {
  json j;
  j["class"] = monotonicity_label(report.cls);
  j["extremum_taus"] = report.extremum_taus;
  j["tolerance_used"] = report.tolerance_used;
  return j.dump(2);
}

std::string checks_to_json(const std::vector<CheckResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["max_deviation"] = r.max_deviation;
    j["threshold"] = r.threshold;
    if (!r.note.empty()) j["note"] = r.note;
    arr.push_back(j);
  }
  json top;
  top["checks"] = arr;
  top["all_passed"] = all_passed(results);
  return top.dump(2);
}

std::string format_complex_literal(const std::complex<double>& v) {
  std::string s = format_double(v.real());
  if (v.imag() >= 0.0 || std::isnan(v.imag())) s += '+';
  s += format_double(v.imag());
  s += 'J';
  return s;
}

std::complex<double> parse_complex_literal(const std::string& token) {
  std::string t;
  t.reserve(token.size());
  for (char c : token)
    if (c != ' ' && c != '\t' && c != '\r') t += c;
  if (t.empty()) throw std::runtime_error("empty matrix entry");
  if (t.back() != 'J' && t.back() != 'j')
    return {parse_double(t, "matrix entry"), 0.0};
  // split re|im at the last +/- that is not an exponent sign
  const std::string body = t.substr(0, t.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    const char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos)
    throw std::runtime_error("malformed complex entry '" + token + "'");
  const double re = parse_double(std::string_view(body).substr(0, split),
                                 "complex real part");
  const double im = parse_double(std::string_view(body).substr(split),
                                 "complex imaginary part");
  return {re, im};
}

void save_jsa(const std::string& base_path, const SampledJsa& jsa,
              double center_wavelength_nm, double sigma_rad_per_ps) {
  const int n = jsa.grid.n_points;
  bool complex_entries = false;
  for (const auto& a : jsa.amplitudes)
    if (a.imag() != 0.0) {
      complex_entries = true;
      break;
    }
  std::string csv;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (k > 0) csv += ',';
      csv += complex_entries ? format_complex_literal(jsa.at(j, k))
                             : format_double(jsa.at(j, k).real());
    }
    csv += '\n';
  }
  write_file(base_path + ".jsa.csv", csv);

  json meta;
  meta["center_wavelength_nm"] = center_wavelength_nm;
  if (sigma_rad_per_ps > 0.0) meta["sigma_rad_per_ps"] = sigma_rad_per_ps;
  meta["spacing_rad_per_ps"] = jsa.grid.spacing;
  meta["n_points"] = n;
  write_file(base_path + ".jsa.json", meta.dump(2) + "\n");
}

LoadedJsa load_jsa(const std::string& base_path) {
  const std::string csv_path = base_path + ".jsa.csv";
  const std::string meta_path = base_path + ".jsa.json";

  json meta;
  try {
    meta = json::parse(read_file(meta_path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed sidecar " + meta_path + ": " + e.what());
  }
  if (!meta.contains("spacing_rad_per_ps") || !meta.contains("n_points"))
    throw std::runtime_error(meta_path +
                             ": missing spacing_rad_per_ps or n_points");
  const double spacing = meta["spacing_rad_per_ps"].get<double>();
  const int n_points = meta["n_points"].get<int>();
  const double lambda = meta.value("center_wavelength_nm", 0.0);
  const double sigma = meta.value("sigma_rad_per_ps", 0.0);
  if (!(spacing > 0.0)) throw std::runtime_error(meta_path + ": spacing must be > 0");

  std::vector<std::complex<double>> amps;
  std::istringstream in(read_file(csv_path));
  std::string line;
  int rows = 0;
  int cols = -1;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    int c = 0;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) comma = line.size();
      amps.push_back(parse_complex_literal(line.substr(pos, comma - pos)));
      ++c;
      pos = comma + 1;
      if (comma == line.size()) break;
    }
    if (cols < 0)
      cols = c;
    else if (c != cols)
      throw std::runtime_error(csv_path + ": ragged rows");
    ++rows;
  }
  if (rows != cols)
    throw std::runtime_error(csv_path + ": matrix must be square, got " +
                             std::to_string(rows) + " x " + std::to_string(cols));
  if (rows != n_points)
    throw std::runtime_error(csv_path + ": matrix size " + std::to_string(rows) +
                             " does not match sidecar n_points " +
                             std::to_string(n_points));

  const double center_omega =
      lambda > 0.0 ? 2.0 * std::numbers::pi * kSpeedOfLightNmPerPs / lambda : 0.0;
  FrequencyGrid grid{center_omega, spacing, n_points};
  SampledJsa jsa = [&] {
    try {
      return SampledJsa::create(grid, std::move(amps));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(csv_path + ": " + e.what());
    }
  }();
  return LoadedJsa{std::move(jsa), sigma, lambda};
}

}  // namespace homsim
