#include <bandlim_cli/commands.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace bandlim::cli {

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value == 0.0 ? 0.0 : value);  // no "-0"
  return buf;
}

namespace {

double decay_diagnostic(long k, double a) {
  return std::log(std::pow(std::abs(static_cast<double>(k)), 2.49) * std::abs(a) + 1.0);
}

}  // namespace

void cmd_coeffs(const RunConfig& config, std::ostream& out) {
  const BandConfig band = config.band();
  const QuadratureSpec quad = config.quadrature();
  const int L = config.max_L();
  const CoefficientSeries classical = kernel_window(Method::classical, config.t, L, band, quad);
  const CoefficientSeries d1 = kernel_window(Method::d1, config.t, L, band, quad);
  SpliceOptions options;
  options.pin_q_slope_at_pi = config.pin_q_slope;
  const CoefficientSeries general = coefficient_window_general(config.t, L, band, quad, options);

  out << "k,a_classical,a_d1,a_general,D_tilde,D_bar,D,L_k,M_k\n";
  for (long k = classical.first(); k <= classical.last(); ++k) {
    const double a0 = classical.at(k);
    const double a1 = d1.at(k);
    const double a2 = general.at(k);
    out << k << ',' << format_real(a0) << ',' << format_real(a1) << ',' << format_real(a2) << ','
        << format_real(a0 - a2) << ',' << format_real(a0 - a1) << ',' << format_real(a1 - a2) << ','
        << format_real(decay_diagnostic(k, a1)) << ',' << format_real(decay_diagnostic(k, a2)) << '\n';
  }
}

void cmd_sweep(const RunConfig& config, std::ostream& out) {
  const BandConfig band = config.band();
  const QuadratureSpec quad = config.quadrature();
  config.max_L();
  const SignalSpec signal = parse_signal(config.signal, config.omega);
  const std::vector<ErrorRow> rows =
      truncation_sweep(signal, config.t, config.Ls, config.methods, band, quad, config.compensated);

  out << "method,t,L,reconstructed,truth,abs_error";
  if (signal.complex_valued) out << ",reconstructed_im,truth_im";
  out << '\n';
  for (const ErrorRow& row : rows) {
    out << to_string(row.method) << ',' << format_real(row.t) << ',' << row.L << ','
        << format_real(row.reconstructed.real()) << ',' << format_real(row.truth.real()) << ','
        << format_real(row.abs_error);
    if (signal.complex_valued) {
      out << ',' << format_real(row.reconstructed.imag()) << ',' << format_real(row.truth.imag());
    }
    out << '\n';
  }
}

bool cmd_seams(const RunConfig& config, std::ostream& out) {
  const BandConfig band = config.band();
  if (config.points < 1) throw UsageError("--points must be >= 1");
  SpliceOptions options;
  options.pin_q_slope_at_pi = config.pin_q_slope;

  if (!config.splice_dump.empty()) {
    std::ofstream dump(config.splice_dump);
    if (!dump) throw UsageError("cannot write splice dump to " + config.splice_dump);
    write_splice_csv(dump, build_splice(locate(config.t, band.N).t_reduced, band.d, band.N, options));
  }

  out << "tau,t_reduced,g,d";
  for (int j = 0; j < band.d; ++j) out << ",seam_" << j;
  for (int j = 0; j < band.d; ++j) out << ",period_" << j;
  out << ",agreement,max\n";

  bool ok = true;
  for (int i = 0; i < config.points; ++i) {
    const double tau = static_cast<double>(i) / config.points;
    SplicePolynomials splice = build_splice(band.N + tau, band.d, band.N, options);
    if (config.corrupt) splice.q_coeffs.back() += 1e-3;
    const std::vector<double> residuals = seam_residuals(splice);
    const double worst = *std::max_element(residuals.begin(), residuals.end());
    ok = ok && worst < kSeamTolerance;
    out << format_real(tau) << ',' << format_real(splice.t_reduced) << ',' << format_real(splice.g) << ','
        << band.d;
    for (const double r : residuals) out << ',' << format_real(r);
    out << ',' << format_real(worst) << '\n';
  }
  return ok;
}

void cmd_interp(const RunConfig& config, std::ostream& out) {
  const BandConfig band = config.band();
  const QuadratureSpec quad = config.quadrature();
  const int max_L = config.max_L();
  const SignalSpec signal = parse_signal(config.signal, config.omega);

  out << "method,t,L,value";
  if (signal.complex_valued) out << ",value_im";
  out << '\n';
  for (const Method method : config.methods) {
    const CoefficientSeries weights = kernel_window(method, config.t, max_L, band, quad);
    for (const int L : config.Ls) {
      const std::complex<double> value = reconstruct(signal, weights, L, config.compensated);
      out << to_string(method) << ',' << format_real(config.t) << ',' << L << ',' << format_real(value.real());
      if (signal.complex_valued) out << ',' << format_real(value.imag());
      out << '\n';
    }
  }
}

}  // namespace bandlim::cli
