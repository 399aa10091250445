#include <bandlim_cli/run_config.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace bandlim::cli {

namespace {

double parse_number(std::string_view text, std::string_view context) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw UsageError("cannot parse '" + std::string(text) + "' in " + std::string(context));
  }
  return value;
}

std::string strip(std::string_view text) {
  std::string s;
  std::copy_if(text.begin(), text.end(), std::back_inserter(s), [](char c) { return c != ' ' && c != '\t'; });
  return s;
}

}  // namespace

double parse_radians(std::string_view text) {
  std::string s = strip(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  const std::string_view context = text;

  std::string_view numerator = s;
  std::string_view denominator;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    numerator = std::string_view(s).substr(0, slash);
    denominator = std::string_view(s).substr(slash + 1);
  }

  double value = 0.0;
  if (const auto pos = numerator.find("pi"); pos != std::string_view::npos) {
    if (pos + 2 != numerator.size()) throw UsageError("unexpected text after 'pi' in '" + std::string(text) + "'");
    std::string_view factor = numerator.substr(0, pos);
    if (!factor.empty() && factor.back() == '*') factor.remove_suffix(1);
    double scale = 1.0;
    if (factor == "-") {
      scale = -1.0;
    } else if (factor == "+" ) {
      scale = 1.0;
    } else if (!factor.empty()) {
      if (factor.front() == '+') factor.remove_prefix(1);
      scale = parse_number(factor, context);
    }
    value = scale * kPi;
  } else {
    value = parse_number(numerator, context);
  }
  if (!denominator.empty()) {
    const double div = parse_number(denominator, context);
    if (div == 0.0) throw UsageError("zero denominator in '" + std::string(text) + "'");
    value /= div;
  } else if (s.find('/') != std::string::npos) {
    throw UsageError("missing denominator in '" + std::string(text) + "'");
  }
  return value;
}

SignalSpec parse_signal(std::string_view text, double omega) {
  if (text == "sinc-combo") return make_sinc_combo(omega);
  if (text == "linear-growth") return make_linear_growth(omega);
  if (text.starts_with("tone:")) {
    const std::string_view rest = text.substr(5);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw UsageError("tone signal needs 'tone:<omega0>:<p>'");
    const double omega0 = parse_radians(rest.substr(0, colon));
    const double p = parse_number(rest.substr(colon + 1), text);
    if (p < 0 || p != std::floor(p)) throw UsageError("tone degree must be a non-negative integer");
    return make_tone(omega0, static_cast<int>(p));
  }
  throw UsageError("unknown signal '" + std::string(text) + "' (sinc-combo, linear-growth, tone:w:p)");
}

BandConfig RunConfig::band() const { return BandConfig::make(omega, alpha, d, N); }

QuadratureSpec RunConfig::quadrature() const {
  QuadratureSpec quad;
  quad.panels = panels;
  quad.nodes_per_panel = nodes;
  quad.abs_tol = abs_tol;
  quad.validate();
  return quad;
}

int RunConfig::max_L() const {
  if (Ls.empty()) throw UsageError("at least one L is required");
  const int L = *std::max_element(Ls.begin(), Ls.end());
  if (*std::min_element(Ls.begin(), Ls.end()) < 1) throw UsageError("every L must be >= 1");
  return L;
}

}  // namespace bandlim::cli
