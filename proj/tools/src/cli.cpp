#include <bandlim_cli/cli.hpp>

#include <bandlim_cli/commands.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace bandlim::cli {

namespace {

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path);
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Band-limited reconstruction from integer samples, including signals of polynomial growth"};
  app.set_config("--config", "", "Read 'key = value' settings; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string omega_text = "5pi/6";
  std::vector<std::string> method_names{"classical", "d1", "general"};
  int d = 0;
  int N = 0;

  app.add_option("--omega", omega_text, "Band edge in radians; accepts forms like 5pi/6")->capture_default_str();
  app.add_option("--alpha", config.alpha, "Growth exponent (selects d when --d is absent)")->capture_default_str();
  app.add_option("--d", d, "Smoothness order of the splice (default: smallest integer > alpha + 1/2)");
  app.add_option("--N", N, "Even grid parameter (default: smallest even N > omega/(pi - omega))");
  app.add_option("--t", config.t, "Evaluation time")->capture_default_str();
  app.add_option("--L", config.Ls, "Window half-widths, comma separated")->delimiter(',')->capture_default_str();
  app.add_option("--method", method_names, "Methods: classical,d1,general")->delimiter(',')->capture_default_str();
  app.add_option("--signal", config.signal, "sinc-combo | linear-growth | tone:<omega0>:<p>")->capture_default_str();
  app.add_option("--out", config.out, "Output CSV path (default: stdout)");
  app.add_option("--panels", config.panels, "Minimum quadrature panels per segment")->capture_default_str();
  app.add_option("--nodes", config.nodes, "Gauss-Legendre nodes per panel")->capture_default_str();
  app.add_option("--abs-tol", config.abs_tol, "Imaginary-part tolerance for integrated weights")->capture_default_str();
  app.add_flag("--compensated", config.compensated, "Use compensated summation");
  app.add_flag("--pin-q-slope", config.pin_q_slope, "Also impose Q'(pi) = 0 on the splice");
  app.add_option("--points", config.points, "seams: number of tau grid points")->capture_default_str();
  app.add_flag("--corrupt", config.corrupt, "seams: perturb the splice (negative control)");
  app.add_option("--splice-dump", config.splice_dump, "seams: write the splice at --t as CSV");

  auto* coeffs = app.add_subcommand("coeffs", "Coefficient table with difference and decay diagnostics");
  auto* sweep = app.add_subcommand("sweep", "Truncation error table");
  auto* seams = app.add_subcommand("seams", "Seam and periodicity residuals over a tau grid");
  auto* interp = app.add_subcommand("interp", "Reconstructed values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    config.omega = parse_radians(omega_text);
    if (app.count("--d") > 0) config.d = d;
    if (app.count("--N") > 0) config.N = N;
    config.methods.clear();
    for (const std::string& name : method_names) config.methods.push_back(parse_method(name));

    std::ostringstream buffer;
    bool integrity_ok = true;
    if (coeffs->parsed()) {
      cmd_coeffs(config, buffer);
    } else if (sweep->parsed()) {
      cmd_sweep(config, buffer);
    } else if (seams->parsed()) {
      integrity_ok = cmd_seams(config, buffer);
    } else if (interp->parsed()) {
      cmd_interp(config, buffer);
    }
    write_output(config.out, buffer.str(), out);
    if (!integrity_ok) {
      err << "error: seam residuals exceed " << format_real(kSeamTolerance) << '\n';
      return kIntegrity;
    }
    return kSuccess;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kIntegrity;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace bandlim::cli
