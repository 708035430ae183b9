#include "tbundle/cli/cli.hpp"

#include "tbundle/bundle/bundle_io.hpp"
#include "tbundle/cli/report.hpp"
#include "tbundle/errors.hpp"
#include "tbundle/swcalc/sw4_zero.hpp"

#include <CLI11.hpp>

#include <omp.h>

#include <ostream>

namespace tbundle::cli {

namespace {

enum class Format { Text, Json };

template <class TextFn, class JsonFn>
void emit(std::ostream& out, Format f, TextFn text, JsonFn json) {
  if (f == Format::Json) out << json().dump(2) << '\n';
  else out << text();
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic classification and Seiberg-Witten data for T^2 bundles over surfaces",
               argv.empty() ? "tbundle" : argv.front()};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string bundle_path;
  auto* classify_cmd = app.add_subcommand("classify", "Full symplectic classification of a bundle");
  auto* homology_cmd = app.add_subcommand("homology", "H1(E), Betti numbers, fixed lattices");
  auto* spectral_cmd = app.add_subcommand("spectral", "Leray-Serre E2 ranks and fiber-class test");
  for (auto* cmd : {classify_cmd, homology_cmd, spectral_cmd})
    cmd->add_option("bundle-file", bundle_path, "Bundle description (JSON)")
        ->required()
        ->check(CLI::ExistingFile);

  int genus = 0;
  long m = 0;
  long n = 0;
  auto* swpoly_cmd = app.add_subcommand("swpoly", "SW polynomial of the circle bundle over Sigma_g");
  swpoly_cmd->add_option("--genus", genus)->required();
  swpoly_cmd->add_option("--n", n)->required();

  auto* sw0_cmd = app.add_subcommand("sw0", "SW invariant of the zero class, coset and closed routes");
  sw0_cmd->add_option("--genus", genus)->required();
  sw0_cmd->add_option("--m", m)->required();
  sw0_cmd->add_option("--n", n)->required();

  std::string g_range = "2..20";
  std::string mn_range = "-20..20";
  int threads = 0;
  auto* parity_cmd = app.add_subcommand("verify-parity", "Parity sweep of sw4(0) over a grid");
  parity_cmd->add_option("--g", g_range, "Genus range a..b")->capture_default_str();
  parity_cmd->add_option("--mn", mn_range, "Range a..b for both m and n")->capture_default_str();
  parity_cmd->add_option("--threads", threads, "OpenMP threads (0: runtime default)");

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const Format format = format_name == "json" ? Format::Json : Format::Text;

  try {
    if (classify_cmd->parsed()) {
      const TorusBundle b = load_bundle(bundle_path);
      const auto rep = classify::is_symplectic(b);
      emit(out, format, [&] { return classify_text(b, rep); }, [&] { return classify_json(b, rep); });
    } else if (homology_cmd->parsed()) {
      const TorusBundle b = load_bundle(bundle_path);
      emit(out, format, [&] { return homology_text(b); }, [&] { return homology_json(b); });
    } else if (spectral_cmd->parsed()) {
      const TorusBundle b = load_bundle(bundle_path);
      const auto ranks = spectral::e2_ranks(b.genus(), b.monodromy());
      const bool nonzero = spectral::fiber_class_via_spectral(b);
      emit(out, format, [&] { return spectral_text(b, ranks, nonzero); },
           [&] { return spectral_json(b, ranks, nonzero); });
    } else if (swpoly_cmd->parsed()) {
      const auto p = sw::sw_poly_circle_bundle(genus, n);
      if (!(p == sw::fold_product_poly(genus, n))) {
        err << "error: closed formula and folded product invariants disagree\n";
        return kInconsistent;
      }
      emit(out, format, [&] { return swpoly_text(genus, n, p); },
           [&] { return swpoly_json(genus, n, p); });
    } else if (sw0_cmd->parsed()) {
      Sw0Result r{genus, m, n, sw::sw4_zero_coset(genus, m, n), std::nullopt, std::nullopt, true};
      if (sw::closed_form_defined(m, n)) {
        r.closed = sw::sw4_zero_closed(genus, m, n);
        r.nonpullback = sw::sw4_zero_nonpullback(genus, m, n);
        r.agree = *r.closed == r.coset;
      }
      emit(out, format, [&] { return sw0_text(r); }, [&] { return sw0_json(r); });
      if (!r.agree) {
        err << "error: closed form and coset formula disagree\n";
        return kInconsistent;
      }
    } else if (parity_cmd->parsed()) {
      const sw::IntRange g = sw::parse_range(g_range);
      const sw::IntRange mn = sw::parse_range(mn_range);
      if (threads > 0) omp_set_num_threads(threads);
      const auto rep = sw::parity_sweep(g, mn, mn);
      emit(out, format, [&] { return sweep_text(g, mn, rep); }, [&] { return sweep_json(g, mn, rep); });
      if (!rep.counterexamples.empty()) return kInconsistent;
    }
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::exception& e) {
    // ParseError, ValidationError, NotARepresentation, bad ranges and
    // out-of-domain arguments are all input problems.
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

}  // namespace tbundle::cli
