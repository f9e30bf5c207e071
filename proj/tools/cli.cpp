#include "cli.hpp"

#include "sfc/bench.hpp"
#include "sfc/clustering.hpp"
#include "sfc/codec.hpp"
#include "sfc/traversal.hpp"
#include "sfc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::uint64_t parse_u64(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("not a non-negative integer: '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw UsageError("integer out of range: '" + text + "'");
  }
}

std::vector<Coord> parse_coords(const std::string& text) {
  std::vector<Coord> coords;
  for (const auto& part : split(text, ',')) coords.push_back(parse_u64(part));
  return coords;
}

std::vector<CurveKind> parse_curves(const std::string& text) {
  std::vector<CurveKind> kinds;
  for (const auto& part : split(text, ',')) {
    try {
      kinds.push_back(parse_curve_kind(part));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (kinds.empty()) throw UsageError("no curves given");
  return kinds;
}

std::string join(std::span<const Coord> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

// Writes through `path` when set, otherwise to `out`.
template <class Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  write(file);
}

void write_svg(std::ostream& os, const Codec& codec) {
  const std::uint64_t size = std::uint64_t{1} << codec.depth();
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size * 16 << "\" height=\""
     << size * 16 << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
     << "<path fill=\"none\" stroke=\"black\" stroke-width=\"0.1\" stroke-linejoin=\"round\" d=\"";
  for (Rank r = 0; r <= codec.max_rank(); ++r) {
    const auto c = codec.decode_coords(r);
    os << (r == 0 ? "M" : " L") << c[0] << ".5 " << (size - 1 - c[1]) << ".5";
  }
  if (codec.cyclic()) os << " Z";
  os << "\"/>\n</svg>\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Space-filling curve toolkit: H-curve, Hilbert and Z-order codecs"};
  app.require_subcommand(1);

  std::string curve = "h";
  unsigned d = 2;
  unsigned n = 0;
  std::string coords_text;
  std::uint64_t rank = 0;
  std::string format = "csv";
  std::string out_path;
  std::string curves_text = "h,hilbert,z";
  std::uint64_t lmin = 2;
  std::uint64_t lmax = 15;
  std::uint64_t queries = 10000;
  std::uint64_t seed = 1;
  bool wrap = false;
  unsigned threads = 1;
  std::uint64_t samples = 1000000;
  std::uint64_t calls = 1000000;

  auto add_curve = [&](CLI::App* sub) { sub->add_option("--curve", curve, "h, hilbert or z")->capture_default_str(); };

  auto* encode = app.add_subcommand("encode", "Print the rank of a cell");
  add_curve(encode);
  encode->add_option("-d", d, "Dimension")->required();
  encode->add_option("-n", n, "Depth (grid side 2^n)")->required();
  encode->add_option("--coords", coords_text, "Comma-separated coordinates")->required();

  auto* decode = app.add_subcommand("decode", "Print the coordinates of a rank");
  add_curve(decode);
  decode->add_option("-d", d, "Dimension")->required();
  decode->add_option("-n", n, "Depth")->required();
  decode->add_option("--rank", rank, "Rank")->required();

  auto* points = app.add_subcommand("points", "Export the full traversal as CSV or SVG");
  add_curve(points);
  points->add_option("-d", d, "Dimension")->required();
  points->add_option("-n", n, "Depth")->required();
  points->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}))->capture_default_str();
  points->add_option("--out", out_path, "Output file (default stdout)");

  auto* simulate_cmd = app.add_subcommand("simulate", "Mean cluster counts of random cubic queries");
  simulate_cmd->add_option("--curves", curves_text, "Comma-separated curves")->capture_default_str();
  simulate_cmd->add_option("-d", d, "Dimension")->capture_default_str();
  simulate_cmd->add_option("-n", n, "Depth (default 10, 7, 6 for d = 2, 3, 4)");
  simulate_cmd->add_option("--lmin", lmin, "Smallest query side")->capture_default_str();
  simulate_cmd->add_option("--lmax", lmax, "Largest query side")->capture_default_str();
  simulate_cmd->add_option("--queries", queries, "Queries per side")->capture_default_str();
  simulate_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  simulate_cmd->add_flag("--wrap", wrap, "Merge the first and last run for cyclic counting");
  simulate_cmd->add_option("--out", out_path, "CSV file (default stdout)");
  simulate_cmd->add_option("--threads", threads, "Worker threads, 0 for all cores")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Check a curve size against the oracle and invariants");
  verify_cmd->add_option("-d", d, "Dimension")->required();
  verify_cmd->add_option("-n", n, "Depth")->required();
  verify_cmd->add_option("--samples", samples, "Samples beyond 2^20 cells")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();

  auto* bench_cmd = app.add_subcommand("bench", "Time encode and decode");
  bench_cmd->add_option("--curves", curves_text, "Comma-separated curves")->capture_default_str();
  bench_cmd->add_option("-d", d, "Dimension (default 7)");
  bench_cmd->add_option("-n", n, "Depth (default 7)");
  bench_cmd->add_option("--calls", calls, "Calls per measurement")->capture_default_str();
  bench_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  bench_cmd->add_option("--out", out_path, "CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (encode->parsed() || decode->parsed()) {
      const auto codec = make_codec({parse_curve_kind(curve), d, n});
      if (encode->parsed()) {
        const auto coords = parse_coords(coords_text);
        out << codec->encode_coords(coords) << '\n';
      } else {
        out << join(codec->decode_coords(rank)) << '\n';
      }
      return 0;
    }

    if (points->parsed()) {
      const auto codec = make_codec({parse_curve_kind(curve), d, n});
      if (d > 6 || codec->rank_bits() > 20) throw UsageError("points: need d <= 6 and n*d <= 20");
      if (format == "svg") {
        if (d != 2) throw UsageError("points: svg needs d = 2");
        emit(out_path, out, [&](std::ostream& os) { write_svg(os, *codec); });
      } else {
        emit(out_path, out, [&](std::ostream& os) {
          os << "rank";
          for (unsigned i = 0; i < d; ++i) os << ",x" << i;
          os << '\n';
          for (Rank r = 0; r <= codec->max_rank(); ++r) os << r << ',' << join(codec->decode_coords(r)) << '\n';
        });
      }
      return 0;
    }

    if (simulate_cmd->parsed()) {
      if (n == 0) {
        if (d < 2 || d > 4) throw UsageError("simulate: -n is required for d outside 2..4");
        n = d == 2 ? 10 : d == 3 ? 7 : 6;
      }
      SimulationConfig config;
      for (CurveKind kind : parse_curves(curves_text)) config.curves.push_back({kind, d, n});
      config.side_min = lmin;
      config.side_max = lmax;
      config.queries = queries;
      config.seed = seed;
      config.wrap = wrap;
      config.threads = threads;
      const auto rows = simulate(config);
      if (out_path.empty()) {
        write_stats_csv(out, rows);
      } else {
        emit(out_path, out, [&](std::ostream& os) { write_stats_csv(os, rows); });
        out << render_stats_table(rows);
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      const auto results = run_verification(d, n, samples, seed);
      bool ok = true;
      for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " checked";
        if (!r.passed) out << ", " << r.failures << " failures (" << r.detail << ")";
        out << '\n';
        ok = ok && r.passed;
      }
      out << (ok ? "all suites passed" : "verification failed") << '\n';
      return ok ? 0 : 1;
    }

    if (bench_cmd->parsed()) {
      if (bench_cmd->count("-d") == 0) d = 7;
      if (n == 0) n = 7;
      std::vector<CurveSpec> specs;
      for (CurveKind kind : parse_curves(curves_text)) specs.push_back({kind, d, n});
      const auto reports = bench_table(specs, calls, seed);
      out << render_bench_table(reports);
      if (!out_path.empty()) emit(out_path, out, [&](std::ostream& os) { write_bench_csv(os, reports); });
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.verified;
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace sfc::cli
