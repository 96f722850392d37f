#include "opxlab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "opxlab/error.hpp"
#include "opxlab/io.hpp"
#include "opxlab/poly.hpp"
#include "opxlab/schur.hpp"
#include "opxlab/szegofn.hpp"
#include "opxlab/szegomap.hpp"

#ifndef OPXLAB_VERSION
#define OPXLAB_VERSION "0.0.0"
#endif

namespace opxlab::cli {

using nlohmann::json;

std::string_view version() noexcept { return OPXLAB_VERSION; }

std::string_view command_name(Command c) noexcept {
  switch (c) {
    case Command::Recur: return "recur";
    case Command::Szego: return "szego";
    case Command::Map: return "map";
    case Command::Verify: return "verify";
  }
  return "?";
}

std::string_view format_name(Format f) noexcept { return f == Format::Csv ? "csv" : "json"; }

std::string_view suite_name(Suite s) noexcept {
  switch (s) {
    case Suite::Algebraic: return "algebraic";
    case Suite::Asymptotic: return "asymptotic";
    case Suite::Map: return "map";
    case Suite::Examples: return "examples";
    case Suite::All: return "all";
  }
  return "?";
}

Suite suite_from_name(std::string_view name) {
  for (Suite s : {Suite::Algebraic, Suite::Asymptotic, Suite::Map, Suite::Examples, Suite::All})
    if (suite_name(s) == name) return s;
  throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

void check_config(const RunConfig& cfg) {
  if (cfg.nmax < 0 || cfg.nmax > kMaxDegree)
    throw Error(Errc::InvalidArgument, "--nmax must lie in [0, 200]");
  if (!is_power_of_two(cfg.grid_M) || cfg.grid_M < 16)
    throw Error(Errc::InvalidArgument, "--grid must be a power of two >= 16");
  if (!(cfg.tol > 0.0)) throw Error(Errc::InvalidArgument, "--tol must be positive");
  if (!cfg.seq_path.empty() && !cfg.preset.empty())
    throw Error(Errc::InvalidArgument, "--seq and --preset are mutually exclusive");
}

std::vector<cplx> parse_z_list(std::string_view text) {
  std::vector<cplx> zs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string item(text.substr(pos, end - pos));
    pos = end + 1;
    if (item.find_first_not_of(" \t") == std::string::npos) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t comma = item.find(',');
    auto number = [&](const std::string& s) {
      char* stop = nullptr;
      const double v = std::strtod(s.c_str(), &stop);
      while (stop && (*stop == ' ' || *stop == '\t')) ++stop;
      if (stop == s.c_str() || *stop != '\0') throw Error(Errc::Parse, "bad number in --z: '" + s + "'");
      return v;
    };
    if (comma == std::string::npos) zs.emplace_back(number(item), 0.0);
    else zs.emplace_back(number(item.substr(0, comma)), number(item.substr(comma + 1)));
  }
  return zs;
}

std::string config_json(const RunConfig& cfg) {
  json z = json::array();
  for (const cplx v : cfg.z) z.push_back({v.real(), v.imag()});
  json j = {{"command", command_name(cfg.command)},
            {"seq_path", cfg.seq_path},
            {"preset", cfg.preset},
            {"nmax", cfg.nmax},
            {"grid_M", cfg.grid_M},
            {"tol", cfg.tol},
            {"out_path", cfg.out_path},
            {"format", format_name(cfg.format)},
            {"suite", suite_name(cfg.suite)},
            {"seed", cfg.seed},
            {"z", z}};
  return j.dump();
}

std::optional<VerblunskySequence> load_input(const RunConfig& cfg) {
  if (!cfg.seq_path.empty()) return io::load_sequence(cfg.seq_path);
  if (!cfg.preset.empty()) {
    RandomSzegoParams params;
    params.seed = cfg.seed;
    return preset(preset_from_name(cfg.preset), params);
  }
  return std::nullopt;
}

namespace {

json poly_json(const CPoly& p, int n) {
  json arr = json::array();
  for (int k = 0; k <= n; ++k) {
    const cplx c = p[static_cast<std::size_t>(k)];
    arr.push_back({c.real(), c.imag()});
  }
  return arr;
}

}  // namespace

std::string cmd_recur(const RunConfig& cfg, const VerblunskySequence& seq) {
  const PolynomialChain phi = szego_chain(seq, cfg.nmax);
  const PolynomialChain psi = second_kind_chain(seq, cfg.nmax);
  const SignedWeights w = weights(seq, cfg.nmax);
  if (cfg.format == Format::Csv) {
    std::ostringstream os;
    io::write_chain_csv(os, phi, psi, w);
    return os.str();
  }
  json rows = json::array();
  for (int n = 0; n <= cfg.nmax; ++n) {
    const auto i = static_cast<std::size_t>(n);
    rows.push_back({{"n", n},
                    {"omega", w.omega(n - 1)},
                    {"epsilon", w.epsilon(n - 1)},
                    {"phi", poly_json(phi[i].phi, n)},
                    {"phi_star", poly_json(phi[i].phi_star, n)},
                    {"psi", poly_json(psi[i].phi, n)},
                    {"psi_star", poly_json(psi[i].phi_star, n)}});
  }
  json doc = {{"indefinite_length", seq.indefinite_length()},
              {"certified_degree", phi.certified_degree},
              {"chain", rows}};
  return doc.dump() + "\n";
}

std::string cmd_szego(const RunConfig& cfg, const VerblunskySequence& seq) {
  const SchurChain chain = schur_chain(seq);
  const auto ev = SzegoEvaluator::from_chain(chain, seq, cfg.grid_M);
  const std::vector<cplx> zs = cfg.z.empty() ? std::vector<cplx>{cplx{0.0}} : cfg.z;
  std::vector<io::DSample> samples;
  for (const cplx z : zs) samples.push_back({z, szego_D(ev, z, cfg.tol)});
  if (cfg.format == Format::Json) return io::d_samples_json(samples) + "\n";
  std::ostringstream os;
  io::write_d_samples_csv(os, samples);
  return os.str();
}

MapOutput cmd_map(const RunConfig& cfg, const VerblunskySequence& seq) {
  const auto K = static_cast<std::size_t>(std::max(cfg.nmax, 1));
  const Recurrence rec = geronimus(seq, K);
  GenJacobiSystem sys = build_system(rec.b, rec.c);
  const int half = cfg.nmax / 2;
  const PolynomialChain chain = szego_chain(seq, 2 * half);
  for (int n = 0; n <= half; ++n) sys.P.push_back(map_P(chain, n));

  MapOutput out;
  if (cfg.format == Format::Json) {
    json doc = {{"b", sys.b}, {"c", sys.c}, {"delta", sys.delta}, {"P", sys.P}};
    out.recurrence = doc.dump() + "\n";
    return out;
  }
  std::ostringstream r, p;
  io::write_recurrence_csv(r, sys);
  io::write_P_csv(p, sys.P);
  out.recurrence = r.str();
  out.polys = p.str();
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::Io, "cannot open output file '" + path + "'");
  f << text;
  if (!f) throw Error(Errc::Io, "failed writing '" + path + "'");
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
  const std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + suffix + p.extension().string())).string();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) out << text;
  else write_file(cfg.out_path, text);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"opxlab: indefinite Verblunsky sequences, Szego functions and the Szego mapping"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  RunConfig cfg;
  std::string format = "csv";
  std::string suite = "all";
  std::string zlist;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seq", cfg.seq_path, "sequence JSON file");
    sub->add_option("--preset", cfg.preset, "single_large|appended_geronimus|classical_zero|random_szego");
    sub->add_option("--nmax", cfg.nmax, "highest degree (<= 200)");
    sub->add_option("--grid", cfg.grid_M, "initial circle grid size (power of two)");
    sub->add_option("--tol", cfg.tol, "quadrature tolerance");
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    sub->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", cfg.seed, "seed for random presets and sampling");
  };
  CLI::App* recur = app.add_subcommand("recur", "dump Phi, Phi*, Psi, Psi* and the signed weights");
  CLI::App* szego = app.add_subcommand("szego", "evaluate the Szego function D");
  CLI::App* map = app.add_subcommand("map", "Geronimus recurrence data and mapped polynomials P_n");
  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  for (CLI::App* sub : {recur, szego, map, verify}) add_common(sub);
  szego->add_option("--z", zlist, "evaluation points \"re,im;re,im;...\"");
  verify->add_option("--suite", suite, "algebraic|asymptotic|map|examples|all")
      ->check(CLI::IsMember({"algebraic", "asymptotic", "map", "examples", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
  }

  if (recur->parsed()) cfg.command = Command::Recur;
  else if (szego->parsed()) cfg.command = Command::Szego;
  else if (map->parsed()) cfg.command = Command::Map;
  else cfg.command = Command::Verify;

  try {
    cfg.format = format == "json" ? Format::Json : Format::Csv;
    cfg.suite = suite_from_name(suite);
    cfg.z = parse_z_list(zlist);
    check_config(cfg);
    const auto seq = load_input(cfg);

    if (cfg.command == Command::Verify) {
      const VerifyReport report = cmd_verify(cfg, seq);
      emit(cfg, render_report(report, cfg.format), out);
      if (!report.all_pass()) {
        for (const auto& r : report.results)
          if (!r.pass()) err << "FAIL " << r.check_id << ": measured " << io::fmt(r.measured) << " > "
                             << io::fmt(r.threshold) << (r.detail.empty() ? "" : " (" + r.detail + ")") << '\n';
        return kExitVerifyFailed;
      }
      return kExitOk;
    }

    if (!seq) throw Error(Errc::InvalidArgument, "one of --seq or --preset is required");
    switch (cfg.command) {
      case Command::Recur: emit(cfg, cmd_recur(cfg, *seq), out); break;
      case Command::Szego: emit(cfg, cmd_szego(cfg, *seq), out); break;
      case Command::Map: {
        const MapOutput m = cmd_map(cfg, *seq);
        if (cfg.out_path.empty()) {
          out << m.recurrence;
          if (!m.polys.empty()) out << '\n' << m.polys;
        } else {
          write_file(cfg.out_path, m.recurrence);
          if (!m.polys.empty()) write_file(sibling_path(cfg.out_path, "_P"), m.polys);
        }
        break;
      }
      case Command::Verify: break;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace opxlab::cli
