#include "singosc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "singosc/levels.hpp"
#include "singosc/qalg.hpp"
#include "singosc/radial.hpp"
#include "singosc/verify.hpp"

namespace singosc::cli {

namespace {

using Record = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int N = 4;
  int n = 2;
  std::string c1 = "0";
  std::string c2 = "0";
  std::string hbar = "1";
  std::string omega = "1";
  int p_max = 3;
  int l_max = 3;
  std::string E_cut;
  int component = 1;
  int l = 0;
  int Nr = 0;
  int count = 5;
  int grid_M = 0;
  int grid_levels = 3;
  double r_max = 0.0;
  int samples = 200;
  std::string output;
  std::string format = "json-lines";
  std::uint64_t seed = 1;
  bool sampled = false;
  int sample_count = 36;
  unsigned threads = 1;
};

struct Exact {
  Rational c1, c2, hbar, omega;
};

Rational parse_rational(const std::string& key, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw ConfigError("--" + key + ": not an exact rational: '" + text + "'");
  }
}

Exact validate(const RunConfig& cfg) {
  if (cfg.N < 2) throw ConfigError("N must be >= 2");
  if (cfg.n < 1 || cfg.n > cfg.N - 1) {
    throw ConfigError("invalid partition: need 1 <= n <= N-1, got n=" + std::to_string(cfg.n));
  }
  Exact e{parse_rational("c1", cfg.c1), parse_rational("c2", cfg.c2), parse_rational("hbar", cfg.hbar),
          parse_rational("omega", cfg.omega)};
  if (e.c1.sign() < 0 || e.c2.sign() < 0) throw ConfigError("couplings c1, c2 must be >= 0");
  if (e.hbar.sign() <= 0 || e.omega.sign() <= 0) throw ConfigError("hbar and omega must be > 0");
  if (cfg.p_max < 0 || cfg.l_max < 0 || cfg.l < 0 || cfg.Nr < 0) {
    throw ConfigError("p-max, l-max, l and Nr must be >= 0");
  }
  if (cfg.count < 1) throw ConfigError("count must be >= 1");
  if (cfg.component != 1 && cfg.component != 2) throw ConfigError("component must be 1 or 2");
  if (cfg.format != "json-lines" && cfg.format != "csv") {
    throw ConfigError("format must be json-lines or csv");
  }
  return e;
}

std::string real_string(const Real& x) { return x.str(17, std::ios_base::scientific); }

std::string energy_string(const std::optional<Rational>& exact, const Real& x) {
  return exact ? exact->to_string() : real_string(x);
}

std::string energy_string(const std::optional<Rational>& exact, double x) {
  if (exact) return exact->to_string();
  std::ostringstream os;
  os.precision(17);
  os << std::scientific << x;
  return os.str();
}

Record header(const char* record, const char* anchor, const RunConfig& cfg) {
  Record r;
  r["record"] = record;
  r["anchor"] = anchor;
  r["N"] = cfg.N;
  r["n"] = cfg.n;
  return r;
}

class Sink {
 public:
  explicit Sink(std::string format) : format_(std::move(format)) {}
  void add(Record r) { records_.push_back(std::move(r)); }

  void write(std::ostream& os) const {
    if (format_ == "json-lines") {
      for (const auto& r : records_) os << r.dump() << '\n';
      return;
    }
    // CSV: union of keys in first-seen order
    std::vector<std::string> cols;
    for (const auto& r : records_) {
      for (auto it = r.begin(); it != r.end(); ++it) {
        if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
      }
    }
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& r : records_) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) os << ',';
        auto it = r.find(cols[i]);
        if (it == r.end()) continue;
        if (it->is_string()) {
          std::string s = it->get<std::string>();
          if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            os << q << '"';
          } else {
            os << s;
          }
        } else {
          os << it->dump();
        }
      }
      os << '\n';
    }
  }

 private:
  std::string format_;
  std::vector<Record> records_;
};

int emit_verification(const VerificationReport& rep, const RunConfig& cfg, Sink& sink, std::ostream& err) {
  for (const auto& e : rep.entries) {
    Record r = header("identity", e.anchor.c_str(), cfg);
    r["suite"] = rep.suite;
    r["mode"] = rep.mode;
    r["identity"] = e.name;
    r["pass"] = e.pass;
    r["residual_terms"] = e.residual_terms;
    if (!e.note.empty()) r["note"] = e.note;
    sink.add(std::move(r));
  }
  for (const auto& note : rep.notes) {
    Record r = header("note", "report:notes", cfg);
    r["suite"] = rep.suite;
    r["note"] = note;
    sink.add(std::move(r));
  }
  int code = kOk;
  for (const auto& e : rep.entries) {
    if (!e.pass) {
      err << "verification failed: " << rep.suite << " " << e.name << " (" << e.residual_terms
          << " residual terms)\n";
      code = kVerificationFailed;
    }
  }
  return code;
}

int cmd_verify(bool quantum, const RunConfig& cfg, Sink& sink, std::ostream& err) {
  VerifyOptions opt;
  opt.sampled = cfg.sampled;
  opt.samples = cfg.sample_count;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;
  const VerificationReport rep = quantum ? verify_q3(cfg.N, cfg.n, opt) : verify_qp3(cfg.N, cfg.n, opt);
  return emit_verification(rep, cfg, sink, err);
}

int block_l_max(int m, int l_max) { return m == 1 ? std::min(l_max, 1) : l_max; }

int cmd_spectrum(const RunConfig& cfg, const Exact& ex, Sink& sink) {
  for (int p = 0; p <= cfg.p_max; ++p) {
    for (int ln = 0; ln <= block_l_max(cfg.n, cfg.l_max); ++ln) {
      for (int lNn = 0; lNn <= block_l_max(cfg.N - cfg.n, cfg.l_max); ++lNn) {
        const CentralEigs ce = CentralEigs::make(cfg.N, cfg.n, ln, lNn, ex.hbar, ex.omega, ex.c1, ex.c2);
        for (const auto& s : solve_unirreps(p, ce)) {
          Record r = header("unirrep", "structure-function:unirrep", cfg);
          r["c1"] = ex.c1.to_string();
          r["c2"] = ex.c2.to_string();
          r["p"] = p;
          r["l_n"] = ln;
          r["l_Nn"] = lNn;
          r["set"] = s.set_id;
          r["eps1"] = s.eps1;
          r["eps2"] = s.eps2;
          r["u"] = energy_string(s.u_exact, s.u);
          r["E"] = energy_string(s.E_exact, s.E);
          r["admissible"] = s.admissible;
          r["boundary_ok"] = s.boundary_ok;
          r["positive"] = s.positive;
          if (!s.note.empty()) r["note"] = s.note;
          sink.add(std::move(r));
        }
      }
    }
  }
  return kOk;
}

ComponentSpec component(const RunConfig& cfg, const Exact& ex) {
  ComponentSpec s;
  s.m = cfg.component == 1 ? cfg.n : cfg.N - cfg.n;
  s.c = cfg.component == 1 ? ex.c1 : ex.c2;
  s.l = cfg.l;
  s.hbar = ex.hbar;
  s.omega = ex.omega;
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return s;
}

int cmd_radial(const RunConfig& cfg, const Exact& ex, Sink& sink, std::ostream& err) {
  const ComponentSpec spec = component(cfg, ex);
  GridSpec grid;
  grid.M = cfg.grid_M;
  grid.levels = cfg.grid_levels;
  grid.r_max = cfg.r_max;
  const FdResult fd = fd_eigenvalues(spec, grid, cfg.count);
  int code = kOk;
  for (int k = 0; k < cfg.count; ++k) {
    const RadialMode mode = closed_form(spec, k);
    const double rel = std::abs(fd.energies[k] - mode.energy) / std::abs(mode.energy);
    Record r = header("radial", "radial:closed-form-vs-finite-difference", cfg);
    r["component"] = cfg.component;
    r["m"] = spec.m;
    r["c"] = spec.c.to_string();
    r["l"] = spec.l;
    r["Nr"] = k;
    r["alpha"] = mode.alpha;
    r["delta"] = mode.delta;
    r["E_closed"] = energy_string(mode.energy_exact, mode.energy);
    r["E_fd"] = fd.energies[k];
    r["rel_diff"] = rel;
    r["error_estimate"] = fd.error_estimate[k];
    r["h"] = fd.level_h;
    r["nodes"] = fd.level_nodes;
    r["r_min"] = fd.r_min;
    r["r_max"] = fd.r_max;
    r["boundary_at_zero"] = fd.boundary_at_zero;
    sink.add(std::move(r));
    if (rel > 1e-6) {
      err << "verification failed: radial Nr=" << k << " finite-difference energy off by " << rel << "\n";
      code = kVerificationFailed;
    }
  }
  return code;
}

int cmd_levels(const RunConfig& cfg, const Exact& ex, Sink& sink) {
  Rational cut;
  if (cfg.E_cut.empty()) {
    RunConfig c1 = cfg;
    c1.component = 1;
    c1.l = 0;
    RunConfig c2 = c1;
    c2.component = 2;
    const auto a = closed_form(component(c1, ex), 0);
    const auto b = closed_form(component(c2, ex), 0);
    // ground energy plus four quanta, rounded up to a rational
    const double e = a.energy + b.energy + 8 * (ex.hbar * ex.omega).to_double();
    cut = Rational(static_cast<std::int64_t>(std::ceil(e * 1024)), 1024);
  } else {
    cut = parse_rational("E-cut", cfg.E_cut);
  }
  LevelTable table;
  try {
    table = enumerate_levels(cfg.N, cfg.n, ex.c1, ex.c2, cut, ex.hbar, ex.omega);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const double hw = (ex.hbar * ex.omega).to_double();
  for (std::size_t i = 0; i < table.levels.size(); ++i) {
    const Level& lv = table.levels[i];
    // one row per (p, l_n, l_Nn) sector of the level
    std::map<std::tuple<int, int, int>, std::int64_t> sectors;
    for (const auto& c : lv.contributors) {
      sectors[{c.N1 + c.N2, c.l_n, c.l_Nn}] += dim_harm(cfg.n, c.l_n) * dim_harm(cfg.N - cfg.n, c.l_Nn);
    }
    for (const auto& [key, deg] : sectors) {
      Record r = header("level", "levels:total-energy", cfg);
      r["level"] = i;
      r["E/hw"] = lv.E_exact ? (*lv.E_exact / (ex.hbar * ex.omega)).to_string()
                             : energy_string(std::nullopt, lv.E / hw);
      r["p"] = std::get<0>(key);
      r["l_n"] = std::get<1>(key);
      r["l_Nn"] = std::get<2>(key);
      r["degeneracy"] = deg;
      r["level_degeneracy"] = lv.degeneracy;
      r["accidental"] = lv.accidental;
      sink.add(std::move(r));
    }
  }
  return kOk;
}

int cmd_wavefunction(const RunConfig& cfg, const Exact& ex, Sink& sink, std::ostream& err) {
  const ComponentSpec spec = component(cfg, ex);
  const RadialMode mode = closed_form(spec, cfg.Nr);
  const double omega_r = spec.omega_reduced().to_double();
  const double r_max = cfg.r_max > 0 ? cfg.r_max : 8.0 / std::sqrt(omega_r);
  const int samples = std::max(cfg.samples, 2);
  for (int i = 1; i <= samples; ++i) {
    const double r = r_max * i / samples;
    Record rec = header("wavefunction", "radial:wavefunction", cfg);
    rec["component"] = cfg.component;
    rec["m"] = spec.m;
    rec["l"] = spec.l;
    rec["Nr"] = cfg.Nr;
    rec["r"] = r;
    rec["psi"] = wavefunction(mode, r, WaveNorm::unit);
    rec["psi_raw_prefactor"] = wavefunction(mode, r, WaveNorm::raw_prefactor);
    sink.add(std::move(rec));
  }
  int code = kOk;
  for (WaveNorm w : {WaveNorm::unit, WaveNorm::raw_prefactor}) {
    const NormCheck nc = norm_integral(mode, w, 0.0, 1e-10);
    Record rec = header("norm", "radial:wavefunction-norm", cfg);
    rec["component"] = cfg.component;
    rec["Nr"] = cfg.Nr;
    rec["normalization"] = w == WaveNorm::unit ? "unit" : "raw-prefactor";
    rec["norm"] = nc.value;
    rec["error_estimate"] = nc.error_estimate;
    rec["converged"] = nc.converged;
    rec["sign_changes"] = wavefunction_sign_changes(mode);
    sink.add(std::move(rec));
    if (!nc.converged) {
      err << "verification failed: norm quadrature did not converge\n";
      code = kVerificationFailed;
    }
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"singular-oscillator algebra and spectrum tool", "singosc"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value configuration file");
  app.add_option("--N", cfg.N, "total dimension");
  app.add_option("--n", cfg.n, "partition: first block dimension");
  app.add_option("--c1", cfg.c1, "first coupling (exact rational)");
  app.add_option("--c2", cfg.c2, "second coupling (exact rational)");
  app.add_option("--hbar", cfg.hbar, "Planck constant (exact rational)");
  app.add_option("--omega", cfg.omega, "frequency (exact rational)");
  app.add_option("--p-max", cfg.p_max, "largest p");
  app.add_option("--l-max", cfg.l_max, "largest angular number");
  app.add_option("--E-cut", cfg.E_cut, "energy cutoff (exact rational)");
  app.add_option("--component", cfg.component, "radial block: 1 (dimension n) or 2 (N-n)");
  app.add_option("--l", cfg.l, "angular number of the radial block");
  app.add_option("--Nr", cfg.Nr, "radial quantum number");
  app.add_option("--count", cfg.count, "number of radial eigenvalues");
  app.add_option("--grid-M", cfg.grid_M, "nodes on the coarsest grid (0 = automatic)");
  app.add_option("--grid-levels", cfg.grid_levels, "grid levels for extrapolation");
  app.add_option("--r-max", cfg.r_max, "outer radius (0 = automatic)");
  app.add_option("--samples", cfg.samples, "wavefunction sample points");
  app.add_option("--output", cfg.output, "output file (default: stdout)");
  app.add_option("--format", cfg.format, "json-lines or csv");
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_flag("--sampled", cfg.sampled, "substitute random rationals for the parameters");
  app.add_option("--sample-count", cfg.sample_count, "number of sampled parameter points");
  app.add_option("--threads", cfg.threads, "worker threads for independent checks");

  auto* verify_algebra = app.add_subcommand("verify-algebra", "quantum quadratic algebra identities");
  auto* verify_poisson = app.add_subcommand("verify-poisson", "classical Poisson algebra identities");
  auto* spectrum = app.add_subcommand("spectrum", "unirrep energies and admissibility");
  auto* radial = app.add_subcommand("radial", "radial closed form against finite differences");
  auto* levels = app.add_subcommand("levels", "total spectrum with degeneracies");
  auto* wave = app.add_subcommand("wavefunction", "radial wavefunction samples and norms");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    const Exact ex = validate(cfg);
    Sink sink(cfg.format);
    int code = kOk;
    if (verify_algebra->parsed()) code = cmd_verify(true, cfg, sink, err);
    if (verify_poisson->parsed()) code = cmd_verify(false, cfg, sink, err);
    if (spectrum->parsed()) code = cmd_spectrum(cfg, ex, sink);
    if (radial->parsed()) code = cmd_radial(cfg, ex, sink, err);
    if (levels->parsed()) code = cmd_levels(cfg, ex, sink);
    if (wave->parsed()) code = cmd_wavefunction(cfg, ex, sink, err);
    if (cfg.output.empty()) {
      sink.write(out);
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw ConfigError("cannot open output file " + cfg.output);
      sink.write(file);
    }
    return code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace singosc::cli
