#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "singosc/cli.hpp"
#include "singosc/levels.hpp"
#include "singosc/qalg.hpp"
#include "singosc/radial.hpp"
#include "singosc/verify.hpp"

namespace py = pybind11;
using namespace singosc;

namespace {

// rationals cross the boundary as "p/q" strings
Rational q(const std::string& s) { return Rational::parse(s); }

py::object exact_or_float(const std::optional<Rational>& exact, double value) {
  if (exact) return py::str(exact->to_string());
  return py::float_(value);
}

py::dict report_dict(const VerificationReport& rep) {
  py::list entries;
  for (const auto& e : rep.entries) {
    py::dict d;
    d["name"] = e.name;
    d["anchor"] = e.anchor;
    d["passed"] = e.pass;
    d["residual_terms"] = e.residual_terms;
    d["seconds"] = e.seconds;
    d["note"] = e.note;
    entries.append(d);
  }
  py::dict out;
  out["suite"] = rep.suite;
  out["N"] = rep.N;
  out["n"] = rep.n;
  out["mode"] = rep.mode;
  out["all_pass"] = rep.all_pass();
  out["entries"] = entries;
  out["notes"] = rep.notes;
  return out;
}

VerifyOptions options(bool sampled, int samples, std::uint64_t seed) {
  VerifyOptions o;
  o.sampled = sampled;
  o.samples = samples;
  o.seed = seed;
  return o;
}

ComponentSpec component(int m, const std::string& c, int l, const std::string& hbar, const std::string& omega) {
  ComponentSpec s;
  s.m = m;
  s.c = q(c);
  s.l = l;
  s.hbar = q(hbar);
  s.omega = q(omega);
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Double singular oscillator: operator algebra, structure function and spectra";

  m.def("verify_q3", [](int N, int n, bool sampled, int samples, std::uint64_t seed) {
    return report_dict(verify_q3(N, n, options(sampled, samples, seed)));
  }, py::arg("N"), py::arg("n"), py::arg("sampled") = false, py::arg("samples") = 36, py::arg("seed") = 1);

  m.def("verify_qp3", [](int N, int n, bool sampled, int samples, std::uint64_t seed) {
    return report_dict(verify_qp3(N, n, options(sampled, samples, seed)));
  }, py::arg("N"), py::arg("n"), py::arg("sampled") = false, py::arg("samples") = 36, py::arg("seed") = 1);

  m.def("solve_unirreps", [](int p, int N, int n, int l_n, int l_Nn, const std::string& hbar,
                             const std::string& omega, const std::string& c1, const std::string& c2) {
    const CentralEigs ce = CentralEigs::make(N, n, l_n, l_Nn, q(hbar), q(omega), q(c1), q(c2));
    py::list out;
    for (const auto& s : solve_unirreps(p, ce)) {
      py::dict d;
      d["set"] = s.set_id;
      d["eps"] = py::make_tuple(s.eps1, s.eps2);
      d["p"] = s.p;
      d["E"] = exact_or_float(s.E_exact, s.E.convert_to<double>());
      d["u"] = exact_or_float(s.u_exact, s.u.convert_to<double>());
      d["admissible"] = s.admissible;
      d["boundary_ok"] = s.boundary_ok;
      d["positive"] = s.positive;
      std::vector<double> phi;
      for (const auto& v : s.phi) phi.push_back(v.convert_to<double>());
      d["phi"] = phi;
      out.append(d);
    }
    return out;
  }, py::arg("p"), py::arg("N"), py::arg("n"), py::arg("l_n") = 0, py::arg("l_Nn") = 0, py::arg("hbar") = "1",
     py::arg("omega") = "1", py::arg("c1") = "0", py::arg("c2") = "0");

  m.def("structure_forms_agree", [](int N, int n, int l_n, int l_Nn, const std::string& hbar,
                                    const std::string& omega, const std::string& c1, const std::string& c2,
                                    const std::string& u, const std::string& E, bool bare_x) {
    FactoredOptions opt;
    opt.reading = bare_x ? LastFactor::bare_x : LastFactor::plus_u;
    return structure_forms_agree(CentralEigs::make(N, n, l_n, l_Nn, q(hbar), q(omega), q(c1), q(c2)), q(u), q(E),
                                 opt);
  }, py::arg("N"), py::arg("n"), py::arg("l_n"), py::arg("l_Nn"), py::arg("hbar"), py::arg("omega"), py::arg("c1"),
     py::arg("c2"), py::arg("u"), py::arg("E"), py::arg("bare_x") = false);

  m.def("harmonic_limit_ok", [](int N, int l_max) { return harmonic_limit_check(N, l_max).all_pass(); },
        py::arg("N"), py::arg("l_max"));

  m.def("closed_form", [](int m_, const std::string& c, int l, int Nr, const std::string& hbar,
                          const std::string& omega) {
    const RadialMode r = closed_form(component(m_, c, l, hbar, omega), Nr);
    py::dict d;
    d["alpha"] = exact_or_float(r.alpha_exact, r.alpha);
    d["delta"] = r.delta;
    d["energy"] = exact_or_float(r.energy_exact, r.energy);
    d["energy_float"] = r.energy;
    return d;
  }, py::arg("m"), py::arg("c"), py::arg("l"), py::arg("Nr"), py::arg("hbar") = "1", py::arg("omega") = "1");

  m.def("fd_eigenvalues", [](int m_, const std::string& c, int l, int count, const std::string& hbar,
                             const std::string& omega, int M, int levels) {
    GridSpec g;
    g.M = M;
    g.levels = levels;
    const FdResult r = fd_eigenvalues(component(m_, c, l, hbar, omega), g, count);
    py::dict d;
    d["energies"] = r.energies;
    d["error_estimate"] = r.error_estimate;
    d["h"] = r.level_h;
    d["nodes"] = r.level_nodes;
    return d;
  }, py::arg("m"), py::arg("c"), py::arg("l"), py::arg("count"), py::arg("hbar") = "1", py::arg("omega") = "1",
     py::arg("M") = 0, py::arg("levels") = 3);

  m.def("wavefunction_norm", [](int m_, const std::string& c, int l, int Nr, bool raw_prefactor) {
    const NormCheck n = norm_integral(closed_form(component(m_, c, l, "1", "1"), Nr),
                                      raw_prefactor ? WaveNorm::raw_prefactor : WaveNorm::unit);
    return py::make_tuple(n.value, n.converged);
  }, py::arg("m"), py::arg("c"), py::arg("l"), py::arg("Nr"), py::arg("raw_prefactor") = false);

  m.def("dim_harm", &dim_harm, py::arg("m"), py::arg("l"));

  m.def("enumerate_levels", [](int N, int n, const std::string& c1, const std::string& c2, const std::string& E_cut,
                               const std::string& hbar, const std::string& omega) {
    const LevelTable t = enumerate_levels(N, n, q(c1), q(c2), q(E_cut), q(hbar), q(omega));
    py::list out;
    for (const auto& lv : t.levels) {
      py::dict d;
      d["E"] = exact_or_float(lv.E_exact, lv.E);
      d["degeneracy"] = lv.degeneracy;
      py::list who;
      for (const auto& c : lv.contributors) who.append(py::make_tuple(c.N1, c.N2, c.l_n, c.l_Nn));
      d["contributors"] = who;
      d["accidental"] = lv.accidental;
      out.append(d);
    }
    return out;
  }, py::arg("N"), py::arg("n"), py::arg("c1"), py::arg("c2"), py::arg("E_cut"), py::arg("hbar") = "1",
     py::arg("omega") = "1");

  m.def("oscillator_counts_ok", [](int N, int l_max) { return oscillator_count_check(N, l_max).all_pass(); },
        py::arg("N"), py::arg("l_max"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
