// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/experiment/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "qwalk/fock/fock.hpp"
#include "qwalk/majorization/majorization.hpp"
#include "qwalk/numkit/linalg.hpp"
#include "qwalk/qrw/qrw.hpp"
#include "qwalk/walks/walks.hpp"
#include "qwalk/zn/zn_factor.hpp"

namespace qwalk {
namespace {

using Rng = std::mt19937_64;

constexpr long kMaxSites = 4096;
constexpr long kMaxSteps = 100000;

// Flat Dirichlet sample.
std::vector<double> random_pd(std::size_t dim, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(dim);
  for (auto& x : w) x = -std::log(1.0 - u(rng));
  return w;
}

long ranged(Params& p, const std::string& key, long fallback, long lo, long hi) {
  const long v = p.integer(key, fallback);
  if (v < lo || v > hi) {
    p.fail(key, "must lie in [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "], got " + std::to_string(v));
  }
  return v;
}

double bounded(Params& p, const std::string& key, double fallback, double lo,
               double hi) {
  const double v = p.real(key, fallback);
  if (v < lo || v > hi) {
    p.fail(key, "must lie in [" + format_real(lo) + ", " + format_real(hi) +
                    "], got " + format_real(v));
  }
  return v;
}

ProbVec as_pd(Params& p, const std::string& key, std::vector<double> v) {
  for (double x : v) {
    if (!(x >= 0.0)) p.fail(key, "entries must be nonnegative");
  }
  double s = 0.0;
  for (double x : v) s += x;
  if (!(s > 0.0)) p.fail(key, "entries must have positive sum");
  if (std::abs(s - 1.0) > 1e-10) p.fail(key, "entries must sum to 1");
  return ProbVec(std::move(v));
}

double pd_sigma(const ProbVec& p, const WalkLattice& lat) {
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double l = static_cast<double>(lat.label(i));
    m1 += p[i] * l;
    m2 += p[i] * l * l;
  }
  return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

double pd_mean(const ProbVec& p, const WalkLattice& lat) {
  double m1 = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    m1 += p[i] * static_cast<double>(lat.label(i));
  }
  return m1;
}

cplx expectation(const ComplexMatrix& rho, const ComplexMatrix& op) {
  cplx tr = 0.0;
  for (std::size_t i = 0; i < rho.rows(); ++i) {
    for (std::size_t k = 0; k < rho.cols(); ++k) {
      if (op(i, k) != cplx(0.0)) tr += op(i, k) * rho(k, i);
    }
  }
  return tr;
}

Boundary parse_boundary(Params& p) {
  const auto b = p.text("boundary", "cyclic");
  if (b == "cyclic") return Boundary::kCyclic;
  if (b == "truncated") return Boundary::kTruncated;
  p.fail("boundary", "expected \"cyclic\" or \"truncated\"");
}

void add_pd_rows(Table& t, PlotSeries& plot, const std::string& prefix,
                 std::size_t step, const ProbVec& pd, const WalkLattice& lat) {
  for (std::size_t i = 0; i < pd.dim(); ++i) {
    std::vector<Cell> row;
    if (!prefix.empty()) row.emplace_back(prefix);
    row.emplace_back(static_cast<std::int64_t>(step));
    row.emplace_back(static_cast<std::int64_t>(lat.label(i)));
    row.emplace_back(pd[i]);
    t.add_row(std::move(row));
    plot.points.push_back({static_cast<double>(lat.label(i)), pd[i],
                           "step=" + std::to_string(step)});
  }
}

// ------------------------------------------------------------- classical

Results run_classical(Params& p, Rng& rng) {
  const auto walk = p.text("walk", "polya");
  const auto size = static_cast<std::size_t>(ranged(p, "size", 21, 2, kMaxSites));
  const Boundary boundary = parse_boundary(p);
  const auto steps = static_cast<std::size_t>(ranged(p, "steps", 10, 0, kMaxSteps));
  const WalkLattice lat(size, boundary);

  std::optional<StochMatrix> d;
  if (walk == "polya") {
    d = polya(lat);
  } else if (walk == "gillis") {
    const double eps = p.real("eps", 0.1);
    if (!(eps > -1.0 && eps < 1.0)) p.fail("eps", "must lie in (-1, 1)");
    const long center = p.integer("center", 0);
    if (center < lat.min_label() || center > lat.max_label()) {
      p.fail("center", "must be a site label of the lattice");
    }
    const long exponent = ranged(p, "exponent", 1, 1, 16);
    d = gillis_general(lat, eps, center, static_cast<int>(exponent));
  } else if (walk == "ls") {
    const double eps = p.real("eps", 1.0);
    if (!(eps > 0.0)) p.fail("eps", "must be positive");
    d = ls_walk(lat, eps);
  } else if (walk == "delta") {
    const bool random = p.flag("random_step_pd", false);
    const auto given = p.reals("step_pd", {});
    std::vector<double> pd;
    if (!given.empty()) {
      if (given.size() != size) p.fail("step_pd", "needs one entry per site");
      pd = given;
    } else if (random) {
      pd = random_pd(size, rng);
      const double s = std::accumulate(pd.begin(), pd.end(), 0.0);
      for (auto& x : pd) x /= s;
    } else {
      p.fail("step_pd", "required for walk \"delta\" unless random_step_pd");
    }
    d = delta_matrix(as_pd(p, "step_pd", pd), lat);
  } else {
    p.fail("walk", "expected polya, gillis, ls or delta");
  }

  std::optional<ProbVec> start;
  if (p.has("initial_pd")) {
    auto v = p.reals("initial_pd", {});
    if (v.size() != size) p.fail("initial_pd", "needs one entry per site");
    start = as_pd(p, "initial_pd", std::move(v));
  } else {
    const long label = p.integer("start", 0);
    if (label < lat.min_label() || label > lat.max_label()) {
      p.fail("start", "must be a site label of the lattice");
    }
    start = ProbVec::point_mass(size, lat.index(label));
  }
  p.reject_unknown();

  Results r;
  Table pd_table{"pd", {"step", "site", "probability"}, {}};
  Table steps_table{"steps", {"step", "entropy", "mean", "sigma", "relation"}, {}};
  PlotSeries pd_plot{"pd", "site", "probability", {}};
  PlotSeries entropy_plot{"entropy", "step", "entropy", {}};
  PlotSeries sigma_plot{"sigma", "step", "sigma", {}};

  ProbVec cur = *start;
  bool monotone = true;
  for (std::size_t s = 0; s <= steps; ++s) {
    std::string relation = "-";
    if (s > 0) {
      ProbVec next = step(*d, cur);
      const auto v = majorizes(cur, next);
      relation = std::string(to_string(v.relation));
      if (v.relation != MajorizationRelation::kXMajorizesY &&
          v.relation != MajorizationRelation::kEqual) {
        monotone = false;
      }
      cur = std::move(next);
    }
    add_pd_rows(pd_table, pd_plot, "", s, cur, lat);
    const double h = shannon_entropy(cur);
    const double sg = pd_sigma(cur, lat);
    steps_table.add_row({static_cast<std::int64_t>(s), h, pd_mean(cur, lat), sg,
                         relation});
    entropy_plot.points.push_back({static_cast<double>(s), h, ""});
    sigma_plot.points.push_back({static_cast<double>(s), sg, ""});
  }
  r.summary = {{"walk", walk},
               {"kind", std::string(to_string(d->kind()))},
               {"bistochastic", is_bistochastic(*d, 1e-10)},
               {"majorization_monotone", monotone}};
  r.tables = {std::move(pd_table), std::move(steps_table)};
  r.plots = {std::move(pd_plot), std::move(entropy_plot), std::move(sigma_plot)};
  return r;
}

// ------------------------------------------------------------- zn-factor

Results run_zn_factor(Params& p, Rng& rng) {
  const auto raw = p.integers("factors", {3, 2});
  if (raw.size() != 2 && raw.size() != 3) p.fail("factors", "need 2 or 3 factors");
  std::vector<std::size_t> factors;
  for (long f : raw) {
    if (f < 2 || f > 1000) p.fail("factors", "each factor must lie in [2, 1000]");
    factors.push_back(static_cast<std::size_t>(f));
  }
  std::optional<CrtSplit> split;
  try {
    split.emplace(factors);
  } catch (const DomainError& e) {
    p.fail("factors", e.what());
  }
  if (split->n() > 1000) p.fail("factors", "product must not exceed 1000");
  const auto steps = static_cast<std::size_t>(ranged(p, "steps", 20, 0, 1000));

  std::vector<ProbVec> parts;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const std::string key = "factor_pd_" + std::to_string(k + 1);
    auto v = p.reals(key, {});
    if (v.empty()) {
      v = random_pd(factors[k], rng);
      const double s = std::accumulate(v.begin(), v.end(), 0.0);
      for (auto& x : v) x /= s;
    } else if (v.size() != factors[k]) {
      p.fail(key, "needs " + std::to_string(factors[k]) + " entries");
    }
    parts.push_back(as_pd(p, key, std::move(v)));
  }
  p.reject_unknown();

  std::vector<double> joint(split->n());
  for (std::size_t x = 0; x < split->n(); ++x) {
    const auto& res = split->residues(x);
    double w = 1.0;
    for (std::size_t k = 0; k < parts.size(); ++k) w *= parts[k][res[k]];
    joint[x] = w;
  }
  const ProbVec pd = ProbVec::normalized(std::move(joint));

  bool roundtrip = true;
  Table crt{"crt", {"x"}, {}};
  for (std::size_t k = 0; k < factors.size(); ++k) {
    crt.columns.push_back("r" + std::to_string(k + 1));
  }
  crt.columns.push_back("mu");
  for (std::size_t x = 0; x < split->n(); ++x) {
    const auto res = crt_delta(*split, x);
    std::vector<Cell> row{static_cast<std::int64_t>(x)};
    for (auto r : res) row.emplace_back(static_cast<std::int64_t>(r));
    const std::size_t back = crt_mu(*split, res);
    roundtrip = roundtrip && back == x;
    row.emplace_back(static_cast<std::int64_t>(back));
    crt.add_row(std::move(row));
  }
  const ComplexMatrix v = v_delta(*split);
  const double isometry =
      max_abs_diff(multiply(v, v.adjoint()), ComplexMatrix::identity(split->n()));

  Results r;
  Table dev{"deviations", {"step", "deviation"}, {}};
  PlotSeries plot{"deviation", "step", "deviation", {}};
  std::vector<double> devs;
  if (factors.size() == 2) {
    const auto rep = factorization_check(pd, *split, steps);
    devs = rep.step_deviations;
    r.summary["conjugation_deviation"] = rep.conjugation_deviation;
    r.summary["max_deviation"] = rep.max_deviation;
  } else {
    const auto rep = coassoc_check(pd, *split, steps);
    devs = rep.step_deviations;
    r.summary["composite_deviation"] = rep.composite_deviation;
    r.summary["max_deviation"] = rep.max_deviation;
  }
  for (std::size_t k = 0; k < devs.size(); ++k) {
    dev.add_row({static_cast<std::int64_t>(k), devs[k]});
    plot.points.push_back({static_cast<double>(k), devs[k], ""});
  }
  r.summary["n"] = split->n();
  r.summary["crt_roundtrip"] = roundtrip;
  r.summary["v_delta_isometry_defect"] = isometry;
  r.tables = {std::move(dev), std::move(crt)};
  r.plots = {std::move(plot)};
  return r;
}

// ------------------------------------------------------------------- qrw

CoinSpec parse_coin(Params& p) {
  const auto coin = p.text("coin", "symmetric-hadamard");
  if (coin == "symmetric-hadamard") return CoinSpec::symmetric_hadamard();
  if (coin != "probabilities") {
    p.fail("coin", "expected \"symmetric-hadamard\" or \"probabilities\"");
  }
  const double pp = bounded(p, "p", 0.5, 0.0, 1.0);
  const cplx a(p.real("a_re", 1.0), p.real("a_im", 0.0));
  const cplx b(p.real("b_re", 0.0), p.real("b_im", 0.0));
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
    p.fail("a_re", "coin amplitudes must satisfy |a|^2 + |b|^2 = 1");
  }
  return CoinSpec::from_probabilities(pp, a, b);
}

Results run_qrw(Params& p, Rng&) {
  const auto which = p.text("scheme", "all");
  std::vector<Scheme> schemes;
  if (which == "all") {
    schemes = {Scheme::kCRW, Scheme::kQRW1, Scheme::kQRW2};
  } else if (auto s = scheme_from_string(which)) {
    schemes = {*s};
  } else {
    p.fail("scheme", "expected crw, qrw1, qrw2 or all");
  }
  const auto steps = static_cast<std::size_t>(ranged(p, "steps", 5, 0, 400));
  const bool has_qrw2 =
      std::find(schemes.begin(), schemes.end(), Scheme::kQRW2) != schemes.end();
  const std::size_t reach = has_qrw2 ? 2 * steps : steps;
  const auto size = static_cast<std::size_t>(
      ranged(p, "size", static_cast<long>(2 * reach + 3), 3, 1024));
  if (size < 2 * reach + 3) {
    p.fail("size", "must be at least " + std::to_string(2 * reach + 3) +
                       " so the walk does not wrap");
  }
  const CoinSpec coin = parse_coin(p);
  const auto k_coins = static_cast<unsigned>(ranged(p, "k_coins", 0, 0, 10));
  const auto k_size = static_cast<std::size_t>(ranged(p, "k_size", 7, 3, 64));
  p.reject_unknown();

  const WalkLattice lat(size, Boundary::kCyclic);
  const DensityMatrix rho0 = DensityMatrix::basis_state(size, lat.origin());

  Results r;
  Table moments{"moments",
                {"scheme", "step", "mean", "sigma", "sigma_classical",
                 "sigma_ratio", "entropy", "relation"},
                {}};
  Table pd_table{"pd", {"scheme", "step", "site", "probability"}, {}};
  nlohmann::json incomparable = nlohmann::json::object();
  for (Scheme s : schemes) {
    const std::string name(to_string(s));
    PlotSeries sigma_plot{"sigma_" + name, "step", "sigma", {}};
    PlotSeries entropy_plot{"entropy_" + name, "step", "entropy", {}};
    PlotSeries pd_plot{"pd_" + name, "site", "probability", {}};
    const auto series = evolve_series(s, coin, lat, rho0, steps);
    std::vector<std::int64_t> incomparable_steps;
    for (std::size_t n = 0; n <= steps; ++n) {
      const ProbVec pd = position_pd(series[n]);
      add_pd_rows(pd_table, pd_plot, name, n, pd, lat);
      const double sg = sigma(series[n].rho_w, lat);
      const double h = shannon_entropy(pd);
      sigma_plot.points.push_back({static_cast<double>(n), sg, ""});
      entropy_plot.points.push_back({static_cast<double>(n), h, ""});
      if (n == 0) continue;
      const double sc = std::sqrt(static_cast<double>(n));
      const auto v = majorizes(position_pd(series[n - 1]), pd);
      if (v.relation == MajorizationRelation::kIncomparable) {
        incomparable_steps.push_back(static_cast<std::int64_t>(n));
      }
      moments.add_row({name, static_cast<std::int64_t>(n),
                       distance_moment(series[n].rho_w,
                                       shift_operators(lat).distance, 1),
                       sg, sc, sg / sc, h, std::string(to_string(v.relation))});
    }
    incomparable[name] = incomparable_steps;
    r.plots.push_back(std::move(sigma_plot));
    r.plots.push_back(std::move(entropy_plot));
    r.plots.push_back(std::move(pd_plot));
  }
  const auto probs = coin_probabilities(coin);
  r.summary = {{"size", size},
               {"p_plus", probs.plus},
               {"p_minus", probs.minus},
               {"incomparable_steps", incomparable}};

  if (k_coins > 0) {
    const std::size_t cap = dimension_cap_from_env();
    const WalkLattice klat(k_size, Boundary::kCyclic);
    const auto ops = shift_operators(klat);
    const DensityMatrix w0 = DensityMatrix::basis_state(k_size, klat.origin());
    const KrausSet k1 = kraus_from_unitary(build_step_unitary(coin, klat), coin.psi());
    nlohmann::json ks = nlohmann::json::array();
    DensityMatrix iterated = w0;
    for (unsigned k = 1; k <= k_coins; ++k) {
      iterated = cptp_apply(k1, iterated);
      const auto u = unitarize_k(coin, ops.e_plus, ops.e_minus, k, cap);
      ComplexMatrix chain = u.w_chain.front();
      for (std::size_t i = 1; i < u.w_chain.size(); ++i) {
        chain = multiply(chain, u.w_chain[i]);
      }
      ks.push_back(
          {{"k", k},
           {"dimension", u.v_k.rows()},
           {"channel_deviation",
            max_abs_diff(k_coin_channel(u, coin, w0).matrix(), iterated.matrix())},
           {"w_chain_deviation", max_abs_diff(chain, u.v_k)}});
    }
    r.summary["unitarization"] = ks;
  }
  r.tables = {std::move(moments), std::move(pd_table)};
  return r;
}

// ---------------------------------------------------------------- cs-qrw

Results run_cs_qrw(Params& p, Rng&) {
  const auto m = static_cast<std::size_t>(ranged(p, "m", 64, 4, 512));
  const double pp = bounded(p, "p", 0.5, 0.0, 1.0);
  const cplx beta(p.real("beta_re", 0.1), p.real("beta_im", 0.0));
  if (std::norm(beta) > static_cast<double>(m) / 4.0) {
    p.fail("beta_re", "|beta|^2 must not exceed m/4");
  }
  const auto steps = static_cast<std::size_t>(ranged(p, "steps", 20, 0, kMaxSteps));
  p.reject_unknown();

  const FockSpace f(m);
  const DisplacementChannel channel(pp, beta, f);
  Results r;
  Table t{"steps",
          {"step", "mean_a_re", "mean_a_im", "mean_n", "trace", "top_population"},
          {}};
  PlotSeries n_plot{"mean_n", "step", "mean_n", {}};
  DensityMatrix rho = f.vacuum();
  for (std::size_t s = 0; s <= steps; ++s) {
    if (s > 0) rho = channel(rho);
    const cplx ma = expectation(rho.matrix(), f.a());
    const double mn = expectation(rho.matrix(), f.num()).real();
    t.add_row({static_cast<std::int64_t>(s), ma.real(), ma.imag(), mn,
               rho.matrix().trace().real(), f.top_population(rho.matrix())});
    n_plot.points.push_back({static_cast<double>(s), mn, ""});
  }
  r.summary = {{"m", m}, {"p", pp}};
  r.tables = {std::move(t)};
  r.plots = {std::move(n_plot)};
  return r;
}

// ------------------------------------------------------------- master-eq

MasterEqParams parse_master(Params& p, double c_re_default, double gamma_default) {
  return {cplx(p.real("c_re", c_re_default), p.real("c_im", 0.0)),
          cplx(p.real("gamma_re", gamma_default), p.real("gamma_im", 0.0))};
}

void check_stability_config(Params& p, const MasterEqParams& mp, double dt,
                            std::size_t m) {
  if (!(dt > 0.0)) p.fail("dt", "must be positive");
  if (dt * (std::abs(mp.c) + std::abs(mp.gamma) * static_cast<double>(m)) >= 0.05) {
    p.fail("dt", "dt (|c| + |gamma| m) must stay below 0.05");
  }
}

Results run_master_eq(Params& p, Rng&) {
  const auto m = static_cast<std::size_t>(ranged(p, "m", 40, 4, 256));
  const MasterEqParams mp = parse_master(p, 0.0, 0.05);
  const double t = bounded(p, "t", 1.0, 0.0, 100.0);
  const double dt = p.real("dt", 1e-3);
  check_stability_config(p, mp, dt, m);
  const auto samples = static_cast<std::size_t>(ranged(p, "samples", 10, 1, 10000));
  p.reject_unknown();

  const FockSpace f(m);
  Results r;
  Table table{"samples", {"time", "trace", "mean_a_re", "mean_a_im", "mean_n"}, {}};
  PlotSeries n_plot{"mean_n", "time", "mean_n", {}};
  DensityMatrix rho = f.vacuum();
  double drift = 0.0;
  for (std::size_t k = 0; k <= samples; ++k) {
    const double time = t * static_cast<double>(k) / static_cast<double>(samples);
    if (k > 0) {
      rho = integrate_master_eq(rho, mp, t / static_cast<double>(samples), dt, f);
    }
    const double tr = rho.matrix().trace().real();
    drift = std::max(drift, std::abs(tr - 1.0));
    const cplx ma = expectation(rho.matrix(), f.a());
    const double mn = expectation(rho.matrix(), f.num()).real();
    table.add_row({time, tr, ma.real(), ma.imag(), mn});
    n_plot.points.push_back({time, mn, ""});
  }
  r.summary = {{"m", m}, {"max_trace_drift", drift}};
  r.tables = {std::move(table)};
  r.plots = {std::move(n_plot)};
  return r;
}

// ------------------------------------------------------- diffusion-limit

Results run_diffusion_limit(Params& p, Rng&) {
  const auto m = static_cast<std::size_t>(ranged(p, "m", 40, 4, 256));
  const double c = p.real("c", 0.0);
  const double gamma = p.real("gamma", 0.05);
  if (!(gamma > 0.0)) p.fail("gamma", "must be positive");
  const double t = bounded(p, "t", 1.0, 1e-12, 100.0);
  const double dt = p.real("dt", 1e-3);
  check_stability_config(p, {c, gamma}, dt, m);
  const auto raw = p.integers("n_list", {8, 16, 32, 64});
  if (raw.empty()) p.fail("n_list", "must not be empty");
  std::vector<std::size_t> ns;
  for (long n : raw) {
    if (n < 1 || n > kMaxSteps) p.fail("n_list", "entries must lie in [1, 100000]");
    ns.push_back(static_cast<std::size_t>(n));
  }
  p.reject_unknown();

  const FockSpace f(m);
  const auto rep = diffusion_limit_check(c, gamma, t, ns, f, dt);
  Results r;
  Table table{"deviations", {"n", "alpha", "p", "deviation"}, {}};
  PlotSeries plot{"deviation", "n", "deviation", {}};
  bool decreasing = true;
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    const auto& pt = rep.points[i];
    table.add_row({static_cast<std::int64_t>(pt.n), pt.alpha, pt.p, pt.deviation});
    plot.points.push_back({static_cast<double>(pt.n), pt.deviation, ""});
    if (i > 0 && !(pt.deviation < rep.points[i - 1].deviation)) decreasing = false;
  }
  r.summary = {{"m", m},
               {"reference_trace_drift", rep.reference_trace_drift},
               {"strictly_decreasing", decreasing}};
  r.tables = {std::move(table)};
  r.plots = {std::move(plot)};
  return r;
}

// ---------------------------------------------------- majorization-audit

Results run_majorization_audit(Params& p, Rng& rng) {
  const auto trials = static_cast<std::size_t>(ranged(p, "trials", 50, 0, 100000));
  const auto max_dim = static_cast<std::size_t>(ranged(p, "max_dim", 8, 2, 256));
  const auto arw_trials = static_cast<std::size_t>(ranged(p, "arw_trials", 10, 0, 10000));
  const auto arw_size = static_cast<std::size_t>(ranged(p, "arw_size", 31, 2, kMaxSites));
  const auto arw_steps = static_cast<std::size_t>(ranged(p, "arw_steps", 30, 0, 10000));
  p.reject_unknown();

  std::uniform_int_distribution<std::size_t> dim_dist(2, max_dim);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto normalized = [&](std::size_t dim) {
    auto w = random_pd(dim, rng);
    return ProbVec::normalized(std::move(w));
  };

  Results r;
  Table pairs{"pairs", {"trial", "dim", "relation", "transforms", "residual",
                        "bistochastic"}, {}};
  std::size_t pair_failures = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t dim = dim_dist(rng);
    const ProbVec q = normalized(dim);
    std::vector<double> x(q.entries().begin(), q.entries().end());
    std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
    for (std::size_t s = 0; s < dim; ++s) {
      const std::size_t i = idx(rng);
      std::size_t j = idx(rng);
      if (i == j) j = (j + 1) % dim;
      const double t = unit(rng);
      const double xi = x[i], xj = x[j];
      x[i] = (1.0 - t) * xi + t * xj;
      x[j] = (1.0 - t) * xj + t * xi;
    }
    const ProbVec target = ProbVec::normalized(std::move(x));
    const auto verdict = majorizes(q, target);
    const auto chain = t_transform_chain(q, target);
    const double residual = max_abs_diff(
        apply(chain.matrix.matrix(), q.entries()), target.entries());
    const bool bi = is_bistochastic(chain.matrix, 1e-10);
    if (!(residual < 1e-10) || !bi || chain.transforms.size() + 1 > dim) {
      ++pair_failures;
    }
    pairs.add_row({static_cast<std::int64_t>(trial), static_cast<std::int64_t>(dim),
                   std::string(to_string(verdict.relation)),
                   static_cast<std::int64_t>(chain.transforms.size()), residual,
                   std::string(bi ? "true" : "false")});
  }

  Table arw{"arw", {"trial", "step", "entropy", "relation"}, {}};
  PlotSeries entropy_plot{"entropy", "step", "entropy", {}};
  std::size_t chain_violations = 0;
  const WalkLattice lat(arw_size, Boundary::kCyclic);
  for (std::size_t trial = 0; trial < arw_trials; ++trial) {
    const StochMatrix d = delta_matrix(normalized(arw_size), lat);
    ProbVec cur = ProbVec::point_mass(arw_size, lat.origin());
    double h_prev = shannon_entropy(cur);
    for (std::size_t s = 1; s <= arw_steps; ++s) {
      ProbVec next = step(d, cur);
      const auto v = majorizes(cur, next);
      const double h = shannon_entropy(next);
      if ((v.relation != MajorizationRelation::kXMajorizesY &&
           v.relation != MajorizationRelation::kEqual) ||
          h < h_prev - 1e-12) {
        ++chain_violations;
      }
      arw.add_row({static_cast<std::int64_t>(trial), static_cast<std::int64_t>(s),
                   h, std::string(to_string(v.relation))});
      entropy_plot.points.push_back(
          {static_cast<double>(s), h, "trial=" + std::to_string(trial)});
      h_prev = h;
      cur = std::move(next);
    }
  }
  r.summary = {{"pair_failures", pair_failures},
               {"chain_violations", chain_violations}};
  r.tables = {std::move(pairs), std::move(arw)};
  r.plots = {std::move(entropy_plot)};
  return r;
}

}  // namespace

std::size_t dimension_cap_from_env() {
  const char* v = std::getenv("QWALK_DIM_CAP");
  if (v == nullptr || *v == '\0') return 2048;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0' || cap == 0) {
    throw ConfigError("QWALK_DIM_CAP: expected a positive integer, got '" +
                      std::string(v) + "'");
  }
  return static_cast<std::size_t>(cap);
}

RunOutcome run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Params params(cfg.parameters);
  Rng rng(cfg.seed);
  RunOutcome out;
  switch (cfg.experiment) {
    case ExperimentKind::kClassical:
      out.results = run_classical(params, rng);
      break;
    case ExperimentKind::kZnFactor:
      out.results = run_zn_factor(params, rng);
      break;
    case ExperimentKind::kQrw:
      out.results = run_qrw(params, rng);
      break;
    case ExperimentKind::kCsQrw:
      out.results = run_cs_qrw(params, rng);
      break;
    case ExperimentKind::kMasterEq:
      out.results = run_master_eq(params, rng);
      break;
    case ExperimentKind::kDiffusionLimit:
      out.results = run_diffusion_limit(params, rng);
      break;
    case ExperimentKind::kMajorizationAudit:
      out.results = run_majorization_audit(params, rng);
      break;
  }
  out.resolved_parameters = params.resolved();
  out.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return out;
}

RunOutcome run_and_write(const ExperimentConfig& cfg) {
  RunOutcome out = run_experiment(cfg);
  write_results(out.results, cfg.out_path, cfg.format);
  emit_plot_data(out.results, cfg.out_path);

  ExperimentConfig resolved = cfg;
  resolved.parameters = out.resolved_parameters;
  const nlohmann::json meta = {{"config", to_json(resolved)},
                               {"version", std::string(kVersion)},
                               {"wall_time_seconds", out.wall_seconds}};
  std::ofstream f(cfg.out_path / "metadata.json", std::ios::binary);
  if (!f) throw Error("cannot write " + (cfg.out_path / "metadata.json").string());
  f << meta.dump(2) << '\n';
  return out;
}

}  // namespace qwalk
