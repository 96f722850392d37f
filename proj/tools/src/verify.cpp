#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "opxlab/cli.hpp"
#include "opxlab/closed_form.hpp"
#include "opxlab/error.hpp"
#include "opxlab/grid.hpp"
#include "opxlab/io.hpp"
#include "opxlab/parallel.hpp"
#include "opxlab/poly.hpp"
#include "opxlab/schur.hpp"
#include "opxlab/szegofn.hpp"
#include "opxlab/szegomap.hpp"

namespace opxlab::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStrictlyDecreasing = 1.0 - 1e-9;
constexpr double kSqrt2 = std::numbers::sqrt2;

struct Measure {
  double value = 0.0;
  std::string detail;
};

struct CheckDef {
  const char* id;
  double threshold;
  unsigned suites;  // bitmask over Suite
  std::function<Measure(const RunConfig&)> run;
};

constexpr unsigned bit(Suite s) { return 1u << static_cast<unsigned>(s); }
constexpr unsigned kAlg = bit(Suite::Algebraic);
constexpr unsigned kAsy = bit(Suite::Asymptotic);
constexpr unsigned kMap = bit(Suite::Map);
constexpr unsigned kEx = bit(Suite::Examples);

double max_ratio(const std::vector<double>& v) {
  double worst = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) worst = std::max(worst, v[i] / v[i - 1]);
  return worst;
}

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

VerblunskySequence random_seq(std::uint64_t seed, bool real, int spikes, std::size_t length = 8) {
  RandomSzegoParams p;
  p.seed = seed;
  p.real = real;
  p.spikes = spikes;
  p.length = length;
  return preset(Preset::RandomSzego, p);
}

// Loop body over random seeds, keeping the worst value and the seed that produced it.
template <class Fn>
Measure worst_over_seeds(const RunConfig& cfg, std::size_t count, std::uint64_t salt, Fn&& fn) {
  Measure m;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = cfg.seed * 1000003u + salt + i;
    const double v = fn(s);
    if (!(v <= m.value)) {
      m.value = std::isnan(v) ? kInf : v;
      m.detail = "worst seed " + std::to_string(s);
    }
  }
  return m;
}

CPoly laurent_poly(const PolynomialChain& chain, int n) {
  const auto sym = mapped_laurent(chain, n);
  return CPoly(std::vector<cplx>(sym.begin(), sym.end()));
}

// Deterministic disk samples with |z| <= r.
std::vector<cplx> disk_samples(std::uint64_t seed, std::size_t count, double r) {
  std::mt19937_64 rng(seed);
  std::vector<cplx> zs;
  for (std::size_t i = 0; i < count; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double t = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
    zs.push_back(std::polar(r * std::sqrt(u), t));
  }
  return zs;
}

const std::vector<cplx>& d_points() {
  static const std::vector<cplx> pts = {{0.0, 0.0},  {0.3, 0.0},   {-0.5, 0.0}, {0.0, 0.6},   {0.2, -0.4},
                                        {-0.3, 0.3}, {0.7, 0.1},   {-0.6, -0.5}, {0.45, 0.45}, {0.05, -0.8}};
  return pts;
}

double max_recurrence_gap(const VerblunskySequence& seq, std::size_t K) {
  const PolynomialChain chain = szego_chain(seq, static_cast<int>(2 * K));
  std::vector<RealPoly> P;
  for (std::size_t n = 0; n <= K; ++n) P.push_back(map_P(chain, static_cast<int>(n)));
  const Recurrence oracle = recurrence_from_P(P);
  const Recurrence gr = geronimus(seq, K);
  double worst = 0.0;
  for (std::size_t i = 0; i < oracle.b.size(); ++i) worst = std::max(worst, rel(gr.b[i], oracle.b[i]));
  for (std::size_t i = 0; i < oracle.c.size(); ++i) worst = std::max(worst, rel(gr.c[i], oracle.c[i]));
  return worst;
}

GenJacobiSystem system_for(const VerblunskySequence& seq, std::size_t K) {
  const Recurrence r = geronimus(seq, K);
  return build_system(r.b, r.c);
}

Measure cnr_worst(Preset p, std::size_t K) {
  const auto seq = preset(p);
  const SchurChain chain = schur_chain(seq);
  const GenJacobiSystem sys = system_for(seq, K + 1);
  static const std::vector<cplx> pts = {{0.3, 0.0}, {-0.4, 0.0}, {0.0, 0.25}, {0.2, 0.3}, {-0.35, -0.2}, {0.0, 0.6}};
  Measure m;
  for (const cplx z : pts)
    m.value = std::max(m.value, cnr_residual([&](cplx w) { return F_eval(chain, w); }, sys, z, K));
  return m;
}

std::vector<CheckDef> registry() {
  std::vector<CheckDef> defs;

  defs.push_back({"AC01.ex1_chain", 1e-12, kAlg | kEx, [](const RunConfig&) {
                    const PolynomialChain c = szego_chain(preset(Preset::SingleLarge), 30);
                    Measure m;
                    for (int n = 1; n <= 30; ++n) {
                      const CPoly want = CPoly::monomial(n) - CPoly::monomial(n - 1, 2.0);
                      m.value = std::max(m.value, max_coeff_diff(c[static_cast<std::size_t>(n)].phi, want));
                    }
                    return m;
                  }});

  defs.push_back({"AC02.ex1_bilinear_form", 1e-9, kEx, [](const RunConfig&) {
                    const PolynomialChain c = szego_chain(preset(Preset::SingleLarge), 10);
                    Measure m;
                    for (int i = 0; i <= 10; ++i)
                      for (int j = 0; j <= 10; ++j) {
                        const cplx got = single_large::geronimus_form(c[static_cast<std::size_t>(i)].phi,
                                                                      c[static_cast<std::size_t>(j)].phi, -1.0 / 3.0);
                        const double want = i == 0 && j == 0 ? -1.0 / 3.0 : (i == j ? 1.0 : 0.0);
                        m.value = std::max(m.value, std::abs(got - want));
                      }
                    return m;
                  }});

  defs.push_back({"AC03.ex1_szego_D", 1e-8, kAsy | kEx, [](const RunConfig& cfg) {
                    const auto seq = preset(Preset::SingleLarge);
                    const auto ev = SzegoEvaluator::from_chain(schur_chain(seq), seq, cfg.grid_M);
                    const auto cf = *closed_form(Preset::SingleLarge);
                    Measure m;
                    for (const cplx z : d_points()) m.value = std::max(m.value, std::abs(szego_D(ev, z, 1e-11) - cf.D(z)));
                    return m;
                  }});

  defs.push_back({"AC03.ex1_blaschke_B0", 1e-10, kAsy | kEx, [](const RunConfig&) {
                    const auto sb = stabilized_blaschke(preset(Preset::SingleLarge), 16);
                    return Measure{std::abs(sb.B(0.0) - 0.5), "zeros used " + std::to_string(sb.B.count())};
                  }});

  defs.push_back({"AC04.ex1_mapped_exact", 1e-12, kMap | kEx, [](const RunConfig&) {
                    const PolynomialChain c = szego_chain(preset(Preset::SingleLarge), 30);
                    Measure m;
                    for (int n = 0; n <= 15; ++n)
                      m.value = std::max(m.value, max_coeff_diff(laurent_poly(c, n), single_large::mapped_laurent_poly(n)));
                    return m;
                  }});

  defs.push_back({"AC04.ex1_mapped_rate", 0.25 * (1.0 + 1e-9), kMap | kEx, [](const RunConfig&) {
                    const PolynomialChain c = szego_chain(preset(Preset::SingleLarge), 30);
                    const CircleGrid g(256);
                    std::vector<double> sup;
                    for (int n = 1; n <= 15; ++n) {
                      // Subtract coefficientwise first; pointwise cancellation would swamp the tiny remainder.
                      const CPoly dev = laurent_poly(c, n) - CPoly(std::vector<cplx>{1.0, -2.0});
                      double s = 0.0;
                      for (std::size_t k = 0; k < g.size(); ++k) s = std::max(s, std::abs(dev(0.5 * g.node(k))));
                      sup.push_back(s);
                    }
                    return Measure{max_ratio(sup), "sup at n=15: " + io::fmt(sup.back())};
                  }});

  defs.push_back({"AC05.ex1_limit_at_pole", 1e-6, kAsy | kMap | kEx, [](const RunConfig&) {
                    const PolynomialChain c = szego_chain(preset(Preset::SingleLarge), 24);
                    const RealPoly P = map_P(c, 12);
                    return Measure{std::abs(mapped_value(P, 12, 0.5)), "n = 12"};
                  }});

  defs.push_back({"AC06.geronimus_examples", 1e-12, kAlg | kMap, [](const RunConfig&) {
                    const Recurrence r = geronimus(preset(Preset::SingleLarge), 2);
                    const double v = std::max({std::abs(r.b[0] - 4.0), std::abs(r.b[1] + 2.0), std::abs(r.c[0] + 6.0),
                                               std::abs(r.c[1] - 1.0)});
                    return Measure{v, "b1,b2,c1,c2 vs 4,-2,-6,1"};
                  }});

  defs.push_back({"AC06.geronimus_vs_oracle_presets", 1e-9, kAlg | kMap, [](const RunConfig&) {
                    Measure m;
                    for (Preset p : {Preset::SingleLarge, Preset::AppendedGeronimus, Preset::ClassicalZero})
                      m.value = std::max(m.value, max_recurrence_gap(preset(p), 10));
                    return m;
                  }});

  defs.push_back({"AC06.geronimus_vs_oracle_random", 1e-9, kAlg | kMap, [](const RunConfig& cfg) {
                    return worst_over_seeds(cfg, 100, 600, [](std::uint64_t s) {
                      return max_recurrence_gap(random_seq(s, true, 1 + static_cast<int>(s % 3)), 8);
                    });
                  }});

  defs.push_back({"AC07.ex2_szego_D", 1e-7, kAsy | kEx, [](const RunConfig& cfg) {
                    const auto seq = preset(Preset::AppendedGeronimus);
                    const auto ev = SzegoEvaluator::from_chain(schur_chain(seq), seq, cfg.grid_M);
                    const auto cf = *closed_form(Preset::AppendedGeronimus);
                    Measure m;
                    for (const cplx z : d_points()) m.value = std::max(m.value, std::abs(szego_D(ev, z, 1e-10) - cf.D(z)));
                    return m;
                  }});

  defs.push_back({"AC07.ex2_szego_D0", 1e-8, kAsy | kEx, [](const RunConfig& cfg) {
                    const auto seq = preset(Preset::AppendedGeronimus);
                    const auto ev = SzegoEvaluator::from_chain(schur_chain(seq), seq, cfg.grid_M);
                    const double want = std::sqrt(7.0) / ((2.0 * kSqrt2 + 1.0) * std::sqrt(4.0 - 2.0 * kSqrt2));
                    return Measure{std::abs(szego_D(ev, 0.0, 1e-11) - want), ""};
                  }});

  defs.push_back({"AC07.ex2_inside_zero", 1e-3, kAsy | kEx, [](const RunConfig&) {
                    const auto sb = stabilized_blaschke(preset(Preset::AppendedGeronimus), 16);
                    if (sb.B.count() != 1) return Measure{kInf, "inside zeros: " + std::to_string(sb.B.count())};
                    return Measure{std::abs(sb.B.zeros()[0] - 1.0 / (2.0 * kSqrt2 + 1.0)),
                                   "stabilized from n = " + std::to_string(sb.stabilization_index)};
                  }});

  auto ex2_errors = [](const RunConfig& cfg) {
    const auto seq = preset(Preset::AppendedGeronimus);
    const auto cf = *closed_form(Preset::AppendedGeronimus);
    const PolynomialChain c = szego_chain(seq, 32);
    const auto zs = disk_samples(cfg.seed + 8, 20, 0.8);
    std::vector<double> errs;
    for (int n : {4, 8, 12, 16}) {
      const CPoly L = laurent_poly(c, n);
      double e = 0.0;
      for (const cplx z : zs) e = std::max(e, std::abs(L(z) - cf.szego_limit(z)));
      errs.push_back(e);
    }
    return errs;
  };

  defs.push_back({"AC08.ex2_asymptotics_decreasing", kStrictlyDecreasing, kAsy | kEx, [ex2_errors](const RunConfig& cfg) {
                    return Measure{max_ratio(ex2_errors(cfg)), "max ratio of successive errors"};
                  }});

  defs.push_back({"AC08.ex2_asymptotics_n16", 5e-3, kAsy | kEx, [ex2_errors](const RunConfig& cfg) {
                    return Measure{ex2_errors(cfg).back(), ""};
                  }});

  defs.push_back({"AC08.ex2_limit_L0", 0.0, kAsy | kEx, [](const RunConfig&) {
                    const auto cf = *closed_form(Preset::AppendedGeronimus);
                    const PolynomialChain c = szego_chain(preset(Preset::AppendedGeronimus), 32);
                    double v = std::abs(cf.szego_limit(0.0) - 1.0) <= 4 * std::numeric_limits<double>::epsilon() ? 0.0 : kInf;
                    for (int n = 0; n <= 16; ++n) v = std::max(v, std::abs(laurent_poly(c, n)(0.0) - 1.0));
                    return Measure{v, "L(0) and z^nP_n at z=0"};
                  }});

  defs.push_back({"AC09.khrushchev_presets", 1e-9, kAlg, [](const RunConfig& cfg) {
                    const CircleGrid g(cfg.grid_M);
                    Measure m;
                    for (Preset p : {Preset::SingleLarge, Preset::AppendedGeronimus})
                      for (int n = 1; n <= 3; ++n) m.value = std::max(m.value, khrushchev_residual(preset(p), n, g));
                    return m;
                  }});

  defs.push_back({"AC09.khrushchev_random", 1e-9, kAlg, [](const RunConfig& cfg) {
                    const CircleGrid g(256);
                    return worst_over_seeds(cfg, 50, 900, [&](std::uint64_t s) {
                      const auto seq = random_seq(s, false, 2);
                      const SchurChain ch = schur_chain(seq);
                      double v = 0.0;
                      for (int n = 1; n <= 3; ++n) v = std::max(v, khrushchev_residual(ch, seq, n, g));
                      return v;
                    });
                  }});

  defs.push_back({"AC10.cnr_ex1", 1e-6, kMap | kEx, [](const RunConfig&) { return cnr_worst(Preset::SingleLarge, 128); }});
  defs.push_back({"AC10.cnr_zero", 1e-6, kMap | kEx, [](const RunConfig&) { return cnr_worst(Preset::ClassicalZero, 128); }});
  defs.push_back({"AC10.cnr_ex2", 1e-5, kMap | kEx, [](const RunConfig&) { return cnr_worst(Preset::AppendedGeronimus, 128); }});

  defs.push_back({"AC11.tail_exact", 0.0, kAlg | kMap, [](const RunConfig& cfg) {
                    auto gap = [](const VerblunskySequence& seq) {
                      const std::size_t M = seq.tail_start();
                      const Recurrence r = geronimus(seq, M + 24);
                      double v = 0.0;
                      for (std::size_t k = M + 3; k <= M + 24; ++k)
                        v = std::max({v, std::abs(r.b[k - 1]), std::abs(r.c[k - 1] - 1.0)});
                      return v;
                    };
                    Measure m = worst_over_seeds(cfg, 20, 1100, [&](std::uint64_t s) {
                      return gap(random_seq(s, true, static_cast<int>(s % 4)));
                    });
                    m.value = std::max({m.value, gap(preset(Preset::SingleLarge)), gap(preset(Preset::ClassicalZero))});
                    return m;
                  }});

  defs.push_back({"AC11.tail_ex2_k20", 1e-6, kMap | kEx, [](const RunConfig&) {
                    const Recurrence r = geronimus(preset(Preset::AppendedGeronimus), 20);
                    return Measure{std::max(std::abs(r.b[19]), std::abs(r.c[19] - 1.0)), "k = 20"};
                  }});

  defs.push_back({"AC12.ex1_l1_zero", 1e-10, kAsy | kEx, [](const RunConfig& cfg) {
                    const auto seq = preset(Preset::SingleLarge);
                    const auto ev = SzegoEvaluator::from_chain(schur_chain(seq), seq, cfg.grid_M);
                    Measure m;
                    for (int n = 1; n <= 20; ++n) m.value = std::max(m.value, l1_error(seq, n, ev));
                    return m;
                  }});

  defs.push_back({"AC12.ex2_weak_decreasing", kStrictlyDecreasing, kAsy | kEx, [](const RunConfig& cfg) {
                    const auto seq = preset(Preset::AppendedGeronimus);
                    const auto ev = SzegoEvaluator::from_chain(schur_chain(seq), seq, cfg.grid_M);
                    Measure m{0.0, "l1 and Fourier k in {0,+-1,+-2} over n = 4, 8, 16"};
                    std::vector<double> l1;
                    for (int n : {4, 8, 16}) l1.push_back(l1_error(seq, n, ev));
                    m.value = max_ratio(l1);
                    for (int k = -2; k <= 2; ++k) {
                      std::vector<double> w;
                      for (int n : {4, 8, 16}) w.push_back(weak_error(seq, n, k, ev));
                      m.value = std::max(m.value, max_ratio(w));
                    }
                    return m;
                  }});

  // Algebraic suite on 100 seeded random sequences; complex for even seeds, real for odd.
  auto alg_seq = [](std::uint64_t s) { return random_seq(s, s % 2 == 1, static_cast<int>(s % 4)); };

  defs.push_back({"AC13.monic_and_star_at_zero", 0.0, kAlg, [alg_seq](const RunConfig& cfg) {
                    return worst_over_seeds(cfg, 100, 1300, [&](std::uint64_t s) {
                      const PolynomialChain c = szego_chain(alg_seq(s), 16);
                      double v = 0.0;
                      for (const auto& p : c.pairs)
                        v = std::max({v, std::abs(p.phi.leading() - 1.0), std::abs(p.phi_star[0] - 1.0)});
                      return v;
                    });
                  }});

  defs.push_back({"AC13.reversal_involution", 0.0, kAlg, [alg_seq](const RunConfig& cfg) {
                    return worst_over_seeds(cfg, 100, 1300, [&](std::uint64_t s) {
                      const PolynomialChain c = szego_chain(alg_seq(s), 16);
                      double v = 0.0;
                      for (const auto& p : c.pairs)
                        v = std::max(v, max_coeff_diff(reverse(reverse(p.phi, p.n), p.n), p.phi));
                      return v;
                    });
                  }});

  defs.push_back({"AC13.star_is_reversal", PolynomialChain::kCertifyTol, kAlg, [alg_seq](const RunConfig& cfg) {
                    return worst_over_seeds(cfg, 100, 1300, [&](std::uint64_t s) {
                      const PolynomialChain c = szego_chain(alg_seq(s), 16);
                      return *std::max_element(c.cross_residual.begin(), c.cross_residual.end());
                    });
                  }});

  defs.push_back({"AC13.wronskian", 1e-10, kAlg, [alg_seq](const RunConfig& cfg) {
                    return worst_over_seeds(cfg, 100, 1300, [&](std::uint64_t s) {
                      const auto seq = alg_seq(s);
                      const PolynomialChain phi = szego_chain(seq, 16);
                      const PolynomialChain psi = second_kind_chain(seq, 16);
                      const SignedWeights w = weights(seq, 16);
                      double v = 0.0;
                      for (std::size_t n = 0; n < phi.size(); ++n) {
                        const CPoly a = phi[n].phi * psi[n].phi_star;
                        const CPoly b = phi[n].phi_star * psi[n].phi;
                        const int deg = static_cast<int>(n);
                        const CPoly want = CPoly::monomial(deg, 2.0 * w.omega(deg - 1));
                        const double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
                        v = std::max(v, max_coeff_diff(a + b, want) / scale);
                      }
                      return v;
                    });
                  }});

  defs.push_back({"AC13.real_coefficients", 1e-14, kAlg, [](const RunConfig& cfg) {
                    return worst_over_seeds(cfg, 100, 1300, [&](std::uint64_t s) {
                      const auto seq = random_seq(s, true, static_cast<int>(s % 4));
                      double v = 0.0;
                      const PolynomialChain chains[] = {szego_chain(seq, 16), second_kind_chain(seq, 16)};
                      for (const auto& c : chains)
                        for (const auto& p : c.pairs)
                          for (std::size_t k = 0; k <= static_cast<std::size_t>(p.n); ++k)
                            v = std::max({v, std::abs(p.phi[k].imag()), std::abs(p.phi_star[k].imag())});
                      return v;
                    });
                  }});

  defs.push_back({"AC13.gh_symmetric", 0.0, kAlg | kMap, [](const RunConfig& cfg) {
                    return worst_over_seeds(cfg, 100, 1300, [&](std::uint64_t s) {
                      return gh_asymmetry(system_for(random_seq(s, true, static_cast<int>(s % 4)), 24), 24);
                    });
                  }});

  defs.push_back({"AC13.delta_cascade", 0.0, kAlg | kMap, [](const RunConfig& cfg) {
                    return worst_over_seeds(cfg, 100, 1300, [&](std::uint64_t s) {
                      const int spikes = static_cast<int>(s % 4);
                      const GenJacobiSystem sys = system_for(random_seq(s, true, spikes), 24);
                      double bad = 0.0;
                      int negatives = 0;
                      for (std::size_t i = 0; i < sys.c.size(); ++i) {
                        if (sys.c[i] < 0.0) ++negatives;
                        if (sys.delta[i + 1] != sys.delta[i] * (sys.c[i] < 0.0 ? -1 : 1)) bad += 1.0;
                      }
                      if (negatives > spikes) bad += 1.0;
                      return bad;
                    });
                  }});

  defs.push_back({"AC13.quasi_definite", 1e-8, kAlg | kMap, [](const RunConfig& cfg) {
                    return worst_over_seeds(cfg, 100, 1300, [&](std::uint64_t s) {
                      const auto seq = random_seq(s, true, static_cast<int>(s % 4));
                      constexpr int K = 4;
                      const PolynomialChain chain = szego_chain(seq, 2 * K);
                      const auto gamma = gamma_moments(mu_moments(chain, 2 * K), 2 * K);
                      const Recurrence r = geronimus(seq, K);
                      double v = 0.0, prod = 1.0;
                      for (int n = 0; n <= K; ++n) {
                        if (n > 0) prod *= r.c[static_cast<std::size_t>(n - 1)];
                        const double got = gamma_norm(gamma, map_P(chain, n));
                        if (got == 0.0) return kInf;
                        v = std::max(v, std::abs(got - prod) / std::abs(prod));
                      }
                      return v;
                    });
                  }});

  auto moment_gap = [](std::uint64_t s, bool maclaurin) {
    const auto seq = random_seq(s, false, 0);
    constexpr std::size_t K = 12;
    const int M = static_cast<int>(seq.tail_start());
    const PolynomialChain chain = szego_chain(seq, std::max<int>(M, K));
    const MomentTable mu = mu_moments(chain, K);
    double v = 0.0;
    if (maclaurin) {
      const auto F = maclaurin_F(schur_chain(seq), K);
      for (std::size_t n = 1; n <= K; ++n) v = std::max(v, std::abs(F[n] - 2.0 * std::conj(mu.at(static_cast<long>(n)))));
      return v;
    }
    const SignedWeights w = weights(seq, M);
    const CPoly& phi = chain[static_cast<std::size_t>(M)].phi;
    const CircleGrid g(512);
    for (std::size_t n = 0; n <= K; ++n) {
      cplx acc{};
      for (std::size_t k = 0; k < g.size(); ++k) {
        const cplx e = g.node(k);
        acc += std::pow(e, static_cast<int>(n)) * w.omega(M - 1) / std::norm(phi(e));
      }
      acc /= static_cast<double>(g.size());
      v = std::max(v, std::abs(acc - mu.at(static_cast<long>(n))));
    }
    return v;
  };

  defs.push_back({"AC14.moments_vs_bernstein_szego", 1e-10, kAlg, [moment_gap](const RunConfig& cfg) {
                    return worst_over_seeds(cfg, 20, 1400, [&](std::uint64_t s) { return moment_gap(s, false); });
                  }});

  defs.push_back({"AC14.moments_vs_maclaurin", 1e-10, kAlg, [moment_gap](const RunConfig& cfg) {
                    return worst_over_seeds(cfg, 20, 1400, [&](std::uint64_t s) { return moment_gap(s, true); });
                  }});

  return defs;
}

std::vector<CheckDef> user_checks(const VerblunskySequence& seq) {
  std::vector<CheckDef> defs;
  defs.push_back({"SEQ.monic_and_star_at_zero", 0.0, 0, [seq](const RunConfig& cfg) {
                    const PolynomialChain c = szego_chain(seq, cfg.nmax);
                    Measure m;
                    for (const auto& p : c.pairs)
                      m.value = std::max({m.value, std::abs(p.phi.leading() - 1.0), std::abs(p.phi_star[0] - 1.0)});
                    return m;
                  }});
  defs.push_back({"SEQ.star_is_reversal", PolynomialChain::kCertifyTol, 0, [seq](const RunConfig& cfg) {
                    const PolynomialChain c = szego_chain(seq, cfg.nmax);
                    return Measure{*std::max_element(c.cross_residual.begin(), c.cross_residual.end()),
                                   "certified degree " + std::to_string(c.certified_degree)};
                  }});
  defs.push_back({"SEQ.wronskian", 1e-10, 0, [seq](const RunConfig& cfg) {
                    const PolynomialChain phi = szego_chain(seq, cfg.nmax);
                    const PolynomialChain psi = second_kind_chain(seq, cfg.nmax);
                    const SignedWeights w = weights(seq, cfg.nmax);
                    Measure m;
                    for (std::size_t n = 0; n < phi.size(); ++n) {
                      const CPoly a = phi[n].phi * psi[n].phi_star;
                      const CPoly b = phi[n].phi_star * psi[n].phi;
                      const int deg = static_cast<int>(n);
                      const double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
                      m.value = std::max(m.value, max_coeff_diff(a + b, CPoly::monomial(deg, 2.0 * w.omega(deg - 1))) / scale);
                    }
                    return m;
                  }});
  return defs;
}

}  // namespace

bool VerifyReport::all_pass() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass(); });
}

std::vector<std::string> suite_checks(Suite s) {
  std::vector<std::string> ids;
  for (const auto& d : registry())
    if (s == Suite::All || (d.suites & bit(s))) ids.emplace_back(d.id);
  return ids;
}

VerifyReport cmd_verify(const RunConfig& cfg, const std::optional<VerblunskySequence>& user) {
  std::vector<CheckDef> selected;
  for (auto& d : registry())
    if (cfg.suite == Suite::All || (d.suites & bit(cfg.suite))) selected.push_back(std::move(d));
  if (user)
    for (auto& d : user_checks(*user)) selected.push_back(std::move(d));

  std::vector<CheckResult> results(selected.size());
  parallel_for(selected.size(), [&](std::size_t i) {
    const CheckDef& d = selected[i];
    CheckResult r{d.id, kInf, d.threshold, ""};
    try {
      Measure m = d.run(cfg);
      r.measured = std::isnan(m.value) ? kInf : m.value;
      r.detail = std::move(m.detail);
    } catch (const Error& e) {
      r.detail = std::string(to_string(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results[i] = std::move(r);
  });
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
  return {std::move(results), config_json(cfg), std::string(version())};
}

std::string render_report(const VerifyReport& report, Format f) {
  if (f == Format::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.results)
      rows.push_back({{"check_id", r.check_id},
                      {"status", r.pass() ? "pass" : "fail"},
                      {"measured", io::fmt(r.measured)},
                      {"threshold", io::fmt(r.threshold)},
                      {"detail", r.detail}});
    nlohmann::json doc = {{"version", report.version},
                          {"config", nlohmann::json::parse(report.config_echo)},
                          {"all_pass", report.all_pass()},
                          {"results", rows}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# opxlab " << report.version << "\n# config " << report.config_echo << '\n';
  os << "check_id,status,measured,threshold,detail\n";
  for (const auto& r : report.results) {
    std::string detail = r.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    std::replace(detail.begin(), detail.end(), '\n', ' ');
    os << r.check_id << ',' << (r.pass() ? "pass" : "fail") << ',' << io::fmt(r.measured) << ','
       << io::fmt(r.threshold) << ',' << detail << '\n';
  }
  return os.str();
}

}  // namespace opxlab::cli
