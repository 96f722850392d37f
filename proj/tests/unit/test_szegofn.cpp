#include <gtest/gtest.h>

#include <cmath>

#include "opxlab/error.hpp"
#include "opxlab/poly.hpp"
#include "opxlab/schur.hpp"
#include "opxlab/szegofn.hpp"
#include "oracles.hpp"

using namespace opxlab;

namespace {

const std::vector<cplx> kPoints = {0.0, 0.3, cplx{0.0, 0.6}, cplx{-0.4, 0.2}, cplx{0.7, -0.5}, -0.85, cplx{0.1, 0.9}};

SzegoEvaluator evaluator(const VerblunskySequence& seq, std::size_t M = 256) {
  return SzegoEvaluator::from_chain(schur_chain(seq), seq, M);
}

}  // namespace

TEST(SzegoD, SingleLargeClosedForm) {
  const auto ev = evaluator(preset(Preset::SingleLarge));
  EXPECT_EQ(ev.sign(), -1);
  for (const cplx z : kPoints) EXPECT_LT(std::abs(szego_D(ev, z, 1e-11) - oracle::ex1_D(z)), 1e-9) << z;
  const cplx d0 = szego_D(ev, 0.0);
  EXPECT_GT(d0.real(), 0.0);
  EXPECT_LE(std::abs(d0.imag()), 1e-12);
}

TEST(SzegoD, AppendedGeronimusClosedForm) {
  const auto ev = evaluator(preset(Preset::AppendedGeronimus));
  for (const cplx z : kPoints) EXPECT_LT(std::abs(szego_D(ev, z, 1e-11) - oracle::ex2_D(z)), 1e-9) << z;
  EXPECT_NEAR(szego_D(ev, 0.0, 1e-12).real(), oracle::ex2_D0(), 1e-10);
}

TEST(SzegoD, AgreesWithBruteForceQuadrature) {
  const auto ev = evaluator(preset(Preset::AppendedGeronimus));
  for (const cplx z : {cplx{0.2, 0.1}, cplx{-0.5, 0.3}})
    EXPECT_LT(std::abs(szego_D(ev, z, 1e-12) - oracle::szego_D(oracle::ex2_reF, -1.0, z)), 1e-9);
}

TEST(SzegoD, ZeroSequenceIsOne) {
  const auto ev = evaluator(preset(Preset::ClassicalZero), 16);
  for (const cplx z : kPoints) EXPECT_LT(std::abs(szego_D(ev, z) - 1.0), 1e-14);
}

TEST(SzegoD, QuadratureErrorShrinksWithGrid) {
  const auto seq = preset(Preset::AppendedGeronimus);
  const auto ch = schur_chain(seq);
  const cplx z{0.5, 0.3};
  double prev = 1.0;
  for (std::size_t M : {16u, 32u, 64u}) {
    const SzegoEvaluator ev = SzegoEvaluator::from_chain(ch, seq, M);
    const auto r = szego_D_detail(ev, z, 1.0);  // a single level, no doubling
    const double err = std::abs(r.value - oracle::ex2_D(z));
    EXPECT_LT(err, 0.5 * prev);
    prev = err;
  }
}

TEST(SzegoD, ErrorPaths) {
  const auto ev = evaluator(preset(Preset::SingleLarge), 64);
  EXPECT_THROW(szego_D(ev, 0.9999999), Error);
  EXPECT_THROW(szego_D(ev, 1.5), Error);
  try {
    SzegoEvaluator bad([](double) { return -1.0; }, 1, 64);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SingularNode);
  }
}

TEST(LogFourier, ZeroModeIsLogOfDAtOriginSquared) {
  const auto ev = evaluator(preset(Preset::SingleLarge), 1024);
  EXPECT_NEAR(log_fourier(ev, 0).real(), 2.0 * std::log(std::sqrt(3.0) / 2.0), 1e-12);
  // real boundary data: Hermitian modes
  EXPECT_LT(std::abs(log_fourier(ev, 1) - std::conj(log_fourier(ev, -1))), 1e-14);
}

TEST(RelativeSzego, TelescopesToReF) {
  for (Preset p : {Preset::SingleLarge, Preset::AppendedGeronimus}) {
    const auto seq = preset(p);
    const auto ch = schur_chain(seq);
    for (int k = 0; k < 32; ++k) {
      const double t = 0.2 * k + 0.05;
      EXPECT_NEAR(telescoped_reF(seq, ch, t), reF_at(ch, t), 1e-10 * std::max(1.0, std::abs(reF_at(ch, t))));
    }
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto head = oracle::random_head(seed, 6, 2, false);
    const auto seq = validate(head, ZeroBeyond{6});
    const auto ch = schur_chain(seq);
    for (int k = 0; k < 16; ++k) {
      const double t = 0.39 * k + 0.01;
      const double want = reF_at(ch, t);
      EXPECT_NEAR(telescoped_reF(seq, ch, t), want, 1e-8 * std::max(1.0, std::abs(want))) << seed;
    }
  }
}

TEST(Convergence, SingleLargeIsExactForEveryN) {
  const auto seq = preset(Preset::SingleLarge);
  const auto ev = evaluator(seq, 1024);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_LT(l1_error(seq, n, ev), 1e-10);
    for (int k = -2; k <= 2; ++k) EXPECT_LT(weak_error(seq, n, k, ev), 1e-10);
  }
  EXPECT_THROW(l1_error(seq, 0, ev), Error);
}

TEST(Convergence, AppendedGeronimusDecreases) {
  const auto seq = preset(Preset::AppendedGeronimus);
  const auto ev = evaluator(seq, 1024);
  const auto B = stabilized_blaschke(seq, 16).B;
  double l1 = 1e9, ps = 1e9;
  std::vector<double> weak(5, 1e9);
  for (int n : {4, 8, 16}) {
    const double e = l1_error(seq, n, ev);
    EXPECT_LT(e, l1);
    l1 = e;
    for (int k = -2; k <= 2; ++k) {
      const double w = weak_error(seq, n, k, ev);
      EXPECT_LT(w, weak[static_cast<std::size_t>(k + 2)]) << "k " << k << " n " << n;
      weak[static_cast<std::size_t>(k + 2)] = w;
    }
    const double p = phi_star_limit_error(seq, n, cplx{0.3, 0.2}, B, ev);
    EXPECT_LT(p, ps);
    ps = p;
  }
  EXPECT_LT(l1, 1e-5);
  const auto rows = convergence_report(seq, {4, 8, 16}, cplx{0.3, 0.2}, ev, B);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2].n, 16);
  EXPECT_DOUBLE_EQ(rows[2].l1_error, l1);
}

TEST(Blaschke, StabilizedLimits) {
  const auto s1 = stabilized_blaschke(preset(Preset::SingleLarge), 16);
  EXPECT_NEAR(s1.B(0.0).real(), 0.5, 1e-12);
  EXPECT_EQ(s1.stabilization_index, 2);
  for (const cplx z : kPoints) EXPECT_LT(std::abs(s1.B(z) - (1.0 - 2.0 * z) / (2.0 - z)), 1e-12);

  const auto seq = preset(Preset::AppendedGeronimus);
  const auto chain = szego_chain(seq, 16);
  double prev = 1.0;
  for (int n = 2; n <= 16; n += 2) {
    const auto inside = split_by_disk(roots(chain[static_cast<std::size_t>(n)].phi_star)).inside;
    ASSERT_EQ(inside.size(), 1u) << n;
    const double d = std::abs(inside[0] - oracle::ex2_pole());
    EXPECT_LE(d, prev);
    prev = d;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(StarRatio, NearZeroDenominator) {
  const auto seq = preset(Preset::SingleLarge);
  EXPECT_THROW(star_ratio_error(seq, 4, 0.5), Error);
  EXPECT_LT(star_ratio_error(seq, 4, 0.2), 1e-14);
}
