#include <gtest/gtest.h>

#include <cmath>

#include "opxlab/error.hpp"
#include "opxlab/grid.hpp"
#include "opxlab/poly.hpp"
#include "opxlab/schur.hpp"
#include "oracles.hpp"

using namespace opxlab;

namespace {

const std::vector<cplx> kPoints = {0.0, 0.3, cplx{0.0, 0.6}, cplx{-0.4, 0.2}, cplx{0.7, -0.5}, -0.85};

}  // namespace

TEST(Grid, MidpointNodes) {
  const CircleGrid g(16);
  EXPECT_DOUBLE_EQ(g.theta(0), oracle::kPi / 16.0);
  EXPECT_THROW(CircleGrid(24), Error);
  EXPECT_THROW(CircleGrid(8), Error);
}

TEST(SchurChain, SingleLargeF) {
  const auto ch = schur_chain(preset(Preset::SingleLarge));
  for (const cplx z : kPoints) EXPECT_LT(std::abs(F_eval(ch, z) - (1.0 + 2.0 * z) / (1.0 - 2.0 * z)), 1e-13);
  for (int k = 0; k < 50; ++k) EXPECT_NEAR(reF_at(ch, 0.13 * k), oracle::ex1_reF(0.13 * k), 1e-13);
  EXPECT_THROW(F_eval(ch, 0.5), Error);
}

TEST(SchurChain, AppendedGeronimusMatchesPointwiseOracle) {
  const auto ch = schur_chain(preset(Preset::AppendedGeronimus));
  for (const cplx z : kPoints) EXPECT_LT(std::abs(F_eval(ch, z) - oracle::ex2_F(z)), 1e-12);
  for (int k = 0; k < 50; ++k) EXPECT_NEAR(reF_at(ch, 0.13 * k), oracle::ex2_reF(0.13 * k), 1e-12);
}

TEST(SchurChain, RandomFiniteSequencesMatchPointwiseOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto head = oracle::random_head(seed, 6, 2, false);
    const auto ch = schur_chain(validate(head, ZeroBeyond{6}));
    for (const cplx z : kPoints) {
      const cplx want = oracle::F_finite(oracle::finite(head), 6, z);
      if (std::abs(want) > 1e6) continue;
      EXPECT_LT(std::abs(F_eval(ch, z) - want), 1e-10 * std::max(1.0, std::abs(want))) << "seed " << seed;
    }
  }
}

TEST(SchurChain, SchurBoundBeyondN) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto head = oracle::random_head(seed, 7, 2, false);
    const auto seq = validate(head, ZeroBeyond{7});
    const auto ch = schur_chain(seq);
    const CircleGrid g(512);
    for (std::size_t n = seq.indefinite_length(); n < ch.f.size(); ++n)
      for (std::size_t k = 0; k < g.size(); ++k) EXPECT_LE(std::abs(ch.f[n](0.99 * g.node(k))), 1.0 + 1e-9);
  }
}

TEST(SchurChain, SignCorrectedRealPartIsNonnegative) {
  const CircleGrid g(512);
  for (Preset p : {Preset::SingleLarge, Preset::AppendedGeronimus, Preset::ClassicalZero}) {
    const auto seq = preset(p);
    const auto bf = reF_boundary(schur_chain(seq), seq, g);
    for (double v : bf.values) EXPECT_GE(bf.sign_flag * v, -1e-9);
  }
}

TEST(SchurChain, RealOnRealAxisForRealCoefficients) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto head = oracle::random_head(seed, 6, 1, true);
    const auto ch = schur_chain(validate(head, ZeroBeyond{6}));
    for (double x = -0.29; x < 0.3; x += 0.02) {
      try {
        EXPECT_LE(std::abs(F_eval(ch, x).imag()), 1e-12);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::PoleOfF);
      }
    }
  }
}

TEST(Khrushchev, ResidualSmallAndIndependentOfN) {
  const CircleGrid g(256);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto head = oracle::random_head(seed, 8, 2, false);
    const auto seq = validate(head, ZeroBeyond{8});
    const auto ch = schur_chain(seq);
    double prev = -1.0;
    for (int n = 1; n <= 5; ++n) {
      const double r = khrushchev_residual(ch, seq, n, g);
      EXPECT_LT(r, 1e-9) << "seed " << seed << " n " << n;
      if (prev >= 0.0) EXPECT_LT(std::abs(r - prev), 1e-9);
      prev = r;
    }
  }
  for (Preset p : {Preset::SingleLarge, Preset::AppendedGeronimus})
    for (int n = 1; n <= 3; ++n) EXPECT_LT(khrushchev_residual(preset(p), n, g), 1e-9);
}

TEST(Khrushchev, BoundaryFromIdentityMatchesClosedForm) {
  const auto seq = preset(Preset::SingleLarge);
  const CircleGrid g(64);
  const auto bf = reF_boundary_khrushchev(schur_chain(seq), seq, 3, g);
  for (std::size_t k = 0; k < g.size(); ++k) EXPECT_NEAR(bf.values[k], oracle::ex1_reF(g.theta(k)), 1e-12);
  EXPECT_EQ(bf.sign_flag, -1);
}

TEST(Maclaurin, CoefficientsOfSingleLarge) {
  const auto c = maclaurin_F(schur_chain(preset(Preset::SingleLarge)), 20);
  EXPECT_EQ(c[0], cplx(1.0));
  for (std::size_t n = 1; n <= 20; ++n) EXPECT_NEAR(c[n].real(), 2.0 * std::ldexp(1.0, static_cast<int>(n)), 1e-9);
}

TEST(Maclaurin, MatchesPointwiseF) {
  const auto head = oracle::random_head(3, 5, 0, false);
  const auto c = maclaurin_F(schur_chain(validate(head, ZeroBeyond{5})), 60);
  const cplx z{0.2, 0.1};
  cplx sum{};
  for (std::size_t n = c.size(); n-- > 0;) sum = sum * z + c[n];
  EXPECT_LT(std::abs(sum - oracle::F_finite(oracle::finite(head), 5, z)), 1e-12);
}

TEST(Truncation, ConvergesOrReports) {
  RandomSzegoParams p;
  p.seed = 5;
  p.length = 60;
  p.tail = RandomTail::Truncate;
  const auto seq = preset(Preset::RandomSzego, p);
  const auto ch = schur_chain(seq);
  EXPECT_LT(ch.truncation_error, 1e-8);
  std::vector<cplx> head(16, 0.5);
  head[0] = 2.0;
  EXPECT_THROW(schur_chain(validate(head, Truncate{8, 1e-8})), Error);
}
