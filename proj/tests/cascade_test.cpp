#include "qcascade/cascade.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qcascade/errors.hpp"
#include "qcascade/five_mode_example.hpp"

namespace qcascade {
namespace {

ModalForm scalar_modal(Complex p, Complex ht, Complex gt) {
  ModalForm mf;
  mf.m = 1;
  mf.poles = {p};
  mf.Ht = {CVector::Constant(1, ht)};
  mf.Gt = {CRowVector::Constant(1, gt)};
  mf.J = CMatrix::Identity(1, 1);
  return mf;
}

bool lower_triangular(const CMatrix& t) {
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < t.cols(); ++j) {
      if (t(i, j) != Complex{}) return false;
    }
  }
  return true;
}

TEST(CascadeRealize, SingleStageByHand) {
  // alpha = -|2|^2 / (2 Re p) = 4, H = 2 / 2 = 1, t = 1/2. For a lossless
  // scalar system Gt = -Ht^* / alpha = -1/2.
  const ModalForm mf = scalar_modal(-0.5, 2.0, -0.5);
  const CascadeRealization c = cascade_realize(mf);
  ASSERT_EQ(c.order(), 1u);
  EXPECT_NEAR(c.alphas[0], 4.0, 1e-15);
  EXPECT_LE(std::abs(c.stages[0].H(0) - 1.0), 1e-15);
  EXPECT_LE(std::abs(c.T(0, 0) - 0.5), 1e-15);

  const CascadeResiduals r = verify_cascade(mf, c);
  EXPECT_LE(r.f_residual, 1e-12);
  EXPECT_LE(r.g_residual, 1e-12);
  EXPECT_LE(r.h_residual, 1e-12);
  EXPECT_LE(r.transfer_mismatch, 1e-12);
}

TEST(CascadeRealize, RandomSystemsSatisfyCascadeIdentities) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const StateSpaceSystem s = random_physically_realizable(4, 2, seed).system;
    const ModalForm mf = to_modal(s);
    const CascadeRealization c = cascade_realize(mf);
    EXPECT_TRUE(lower_triangular(c.T));
    for (std::size_t i = 0; i < c.order(); ++i) {
      const CavityStage& st = c.stages[i];
      EXPECT_LE(std::abs(2.0 * st.p.real() + st.H.squaredNorm()), 1e-9 * std::abs(st.p));
      EXPECT_NEAR(c.T(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real(),
                  1.0 / std::sqrt(c.alphas[i]), 1e-12);
      EXPECT_GT(c.alphas[i], 0.0);
    }
    const CascadeResiduals r = verify_cascade(mf, c);
    EXPECT_LE(r.max(), 1e-7) << "seed " << seed;
  }
}

TEST(CascadeRealize, FiveModeExample) {
  const StateSpaceSystem s = assemble_from_physical(five_mode_example_params());
  const ModalForm mf = to_modal(s);
  const CascadeRealization c = cascade_realize(mf);
  const auto reported = five_mode_example_reported_poles();
  ASSERT_EQ(c.order(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_LE(std::abs(c.stages[i].p - reported[i]), 2e-3 + 1e-3 * std::abs(reported[i]));
  }
  EXPECT_LE(verify_cascade(mf, c).max(), 1e-7);
}

TEST(CascadeRealize, CorruptedStageIsDetected) {
  const StateSpaceSystem s = random_physically_realizable(5, 2, 3).system;
  const ModalForm mf = to_modal(s);
  CascadeRealization c = cascade_realize(mf);
  c.stages[0].H *= 1.01;
  EXPECT_GT(verify_cascade(mf, c).transfer_mismatch, 1e-3);
}

TEST(CascadeRealize, RejectsZeroOutputVectorAndNonLosslessInput) {
  ModalForm mf = scalar_modal(-1.0, 0.0, 1.0);
  mf.poles.push_back(-2.0);
  mf.Ht.push_back(CVector::Constant(1, 1.0));
  mf.Gt.push_back(CRowVector::Constant(1, 1.0));
  EXPECT_THROW(cascade_realize(mf), InvalidArgument);

  // A pole in the right half-plane gives a nonpositive alpha.
  EXPECT_THROW(cascade_realize(scalar_modal(0.5, 1.0, 1.0)), NumericalError);
}

TEST(CascadeRealize, GaugeInvariance) {
  const StateSpaceSystem s = random_physically_realizable(4, 2, 12).system;
  const ModalForm mf = to_modal(s);
  ModalForm rotated = mf;
  for (std::size_t i = 0; i < rotated.order(); ++i) {
    const Complex phase = std::polar(1.0, 0.7 * static_cast<double>(i + 1));
    rotated.Ht[i] *= phase;
    rotated.Gt[i] /= phase;
  }
  const CascadeRealization a = cascade_realize(mf);
  const CascadeRealization b = cascade_realize(rotated);
  const Complex z(0.0, 0.8);
  for (std::size_t i = 0; i < a.order(); ++i) {
    const CMatrix pa = a.stages[i].H * a.stages[i].H.adjoint();
    const CMatrix pb = b.stages[i].H * b.stages[i].H.adjoint();
    EXPECT_LE(spectral_norm(pa - pb), 1e-10);
    EXPECT_LE(spectral_norm(stage_transfer_at(a.stages[i], z) - stage_transfer_at(b.stages[i], z)),
              1e-10);
  }
}

TEST(CascadeStateSpace, SingleStage) {
  const StateSpaceSystem s = cascade_state_space({CavityStage{-0.5, CVector::Constant(1, 1.0)}}, 1);
  EXPECT_EQ(s.F(0, 0), Complex(-0.5, 0.0));
  EXPECT_EQ(s.G(0, 0), Complex(-1.0, 0.0));
  EXPECT_EQ(s.Hbar(0, 0), Complex(1.0, 0.0));
  EXPECT_EQ(s.J(0, 0), Complex(1.0, 0.0));
}

TEST(CascadeStateSpace, SubdiagonalPlacement) {
  CVector h1(2), h2(2);
  h1 << Complex(1.0, 0.5), 0.25;
  h2 << Complex(0.0, 1.0), Complex(2.0, -1.0);
  const StateSpaceSystem s =
      cascade_state_space({CavityStage{{-0.5 * h1.squaredNorm(), 1.0}, h1},
                           CavityStage{{-0.5 * h2.squaredNorm(), -2.0}, h2}},
                          2);
  EXPECT_EQ(s.F(1, 0), -h2.dot(h1));
  EXPECT_EQ(s.F(0, 1), Complex{});
  const RealizabilityReport r = check_physical_realizability(s);
  EXPECT_TRUE(r.is_realizable);
  EXPECT_LE(r.residual_lyapunov, 1e-9);
  EXPECT_LE(r.residual_coupling, 1e-9);
}

TEST(CascadeStateSpace, RandomCascadesAreRealizableAndLossless) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const StateSpaceSystem s = random_physically_realizable(5, 3, seed).system;
    const StateSpaceSystem c = cascade_state_space(cascade_realize(to_modal(s)));
    const RealizabilityReport r = check_physical_realizability(c);
    EXPECT_TRUE(r.is_realizable);
    EXPECT_LE(std::max(r.residual_lyapunov, r.residual_coupling), 1e-9);
    EXPECT_TRUE(check_lossless_bounded_real(c, FrequencyGrid::default_grid()).is_lossless);
  }
}

TEST(StageTransfer, ScalarAndUnitary) {
  const CavityStage st{-0.5, CVector::Constant(1, 1.0)};
  EXPECT_LE(std::abs(stage_transfer_at(st, 0.0)(0, 0) + 1.0), 1e-15);
  EXPECT_THROW(stage_transfer_at(st, -0.5), SingularMatrixError);

  CVector h(3);
  h << Complex(0.3, -1.2), 0.7, Complex(0.0, 2.0);
  const CavityStage wide{Complex(-0.5 * h.squaredNorm(), 4.0), h};
  for (double w : {0.0, 0.1, 3.9, 4.0, 100.0}) {
    const CMatrix k = stage_transfer_at(wide, Complex(0.0, w));
    EXPECT_LE(spectral_norm(k.adjoint() * k - CMatrix::Identity(3, 3)), 1e-12);
  }
}

TEST(StageTransfer, ProductReproducesOriginal) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> freq(0.0, 30.0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const StateSpaceSystem s = random_physically_realizable(5, 2, seed).system;
    const CascadeRealization c = cascade_realize(to_modal(s));
    for (int k = 0; k < 20; ++k) {
      const Complex z(0.0, freq(rng));
      const CMatrix prod = s.J * cascade_product_at(c.stages, 0, c.order(), z, 2);
      EXPECT_LE(spectral_norm(transfer_at(s, z) - prod), 1e-8);
    }
  }
}

TEST(MirrorParams, PolarForm) {
  CVector h(2);
  h << 1.0, Complex(0.0, 1.0);
  const CavityMirrorParams mp = cavity_mirror_params(CavityStage{Complex(-1.0, 2.0), h});
  EXPECT_NEAR(mp.kappas[0], 1.0, 1e-15);
  EXPECT_NEAR(mp.kappas[1], 1.0, 1e-15);
  EXPECT_NEAR(mp.thetas[0], 0.0, 1e-15);
  EXPECT_NEAR(mp.thetas[1], std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(mp.gamma, 2.0, 1e-15);
  EXPECT_NEAR(mp.delta, 2.0, 1e-15);
}

TEST(MirrorParams, ZeroComponent) {
  CVector h(2);
  h << std::polar(std::sqrt(3.0), std::numbers::pi / 4), 0.0;
  const CavityMirrorParams mp = cavity_mirror_params(CavityStage{Complex(-1.5, 0.0), h});
  EXPECT_NEAR(mp.kappas[0], 3.0, 1e-14);
  EXPECT_EQ(mp.kappas[1], 0.0);
  EXPECT_NEAR(mp.thetas[0], std::numbers::pi / 4, 1e-15);
  EXPECT_EQ(mp.thetas[1], 0.0);
  EXPECT_EQ(mp.delta, 0.0);
  EXPECT_NEAR(mp.gamma, 3.0, 1e-15);
}

TEST(MirrorParams, RoundTripAndInvariants) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CascadeRealization c =
        cascade_realize(to_modal(random_physically_realizable(4, 3, seed).system));
    for (const CavityStage& st : c.stages) {
      const CavityMirrorParams mp = cavity_mirror_params(st);
      double kappa_sum = 0.0;
      for (double k : mp.kappas) kappa_sum += k;
      EXPECT_NEAR(mp.gamma, kappa_sum, 1e-10 * std::max(1.0, mp.gamma));
      const CavityStage back = stage_from_mirror_params(mp);
      EXPECT_LE(std::abs(back.p - st.p), 1e-12 * std::max(1.0, std::abs(st.p)));
      EXPECT_LE((back.H - st.H).norm(), 1e-12 * std::max(1.0, st.H.norm()));
    }
  }
}

TEST(MirrorParams, RejectsInconsistentStage) {
  EXPECT_THROW(cavity_mirror_params(CavityStage{-1.0, CVector::Constant(1, 1.0)}), InvalidArgument);
  EXPECT_THROW(cavity_mirror_params(CavityStage{-1.0, CVector::Zero(1)}), InvalidArgument);
}

}  // namespace
}  // namespace qcascade
