#include "qcascade/modal.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "qcascade/errors.hpp"

namespace qcascade {
namespace {

TEST(ToModal, OrdersDiagonalPolesByMagnitude) {
  StateSpaceSystem s;
  s.F = CMatrix::Zero(2, 2);
  s.F(0, 0) = -2.0;
  s.F(1, 1) = -1.0;
  s.G = CMatrix(2, 1);
  s.G << 1.0, Complex(0.0, 2.0);
  s.Hbar = CMatrix(1, 2);
  s.Hbar << 3.0, 4.0;
  s.J = CMatrix::Identity(1, 1);
  const ModalForm mf = to_modal(s);
  ASSERT_EQ(mf.order(), 2u);
  EXPECT_LE(std::abs(mf.poles[0] - Complex(-1.0, 0.0)), 1e-14);
  EXPECT_LE(std::abs(mf.poles[1] - Complex(-2.0, 0.0)), 1e-14);
  // Residue of the pole at -1 is Hbar_2 G_2 = 4 * 2j.
  EXPECT_LE(std::abs((mf.Ht[0] * mf.Gt[0])(0, 0) - Complex(0.0, 8.0)), 1e-13);
}

TEST(ToModal, ScalarCavity) {
  StateSpaceSystem s;
  s.F = CMatrix::Constant(1, 1, -0.5);
  s.G = CMatrix::Constant(1, 1, -1.0);
  s.Hbar = CMatrix::Constant(1, 1, 1.0);
  s.J = CMatrix::Identity(1, 1);
  const ModalForm mf = to_modal(s);
  ASSERT_EQ(mf.order(), 1u);
  EXPECT_EQ(mf.poles[0], Complex(-0.5, 0.0));
  EXPECT_LE(std::abs(mf.Ht[0](0) - 1.0), 1e-15);
  EXPECT_LE(std::abs(mf.Gt[0](0) + 1.0), 1e-15);
}

TEST(ToModal, TiesBrokenByPhase) {
  StateSpaceSystem s;
  s.F = CMatrix::Zero(2, 2);
  s.F(0, 0) = Complex(-1.0, 0.0);
  s.F(1, 1) = Complex(0.0, -1.0) * Complex(1.0, 1.0) / std::sqrt(2.0);  // |p| = 1, arg = -pi/4
  s.G = CMatrix::Ones(2, 1);
  s.Hbar = CMatrix::Ones(1, 2);
  s.J = CMatrix::Identity(1, 1);
  const ModalForm mf = to_modal(s);
  EXPECT_LT(principal_arg(mf.poles[0]), principal_arg(mf.poles[1]));
}

TEST(ToModal, RandomSystemReconstructsTransfer) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> freq(-50.0, 50.0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const StateSpaceSystem s = random_physically_realizable(5, 2, seed).system;
    const ModalForm mf = to_modal(s);
    for (std::size_t i = 1; i < mf.order(); ++i) {
      EXPECT_LE(std::abs(mf.poles[i - 1]), std::abs(mf.poles[i]));
    }
    for (int k = 0; k < 20; ++k) {
      const Complex z(0.0, freq(rng));
      EXPECT_LE(spectral_norm(transfer_at(s, z) - mf.transfer_at(z)), 1e-8);
    }
    for (double w : FrequencyGrid::default_grid()) {
      ASSERT_LE(spectral_norm(transfer_at(s, Complex(0, w)) - mf.transfer_at(Complex(0, w))), 1e-8);
    }
  }
}

TEST(ToModal, PolesArePermutationOfEigenvalues) {
  const StateSpaceSystem s = random_physically_realizable(6, 3, 5).system;
  const ModalForm mf = to_modal(s);
  std::vector<Complex> eigs = eig(s.F).values;
  for (const Complex& p : mf.poles) {
    auto it = std::min_element(eigs.begin(), eigs.end(), [&](Complex a, Complex b) {
      return std::abs(a - p) < std::abs(b - p);
    });
    ASSERT_NE(it, eigs.end());
    EXPECT_LE(std::abs(*it - p), 1e-9);
    eigs.erase(it);
  }
  EXPECT_TRUE(eigs.empty());
}

TEST(ToModal, ResiduesAreGaugeInvariant) {
  // Rescaling the state by a diagonal similarity D changes the eigenvectors
  // but not the rank-one residues Ht_i Gt_i.
  const StateSpaceSystem s = random_physically_realizable(4, 2, 8).system;
  CMatrix d = CMatrix::Zero(4, 4);
  d(0, 0) = Complex(2.0, 1.0);
  d(1, 1) = Complex(0.0, -3.0);
  d(2, 2) = 0.5;
  d(3, 3) = Complex(-1.0, 1.0);
  StateSpaceSystem t = s;
  t.F = d * s.F * d.inverse();
  t.G = d * s.G;
  t.Hbar = s.Hbar * d.inverse();
  const ModalForm a = to_modal(s);
  const ModalForm b = to_modal(t);
  for (std::size_t i = 0; i < a.order(); ++i) {
    const CMatrix ra = a.Ht[i] * a.Gt[i];
    const CMatrix rb = b.Ht[i] * b.Gt[i];
    EXPECT_LE(spectral_norm(ra - rb), 1e-10 * std::max(1.0, spectral_norm(ra)));
  }
}

TEST(ToModal, GaugeFixesFirstComponent) {
  // With H = J^-1 Hbar and V the gauge-fixed eigenvectors, the first
  // nonzero component of each column of V is real positive; so Ht = H V is
  // reproducible run to run.
  const StateSpaceSystem s = random_physically_realizable(4, 2, 2).system;
  const ModalForm a = to_modal(s);
  const ModalForm b = to_modal(s);
  for (std::size_t i = 0; i < a.order(); ++i) EXPECT_TRUE(a.Ht[i] == b.Ht[i]);
}

TEST(ToModal, RejectsRepeatedPolesAndNonUnitaryJ) {
  StateSpaceSystem s;
  s.F = -CMatrix::Identity(2, 2);
  s.G = CMatrix::Identity(2, 2);
  s.Hbar = CMatrix::Identity(2, 2);
  s.J = CMatrix::Identity(2, 2);
  EXPECT_THROW(to_modal(s), InvalidArgument);

  StateSpaceSystem t = random_physically_realizable(3, 2, 4).system;
  t.J *= 1.01;
  EXPECT_THROW(to_modal(t), InvalidArgument);
}

}  // namespace
}  // namespace qcascade
