#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "djsim/errors.hpp"
#include "djsim/interferometer.hpp"
#include "djsim/qsim.hpp"
#include "djsim/qsim_reference.hpp"
#include "linalg_oracle.hpp"

using namespace djsim;
using qsim::Complex;

namespace {

constexpr double kTol = qsim::kAlgebraTolerance;
const double kHalfRoot2 = std::sqrt(2.0) / 2.0;

void expect_amplitudes(const qsim::StateVector& s, std::vector<Complex> want,
                       double tol = kTol) {
  ASSERT_EQ(s.dimension(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(std::abs(s[i] - want[i]), 0.0, tol) << "amplitude " << i;
  }
}

qsim::StateVector random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> a(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& z : a) {
    z = {g(rng), g(rng)};
    norm += std::norm(z);
  }
  for (auto& z : a) z /= std::sqrt(norm);
  return qsim::StateVector::from_amplitudes(std::move(a));
}

// Random 2^k x 2^k unitary via Gram-Schmidt on a Gaussian matrix.
qsim::Unitary random_unitary(std::size_t k, std::mt19937_64& rng) {
  const std::size_t d = std::size_t{1} << k;
  std::normal_distribution<double> g;
  std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(d));
  for (std::size_t c = 0; c < d; ++c) {
    for (auto& z : cols[c]) z = {g(rng), g(rng)};
    for (std::size_t p = 0; p < c; ++p) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < d; ++i) dot += std::conj(cols[p][i]) * cols[c][i];
      for (std::size_t i = 0; i < d; ++i) cols[c][i] -= dot * cols[p][i];
    }
    double n = 0.0;
    for (auto& z : cols[c]) n += std::norm(z);
    for (auto& z : cols[c]) z /= std::sqrt(n);
  }
  std::vector<Complex> e(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) e[r * d + c] = cols[c][r];
  return qsim::Unitary::from_matrix(d, std::move(e));
}

}  // namespace

TEST(ZeroState, PreparesAllZeroBasisState) {
  expect_amplitudes(qsim::zero_state(1), {1.0, 0.0});
  expect_amplitudes(qsim::zero_state(2), {1.0, 0.0, 0.0, 0.0});
}

TEST(ZeroState, EnforcesQubitCap) {
  EXPECT_THROW(qsim::zero_state(21), SizeError);
  EXPECT_THROW(qsim::zero_state(0), SizeError);
  EXPECT_NO_THROW(qsim::zero_state(20));
  EXPECT_THROW(qsim::zero_state(5, 4), SizeError);
  EXPECT_THROW(qsim::zero_state(1, qsim::kMaxQubitCap + 1), SizeError);
}

TEST(Hadamard, MapsBasisStatesToHalfRootTwoAmplitudes) {
  const auto h = qsim::hadamard();
  expect_amplitudes(qsim::apply(qsim::zero_state(1), h, {0}), {kHalfRoot2, kHalfRoot2});
  const auto one = qsim::StateVector::basis(qsim::BasisIndex(1, 1));
  expect_amplitudes(qsim::apply(one, h, {0}), {kHalfRoot2, -kHalfRoot2});
  expect_amplitudes(qsim::apply(qsim::apply(qsim::zero_state(1), h, {0}), h, {0}),
                    {1.0, 0.0});
  EXPECT_TRUE(h.is_unitary());
}

TEST(PauliX, FlipsAndIsInvolution) {
  const auto x = qsim::pauli_x();
  const auto one = qsim::StateVector::basis(qsim::BasisIndex(1, 1));
  expect_amplitudes(qsim::apply(qsim::zero_state(1), x, {0}), {0.0, 1.0});
  expect_amplitudes(qsim::apply(one, x, {0}), {1.0, 0.0});
  EXPECT_LT((x * x).max_distance(qsim::Unitary::identity(2)), kTol);
}

TEST(Apply, UsesMostSignificantBitForQubitZero) {
  expect_amplitudes(qsim::apply(qsim::zero_state(2), qsim::pauli_x(), {1}),
                    {0.0, 1.0, 0.0, 0.0});
}

TEST(Apply, MatchesHandKroneckerProduct) {
  // (H (x) I) |00>, computed with the test-only dense oracle.
  const oracle::Vec want =
      oracle::mul(oracle::kron(oracle::H(), oracle::identity(2)), {1.0, 0.0, 0.0, 0.0});
  const auto got = qsim::apply(qsim::zero_state(2), qsim::hadamard(), {0});
  expect_amplitudes(got, want);
  expect_amplitudes(got, {kHalfRoot2, 0.0, kHalfRoot2, 0.0});
}

TEST(Apply, TwoQubitGateTargetOrderFollowsKron) {
  std::mt19937_64 rng(7);
  const auto s = random_state(3, rng);
  const auto cx = qsim::kron(qsim::pauli_x(), qsim::hadamard());
  // cx on targets {2, 0}: X acts on qubit 2, H on qubit 0.
  const auto a = qsim::apply(s, cx, {2, 0});
  const auto b = qsim::apply(qsim::apply(s, qsim::pauli_x(), {2}), qsim::hadamard(), {0});
  EXPECT_LT(a.max_distance(b), kTol);
}

TEST(Apply, RejectsBadTargets) {
  const auto s = qsim::zero_state(2);
  EXPECT_THROW(qsim::apply(s, qsim::hadamard(), {0, 1}), DimensionError);
  EXPECT_THROW(qsim::apply(s, qsim::kron(qsim::hadamard(), qsim::hadamard()), {1, 1}),
               DuplicateTargetError);
  EXPECT_THROW(qsim::apply(s, qsim::hadamard(), {2}), RangeError);
  EXPECT_THROW(qsim::apply(s, qsim::hadamard(), std::span<const std::size_t>{}),
               DimensionError);
}

TEST(ApplyAll, HadamardLayerGivesUniformSuperposition) {
  expect_amplitudes(qsim::apply_all(qsim::zero_state(2), qsim::hadamard()),
                    {0.5, 0.5, 0.5, 0.5});
  expect_amplitudes(qsim::apply_all(qsim::zero_state(1), qsim::hadamard()),
                    {kHalfRoot2, kHalfRoot2});
  const auto s = qsim::apply_all(qsim::zero_state(3), qsim::hadamard());
  EXPECT_LT(qsim::apply_all(s, qsim::hadamard()).max_distance(qsim::zero_state(3)), kTol);
  EXPECT_THROW(qsim::apply_all(s, qsim::kron(qsim::hadamard(), qsim::hadamard())),
               DimensionError);
}

TEST(Probabilities, SquaredMagnitudes) {
  const auto plus = qsim::StateVector::from_amplitudes({kHalfRoot2, kHalfRoot2});
  const auto minus = qsim::StateVector::from_amplitudes({kHalfRoot2, -kHalfRoot2});
  for (const auto& s : {plus, minus}) {
    const auto p = qsim::probabilities(s);
    EXPECT_NEAR(p[0], 0.5, kTol);
    EXPECT_NEAR(p[1], 0.5, kTol);
  }
  const auto p0 = qsim::probabilities(qsim::zero_state(1));
  EXPECT_EQ(p0[0], 1.0);
  EXPECT_EQ(p0[1], 0.0);
}

TEST(MarginalProbability, SumsMatchingIndices) {
  const auto s =
      qsim::StateVector::from_amplitudes({kHalfRoot2, 0.0, kHalfRoot2, 0.0});
  const std::vector<std::size_t> q0{0};
  const std::vector<std::uint8_t> zero{0};
  EXPECT_NEAR(qsim::marginal_probability(s, q0, zero), 0.5, kTol);

  const std::vector<std::size_t> both{0, 1};
  const std::vector<std::uint8_t> zz{0, 0};
  EXPECT_NEAR(qsim::marginal_probability(qsim::zero_state(2), both, zz), 1.0, kTol);
  EXPECT_NEAR(qsim::marginal_probability(s, {}, {}), 1.0, kTol);

  const std::vector<std::size_t> bad{2};
  EXPECT_THROW(qsim::marginal_probability(s, bad, zero), RangeError);
  const std::vector<std::size_t> dup{0, 0};
  EXPECT_THROW(qsim::marginal_probability(s, dup, zz), DuplicateTargetError);
}

TEST(StateVector, RejectsInvalidAmplitudes) {
  EXPECT_THROW(qsim::StateVector::from_amplitudes({1.0, 0.0, 0.0}), SizeError);
  EXPECT_THROW(qsim::StateVector::from_amplitudes({1.0, 1.0}), NumericError);
  EXPECT_THROW(qsim::StateVector::from_amplitudes({1.0}), SizeError);
}

TEST(Unitary, FromMatrixChecksUnitarity) {
  EXPECT_THROW(qsim::Unitary::from_matrix(2, {1.0, 1.0, 0.0, 1.0}), NumericError);
  EXPECT_THROW(qsim::Unitary::from_matrix(3, std::vector<Complex>(9)), SizeError);
  EXPECT_THROW(qsim::Unitary::from_matrix(2, {1.0, 0.0, 0.0}), DimensionError);
  EXPECT_NO_THROW(qsim::Unitary::from_matrix(2, {0.0, 1.0, 1.0, 0.0}));
}

TEST(BasisIndex, LabelReadsAsKetString) {
  EXPECT_EQ(qsim::BasisIndex(2, 2).label(), "10");
  EXPECT_EQ(qsim::BasisIndex(2, 2).bit(0), 1U);
  EXPECT_EQ(qsim::BasisIndex(2, 2).bit(1), 0U);
  EXPECT_THROW(qsim::BasisIndex(4, 2), RangeError);
}

TEST(Sample, IsDeterministicForASeed) {
  const auto s = qsim::apply_all(qsim::zero_state(3), qsim::hadamard());
  EXPECT_EQ(qsim::sample(s, 32, 99), qsim::sample(s, 32, 99));
  for (auto idx : qsim::sample(qsim::zero_state(3), 16, 5)) EXPECT_EQ(idx, 0U);
}

// ---- properties -----------------------------------------------------------

TEST(QsimProperty, UnitariesPreserveNorm) {
  std::mt19937_64 rng(1234);
  const std::vector<qsim::Unitary> gates = {qsim::hadamard(), qsim::pauli_x(),
                                            interferometer::phase_shifter(2.1)};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const auto s = random_state(n, rng);
    const auto& g = gates[rng() % gates.size()];
    const auto out = qsim::apply(s, g, {static_cast<std::size_t>(rng() % n)});
    ASSERT_LT(std::abs(out.norm_squared() - 1.0), kTol);
    const auto p = qsim::probabilities(out);
    double sum = 0.0;
    for (double v : p) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
      sum += v;
    }
    ASSERT_LT(std::abs(sum - 1.0), kTol);
  }
}

TEST(QsimProperty, InvolutionsOnEveryBasisState) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const auto b = qsim::StateVector::basis(qsim::BasisIndex(i, n));
      for (const auto& g : {qsim::hadamard(), qsim::pauli_x()}) {
        for (std::size_t q = 0; q < n; ++q) {
          ASSERT_LT(qsim::apply(qsim::apply(b, g, {q}), g, {q}).max_distance(b), kTol);
        }
      }
    }
  }
}

TEST(QsimProperty, DisjointTargetsCommute) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const auto s = random_state(n, rng);
    const std::size_t i = rng() % n;
    std::size_t j = rng() % n;
    if (j == i) j = (i + 1) % n;
    const auto g = random_unitary(1, rng);
    const auto k = random_unitary(1, rng);
    const auto a = qsim::apply(qsim::apply(s, g, {i}), k, {j});
    const auto b = qsim::apply(qsim::apply(s, k, {j}), g, {i});
    ASSERT_LT(a.max_distance(b), kTol);
  }
}

TEST(QsimProperty, ParallelKernelsMatchReference) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 3);
    std::vector<std::size_t> targets(n);
    std::iota(targets.begin(), targets.end(), std::size_t{0});
    std::shuffle(targets.begin(), targets.end(), rng);
    targets.resize(k);
    const auto s = random_state(n, rng);
    const auto u = random_unitary(k, rng);
    ASSERT_LT(qsim::apply(s, u, targets).max_distance(qsim::reference::apply(s, u, targets)),
              kTol);
    ASSERT_LT(qsim::apply_all(s, qsim::hadamard())
                  .max_distance(qsim::reference::apply_all(s, qsim::hadamard())),
              kTol);
    const auto p = qsim::probabilities(s);
    const auto pr = qsim::reference::probabilities(s);
    for (std::size_t i = 0; i < p.size(); ++i) ASSERT_NEAR(p[i], pr[i], kTol);
    std::vector<std::uint8_t> bits(k);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
    ASSERT_NEAR(qsim::marginal_probability(s, targets, bits),
                qsim::reference::marginal_probability(s, targets, bits), kTol);
  }
}

TEST(QsimProperty, ParallelPathMatchesReferenceOnLargerRegister) {
  // 13 qubits puts a single-qubit gate above the parallel grain.
  std::mt19937_64 rng(77);
  const auto s = random_state(13, rng);
  const auto u = random_unitary(1, rng);
  const std::vector<std::size_t> t{5};
  EXPECT_LT(qsim::apply(s, u, t).max_distance(qsim::reference::apply(s, u, t)), kTol);
}
