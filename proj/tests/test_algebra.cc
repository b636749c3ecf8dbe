#include <random>

#include <gtest/gtest.h>

#include "z4k/cyclotomic.h"
#include "z4k/dense.h"
#include "z4k/phased_pauli.h"
#include "z4k/projector.h"
#include "z4k/z4_linalg.h"

namespace z4k {
namespace {

PhasedPauli random_word(size_t n, std::mt19937_64 &rng) {
  PhasedPauli p(n);
  for (size_t q = 0; q < n; ++q) p.set(q, rng() & 3, rng() & 3);
  p.set_phase_exp(rng() & 7);
  return p;
}

TEST(PhasedPauli, SingleQuditProductAndPowers) {
  const auto x = PhasedPauli::single(1, 0, 0, 1);
  const auto z = PhasedPauli::single(1, 0, 1, 0);
  const PhasedPauli xz = x * z;
  EXPECT_EQ(xz.phase_exp(), 6);
  EXPECT_EQ(xz.z(0), 1);
  EXPECT_EQ(xz.x(0), 1);
  EXPECT_EQ((z * x).pow(4).str(), "4:00");
  EXPECT_TRUE((z * x).pow(8).is_identity());
  EXPECT_EQ(commutation_exponent(z, x), 1);
  EXPECT_EQ(commutation_exponent(x, z), 3);
}

TEST(PhasedPauli, ParseRoundTrip) {
  for (const char *s : {"5:11", "0:10.03", "7:33.00.21"}) {
    EXPECT_EQ(PhasedPauli::parse(s).str(), s);
  }
  EXPECT_THROW(PhasedPauli::parse("9:1"), std::invalid_argument);
}

// Products and commutation exponents agree with dense matrices.
TEST(PhasedPauli, MatchesDenseOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10000; ++trial) {
    const size_t n = 1 + trial % 3;
    const PhasedPauli p = random_word(n, rng), q = random_word(n, rng);
    const Eigen::MatrixXcd P = dense_matrix(p), Q = dense_matrix(q);
    ASSERT_LT((dense_matrix(p * q) - P * Q).norm(), 1e-9) << p.str() << " * " << q.str();
    const int k = commutation_exponent(p, q);
    ASSERT_LT((P * Q - eighth_root(2 * k) * Q * P).norm(), 1e-9) << p.str() << " , " << q.str();
    ASSERT_LT((dense_matrix(p.dagger()) - P.adjoint()).norm(), 1e-9);
  }
}

TEST(PhasedPauli, GroupLaws) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const size_t n = 1 + trial % 5;
    const PhasedPauli a = random_word(n, rng), b = random_word(n, rng), c = random_word(n, rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_TRUE((a * a.dagger()).is_identity());
    ASSERT_EQ(commutation_exponent(a, b), (4 - commutation_exponent(b, a)) & 3);
    ASSERT_TRUE(a.pow(8).is_identity());
    ASSERT_EQ(tensor(a, b).size(), 2 * n);
  }
}

TEST(QubitPair, RealizesTheQuditAlgebra) {
  const Eigen::Matrix4cd X = qubit_pair_x(), Y = qubit_pair_y(), Z = qubit_pair_z();
  const Eigen::Matrix4cd one = Eigen::Matrix4cd::Identity();
  EXPECT_LT((Z * X - cplx(0, 1) * X * Z).norm(), 1e-12);
  EXPECT_LT((X * X * X * X - one).norm(), 1e-12);
  EXPECT_LT((Z * Z * Z * Z - one).norm(), 1e-12);
  EXPECT_LT((Y - eighth_root(5) * X.adjoint() * Z.adjoint()).norm(), 1e-12);
}

// Each single-qubit Pauli expands over exactly the qudit words listed in its
// conversion row.
TEST(QubitPair, ConversionRowsMatchExpansion) {
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    for (int slot : {1, 2}) {
      const auto coeff = pair_pauli_expansion(qubit_sigma(axis, slot));
      const auto &row = conversion_row(axis);
      int nonzero = 0;
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          if (std::abs(coeff[a][b]) < 1e-12) continue;
          ++nonzero;
          EXPECT_NE(std::find(row.begin(), row.end(), QuditOp{uint8_t(a), uint8_t(b)}), row.end())
              << "axis " << int(axis) << " slot " << slot << " word " << a << b;
        }
      }
      EXPECT_EQ(nonzero, static_cast<int>(row.size()));
    }
  }
}

TEST(Parafermion, AlgebraOnFourQudits) {
  const size_t n = 4;
  for (int i = 1; i <= 2 * static_cast<int>(n); ++i) {
    const PhasedPauli gi = parafermion(i, n).rep;
    EXPECT_TRUE(gi.pow(4).is_identity()) << i;
    for (int j = i + 1; j <= 2 * static_cast<int>(n); ++j) {
      EXPECT_EQ(commutation_exponent(gi, parafermion(j, n).rep), 1) << i << "," << j;
    }
  }
  EXPECT_EQ(parafermion(1, n).rep.str(), "0:10.00.00.00");
  EXPECT_EQ(parafermion(3, n).rep, PhasedPauli::parse("0:01.10.00.00"));
  EXPECT_THROW(parafermion_transform(5, Parity::Odd, n), std::out_of_range);
}

TEST(Cyclo8, ArithmeticMatchesComplex) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Cyclo8 a = Cyclo8::root(rng() & 7) + Cyclo8::root(rng() & 7);
    Cyclo8 b = Cyclo8::root(rng() & 7);
    EXPECT_LT(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 1e-12);
  }
}

TEST(Projector, ScaledProjectorIsIdempotentUpToScale) {
  const PhasedPauli z = PhasedPauli::single(2, 0, 1, 0) * PhasedPauli::single(2, 1, 1, 0);
  for (int k = 0; k < 4; ++k) {
    const PauliSum p = scaled_projector(z, k);
    const PauliSum pp = p * p;
    // (sum of four terms)^2 = 4 * (same sum).
    for (const auto &[word, c] : p.terms()) {
      EXPECT_EQ(pp.coefficient(word), c * Cyclo8(4));
    }
    EXPECT_TRUE((p * scaled_projector(z, (k + 1) & 3)).is_zero());
  }
}

TEST(Projector, Sandwich) {
  const PhasedPauli a = PhasedPauli::parse("0:10.10");
  const PhasedPauli b = PhasedPauli::parse("0:01.00");
  const PhasedPauli gamma = PhasedPauli::parse("0:10.00");
  // Orthogonal projectors of the same operator annihilate.
  for (const auto &s : projector_sandwich({{a, 0}, {a, 1}}, gamma)) EXPECT_TRUE(s.annihilated);
  // P_A P_B P_A = P_A / 4 when B shifts the eigenvalue of A by one step.
  for (const auto &s : projector_sandwich({{a, 0}, {b, 0}, {a, 0}}, gamma)) {
    if (s.annihilated) continue;
    EXPECT_NEAR(s.magnitude, 0.25, 1e-12);
    EXPECT_EQ(s.phase_exp, 0);
  }
}

TEST(Z4Linalg, SmithFormOfDiagonal) {
  Z4Matrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 2;
  m.at(2, 2) = 0;
  const SmithForm s = smith_normal_form(m);
  EXPECT_EQ(s.units, 1);
  EXPECT_EQ(s.twos, 1);
}

TEST(Z4Linalg, SolveRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Z4Matrix m(4, 6);
    std::vector<uint8_t> x(6);
    for (auto &v : x) v = rng() & 3;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 6; ++c) m.at(r, c) = rng() & 3;
    std::vector<uint8_t> b(4, 0);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 6; ++c) b[r] = (b[r] + m.at(r, c) * x[c]) & 3;
    const auto sol = solve_z4(m, b);
    ASSERT_TRUE(sol.has_value());
    for (int r = 0; r < 4; ++r) {
      int acc = 0;
      for (int c = 0; c < 6; ++c) acc += m.at(r, c) * (*sol)[c];
      ASSERT_EQ(acc & 3, b[r]);
    }
  }
}

}  // namespace
}  // namespace z4k
