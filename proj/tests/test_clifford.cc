#include <random>
#include <set>

#include <gtest/gtest.h>

#include "z4k/clifford.h"
#include "z4k/dense.h"

namespace z4k {
namespace {

const std::vector<std::string> kGates = {"S", "T", "Z", "X", "H", "C_Z", "C_X", "SWAP"};

PhasedPauli random_word(int n, std::mt19937_64 &rng) {
  PhasedPauli p(n);
  for (int q = 0; q < n; ++q) p.set(q, rng() & 3, rng() & 3);
  p.set_phase_exp(rng() & 7);
  return p;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

TEST(SL2, GroupOrderAndWords) {
  const auto all = enumerate_sl2z4();
  EXPECT_EQ(all.size(), 48u);
  for (const auto &m : all) EXPECT_EQ(mat2_det(m), 1);
  const auto words = word_search();
  EXPECT_EQ(words.size(), 48u);
  size_t longest = 0;
  for (const auto &[m, w] : words) {
    longest = std::max(longest, w.size());
    EXPECT_EQ(single_qudit_matrix(evaluate(single_qudit_word(m, 0), 1)), m) << w;
  }
  EXPECT_EQ(longest, 9u);
}

TEST(SL2, GeneratorMatrices) {
  EXPECT_EQ(display_matrix(single_qudit_matrix(gate_tableau("S"))), (Mat2{0, 1, 1, 1}));
  EXPECT_EQ(display_matrix(single_qudit_matrix(gate_tableau("T"))), (Mat2{-1, 1, 1, 0}));
}

// The exponent matrix is a homomorphism.
TEST(SL2, MatrixOfProductIsProductOfMatrices) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    const CliffordTableau u = random_tableau(1, 6, rng), v = random_tableau(1, 6, rng);
    EXPECT_EQ(single_qudit_matrix(u.then(v)), mat2_mul(single_qudit_matrix(v), single_qudit_matrix(u)));
  }
}

// Library tableaux agree with conjugation by their dense unitaries, phases
// included.
TEST(Tableau, MatchesDenseConjugation) {
  std::mt19937_64 rng(1);
  for (const auto &name : kGates) {
    const Eigen::MatrixXcd U = gate_unitary(name);
    const int n = U.rows() == 4 ? 1 : 2;
    const CliffordTableau t = gate_tableau(name);
    EXPECT_EQ(tableau_from_unitary(U, n), t) << name;
    EXPECT_EQ(t.validate(), "") << name;
    for (int k = 0; k < 50; ++k) {
      const PhasedPauli p = random_word(n, rng);
      EXPECT_LT((U * dense_matrix(p) * U.adjoint() - dense_matrix(t.conjugate(p))).norm(), 1e-12) << name;
    }
  }
}

TEST(Tableau, TensorProductsOfSingleQuditGates) {
  for (const char *a : {"S", "T", "H"}) {
    for (const char *b : {"S", "T", "H", "X"}) {
      const CliffordTableau expect = CliffordTableau(2).then(gate_tableau(a), {0}).then(gate_tableau(b), {1});
      EXPECT_EQ(tableau_from_unitary(kron(gate_unitary(a), gate_unitary(b)), 2), expect) << a << b;
    }
  }
}

TEST(Tableau, RejectsNonClifford) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(4, 4);
  u.block(0, 0, 2, 2) << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
  EXPECT_THROW(tableau_from_unitary(u, 1), std::invalid_argument);
}

TEST(Tableau, ValidateCatchesBrokenImages) {
  CliffordTableau t(2);
  t.set_image_x(0, PhasedPauli::parse("0:20.00"));
  EXPECT_NE(t.validate(), "");
  CliffordTableau u(1);
  u.set_image_x(0, PhasedPauli::parse("1:01"));
  EXPECT_NE(u.validate(), "");
  EXPECT_THROW(synthesize(t), std::invalid_argument);
}

TEST(Tableau, ControlledST) {
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      const CliffordTableau c = controlled_st_tableau(s, t);
      EXPECT_EQ(c.validate(), "");
      PhasedPauli expect = PhasedPauli::parse("0:01.00") * PhasedPauli::single(2, 1, 0, s) *
                           PhasedPauli::single(2, 1, t, 0);
      expect.add_phase(s * t);
      EXPECT_EQ(c.image_x(0), expect) << s << "," << t;
      EXPECT_EQ(c.image_z(0), PhasedPauli::parse("0:10.00"));
    }
  }
  EXPECT_EQ(gate_tableau("C_st:1,0"), gate_tableau("C_X"));
}

TEST(Orbits, Labels) {
  EXPECT_EQ(classify_pauli_orbit(PhasedPauli::parse("0:00")), PauliOrbit::Identity);
  EXPECT_EQ(classify_pauli_orbit(PhasedPauli::parse("0:01")), PauliOrbit::Mixed);
  EXPECT_EQ(classify_pauli_orbit(PhasedPauli::parse("0:20")), PauliOrbit::Even);
  EXPECT_EQ(classify_pauli_orbit(PhasedPauli::parse("0:11")), PauliOrbit::OddOdd);
}

TEST(Orbits, PreservedByConjugation) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 500; ++k) {
    const int n = 1 + k % 3;
    const CliffordTableau u = random_tableau(n, 20, rng);
    const PhasedPauli p = random_word(n, rng);
    ASSERT_EQ(classify_pauli_orbit(u.conjugate(p)), classify_pauli_orbit(p)) << p.str();
  }
}

TEST(Tableau, ConjugationIsAHomomorphism) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 300; ++k) {
    const int n = 1 + k % 3;
    const CliffordTableau u = random_tableau(n, 15, rng);
    const PhasedPauli p = random_word(n, rng), q = random_word(n, rng);
    ASSERT_EQ(u.conjugate(p * q), u.conjugate(p) * u.conjugate(q));
    ASSERT_EQ(commutation_exponent(u.conjugate(p), u.conjugate(q)), commutation_exponent(p, q));
  }
}

TEST(Synthesis, LibraryGates) {
  for (const auto &name : kGates) {
    const CliffordTableau t = gate_tableau(name);
    const GateWord w = synthesize(t);
    EXPECT_EQ(evaluate(w, t.n()), t) << name << ": " << to_string(w);
  }
  EXPECT_EQ(synthesize(gate_tableau("S")).size(), 1u);
  EXPECT_EQ(synthesize(gate_tableau("H")).size(), 3u);
}

TEST(Synthesis, RandomTableaux) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 300; ++k) {
    const int n = 1 + k % 3;
    const CliffordTableau t = random_tableau(n, 10 * n + 10, rng);
    const GateWord w = synthesize(t);
    ASSERT_EQ(evaluate(w, n), t) << "sample " << k;
    for (const auto &g : w) {
      ASSERT_GE(g.q, 0);
      ASSERT_LT(g.q + (g.kind == GateKind::CZ ? 1 : 0), n);
    }
  }
}

TEST(Synthesis, InverseWord) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 3;
    const GateWord w = synthesize(random_tableau(n, 12, rng));
    GateWord both = w;
    const GateWord inv = inverse(w);
    both.insert(both.end(), inv.begin(), inv.end());
    EXPECT_EQ(evaluate(both, n), CliffordTableau(n));
  }
}

TEST(Synthesis, DenseUnitaryAgreesUpToGlobalPhase) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 20; ++k) {
    const CliffordTableau t = random_tableau(2, 10, rng);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(16, 16);
    for (const auto &g : synthesize(t)) {
      Eigen::MatrixXcd step;
      if (g.kind == GateKind::CZ) {
        step = gate_unitary("C_Z");
      } else {
        const char *name = g.kind == GateKind::S ? "S" : g.kind == GateKind::T ? "T" : "Z";
        step = g.q == 0 ? kron(gate_unitary(name), Eigen::MatrixXcd::Identity(4, 4))
                        : kron(Eigen::MatrixXcd::Identity(4, 4), gate_unitary(name));
      }
      u = step * u;
    }
    EXPECT_EQ(tableau_from_unitary(u, 2), t);
  }
}

}  // namespace
}  // namespace z4k
