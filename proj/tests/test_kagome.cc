#include <set>

#include <gtest/gtest.h>

#include "z4k/code_analysis.h"
#include "z4k/distance.h"
#include "z4k/incidence.h"
#include "z4k/kagome.h"
#include "z4k/verify.h"

namespace z4k {
namespace {

PhasedPauli product(const std::vector<PhasedPauli> &ps, size_t n) {
  PhasedPauli acc(n);
  for (const auto &p : ps) acc *= p;
  return acc;
}

TEST(Lattice, Counts) {
  for (int L : {4, 6, 8}) {
    KagomeLattice lat(L);
    EXPECT_EQ(lat.num_qudits(), 3 * L * L);
    EXPECT_EQ(lat.num_hexagons(), L * L);
    EXPECT_EQ(lat.num_triangles(), 2 * L * L);
  }
}

// Every qudit sits on two hexagons and two triangles (one up, one down).
TEST(Lattice, Incidence) {
  KagomeLattice lat(6);
  std::vector<int> hex_count(lat.num_qudits()), tri_count(lat.num_qudits());
  for (int h = 0; h < lat.num_hexagons(); ++h) {
    std::set<int> corners;
    for (int q : lat.hex_corners(h)) {
      corners.insert(q);
      ++hex_count[q];
    }
    EXPECT_EQ(corners.size(), 6u);
  }
  for (int t = 0; t < lat.num_triangles(); ++t)
    for (int q : lat.triangle_corners(t)) ++tri_count[q];
  for (int q = 0; q < lat.num_qudits(); ++q) {
    EXPECT_EQ(hex_count[q], 2);
    EXPECT_EQ(tri_count[q], 2);
    const auto tris = lat.triangles_of_qudit(q);
    EXPECT_NE(lat.is_up(tris[0]), lat.is_up(tris[1]));
  }
}

TEST(Code, RejectsBadSizes) {
  EXPECT_THROW(KagomeCode::build(5), std::invalid_argument);
  EXPECT_THROW(KagomeCode::build(2), std::invalid_argument);
  EXPECT_THROW(KagomeCode::build_with_defects(6), std::invalid_argument);
}

TEST(Code, GeneratorsCommute) {
  for (int L : {4, 6}) {
    const KagomeCode code = KagomeCode::build(L);
    const int n = code.num_qudits();
    std::vector<PhasedPauli> gens;
    for (int h = 0; h < code.lattice().num_hexagons(); ++h) gens.push_back(code.E_pauli(h));
    for (int t = 0; t < code.lattice().num_triangles(); ++t) gens.push_back(code.M_pauli(t));
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j)
        ASSERT_EQ(commutation_exponent(gens[i], gens[j]), 0) << "L=" << L << " " << i << "," << j;
    for (const auto &l : code.logicals())
      for (const auto &g : gens) ASSERT_EQ(commutation_exponent(l.op, g), 0) << l.name;
    EXPECT_EQ(static_cast<int>(gens.size()), 3 * L * L);
    (void)n;
  }
}

TEST(Code, RankAndLogicalCount) {
  for (int L : {4, 6, 8}) {
    const KagomeCode code = KagomeCode::build(L);
    const SmithForm s = generator_smith(code, true);
    EXPECT_EQ(s.units, 3 * L * L - 2) << L;
    EXPECT_EQ(s.twos, 0) << L;
    EXPECT_EQ(logical_qudit_count(code), 2) << L;
  }
}

TEST(Code, LogicalPairs) {
  const KagomeCode code = KagomeCode::build(6);
  EXPECT_EQ(commutation_exponent(code.logical("Z1"), code.logical("X1")), 1);
  EXPECT_EQ(commutation_exponent(code.logical("Z2"), code.logical("X2")), 1);
  EXPECT_EQ(commutation_exponent(code.logical("Z1"), code.logical("X2")), 0);
  EXPECT_EQ(commutation_exponent(code.logical("Z2"), code.logical("X1")), 0);
  EXPECT_EQ(commutation_exponent(code.logical("Z1"), code.logical("Z2")), 0);
  EXPECT_EQ(validate_logical_basis(code), "");
  EXPECT_THROW(code.logical("ZL"), std::out_of_range);
}

TEST(Code, TransformedSetsMultiplyToIdentity) {
  const KagomeCode code = KagomeCode::build(4);
  const StabilizerSets sets = transform_stabilizers(code);
  EXPECT_EQ(sets.S.size(), 16u);
  EXPECT_EQ(sets.R.size(), 32u);
  EXPECT_TRUE(product(sets.S, code.num_qudits()).is_identity_word());
  EXPECT_TRUE(product(sets.R, code.num_qudits()).is_identity_word());
  // The transformed generators still commute with each other.
  for (const auto &s : sets.S)
    for (const auto &r : sets.R) ASSERT_EQ(commutation_exponent(s, r), 0);
}

TEST(Code, ValidateReportsNoFailures) {
  for (int L : {4, 6}) {
    for (const auto &line : validate_code(KagomeCode::build(L))) EXPECT_TRUE(line.passed) << line.name << line.detail;
  }
}

TEST(Defects, LineGeometry) {
  for (int L : {8, 12}) {
    const KagomeCode code = KagomeCode::build_with_defects(L);
    ASSERT_EQ(code.defect_lines().size(), 2u);
    std::set<int> removed;
    for (const auto &line : code.defect_lines()) {
      EXPECT_EQ(static_cast<int>(line.qudits_on_line.size()), L / 2 + 1);
      for (const auto &r : line.pentagon_stabilizers) EXPECT_EQ(r.weight(), 7u);
      for (int q : line.qudits_on_line) {
        EXPECT_FALSE(code.active(q));
        removed.insert(q);
      }
    }
    EXPECT_EQ(code.num_active(), code.num_qudits() - static_cast<int>(removed.size()));
    EXPECT_EQ(logical_qudit_count(code), 3);
    EXPECT_EQ(commutation_exponent(code.logical("ZL"), code.logical("XL")), 1);
  }
}

TEST(Defects, OverlappingLineThrows) {
  KagomeCode code = KagomeCode::build_with_defects(8);
  const auto &first = code.defect_lines()[0];
  const auto [i, j] = code.lattice().cell_of_hexagon(first.pentagons[1].first);
  EXPECT_THROW(code.add_defect_line(i, j, 5), std::invalid_argument);
}

TEST(Defects, ValidateReportsNoFailures) {
  for (const auto &line : validate_code(KagomeCode::build_with_defects(8))) EXPECT_TRUE(line.passed) << line.name;
}

TEST(Code, ChecksMatchSyndromeOfGenerators) {
  const KagomeCode code = KagomeCode::build_with_defects(8);
  for (const auto &l : code.logicals()) {
    for (int s : syndrome_of(code, l.op)) ASSERT_EQ(s, 0) << l.name;
  }
  for (const auto &c : code.checks()) {
    for (int s : syndrome_of(code, to_pauli(c.word, code.num_qudits()))) ASSERT_EQ(s, 0);
  }
}

TEST(Code, ExportIsDeterministic) {
  const std::string a = KagomeCode::build_with_defects(8).export_text();
  const std::string b = KagomeCode::build_with_defects(8).export_text();
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.empty());
  EXPECT_NE(KagomeCode::build(8).export_text(), a);
}

TEST(Distance, AgreesWithExhaustiveSearchAtSmallSize) {
  const KagomeCode code = KagomeCode::build(4);
  for (const char *name : {"Z1", "Z2"}) {
    const DistanceResult d = code_distance(code, name);
    EXPECT_EQ(d.weight, brute_force_distance(code, name, 6).weight) << name;
    ASSERT_TRUE(d.witness.has_value());
    EXPECT_EQ(static_cast<int>(d.witness->weight()), d.weight);
  }
  // Nothing of weight <= 6 realizes X1; the walk search finds weight 8.
  EXPECT_EQ(brute_force_distance(code, "X1", 6).weight, -1);
  EXPECT_EQ(code_distance(code, "X1").weight, 8);
}

TEST(Distance, WitnessIsALogicalOfTheRightClass) {
  const KagomeCode code = KagomeCode::build_with_defects(8);
  for (const auto &l : code.logicals()) {
    const DistanceResult d = code_distance(code, l.name);
    ASSERT_TRUE(d.witness.has_value()) << l.name;
    for (int s : syndrome_of(code, *d.witness)) ASSERT_EQ(s, 0);
    EXPECT_EQ(logical_labels(code, *d.witness), logical_labels(code, l.op)) << l.name;
    for (size_t q : d.witness->support()) EXPECT_TRUE(code.active(static_cast<int>(q)));
  }
}

TEST(Incidence, MatchesDirectCommutation) {
  const KagomeCode code = KagomeCode::build_with_defects(8);
  const Incidence inc = check_incidence(code);
  for (int q : active_qudits(code)) {
    for (int a = 0; a < 4; ++a) {
      const SparseWord w{{q, uint8_t(a), uint8_t((a + 1) & 3)}};
      std::vector<int> expect(code.checks().size());
      for (size_t c = 0; c < code.checks().size(); ++c) expect[c] = commutation_exponent(code.checks()[c].word, w);
      std::vector<int> got(code.checks().size());
      for (const auto &h : inc.hits(q)) got[h.word] = Incidence::delta(h, a, (a + 1) & 3);
      ASSERT_EQ(got, expect) << q;
    }
  }
}

}  // namespace
}  // namespace z4k
