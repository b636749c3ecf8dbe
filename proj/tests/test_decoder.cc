#include <random>

#include <gtest/gtest.h>

#include "z4k/decoder.h"
#include "z4k/incidence.h"
#include "z4k/noise.h"

namespace z4k {
namespace {

PhasedPauli residual(const KagomeCode &code, const PhasedPauli &frame, const SparseWord &corr) {
  return frame * to_pauli(corr, code.num_qudits());
}

TEST(Syndrome, SplitsByParity) {
  const SyndromeConfig s = syndrome_from_charges({0, 1, 2, 3, 0, 2});
  ASSERT_EQ(s.odd.size(), 2u);
  ASSERT_EQ(s.even.size(), 2u);
  EXPECT_EQ(s.odd[0].check, 1);
  EXPECT_EQ(s.odd[1].charge, 3);
  EXPECT_EQ(s.even[1].check, 5);
  EXPECT_EQ(s.total_charge(), 0);
  EXPECT_TRUE(syndrome_from_charges({0, 0}).empty());
}

TEST(DistanceTable, MetricProperties) {
  const KagomeCode code = KagomeCode::build_with_defects(8);
  const DistanceTable table(code);
  const int n = table.num_checks();
  std::mt19937_64 rng(2);
  for (auto g : {DistanceTable::kOdd, DistanceTable::kEven}) {
    for (int k = 0; k < 300; ++k) {
      const int u = rng() % n, v = rng() % n, w = rng() % n;
      EXPECT_EQ(table.distance(u, u, g), 0);
      EXPECT_EQ(table.distance(u, v, g), table.distance(v, u, g));
      const int uv = table.distance(u, v, g), vw = table.distance(v, w, g), uw = table.distance(u, w, g);
      if (uv >= 0 && vw >= 0) EXPECT_LE(uw, uv + vw);
      if (uv >= 0) {
        EXPECT_EQ(static_cast<int>(table.witness(u, v, g).size()), uv);
        EXPECT_EQ(table.component(u, g), table.component(v, g));
      }
    }
  }
}

// Applying the witness hops moves the charge from u to v.
TEST(DistanceTable, WitnessTransportsCharge) {
  const KagomeCode code = KagomeCode::build(6);
  const Decoder dec(code);
  const DistanceTable &table = dec.table();
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const int u = rng() % table.num_checks(), v = rng() % table.num_checks();
    if (u == v || table.distance(u, v, DistanceTable::kOdd) < 0) continue;
    // Each hop is raised to the power that pushes one unit of charge onward;
    // odd du is its own inverse up to sign mod 4.
    PhasedPauli w(code.num_qudits());
    int x = u;
    for (int h : table.witness(u, v, DistanceTable::kOdd)) {
      const Hop &hop = table.hops()[h];
      const int k = hop.u == x ? hop.du : (4 - hop.du) & 3;
      w.apply_right(hop.q, (k * hop.a) & 3, (k * hop.b) & 3);
      x = hop.u == x ? hop.v : hop.u;
    }
    ASSERT_EQ(x, v);
    const auto s = extract_syndrome(code, w);
    int nonzero = 0;
    for (size_t c = 0; c < s.charges.size(); ++c) {
      if (!s.charges[c]) continue;
      ++nonzero;
      EXPECT_TRUE(static_cast<int>(c) == u || static_cast<int>(c) == v);
    }
    EXPECT_EQ(nonzero, 2);
    EXPECT_EQ((s.charges[u] + s.charges[v]) & 3, 0);
  }
}

TEST(Decoder, EmptySyndrome) {
  const KagomeCode code = KagomeCode::build(4);
  const Decoder dec(code);
  const DecodeResult r = dec.decode(extract_syndrome(code, PhasedPauli(code.num_qudits())));
  EXPECT_TRUE(r.correction.empty());
  EXPECT_EQ(r.moves, 0);
}

TEST(Decoder, CorrectsEverySingleQuditError) {
  for (bool defects : {false, true}) {
    const KagomeCode code = defects ? KagomeCode::build_with_defects(8) : KagomeCode::build(8);
    const Decoder dec(code);
    for (int q : active_qudits(code)) {
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          if (!a && !b) continue;
          const PhasedPauli e = PhasedPauli::single(code.num_qudits(), q, a, b);
          const DecodeResult r = dec.decode(extract_syndrome(code, e));
          const Verdict v = logical_verdict(code, e, to_pauli(r.correction, code.num_qudits()));
          ASSERT_FALSE(v.any_failed()) << "defects=" << defects << " q=" << q << " Z^" << a << "X^" << b;
        }
      }
    }
  }
}

// The correction always clears the syndrome, so the residual is a stabilizer
// or a logical operator.
TEST(Decoder, CorrectionClearsRandomSyndromes) {
  for (bool defects : {false, true}) {
    const KagomeCode code = defects ? KagomeCode::build_with_defects(8) : KagomeCode::build(8);
    const Decoder dec(code);
    Rng rng(17);
    for (int t = 0; t < 60; ++t) {
      const ErrorFrame f = apply_depolarizing(code, 0.02 + 0.004 * t, rng);
      const SyndromeConfig s = extract_syndrome(code, f.word);
      const DecodeResult r = dec.decode(s);
      EXPECT_EQ(r.odd_pairs * 2, static_cast<int>(s.odd.size()));
      const PhasedPauli res = residual(code, f.word, r.correction);
      for (int c : syndrome_of(code, res)) ASSERT_EQ(c, 0);
      for (const auto &op : r.correction) EXPECT_TRUE(code.active(op.q));
      EXPECT_EQ(dec.labels_of(r.correction), r.labels);
    }
  }
}

TEST(Decoder, ChargesOfMatchesExtraction) {
  const KagomeCode code = KagomeCode::build_with_defects(8);
  const Decoder dec(code);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const ErrorFrame f = apply_depolarizing(code, 0.05, rng);
    EXPECT_EQ(dec.charges_of(to_sparse(f.word)), extract_syndrome(code, f.word).charges);
  }
}

TEST(Decoder, IsDeterministic) {
  const KagomeCode code = KagomeCode::build(8);
  const Decoder dec(code);
  Rng rng(23);
  const ErrorFrame f = apply_depolarizing(code, 0.1, rng);
  const SyndromeConfig s = extract_syndrome(code, f.word);
  const DecodeResult a = dec.decode(s), b = dec.decode(s);
  ASSERT_EQ(a.correction.size(), b.correction.size());
  for (size_t k = 0; k < a.correction.size(); ++k) {
    EXPECT_EQ(a.correction[k].q, b.correction[k].q);
    EXPECT_EQ(a.correction[k].a, b.correction[k].a);
    EXPECT_EQ(a.correction[k].b, b.correction[k].b);
  }
}

TEST(Verdict, FlagsLogicalResidualsAndRejectsSyndromes) {
  const KagomeCode code = KagomeCode::build(6);
  const PhasedPauli id(code.num_qudits());
  const Verdict clean = logical_verdict(code, id, id);
  EXPECT_FALSE(clean.any_failed());
  // A residual equal to X1 is detected through its partner Z1.
  const Verdict x1 = logical_verdict(code, code.logical("X1"), id);
  EXPECT_TRUE(x1.failed("Z1"));
  EXPECT_FALSE(x1.failed("X1"));
  EXPECT_THROW(logical_verdict(code, PhasedPauli::single(code.num_qudits(), 0, 0, 1), id), std::invalid_argument);
}

}  // namespace
}  // namespace z4k
