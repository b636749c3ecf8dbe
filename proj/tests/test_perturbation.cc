#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "z4k/kagome.h"
#include "z4k/noise.h"
#include "z4k/perturbation.h"

namespace z4k {
namespace {

const std::map<EnergyRoute, int64_t> kExpected = {
    {{2, 2, 2, 2, 2}, 96}, {{2, 4, 2, 2, 2}, 48}, {{2, 2, 4, 2, 2}, 48},
    {{2, 2, 2, 4, 2}, 48}, {{2, 4, 4, 2, 2}, 96}, {{2, 2, 4, 4, 2}, 96},
    {{2, 4, 4, 4, 2}, 192}, {{2, 4, 2, 4, 2}, 24}, {{2, 4, 6, 4, 2}, 72}};

TEST(Census, Multiplicities) {
  const RouteCensus census = enumerate_routes();
  EXPECT_EQ(census.total(), 720);
  EXPECT_EQ(census.multiplicity, kExpected);
  EXPECT_EQ(census.q, Rational(63, 8));
  EXPECT_EQ(route_string({2, 4, 6, 4, 2}), "0->2D->4D->6D->4D->2D->0");
}

// Independent oracle: apply the factors of one hexagon stabilizer of the
// lattice code in every order and read the triangle energy off the syndrome.
TEST(Census, AgreesWithLatticeSyndromes) {
  const KagomeCode code = KagomeCode::build(4);
  const int h = code.lattice().hexagon(1, 1);
  const SparseWord hex = code.E(h);
  ASSERT_EQ(hex.size(), 6u);
  std::vector<int> triangles;
  for (size_t c = 0; c < code.checks().size(); ++c)
    if (code.checks()[c].kind == CheckKind::Triangle) triangles.push_back(static_cast<int>(c));

  std::map<EnergyRoute, int64_t> census;
  Rational q(0);
  std::array<int, 6> order;
  std::iota(order.begin(), order.end(), 0);
  do {
    PhasedPauli w(code.num_qudits());
    EnergyRoute route{};
    for (int step = 0; step < 5; ++step) {
      const SiteOp &op = hex[order[step]];
      w.apply_right(op.q, op.a, op.b);
      const std::vector<int> s = syndrome_of(code, w);
      int energy = 0;
      for (int c : triangles) energy += plaquette_energy(s[c]);
      route[step] = energy;
    }
    ++census[route];
    int64_t denom = 1;
    for (int e : route) denom *= e;
    q += Rational(1, denom);
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(census, kExpected);
  EXPECT_EQ(q, Rational(63, 8));
}

// Rotating the hexagon by two sites and reversing time both preserve the census.
TEST(Census, SymmetricUnderRotationAndReversal) {
  std::array<int, 6> order;
  std::iota(order.begin(), order.end(), 0);
  do {
    const EnergyRoute r = route_of(order);
    std::array<int, 6> rotated;
    for (int k = 0; k < 6; ++k) rotated[k] = (order[k] + 2) % 6;
    ASSERT_EQ(route_of(rotated), r);
    std::array<int, 6> reversed = order;
    std::reverse(reversed.begin(), reversed.end());
    EnergyRoute back = route_of(reversed);
    std::reverse(back.begin(), back.end());
    ASSERT_EQ(back, r);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(Gadget, ThreeBodyCoefficient) {
  const GadgetFit fit = gadget_check(0.02, 0.02, 1.0);
  EXPECT_LT(fit.relative_error(), 0.05);
  EXPECT_DOUBLE_EQ(fit.expected_zzz, -4 * 0.02 * 0.02 * 0.02);
  EXPECT_DOUBLE_EQ(fit.gamma, 2 * 0.02 * 0.02);
  EXPECT_DOUBLE_EQ(fit.delta, -0.02);
  const double tol = 0.02;
  EXPECT_LT(fit.one_body_ratio(), tol);
  EXPECT_LT(fit.two_body_ratio(), tol);
}

// The three-body term scales as alpha^2 beta.
TEST(Gadget, Scaling) {
  const GadgetFit base = gadget_check(0.01, 0.01, 1.0);
  const GadgetFit twice_alpha = gadget_check(0.02, 0.01, 1.0);
  const GadgetFit twice_beta = gadget_check(0.01, 0.02, 1.0);
  EXPECT_NEAR(twice_alpha.zzz / base.zzz, 4.0, 0.04);
  EXPECT_NEAR(twice_beta.zzz / base.zzz, 2.0, 0.02);
  const GadgetFit negative = gadget_check(0.01, -0.01, 1.0);
  EXPECT_NEAR(negative.zzz / base.zzz, -1.0, 0.01);
}

TEST(Gadget, RequiresLargeGap) {
  EXPECT_THROW(gadget_check(0.1, 0.02, 1.0), std::invalid_argument);
  EXPECT_THROW(gadget_check(0.01, 0.01, 0.0), std::invalid_argument);
  EXPECT_NO_THROW(gadget_check(0.02, 0.02, 1.0));
}

}  // namespace
}  // namespace z4k
