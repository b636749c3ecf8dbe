#include "z4k/perturbation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

#include "z4k/noise.h"

namespace z4k {

std::string route_string(const EnergyRoute &r) {
  std::string s = "0";
  for (int e : r) s += "->" + std::to_string(e) + "D";
  return s + "->0";
}

int64_t RouteCensus::total() const {
  int64_t t = 0;
  for (const auto &[r, m] : multiplicity) t += m;
  return t;
}

EnergyRoute route_of(const std::array<int, 6> &order) {
  // Vertex v carries X^(+1) for even v and X^dagger for odd v; triangle t holds
  // vertices t-1 and t, and triangles alternate up (Z Z Z) and down.
  std::array<int, 6> charge{};
  EnergyRoute route{};
  for (int step = 0; step < 6; ++step) {
    const int v = order[step];
    const int power = (v % 2 == 0) ? 1 : 3;
    for (int t : {v, (v + 1) % 6}) {
      const int sign = (t % 2 == 0) ? 1 : 3;
      charge[t] = (charge[t] + power * sign) & 3;
    }
    int energy = 0;
    for (int c : charge) energy += plaquette_energy(c);
    if (step < 5) {
      route[step] = energy;
    } else if (energy != 0) {
      throw std::logic_error("hexagon product does not return to the ground state");
    }
  }
  return route;
}

RouteCensus enumerate_routes() {
  RouteCensus census;
  std::array<int, 6> order;
  std::iota(order.begin(), order.end(), 0);
  do {
    ++census.multiplicity[route_of(order)];
  } while (std::next_permutation(order.begin(), order.end()));

  census.q = Rational(0);
  for (const auto &[route, m] : census.multiplicity) {
    int64_t denom = 1;
    for (int e : route) denom *= e;
    census.q += Rational(m, denom);
  }
  return census;
}

double GadgetFit::relative_error() const { return std::abs(zzz - expected_zzz) / std::abs(expected_zzz); }

double GadgetFit::one_body_ratio() const {
  return std::max({std::abs(z_a), std::abs(z_b), std::abs(z_c)}) / std::abs(beta);
}

double GadgetFit::two_body_ratio() const {
  return std::max({std::abs(zz_ab), std::abs(zz_ac), std::abs(zz_bc)}) / std::abs(gamma);
}

GadgetFit gadget_check(double alpha, double beta, double Delta) {
  if (!(Delta > 0) || Delta < 50 * std::max(std::abs(alpha), std::abs(beta)) * (1 - 1e-9)) {
    throw std::invalid_argument("gadget needs Delta >= 50 max(|alpha|, |beta|)");
  }
  GadgetFit fit;
  fit.alpha = alpha;
  fit.beta = beta;
  fit.Delta = Delta;
  fit.gamma = 2 * alpha * alpha / Delta;
  fit.delta = -beta;
  fit.expected_zzz = -4 * alpha * alpha * beta / (Delta * Delta);

  // Basis index = 8 a + 4 b + 2 c + u, bit 0 meaning sigma^z = +1.
  auto zval = [](int idx, int bit) { return (idx >> bit) & 1 ? -1.0 : 1.0; };
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(16, 16);
  for (int i = 0; i < 16; ++i) {
    const double za = zval(i, 3), zb = zval(i, 2), zc = zval(i, 1), zu = zval(i, 0);
    H(i, i) = -Delta / 2 * zu + beta * zc * zu + fit.gamma * za * zb + fit.delta * zc;
    H(i ^ 1, i) += alpha * (za + zb);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  const Eigen::VectorXd &E = es.eigenvalues();
  const Eigen::MatrixXd &V = es.eigenvectors();
  if (E(8) - E(7) < Delta / 2) throw std::runtime_error("gadget spectrum has no gap above the low sector");

  // Each classical (a, b, c) sector holds exactly one low state.
  std::array<double, 8> energy{};
  for (int k = 0; k < 8; ++k) {
    for (int i = 0; i < 16; ++i) energy[i >> 1] += E(k) * V(i, k) * V(i, k);
  }
  auto coeff = [&](int mask) {
    double s = 0;
    for (int cfg = 0; cfg < 8; ++cfg) {
      double sign = 1;
      for (int bit = 0; bit < 3; ++bit)
        if (mask >> bit & 1) sign *= zval(cfg, bit);
      s += sign * energy[cfg];
    }
    return s / 8;
  };
  // cfg bits: 2 = a, 1 = b, 0 = c.
  fit.constant = coeff(0);
  fit.z_c = coeff(1);
  fit.z_b = coeff(2);
  fit.z_a = coeff(4);
  fit.zz_bc = coeff(3);
  fit.zz_ac = coeff(5);
  fit.zz_ab = coeff(6);
  fit.zzz = coeff(7);
  return fit;
}

}  // namespace z4k
