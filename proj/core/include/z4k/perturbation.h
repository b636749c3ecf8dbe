#ifndef Z4K_PERTURBATION_H
#define Z4K_PERTURBATION_H

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace z4k {

using Rational = boost::rational<int64_t>;

/// Total excitation energy (units of the triangle gap) after each of the first
/// five factors of a hexagon product; the energy before and after is 0.
using EnergyRoute = std::array<int, 5>;

std::string route_string(const EnergyRoute &r);

struct RouteCensus {
  std::map<EnergyRoute, int64_t> multiplicity;
  /// sum over routes of multiplicity / product of the intermediate energies.
  Rational q;

  int64_t total() const;
};

/// Route of one ordering of the six hexagon vertices (order[k] is the vertex
/// acted on at step k). Throws if the final state is not the ground state.
EnergyRoute route_of(const std::array<int, 6> &order);

/// Bins all 720 orderings.
RouteCensus enumerate_routes();

struct GadgetFit {
  double alpha = 0, beta = 0, gamma = 0, delta = 0, Delta = 0;
  double constant = 0;
  double z_a = 0, z_b = 0, z_c = 0;
  double zz_ab = 0, zz_ac = 0, zz_bc = 0;
  double zzz = 0;
  double expected_zzz = 0;  // -4 alpha^2 beta / Delta^2

  double relative_error() const;
  /// Largest one-body coefficient relative to |beta|, the size of the term the
  /// delta shift cancels; likewise two-body relative to 2 alpha^2 / Delta.
  double one_body_ratio() const;
  double two_body_ratio() const;
};

/// Exact diagonalization of the four-qubit gadget with mediator u and the
/// cancelling choices gamma = 2 alpha^2 / Delta, delta = -beta. The energies of
/// the eight low states are expanded in products of sigma^z_{a,b,c}.
/// Requires Delta / max(alpha, beta) >= 50.
GadgetFit gadget_check(double alpha, double beta, double Delta);

}  // namespace z4k

#endif
