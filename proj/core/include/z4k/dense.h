#ifndef Z4K_DENSE_H
#define Z4K_DENSE_H

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "z4k/phased_pauli.h"

namespace z4k {

using cplx = std::complex<double>;

/// exp(i*pi*k/4), i.e. omega^(k/2).
cplx eighth_root(int k);

/// Dense 4^n x 4^n matrix of p with Z|j> = omega^j |j>, X|j> = |j+1>.
/// Qudit 0 is the most significant tensor factor. Requires n <= 6.
Eigen::MatrixXcd dense_matrix(const PhasedPauli &p);

/// Single-qudit Z^a X^b as a 4x4 matrix in the qudit basis.
Eigen::Matrix4cd qudit_matrix(int a, int b);

/// The two-qubit realization of the qudit operators on qubits (1, 2), in the
/// |s1 s2> basis with qubit 1 most significant.
Eigen::Matrix4cd qubit_pair_x();
Eigen::Matrix4cd qubit_pair_y();
Eigen::Matrix4cd qubit_pair_z();

/// sigma^axis on qubit `slot` (1 or 2) of the pair.
Eigen::Matrix4cd qubit_sigma(Axis axis, int slot);

/// Coefficients c[a][b] of m = sum c_ab Z^a X^b where Z, X are the two-qubit
/// realizations above.
std::vector<std::vector<cplx>> pair_pauli_expansion(const Eigen::Matrix4cd &m);

}  // namespace z4k

#endif
