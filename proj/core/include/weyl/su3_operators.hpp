#pragma once

#include <array>
#include <cstdint>

#include "weyl/matrix.hpp"
#include "weyl/report.hpp"

namespace weyl {

/// I, U and V spin raising/lowering operators. Each equals a single E_ij:
/// I+ = E12, I- = E21, V+ = E13, V- = E31, U+ = E23, U- = E32.
struct LadderOperators {
  Matrix iPlus, iMinus;
  Matrix uPlus, uMinus;
  Matrix vPlus, vMinus;
};

/// Physical-notation operators of u(3)/su(3), all hermitian 3x3. Arrays are
/// 0-indexed: t[0] is T1, lambda[0] is lambda_1, and so on.
///
/// L_k and M_k are built from elementary matrices (iL3 = E12 - E21,
/// M3 = E12 + E21, ...); the Gell-Mann matrices are entered independently so
/// that the identifications between the two can be checked.
struct Su3Operators {
  std::array<Matrix, 3> t;
  std::array<Matrix, 3> l;
  std::array<Matrix, 3> m;
  std::array<Matrix, 8> lambda;
  std::array<Matrix, 8> f;  // F_i = lambda_i / 2
  Matrix h1;                // F3
  Matrix h2;                // F8
  LadderOperators ladder;
  std::array<double, 2> alpha1;  // (1/2,  sqrt3/2)
  std::array<double, 2> alpha2;  // (1/2, -sqrt3/2)
};

/// Cartan-Weyl step operators carry a 1/sqrt6 relative to the ladder
/// operators: E_alpha = ladder / sqrt6. The ladder form is the one used
/// everywhere else; this factor is the only trace of the other normalization.
inline const double kCartanWeylScale = 1.0 / std::sqrt(6.0);

Su3Operators su3Operators();

/// Builds the ladder operators from L and M: I+ = (M3 + iL3)/2, etc.
LadderOperators ladderOperators(const Su3Operators& ops);

/// Checks the listed commutators of L, M, T (the L-L and M-M relations, the
/// mixed L-M lines, the twelve [L,T] and [M,T] lines), the Casimir-like
/// identities [L_k, L^2] = [L_k, M^2] = [M_k, M^2] = [M_k, L^2] = 0, and that
/// every commutator among {L, M, T} not listed vanishes. Tolerance 1e-14.
VerificationReport verifyCommutatorTable(const Su3Operators& ops);

/// Checks the notation identities: hermiticity, iL/iM against Gell-Mann
/// matrices, L = 2F identifications, ladder = E_ij, inversion back to L and
/// M, the sqrt6-normalized Cartan-Weyl form, and the I-spin identity.
VerificationReport verifyNotationIdentities(const Su3Operators& ops);

/// [H_a, E_alpha] = alpha_a E_alpha for all six ladder operators, and
/// [H(theta), E_ij] = (theta_i - theta_j) E_ij for three random theta.
VerificationReport verifyRoots(const Su3Operators& ops, std::uint64_t seed = 1);

}  // namespace weyl
