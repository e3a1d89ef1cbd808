#pragma once

#include <map>

#include "bspin/bigint.hpp"
#include "bspin/rootsys.hpp"

namespace bspin {

/// Weyl-vector-shifted coordinates a_i = lambda_i + rho_i: strictly
/// decreasing positive integers, all of parity N+1.
struct ShiftedCoords {
  std::vector<Coord> a;
};

/// a = lambda + rho; validates strict decrease and positivity.
ShiftedCoords shifted_coords(const RescaledWeight& lambda);

/// Full decomposition of the N-th spinor tensor power.
/// Invariant: sum over entries of mult * dim equals 2^{nN}.
struct DecompositionTable {
  int n = 0;
  long long N = 0;
  std::map<SVector, BigInt> mult;
};

/// Exact multiplicity of L^lambda, lambda_i = N - 2 s_i, in the N-th tensor
/// power of the spinor representation. The internal rational arithmetic
/// must cancel to an integer; a leftover denominator throws logic_error.
BigInt multiplicity_exact(int n, long long N, const SVector& s);

/// Leading large-N form: prod_k N^{s_k}/(s_k+k-1)! * prod_{i<j}(s_j+j-s_i-i).
double multiplicity_asymptotic(int n, long long N, const SVector& s);

/// log of multiplicity_exact via lgamma, usable far past exact desk scale.
double multiplicity_log(int n, long long N, const SVector& s);

/// Independent oracle: iterated tensoring by the spinor representation with
/// the signed rho-shifted reflection rule over the 2^n spinor weights.
/// Desk-scale only; large inputs throw ScaleGuardError.
DecompositionTable tensor_decompose_oracle(int n, long long N);

}  // namespace bspin
