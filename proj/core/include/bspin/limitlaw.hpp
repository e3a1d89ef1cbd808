#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bspin/bigint.hpp"
#include "bspin/rootsys.hpp"

namespace bspin {

/// Fixed boundary parameters Theta_i = N e^{-2 t_i}, strictly positive.
struct ThetaVector {
  std::vector<double> theta;

  explicit ThetaVector(std::vector<double> v);
  int rank() const { return static_cast<int>(theta.size()); }
};

/// Critical-drift torus element: t_i = ln(N / Theta_i) / 2.
std::vector<double> t_from_theta(long long N, const ThetaVector& theta);

/// Boundary sl_n highest weight gamma_i = 2(s_1+...+s_n)/n - 2 s_i, kept as
/// exact rationals (the coordinates need not be integers, their differences
/// are even integers).
std::vector<BigRat> gamma_from_s(const SVector& s);

/// tau_i = -t_i + t_{i+1} = ln(Theta_i / Theta_{i+1}) / 2, independent of N.
/// Empty for n = 1.
std::vector<double> tau_from_theta(const ThetaVector& theta);

/// The sl_n character factor of the limit law, evaluated from tau
/// (y_1 = 1, y_{i+1} = y_i e^{tau_i}).
double an_character_at_tau(std::span<const BigRat> gamma, std::span<const double> tau);

/// The same factor evaluated at y_i = Theta_i^{-1/2}; equal to the tau
/// route because the character is scale invariant.
double an_character_at_theta(std::span<const BigRat> gamma, const ThetaVector& theta);

/// Poisson-type limit density
///   prod_{i<j}(s_j+j-s_i-i) * prod_k Theta_k^{(s_1+..+s_n)/n} e^{-Theta_k}
///     / (s_k+k-1)! * chi_gamma(e^tau).
/// Returns exactly 0 when s_i + i = s_j + j for some pair (vanishing
/// prefactor); other non-dominant s are rejected.
double limit_density(int n, const SVector& s, const ThetaVector& theta);

/// Truncated sum of limit_density over all dominant s with s_n <= s_cap.
double limit_normalization(int n, const ThetaVector& theta, Coord s_cap);

struct ConvergenceRecord {
  long long N = 0;
  SVector s;
  std::vector<double> theta;
  double p_exact = 0.0;  // character measure at the drift point (log-space float)
  double p_limit = 0.0;
  double rel_err = 0.0;  // |p_exact / p_limit - 1|
};

/// Exact-vs-limit comparison along the critical drift. Rows are ordered by
/// ascending N then by the given s order; s values with zero limit density
/// are skipped.
std::vector<ConvergenceRecord> convergence_table(int n, const ThetaVector& theta,
                                                 const std::vector<SVector>& s_list,
                                                 const std::vector<long long>& N_list);

/// CSV with columns N, s_1..s_n, theta_1..theta_n, p_exact, p_limit,
/// rel_err, plus an optional trailing `# ...` provenance line.
void write_csv(std::ostream& os, std::span<const ConvergenceRecord> records, int n,
               const std::string& comment = {});

}  // namespace bspin
