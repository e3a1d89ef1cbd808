#pragma once

#include <map>
#include <span>

#include "bspin/bigint.hpp"
#include "bspin/laurent.hpp"
#include "bspin/rootsys.hpp"

namespace bspin {

/// Weight diagram with exact multiplicities, m_mu = dim V_mu.
using WeightMultiplicityMap = std::map<RescaledWeight, BigInt>;

/// Highest weight of an sl_n module in doubled orthogonal coordinates:
/// integers, weakly decreasing, summing to zero, pairwise even differences.
struct AnHighestWeight {
  std::vector<Coord> gamma;

  AnHighestWeight() = default;
  explicit AnHighestWeight(std::vector<Coord> g) : gamma(std::move(g)) {}
  int rank() const { return static_cast<int>(gamma.size()); }
};

/// Character of the spinor representation: prod_i (y_i + y_i^{-1}),
/// 2^n monomials with exponent vectors at the vertices of the n-cube.
LaurentPoly spinor_character(int n);

/// Exact value of the B_n Weyl character at a torus point, computed as the
/// ratio of the alternants det[y_j^{a_i} - y_j^{-a_i}] with a = lambda + rho
/// over the same with a = rho. Throws SingularPointError when the
/// denominator alternant vanishes (use dim_weyl for the all-ones point).
BigRat character_Bn(const RescaledWeight& lambda, const TorusPoint& pt);

/// Full weight diagram of the irreducible B_n module with highest weight
/// lambda, by the Freudenthal recursion over the doubled positive roots.
/// Intended for desk-scale lambda.
WeightMultiplicityMap freudenthal_weights(const RescaledWeight& lambda);

/// Weyl dimension formula for B_n, exact.
BigInt dim_weyl(const RescaledWeight& lambda);

/// Exact A_{n-1} character at a torus point via the bialternant ratio
/// det[y_j^{gamma_i + 2(n-i)}] / det[y_j^{2(n-i)}]. The value is invariant
/// under a common scaling of the y_i. At an all-equal point returns the
/// module dimension; a partial tie among the y_i throws SingularPointError
/// (fall back to character_An_weight_sum).
BigRat character_An(const AnHighestWeight& gamma, const TorusPoint& pt);

/// Same value through the weight diagram: sum over the sl_n weights of the
/// monomials, exact at any positive point including ties.
BigRat character_An_weight_sum(const AnHighestWeight& gamma, const TorusPoint& pt);

/// Dimension of the sl_n module with highest weight gamma.
BigInt dim_An(const AnHighestWeight& gamma);

/// The diagram of the sl_n module with highest weight gamma (doubled
/// coordinates; every weight has the same coordinate sum as gamma).
WeightMultiplicityMap freudenthal_weights_An(const AnHighestWeight& gamma);

/// Laurent polynomial sum over a weight diagram (the character itself).
LaurentPoly weight_sum_polynomial(const WeightMultiplicityMap& weights, int n);

// ----- log-space floating paths (for the critical-drift regime) -----

/// log chi_{omega_n}(e^t) = sum_i log(2 cosh t_i).
double log_spinor_character(std::span<const double> t);

/// log of the B_n character at e^t, via signed log-sum-exp over the Weyl
/// group alternants. Throws SingularPointError on catastrophic cancellation
/// (tied |t_i| or t_i = 0).
double log_character_Bn(const RescaledWeight& lambda, std::span<const double> t);

/// Floating A_{n-1} character by the weight sum; stable at tied points.
double character_An_value(const AnHighestWeight& gamma, std::span<const double> y);

/// Floating A_{n-1} character for a rational highest weight (zero sum,
/// even integer coordinate differences), as produced by the boundary
/// reparametrization gamma_i = 2(s_1+...+s_n)/n - 2 s_i. Evaluated through
/// the integer shift gamma - gamma_n and a (prod y_i)^{gamma_n} correction.
double character_An_value(std::span<const BigRat> gamma, std::span<const double> y);

}  // namespace bspin
