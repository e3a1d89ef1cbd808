#pragma once

#include <map>
#include <vector>

#include "bspin/bigint.hpp"

namespace bspin {

/// A strictly positive rational point (y_1, ..., y_n) of the maximal torus,
/// y_i = e^{t_i} in the doubled pairing.
struct TorusPoint {
  std::vector<BigRat> y;

  explicit TorusPoint(std::vector<BigRat> v);
  static TorusPoint ones(int n);

  int vars() const { return static_cast<int>(y.size()); }
};

/// Sparse multivariate Laurent polynomial over big integers.
/// Invariant: no zero coefficients are stored; every exponent vector has
/// length vars().
class LaurentPoly {
public:
  using ExpVec = std::vector<int>;
  using TermMap = std::map<ExpVec, BigInt>;

  explicit LaurentPoly(int vars);
  static LaurentPoly constant(int vars, BigInt c);
  static LaurentPoly monomial(ExpVec exps, BigInt c);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exact N-th power by binary exponentiation.
  LaurentPoly pow(unsigned long long N) const;

  /// Exact value at a torus point.
  BigRat eval(const TorusPoint& pt) const;

private:
  int vars_;
  TermMap terms_;
};

}  // namespace bspin
