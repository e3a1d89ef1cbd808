#include "bspin/characters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace bspin {

namespace {

enum class SystemType { A, B };

// Doubled-coordinate positive roots: B_n has e_i - e_j, e_i + e_j (i < j)
// and e_i; the A_{n-1} subsystem keeps only e_i - e_j.
std::vector<std::vector<Coord>> positive_roots(SystemType type, int n) {
  std::vector<std::vector<Coord>> roots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<Coord> r(n, 0);
      r[i] = 2;
      r[j] = -2;
      roots.push_back(r);
      if (type == SystemType::B) {
        r[j] = 2;
        roots.push_back(r);
      }
    }
    if (type == SystemType::B) {
      std::vector<Coord> r(n, 0);
      r[i] = 2;
      roots.push_back(r);
    }
  }
  return roots;
}

std::vector<Coord> weyl_vector(SystemType type, int n) {
  std::vector<Coord> r(n);
  for (int i = 0; i < n; ++i)
    r[i] = type == SystemType::B ? 2 * (n - 1 - i) + 1 : n - 1 - 2 * i;
  return r;
}

std::vector<Coord> dominant_representative(SystemType type, std::vector<Coord> v) {
  if (type == SystemType::B)
    for (auto& x : v) x = std::abs(x);
  std::sort(v.begin(), v.end(), std::greater<Coord>());
  return v;
}

Coord dot(const std::vector<Coord>& a, const std::vector<Coord>& b) {
  Coord s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Coord> plus(const std::vector<Coord>& a, const std::vector<Coord>& b) {
  std::vector<Coord> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// All dominant weights of the diagram of lambda: dominant vectors mu with
// lambda - mu in the non-negative span of the simple roots. In doubled
// coordinates that means every prefix sum of lambda - mu is even and >= 0
// (and, for type A, the total is zero).
void enumerate_dominant_diagram(SystemType type, const std::vector<Coord>& lambda,
                                std::vector<std::vector<Coord>>& out) {
  const int n = static_cast<int>(lambda.size());
  const Coord lo_bound = type == SystemType::B ? 0 : lambda.back();
  std::vector<Coord> mu(n);
  std::vector<Coord> lambda_prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) lambda_prefix[i + 1] = lambda_prefix[i] + lambda[i];

  auto rec = [&](auto&& self, int i, Coord mu_prefix) -> void {
    if (i == n) {
      if (type == SystemType::A && mu_prefix != lambda_prefix[n]) return;
      out.push_back(mu);
      return;
    }
    Coord hi = i == 0 ? lambda[0] : std::min(mu[i - 1], lambda_prefix[i + 1] - mu_prefix);
    hi = std::min(hi, lambda_prefix[i + 1] - mu_prefix);
    // Keep the same parity as lambda_i so the difference stays in the
    // root lattice.
    for (Coord v = hi; v >= lo_bound; v -= 1) {
      if (((v - lambda[i]) & 1) != 0) continue;
      if (type == SystemType::A) {
        // Remaining coordinates are bounded by v and lambda[0]; prune when
        // the total can no longer be reached.
        Coord rem = lambda_prefix[n] - mu_prefix - v;
        if (rem > static_cast<Coord>(n - 1 - i) * v) break;
        if (rem < static_cast<Coord>(n - 1 - i) * lo_bound) continue;
      }
      mu[i] = v;
      self(self, i + 1, mu_prefix + v);
    }
  };
  rec(rec, 0, 0);
}

// Freudenthal recursion over the dominant part of the diagram.
std::map<std::vector<Coord>, BigInt> freudenthal_dominant(SystemType type,
                                                          const std::vector<Coord>& lambda) {
  const int n = static_cast<int>(lambda.size());
  const auto roots = positive_roots(type, n);
  const auto rho_v = weyl_vector(type, n);

  std::vector<std::vector<Coord>> dominants;
  enumerate_dominant_diagram(type, lambda, dominants);

  // Height above mu = half the coordinate-sum deficit against lambda does
  // not order type B diagrams (the short roots change the sum by 2); use
  // the exact root-coefficient sum instead.
  auto height = [&](const std::vector<Coord>& mu) -> Coord {
    // lambda - mu = sum c_k alpha_k with c_k = prefix_k / 2 for B;
    // same formula holds for A where c_n = 0.
    Coord h = 0, prefix = 0;
    for (int i = 0; i < n; ++i) {
      prefix += lambda[i] - mu[i];
      h += prefix / 2;
    }
    return h;
  };
  std::sort(dominants.begin(), dominants.end(),
            [&](const auto& a, const auto& b) { return height(a) < height(b); });

  const Coord lr2 = dot(plus(lambda, rho_v), plus(lambda, rho_v));
  std::map<std::vector<Coord>, BigInt> mult;
  for (const auto& mu : dominants) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    BigInt acc = 0;
    for (const auto& alpha : roots) {
      std::vector<Coord> nu = mu;
      for (Coord k = 1;; ++k) {
        for (int i = 0; i < n; ++i) nu[i] += alpha[i];
        auto it = mult.find(dominant_representative(type, nu));
        if (it == mult.end()) break;  // alpha-string left the diagram
        acc += BigInt(dot(nu, alpha)) * it->second;
      }
    }
    acc *= 2;
    const Coord denom = lr2 - dot(plus(mu, rho_v), plus(mu, rho_v));
    if (denom <= 0) throw std::logic_error("freudenthal: non-positive denominator");
    BigInt q = acc / denom;
    if (q * denom != acc) throw std::logic_error("freudenthal: non-integer multiplicity");
    if (q > 0) mult[mu] = q;
  }
  return mult;
}

// Expand a dominant weight's multiplicity over its Weyl orbit.
void expand_orbit(SystemType type, const std::vector<Coord>& mu, const BigInt& m,
                  WeightMultiplicityMap& out) {
  std::vector<Coord> v = mu;
  std::sort(v.begin(), v.end());
  do {
    if (type == SystemType::A) {
      out[RescaledWeight(v)] = m;
      continue;
    }
    // Sign choices on the nonzero coordinates.
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
      if (v[i] != 0) idx.push_back(i);
    const std::size_t count = std::size_t{1} << idx.size();
    std::vector<Coord> w = v;
    for (std::size_t mask = 0; mask < count; ++mask) {
      for (std::size_t b = 0; b < idx.size(); ++b)
        w[idx[b]] = (mask >> b) & 1 ? -v[idx[b]] : v[idx[b]];
      out[RescaledWeight(w)] = m;
    }
  } while (std::next_permutation(v.begin(), v.end()));
}

// Fraction-free Bareiss determinant; destroys its argument.
BigInt bareiss_det(std::vector<std::vector<BigInt>>& m) {
  const int n = static_cast<int>(m.size());
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// det[y_j^{e_i} - y_j^{-e_i}] with positive integer exponents, exact.
// Columns are scaled by (p_j q_j)^{e_max} to clear denominators before the
// fraction-free elimination.
BigRat signed_alternant(const std::vector<Coord>& e, const TorusPoint& pt) {
  const int n = static_cast<int>(e.size());
  const Coord emax = *std::max_element(e.begin(), e.end());
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  BigRat scale = 1;
  for (int j = 0; j < n; ++j) {
    const BigInt p = numerator(pt.y[j]);
    const BigInt q = denominator(pt.y[j]);
    for (int i = 0; i < n; ++i) {
      m[i][j] = boost::multiprecision::pow(p, static_cast<unsigned>(emax + e[i])) *
                    boost::multiprecision::pow(q, static_cast<unsigned>(emax - e[i])) -
                boost::multiprecision::pow(p, static_cast<unsigned>(emax - e[i])) *
                    boost::multiprecision::pow(q, static_cast<unsigned>(emax + e[i]));
    }
    scale *= rat_pow(BigRat(p * q), emax);
  }
  return BigRat(bareiss_det(m)) / scale;
}

// det[y_j^{e_i}] with non-negative integer exponents, exact.
BigRat power_alternant(const std::vector<Coord>& e, const TorusPoint& pt) {
  const int n = static_cast<int>(e.size());
  const Coord emax = *std::max_element(e.begin(), e.end());
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  BigRat scale = 1;
  for (int j = 0; j < n; ++j) {
    const BigInt p = numerator(pt.y[j]);
    const BigInt q = denominator(pt.y[j]);
    for (int i = 0; i < n; ++i) {
      m[i][j] = boost::multiprecision::pow(p, static_cast<unsigned>(e[i])) *
                boost::multiprecision::pow(q, static_cast<unsigned>(emax - e[i]));
    }
    scale *= rat_pow(BigRat(q), emax);
  }
  return BigRat(bareiss_det(m)) / scale;
}

void validate_Bn_weight(const RescaledWeight& lambda, const char* who) {
  if (!is_dominant(lambda)) throw ValidationError(std::string(who) + ": weight not dominant");
  for (int i = 1; i < lambda.rank(); ++i) {
    if (((lambda.coords[i] - lambda.coords[0]) & 1) != 0)
      throw ValidationError(std::string(who) + ": coordinates of mixed parity");
  }
}

void validate_An_weight(const AnHighestWeight& gamma, const char* who) {
  const int n = gamma.rank();
  if (n < 1) throw ValidationError(std::string(who) + ": empty weight");
  Coord total = 0;
  for (int i = 0; i < n; ++i) {
    total += gamma.gamma[i];
    if (i > 0 && gamma.gamma[i] > gamma.gamma[i - 1])
      throw ValidationError(std::string(who) + ": coordinates not weakly decreasing");
    if (((gamma.gamma[i] - gamma.gamma[0]) & 1) != 0)
      throw ValidationError(std::string(who) + ": coordinate differences must be even");
  }
  if (total != 0) throw ValidationError(std::string(who) + ": coordinates must sum to zero");
}

std::vector<Coord> shifted_exponents(const RescaledWeight& lambda) {
  const int n = lambda.rank();
  std::vector<Coord> a(n);
  for (int i = 0; i < n; ++i) a[i] = lambda.coords[i] + 2 * (n - 1 - i) + 1;
  return a;
}

}  // namespace

LaurentPoly spinor_character(int n) {
  if (n < 1) throw ValidationError("spinor_character: rank must be >= 1");
  LaurentPoly p = LaurentPoly::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    LaurentPoly::ExpVec plus_e(n, 0), minus_e(n, 0);
    plus_e[i] = 1;
    minus_e[i] = -1;
    LaurentPoly f = LaurentPoly::monomial(plus_e, 1);
    f += LaurentPoly::monomial(minus_e, 1);
    p = p * f;
  }
  return p;
}

BigRat character_Bn(const RescaledWeight& lambda, const TorusPoint& pt) {
  validate_Bn_weight(lambda, "character_Bn");
  const int n = lambda.rank();
  if (pt.vars() != n) throw ValidationError("character_Bn: point rank mismatch");
  const BigRat den = signed_alternant(rho(n).coords, pt);
  if (den == 0)
    throw SingularPointError("character_Bn: denominator alternant vanishes at this point");
  const BigRat num = signed_alternant(shifted_exponents(lambda), pt);
  return num / den;
}

WeightMultiplicityMap freudenthal_weights(const RescaledWeight& lambda) {
  validate_Bn_weight(lambda, "freudenthal_weights");
  const auto dominant = freudenthal_dominant(SystemType::B, lambda.coords);
  WeightMultiplicityMap out;
  for (const auto& [mu, m] : dominant) expand_orbit(SystemType::B, mu, m, out);
  return out;
}

BigInt dim_weyl(const RescaledWeight& lambda) {
  validate_Bn_weight(lambda, "dim_weyl");
  const int n = lambda.rank();
  const auto roots = positive_roots(SystemType::B, n);
  const auto rho_v = weyl_vector(SystemType::B, n);
  const auto lr = plus(lambda.coords, rho_v);
  BigInt num = 1, den = 1;
  for (const auto& alpha : roots) {
    num *= dot(lr, alpha);
    den *= dot(rho_v, alpha);
  }
  if (num % den != 0) throw std::logic_error("dim_weyl: non-integer dimension");
  return num / den;
}

BigRat character_An(const AnHighestWeight& gamma, const TorusPoint& pt) {
  validate_An_weight(gamma, "character_An");
  const int n = gamma.rank();
  if (pt.vars() != n) throw ValidationError("character_An: point rank mismatch");
  if (n == 1) return BigRat(1);

  const bool all_equal = std::all_of(pt.y.begin(), pt.y.end(),
                                     [&](const BigRat& v) { return v == pt.y[0]; });
  if (all_equal) return BigRat(dim_An(gamma));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pt.y[i] == pt.y[j])
        throw SingularPointError(
            "character_An: tied coordinates, use character_An_weight_sum");

  std::vector<Coord> num_e(n), den_e(n);
  for (int i = 0; i < n; ++i) {
    num_e[i] = gamma.gamma[i] + 2 * (n - 1 - i);
    den_e[i] = 2 * (n - 1 - i);
  }
  const Coord mn = *std::min_element(num_e.begin(), num_e.end());
  const Coord shift = mn < 0 ? -mn : 0;
  for (auto& e : num_e) e += shift;
  BigRat val = power_alternant(num_e, pt) / power_alternant(den_e, pt);
  if (shift > 0) {
    for (int j = 0; j < n; ++j) val /= rat_pow(pt.y[j], shift);
  }
  return val;
}

BigRat character_An_weight_sum(const AnHighestWeight& gamma, const TorusPoint& pt) {
  validate_An_weight(gamma, "character_An_weight_sum");
  if (pt.vars() != gamma.rank())
    throw ValidationError("character_An_weight_sum: point rank mismatch");
  BigRat total = 0;
  for (const auto& [mu, m] : freudenthal_weights_An(gamma)) {
    BigRat term(m);
    for (int i = 0; i < gamma.rank(); ++i) term *= rat_pow(pt.y[i], mu.coords[i]);
    total += term;
  }
  return total;
}

BigInt dim_An(const AnHighestWeight& gamma) {
  validate_An_weight(gamma, "dim_An");
  const int n = gamma.rank();
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= (gamma.gamma[i] - gamma.gamma[j]) / 2 + (j - i);
      den *= j - i;
    }
  }
  if (num % den != 0) throw std::logic_error("dim_An: non-integer dimension");
  return num / den;
}

WeightMultiplicityMap freudenthal_weights_An(const AnHighestWeight& gamma) {
  validate_An_weight(gamma, "freudenthal_weights_An");
  const auto dominant = freudenthal_dominant(SystemType::A, gamma.gamma);
  WeightMultiplicityMap out;
  for (const auto& [mu, m] : dominant) expand_orbit(SystemType::A, mu, m, out);
  return out;
}

LaurentPoly weight_sum_polynomial(const WeightMultiplicityMap& weights, int n) {
  LaurentPoly p(n);
  for (const auto& [mu, m] : weights) {
    if (mu.rank() != n) throw ValidationError("weight_sum_polynomial: rank mismatch");
    LaurentPoly::ExpVec e(n);
    for (int i = 0; i < n; ++i) e[i] = static_cast<int>(mu.coords[i]);
    p += LaurentPoly::monomial(std::move(e), m);
  }
  return p;
}

double log_spinor_character(std::span<const double> t) {
  double total = 0;
  for (double ti : t) {
    const double a = std::abs(ti);
    total += a + std::log1p(std::exp(-2 * a));
  }
  return total;
}

namespace {

// Signed log-sum-exp of the alternant det[exp(a_i t_j) - exp(-a_i t_j)].
// Returns log|det| and the sign.
std::pair<double, int> log_signed_alternant(const std::vector<Coord>& a,
                                            std::span<const double> t) {
  const int n = static_cast<int>(a.size());
  double lead = -std::numeric_limits<double>::infinity();
  for_each_weyl_element(WeylType::B, n, [&](const WeylElement& w) {
    double e = 0;
    for (int j = 0; j < n; ++j) e += w.signs[j] * static_cast<double>(a[w.perm[j]]) * t[j];
    lead = std::max(lead, e);
  });
  double sum = 0;
  for_each_weyl_element(WeylType::B, n, [&](const WeylElement& w) {
    double e = 0;
    for (int j = 0; j < n; ++j) e += w.signs[j] * static_cast<double>(a[w.perm[j]]) * t[j];
    sum += w.sign * std::exp(e - lead);
  });
  const double floor = 1e-9 * static_cast<double>(weyl_order(WeylType::B, n));
  if (std::abs(sum) < floor)
    throw SingularPointError("log_character_Bn: alternant cancels at this point");
  return {lead + std::log(std::abs(sum)), sum > 0 ? 1 : -1};
}

}  // namespace

double log_character_Bn(const RescaledWeight& lambda, std::span<const double> t) {
  validate_Bn_weight(lambda, "log_character_Bn");
  const int n = lambda.rank();
  if (static_cast<int>(t.size()) != n)
    throw ValidationError("log_character_Bn: point rank mismatch");
  const auto [log_num, sign_num] = log_signed_alternant(shifted_exponents(lambda), t);
  const auto [log_den, sign_den] = log_signed_alternant(rho(n).coords, t);
  if (sign_num != sign_den)
    throw SingularPointError("log_character_Bn: alternant signs disagree (singular point)");
  return log_num - log_den;
}

namespace {

// Weight-sum evaluation of the diagram of a shifted (not zero-sum) integer
// highest weight; all terms are positive, so ties among the y_i are fine.
double weight_sum_value(const std::vector<Coord>& top, std::span<const double> y) {
  const int n = static_cast<int>(top.size());
  const auto dominant = freudenthal_dominant(SystemType::A, top);
  WeightMultiplicityMap diagram;
  for (const auto& [mu, m] : dominant) expand_orbit(SystemType::A, mu, m, diagram);
  double total = 0;
  for (const auto& [mu, m] : diagram) {
    double term = m.convert_to<double>();
    for (int i = 0; i < n; ++i) term *= std::pow(y[i], static_cast<double>(mu.coords[i]));
    total += term;
  }
  return total;
}

void validate_positive_point(std::span<const double> y, const char* who) {
  for (double v : y) {
    if (!(v > 0) || !std::isfinite(v))
      throw ValidationError(std::string(who) + ": coordinates must be finite and > 0");
  }
}

}  // namespace

double character_An_value(const AnHighestWeight& gamma, std::span<const double> y) {
  validate_An_weight(gamma, "character_An_value");
  if (static_cast<int>(y.size()) != gamma.rank())
    throw ValidationError("character_An_value: point rank mismatch");
  validate_positive_point(y, "character_An_value");
  return weight_sum_value(gamma.gamma, y);
}

double character_An_value(std::span<const BigRat> gamma, std::span<const double> y) {
  const int n = static_cast<int>(gamma.size());
  if (n < 1) throw ValidationError("character_An_value: empty weight");
  if (static_cast<int>(y.size()) != n)
    throw ValidationError("character_An_value: point rank mismatch");
  validate_positive_point(y, "character_An_value");
  BigRat total = 0;
  for (int i = 0; i < n; ++i) {
    total += gamma[i];
    if (i > 0 && gamma[i] > gamma[i - 1])
      throw ValidationError("character_An_value: coordinates not weakly decreasing");
  }
  if (total != 0) throw ValidationError("character_An_value: coordinates must sum to zero");
  // Shift to the integer weight gamma - gamma_n; differences must be even
  // integers for gamma to label an sl_n module in doubled coordinates.
  std::vector<Coord> top(n);
  for (int i = 0; i < n; ++i) {
    const BigRat d = gamma[i] - gamma[n - 1];
    if (denominator(d) != 1 || (numerator(d) & 1) != 0)
      throw ValidationError("character_An_value: coordinate differences must be even integers");
    top[i] = numerator(d).convert_to<Coord>();
  }
  double log_scale = 0;
  for (double v : y) log_scale += std::log(v);
  const double c = to_double(gamma[n - 1]);
  return weight_sum_value(top, y) * std::exp(c * log_scale);
}

}  // namespace bspin
