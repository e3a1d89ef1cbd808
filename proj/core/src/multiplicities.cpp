#include "bspin/multiplicities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

namespace bspin {

namespace {

void validate_s(int n, long long N, const SVector& s, const char* who) {
  if (n < 1) throw ValidationError(std::string(who) + ": rank must be >= 1");
  if (N < 0) throw ValidationError(std::string(who) + ": N must be >= 0");
  if (s.rank() != n) throw ValidationError(std::string(who) + ": s has wrong rank");
  if (!is_valid_s(s))
    throw ValidationError(std::string(who) + ": s must be non-negative and non-decreasing");
  if (2 * s.s.back() > N)
    throw ValidationError(std::string(who) + ": s_n > N/2 (lambda_n < 0)");
}

}  // namespace

ShiftedCoords shifted_coords(const RescaledWeight& lambda) {
  if (!is_dominant(lambda)) throw ValidationError("shifted_coords: weight not dominant");
  const int n = lambda.rank();
  const auto r = rho(n);
  ShiftedCoords out;
  out.a.resize(n);
  for (int i = 0; i < n; ++i) out.a[i] = lambda.coords[i] + r.coords[i];
  for (int i = 0; i < n; ++i) {
    if (out.a[i] < 1 || (i > 0 && out.a[i] >= out.a[i - 1]))
      throw ValidationError("shifted_coords: coordinates not strictly decreasing positive");
  }
  return out;
}

BigInt multiplicity_exact(int n, long long N, const SVector& s) {
  validate_s(n, N, s, "multiplicity_exact");
  BigRat acc(BigInt(1), BigInt(1) << (n * (n - 1)));
  for (int k = 1; k <= n; ++k) {
    const long long sk = s.s[k - 1];
    // (N+2(k-1))! / (N-s_k+2n-k)! collapses to a short product, so the
    // kernel stays fast far past desk scale.
    const long long hi = N + 2 * (k - 1);
    const long long lo = N - sk + 2 * n - k;
    if (hi >= lo) {
      acc *= product_range(lo + 1, hi);
    } else {
      acc /= product_range(hi + 1, lo);
    }
    acc /= factorial(sk + k - 1);
  }
  BigInt tail = 1;
  for (int l = 1; l <= n; ++l) tail *= N - 2 * s.s[l - 1] + 2 * n - 2 * l + 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      tail *= -2 * s.s[i - 1] - 2 * i + 2 * s.s[j - 1] + 2 * j;
      tail *= 2 * N - 2 * s.s[i - 1] - 2 * i - 2 * s.s[j - 1] - 2 * j + 4 * n + 2;
    }
  }
  acc *= tail;
  if (denominator(acc) != 1)
    throw std::logic_error("multiplicity_exact: result failed to cancel to an integer");
  return numerator(acc);
}

double multiplicity_asymptotic(int n, long long N, const SVector& s) {
  validate_s(n, N, s, "multiplicity_asymptotic");
  double v = 1.0;
  for (int k = 1; k <= n; ++k) {
    v *= std::pow(static_cast<double>(N), static_cast<double>(s.s[k - 1]));
    v /= factorial(s.s[k - 1] + k - 1).convert_to<double>();
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      v *= static_cast<double>(s.s[j - 1] + j - s.s[i - 1] - i);
  return v;
}

double multiplicity_log(int n, long long N, const SVector& s) {
  validate_s(n, N, s, "multiplicity_log");
  double v = -static_cast<double>(n * (n - 1)) * std::numbers::ln2_v<double>;
  for (int k = 1; k <= n; ++k) {
    const double sk = static_cast<double>(s.s[k - 1]);
    v += std::lgamma(static_cast<double>(N + 2 * (k - 1)) + 1.0);
    v -= std::lgamma(static_cast<double>(N) - sk + 2 * n - k + 1.0);
    v -= std::lgamma(sk + k);
  }
  for (int l = 1; l <= n; ++l)
    v += std::log(static_cast<double>(N - 2 * s.s[l - 1] + 2 * n - 2 * l + 1));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      v += std::log(static_cast<double>(-2 * s.s[i - 1] - 2 * i + 2 * s.s[j - 1] + 2 * j));
      v += std::log(static_cast<double>(2 * N - 2 * s.s[i - 1] - 2 * i - 2 * s.s[j - 1] -
                                        2 * j + 4 * n + 2));
    }
  }
  return v;
}

namespace {

// rho-shifted reflection of xi: zero or tied |coordinates| kill the term,
// otherwise the unique signed permutation sorting |xi| to strictly
// decreasing order carries its determinant as the sign.
struct ReflectedTerm {
  std::vector<Coord> sorted;  // strictly decreasing positive
  int sign = 0;               // 0 when the term dies on a wall
};

ReflectedTerm reflect_to_dominant(std::vector<Coord> xi) {
  ReflectedTerm out;
  int sign = 1;
  for (auto& x : xi) {
    if (x == 0) return out;
    if (x < 0) {
      x = -x;
      sign = -sign;
    }
  }
  // Insertion sort, counting swaps.
  for (std::size_t i = 1; i < xi.size(); ++i) {
    Coord v = xi[i];
    std::size_t j = i;
    while (j > 0 && xi[j - 1] < v) {
      xi[j] = xi[j - 1];
      --j;
      sign = -sign;
    }
    xi[j] = v;
  }
  for (std::size_t i = 1; i < xi.size(); ++i) {
    if (xi[i] == xi[i - 1]) return out;
  }
  out.sorted = std::move(xi);
  out.sign = sign;
  return out;
}

}  // namespace

DecompositionTable tensor_decompose_oracle(int n, long long N) {
  if (n < 1) throw ValidationError("tensor_decompose_oracle: rank must be >= 1");
  if (N < 1) throw ValidationError("tensor_decompose_oracle: N must be >= 1");
  if (n > 3 || N > 16)
    throw ScaleGuardError("tensor_decompose_oracle: desk scale is n <= 3, N <= 16");

  const auto rho_v = rho(n).coords;
  // Highest weights keyed by lambda; start from the single spinor factor.
  std::map<std::vector<Coord>, BigInt> table;
  table.emplace(std::vector<Coord>(n, 1), BigInt(1));

  std::vector<Coord> xi(n);
  for (long long step = 1; step < N; ++step) {
    std::map<std::vector<Coord>, BigInt> next;
    for (const auto& [lam, m] : table) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int i = 0; i < n; ++i) {
          const Coord eps = (mask >> i) & 1 ? -1 : 1;
          xi[i] = lam[i] + eps + rho_v[i];
        }
        const ReflectedTerm ref = reflect_to_dominant(xi);
        if (ref.sign == 0) continue;
        std::vector<Coord> target(n);
        for (int i = 0; i < n; ++i) target[i] = ref.sorted[i] - rho_v[i];
        auto it = next.find(target);
        if (it == next.end()) {
          next.emplace(std::move(target), ref.sign * m);
        } else {
          it->second += ref.sign * m;
          if (it->second == 0) next.erase(it);
        }
      }
    }
    table = std::move(next);
  }

  DecompositionTable out;
  out.n = n;
  out.N = N;
  for (const auto& [lam, m] : table) {
    if (m < 0) throw std::logic_error("tensor_decompose_oracle: negative multiplicity");
    out.mult.emplace(s_from_lambda(N, RescaledWeight(lam)), m);
  }
  return out;
}

}  // namespace bspin
