#include "bspin/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bspin {

Coord RescaledWeight::sum() const {
  return std::accumulate(coords.begin(), coords.end(), Coord{0});
}

Coord SVector::sum() const {
  return std::accumulate(s.begin(), s.end(), Coord{0});
}

RescaledWeight WeylElement::apply(const RescaledWeight& w) const {
  const int n = static_cast<int>(perm.size());
  if (w.rank() != n) throw ValidationError("WeylElement::apply: rank mismatch");
  std::vector<Coord> out(n);
  for (int i = 0; i < n; ++i) out[i] = signs[i] * w.coords[perm[i]];
  return RescaledWeight(std::move(out));
}

RescaledWeight rho(int n) {
  if (n < 1) throw ValidationError("rho: rank must be >= 1");
  std::vector<Coord> c(n);
  for (int i = 0; i < n; ++i) c[i] = 2 * (n - 1 - i) + 1;
  return RescaledWeight(std::move(c));
}

bool is_valid_s(const SVector& s) {
  if (s.rank() < 1) return false;
  for (int i = 0; i < s.rank(); ++i) {
    if (s.s[i] < 0) return false;
    if (i > 0 && s.s[i] < s.s[i - 1]) return false;
  }
  return true;
}

RescaledWeight lambda_from_s(long long N, const SVector& s) {
  if (N < 0) throw ValidationError("lambda_from_s: N must be >= 0");
  if (!is_valid_s(s))
    throw ValidationError("lambda_from_s: s must be non-negative and non-decreasing");
  if (2 * s.s.back() > N)
    throw ValidationError("lambda_from_s: s_n > N/2 gives a non-dominant weight");
  std::vector<Coord> c(s.rank());
  for (int i = 0; i < s.rank(); ++i) c[i] = N - 2 * s.s[i];
  return RescaledWeight(std::move(c));
}

SVector s_from_lambda(long long N, const RescaledWeight& lambda) {
  if (lambda.rank() < 1) throw ValidationError("s_from_lambda: empty weight");
  if (!is_dominant(lambda)) throw ValidationError("s_from_lambda: weight not dominant");
  std::vector<Coord> out(lambda.rank());
  for (int i = 0; i < lambda.rank(); ++i) {
    const Coord d = N - lambda.coords[i];
    if (d % 2 != 0)
      throw ValidationError("s_from_lambda: lambda_" + std::to_string(i + 1) +
                            " does not match the parity of N");
    if (d < 0) throw ValidationError("s_from_lambda: lambda_i > N");
    out[i] = d / 2;
  }
  return SVector(std::move(out));
}

bool is_dominant(const RescaledWeight& w) {
  if (w.rank() < 1) return false;
  for (int i = 0; i < w.rank(); ++i) {
    if (i > 0 && w.coords[i] > w.coords[i - 1]) return false;
  }
  return w.coords.back() >= 0;
}

std::uint64_t weyl_order(WeylType type, int n) {
  if (n < 1) throw ValidationError("weyl_order: rank must be >= 1");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return type == WeylType::A ? f : f << n;
}

namespace {

int permutation_parity_sign(const std::vector<int>& perm) {
  // Cycle decomposition; avoids touching the caller's buffer.
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int j = i, len = 0;
    while (!seen[j]) {
      seen[j] = 1;
      j = perm[j];
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

}  // namespace

void for_each_weyl_element(WeylType type, int n,
                           const std::function<void(const WeylElement&)>& fn) {
  if (n < 1) throw ValidationError("for_each_weyl_element: rank must be >= 1");
  WeylElement w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.signs.assign(n, 1);
  do {
    const int perm_sign = permutation_parity_sign(w.perm);
    if (type == WeylType::A) {
      w.sign = perm_sign;
      fn(w);
      continue;
    }
    // Sign vectors as a binary counter, +1 before -1 at each position.
    std::fill(w.signs.begin(), w.signs.end(), 1);
    while (true) {
      int flips = 0;
      for (int i = 0; i < n; ++i) flips += w.signs[i] < 0;
      w.sign = (flips % 2 == 0) ? perm_sign : -perm_sign;
      fn(w);
      int pos = n - 1;
      while (pos >= 0 && w.signs[pos] < 0) {
        w.signs[pos] = 1;
        --pos;
      }
      if (pos < 0) break;
      w.signs[pos] = -1;
    }
  } while (std::next_permutation(w.perm.begin(), w.perm.end()));
}

std::vector<WeylElement> weyl_elements(WeylType type, int n) {
  std::vector<WeylElement> out;
  out.reserve(weyl_order(type, n));
  for_each_weyl_element(type, n, [&](const WeylElement& w) { out.push_back(w); });
  return out;
}

}  // namespace bspin
