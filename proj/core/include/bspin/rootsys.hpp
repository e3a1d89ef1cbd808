#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "bspin/errors.hpp"

namespace bspin {

using Coord = long long;

/// A weight of so(2n+1) in doubled orthogonal coordinates.
///
/// All weights in this library carry twice the textbook orthogonal
/// coordinates, so that the spinor weights are the +-1 vectors and every
/// character becomes a Laurent polynomial with integer exponents.
struct RescaledWeight {
  std::vector<Coord> coords;

  RescaledWeight() = default;
  explicit RescaledWeight(std::vector<Coord> c) : coords(std::move(c)) {}

  int rank() const { return static_cast<int>(coords.size()); }
  Coord sum() const;

  friend bool operator==(const RescaledWeight&, const RescaledWeight&) = default;
  friend auto operator<=>(const RescaledWeight&, const RescaledWeight&) = default;
};

/// Boundary offsets s with lambda_i = N - 2 s_i.
struct SVector {
  std::vector<Coord> s;

  SVector() = default;
  explicit SVector(std::vector<Coord> v) : s(std::move(v)) {}

  int rank() const { return static_cast<int>(s.size()); }
  Coord sum() const;

  friend bool operator==(const SVector&, const SVector&) = default;
  friend auto operator<=>(const SVector&, const SVector&) = default;
};

enum class WeylType { A, B };

/// A signed permutation (type B) or plain permutation (type A),
/// acting on coordinates by (w x)_i = signs[i] * x[perm[i]].
struct WeylElement {
  std::vector<int> perm;    // 0-based images
  std::vector<int> signs;   // entries +1/-1; all +1 for type A
  int sign = 1;             // det of the signed permutation matrix

  RescaledWeight apply(const RescaledWeight& w) const;
};

/// Weyl vector of B_n in doubled coordinates: (2n-1, 2n-3, ..., 3, 1).
RescaledWeight rho(int n);

/// lambda_i = N - 2 s_i. Rejects s breaking dominance or with s_n > N/2.
RescaledWeight lambda_from_s(long long N, const SVector& s);

/// Inverse map s_i = (N - lambda_i)/2. Rejects parity mismatches
/// (lambda_i must be congruent to N mod 2) and non-dominant weights.
SVector s_from_lambda(long long N, const RescaledWeight& lambda);

/// True iff w_1 >= w_2 >= ... >= w_n >= 0.
bool is_dominant(const RescaledWeight& w);

/// True iff s_1 <= ... <= s_n (equivalent to lambda dominance), all s_i >= 0.
bool is_valid_s(const SVector& s);

/// |W(B_n)| = 2^n n!, |W(A_{n-1})| = n!.
std::uint64_t weyl_order(WeylType type, int n);

/// Streams every group element exactly once, in lexicographic order on
/// (permutation, sign vector) with +1 ordered before -1.
void for_each_weyl_element(WeylType type, int n,
                           const std::function<void(const WeylElement&)>& fn);

/// Materialized enumeration in the same order as for_each_weyl_element.
std::vector<WeylElement> weyl_elements(WeylType type, int n);

}  // namespace bspin
