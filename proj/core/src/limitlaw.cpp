#include "bspin/limitlaw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "bspin/characters.hpp"
#include "bspin/measure.hpp"

namespace bspin {

ThetaVector::ThetaVector(std::vector<double> v) : theta(std::move(v)) {
  if (theta.empty()) throw ValidationError("ThetaVector: needs at least one entry");
  for (double x : theta) {
    if (!(x > 0) || !std::isfinite(x))
      throw ValidationError("ThetaVector: entries must be finite and > 0");
  }
}

std::vector<double> t_from_theta(long long N, const ThetaVector& theta) {
  if (N < 1) throw ValidationError("t_from_theta: N must be >= 1");
  std::vector<double> t(theta.theta.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = 0.5 * std::log(static_cast<double>(N) / theta.theta[i]);
  return t;
}

std::vector<BigRat> gamma_from_s(const SVector& s) {
  if (!is_valid_s(s)) throw ValidationError("gamma_from_s: invalid s");
  const int n = s.rank();
  const BigRat mean(BigInt(2 * s.sum()), BigInt(n));
  std::vector<BigRat> gamma(n);
  for (int i = 0; i < n; ++i) gamma[i] = mean - BigRat(2 * s.s[i]);
  return gamma;
}

std::vector<double> tau_from_theta(const ThetaVector& theta) {
  const int n = theta.rank();
  std::vector<double> tau(n > 0 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i)
    tau[i] = 0.5 * std::log(theta.theta[i] / theta.theta[i + 1]);
  return tau;
}

double an_character_at_tau(std::span<const BigRat> gamma, std::span<const double> tau) {
  const int n = static_cast<int>(gamma.size());
  if (static_cast<int>(tau.size()) != n - 1)
    throw ValidationError("an_character_at_tau: tau must have n-1 entries");
  std::vector<double> y(n, 1.0);
  for (int i = 0; i + 1 < n; ++i) y[i + 1] = y[i] * std::exp(tau[i]);
  return character_An_value(gamma, y);
}

double an_character_at_theta(std::span<const BigRat> gamma, const ThetaVector& theta) {
  if (theta.rank() != static_cast<int>(gamma.size()))
    throw ValidationError("an_character_at_theta: rank mismatch");
  std::vector<double> y(gamma.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = 1.0 / std::sqrt(theta.theta[i]);
  return character_An_value(gamma, y);
}

double limit_density(int n, const SVector& s, const ThetaVector& theta) {
  if (n < 1) throw ValidationError("limit_density: rank must be >= 1");
  if (s.rank() != n) throw ValidationError("limit_density: s has wrong rank");
  if (theta.rank() != n) throw ValidationError("limit_density: theta has wrong rank");
  for (Coord v : s.s) {
    if (v < 0) throw ValidationError("limit_density: s entries must be >= 0");
  }
  // A tied rho-shifted configuration kills the prefactor exactly.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s.s[i] + i == s.s[j] + j) return 0.0;
  if (!is_valid_s(s))
    throw ValidationError("limit_density: s not dominant (and not a vanishing tie)");

  double prefactor = 1.0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      prefactor *= static_cast<double>(s.s[j - 1] + j - s.s[i - 1] - i);

  const double mean_exp = static_cast<double>(s.sum()) / n;
  double log_val = 0.0;
  for (int k = 1; k <= n; ++k) {
    log_val += mean_exp * std::log(theta.theta[k - 1]) - theta.theta[k - 1];
    log_val -= std::lgamma(static_cast<double>(s.s[k - 1] + k));
  }
  double chi = 1.0;
  if (n > 1) chi = an_character_at_theta(gamma_from_s(s), theta);
  return prefactor * std::exp(log_val) * chi;
}

double limit_normalization(int n, const ThetaVector& theta, Coord s_cap) {
  if (s_cap < 0) throw ValidationError("limit_normalization: s_cap must be >= 0");
  if (theta.rank() != n) throw ValidationError("limit_normalization: rank mismatch");
  std::vector<Coord> cur(n);
  double total = 0.0;
  auto rec = [&](auto&& self, int i, Coord lo) -> void {
    if (i == n) {
      total += limit_density(n, SVector(cur), theta);
      return;
    }
    for (Coord v = lo; v <= s_cap; ++v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 0);
  return total;
}

std::vector<ConvergenceRecord> convergence_table(int n, const ThetaVector& theta,
                                                 const std::vector<SVector>& s_list,
                                                 const std::vector<long long>& N_list) {
  std::vector<long long> ns = N_list;
  std::sort(ns.begin(), ns.end());
  std::vector<ConvergenceRecord> out;
  for (long long N : ns) {
    const auto t = t_from_theta(N, theta);
    for (const auto& s : s_list) {
      const double limit = limit_density(n, s, theta);
      if (limit == 0.0) continue;
      ConvergenceRecord rec;
      rec.N = N;
      rec.s = s;
      rec.theta = theta.theta;
      rec.p_exact = std::exp(character_measure_log(n, N, s, t));
      rec.p_limit = limit;
      rec.rel_err = std::abs(rec.p_exact / rec.p_limit - 1.0);
      out.push_back(std::move(rec));
    }
  }
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& os, std::span<const ConvergenceRecord> records, int n,
               const std::string& comment) {
  os << "N,";
  for (int i = 1; i <= n; ++i) os << "s_" << i << ",";
  for (int i = 1; i <= n; ++i) os << "theta_" << i << ",";
  os << "p_exact,p_limit,rel_err\n";
  for (const auto& r : records) {
    os << r.N << ",";
    for (int i = 0; i < n; ++i) os << r.s.s[i] << ",";
    for (int i = 0; i < n; ++i) os << format_double(r.theta[i]) << ",";
    os << format_double(r.p_exact) << "," << format_double(r.p_limit) << ","
       << format_double(r.rel_err) << "\n";
  }
  std::string line;
  for (char c : comment) {
    if (c == '\n') {
      os << "# " << line << "\n";
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) os << "# " << line << "\n";
}

}  // namespace bspin
