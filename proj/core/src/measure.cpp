#include "bspin/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <utility>

#include "bspin/characters.hpp"

namespace bspin {

namespace {

void enumerate_s(int n, Coord cap, std::vector<SVector>& out) {
  std::vector<Coord> cur(n);
  auto rec = [&](auto&& self, int i, Coord lo) -> void {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    for (Coord v = lo; v <= cap; ++v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 0);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_comment_lines(std::ostream& os, const std::string& comment) {
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

}  // namespace

std::vector<SVector> support(int n, long long N) {
  if (n < 1) throw ValidationError("support: rank must be >= 1");
  if (N < 0) throw ValidationError("support: N must be >= 0");
  std::vector<SVector> box;
  enumerate_s(n, N / 2, box);
  std::vector<SVector> out;
  out.reserve(box.size());
  for (auto& s : box) {
    if (multiplicity_exact(n, N, s) > 0) out.push_back(std::move(s));
  }
  return out;
}

BigRat character_measure(int n, long long N, const SVector& s, const TorusPoint& pt) {
  const BigRat chi_omega = spinor_character(n).eval(pt);
  const BigRat chi = character_Bn(lambda_from_s(N, s), pt);
  return BigRat(multiplicity_exact(n, N, s)) * chi / rat_pow(chi_omega, N);
}

BigRat plancherel_measure(int n, long long N, const SVector& s) {
  const BigInt m = multiplicity_exact(n, N, s);
  const BigInt d = dim_weyl(lambda_from_s(N, s));
  return BigRat(m * d, BigInt(1) << static_cast<unsigned>(n * N));
}

MeasureTable build_measure_table(int n, long long N, std::optional<TorusPoint> pt) {
  if (pt && pt->vars() != n)
    throw ValidationError("build_measure_table: point rank mismatch");
  MeasureTable table;
  table.n = n;
  table.N = N;
  table.point = std::move(pt);
  table.exact = true;

  // Character denominator is shared by every row.
  BigRat chi_omega_N = 1;
  if (table.point) chi_omega_N = rat_pow(spinor_character(n).eval(*table.point), N);

  for (auto& s : support(n, N)) {
    MeasureEntry e;
    e.lambda = lambda_from_s(N, s);
    e.multiplicity = multiplicity_exact(n, N, s);
    if (table.point) {
      e.probability =
          BigRat(e.multiplicity) * character_Bn(e.lambda, *table.point) / chi_omega_N;
    } else {
      e.probability = BigRat(e.multiplicity * dim_weyl(e.lambda),
                             BigInt(1) << static_cast<unsigned>(n * N));
    }
    e.log_multiplicity = log_value(e.multiplicity);
    e.probability_float = to_double(e.probability);
    e.s = std::move(s);
    table.entries.push_back(std::move(e));
  }
  return table;
}

BigRat normalization_check(int n, long long N, const std::optional<TorusPoint>& pt) {
  BigRat total = 0;
  for (const auto& e : build_measure_table(n, N, pt).entries) total += e.probability;
  return total;
}

double character_measure_log(int n, long long N, const SVector& s,
                             std::span<const double> t) {
  if (static_cast<int>(t.size()) != n)
    throw ValidationError("character_measure_log: point rank mismatch");
  const double log_m = multiplicity_log(n, N, s);
  const double log_chi = log_character_Bn(lambda_from_s(N, s), t);
  return log_m + log_chi - static_cast<double>(N) * log_spinor_character(t);
}

MeasureTable build_measure_table_float(int n, long long N, std::span<const double> t,
                                       Coord s_max) {
  if (static_cast<int>(t.size()) != n)
    throw ValidationError("build_measure_table_float: point rank mismatch");
  if (s_max < 0) throw ValidationError("build_measure_table_float: s_max must be >= 0");
  MeasureTable table;
  table.n = n;
  table.N = N;
  table.exact = false;
  std::vector<SVector> box;
  enumerate_s(n, std::min<Coord>(s_max, N / 2), box);
  for (auto& s : box) {
    MeasureEntry e;
    e.lambda = lambda_from_s(N, s);
    e.log_multiplicity = multiplicity_log(n, N, s);
    e.probability_float = std::exp(character_measure_log(n, N, s, t));
    e.s = std::move(s);
    table.entries.push_back(std::move(e));
  }
  return table;
}

std::vector<SVector> sample(int n, long long N, const TorusPoint& pt, std::uint64_t seed,
                            std::size_t count) {
  const MeasureTable table = build_measure_table(n, N, pt);
  std::vector<BigRat> cumulative;
  cumulative.reserve(table.entries.size());
  BigRat acc = 0;
  for (const auto& e : table.entries) {
    acc += e.probability;
    cumulative.push_back(acc);
  }

  std::mt19937_64 rng(seed);
  const BigInt denom = BigInt(1) << 53;
  std::vector<SVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // 53-bit dyadic uniform in [0,1), compared exactly against the CDF.
    const BigRat u(BigInt(rng() >> 11), denom);
    std::size_t lo = 0, hi = cumulative.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (cumulative[mid] > u) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    out.push_back(table.entries[lo].s);
  }
  return out;
}

void write_csv(std::ostream& os, const MeasureTable& table, const std::string& comment) {
  const int n = table.n;
  for (int i = 1; i <= n; ++i) os << "s_" << i << ",";
  for (int i = 1; i <= n; ++i) os << "lambda_" << i << ",";
  os << "multiplicity,probability_num,probability_den,probability_float\n";
  for (const auto& e : table.entries) {
    for (int i = 0; i < n; ++i) os << e.s.s[i] << ",";
    for (int i = 0; i < n; ++i) os << e.lambda.coords[i] << ",";
    if (table.exact) {
      os << e.multiplicity.str() << "," << numerator(e.probability).str() << ","
         << denominator(e.probability).str() << ",";
    } else {
      // Exact columns are unavailable in floating mode; the multiplicity is
      // reported as a decimal built from its log.
      const double l10 = e.log_multiplicity / std::numbers::ln10_v<double>;
      const double mant = std::pow(10.0, l10 - std::floor(l10));
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.12fe%+lld", mant,
                    static_cast<long long>(std::floor(l10)));
      os << buf << ",,,";
    }
    os << format_double(e.probability_float) << "\n";
  }
  write_comment_lines(os, comment);
}

}  // namespace bspin
