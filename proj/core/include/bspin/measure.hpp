#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bspin/bigint.hpp"
#include "bspin/laurent.hpp"
#include "bspin/multiplicities.hpp"
#include "bspin/rootsys.hpp"

namespace bspin {

/// One row of a measure table. In exact mode `probability` is the exact
/// rational and `probability_float` its rounding; in floating mode only
/// `probability_float` and `log_multiplicity` are meaningful.
struct MeasureEntry {
  SVector s;
  RescaledWeight lambda;
  BigInt multiplicity;        // exact mode
  double log_multiplicity = 0.0;
  BigRat probability;         // exact mode
  double probability_float = 0.0;
};

struct MeasureTable {
  int n = 0;
  long long N = 0;
  std::optional<TorusPoint> point;  // nullopt: dimension point (Plancherel)
  bool exact = true;
  std::vector<MeasureEntry> entries;  // lexicographic in s
};

/// All s with 0 <= s_1 <= ... <= s_n <= N/2 and positive multiplicity,
/// in lexicographic order.
std::vector<SVector> support(int n, long long N);

/// Exact character measure P = M * chi_lambda(pt) / chi_omega(pt)^N.
BigRat character_measure(int n, long long N, const SVector& s, const TorusPoint& pt);

/// Exact Plancherel-type measure P = M * dim / 2^{nN}.
BigRat plancherel_measure(int n, long long N, const SVector& s);

/// Exact sum of the chosen measure over the full support; equals 1.
/// A nullopt point selects the Plancherel (dimension-point) measure.
BigRat normalization_check(int n, long long N, const std::optional<TorusPoint>& pt);

/// Full exact table over the support.
MeasureTable build_measure_table(int n, long long N, std::optional<TorusPoint> pt);

/// Floating (log-space) table over the boundary box s_n <= s_max.
/// Probabilities do not sum to 1 when the box truncates the support.
MeasureTable build_measure_table_float(int n, long long N, std::span<const double> t,
                                       Coord s_max);

/// log P in the floating path: log-multiplicity + log-character - N log chi_omega.
double character_measure_log(int n, long long N, const SVector& s,
                             std::span<const double> t);

/// Inverse-CDF draws from the exact table; deterministic for a given seed.
std::vector<SVector> sample(int n, long long N, const TorusPoint& pt, std::uint64_t seed,
                            std::size_t count);

/// CSV with columns s_1..s_n, lambda_1..lambda_n, multiplicity,
/// probability_num, probability_den, probability_float. A non-empty
/// comment is appended as a trailing `# ...` provenance line.
void write_csv(std::ostream& os, const MeasureTable& table,
               const std::string& comment = {});

}  // namespace bspin
