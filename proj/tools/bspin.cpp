// bspin: decomposition statistics of spinor tensor powers for so(2n+1).
//
// Subcommands compute exact multiplicities, characters, the character and
// Plancherel measures, the Poisson-type boundary limit density, exact-vs-
// limit convergence tables, and exact-law samples. Tables are emitted as
// CSV (with a trailing provenance comment) or JSON; reruns of the same
// command are byte-identical.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bspin/characters.hpp"
#include "bspin/limitlaw.hpp"
#include "bspin/measure.hpp"
#include "bspin/multiplicities.hpp"

using namespace bspin;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitSingular = 3;
constexpr int kExitScaleGuard = 4;

constexpr int kRankCap = 4;
constexpr long long kExactTableCap = 64;
constexpr long long kFloatCap = 1000000;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

BigRat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw ValidationError("rational with zero denominator: " + text);
    return BigRat(num, den);
  } catch (const std::runtime_error&) {
    throw ValidationError("cannot parse rational '" + text + "' (use p or p/q)");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

TorusPoint parse_point(const std::string& text, int n) {
  std::vector<BigRat> y;
  for (const auto& part : split(text, ',')) y.push_back(parse_rational(part));
  if (static_cast<int>(y.size()) != n)
    throw ValidationError("--y needs exactly n comma-separated rationals");
  return TorusPoint(std::move(y));
}

SVector parse_s(const std::string& text, int n) {
  std::vector<Coord> s;
  try {
    for (const auto& part : split(text, ',')) s.push_back(std::stoll(part));
  } catch (const std::exception&) {
    throw ValidationError("cannot parse --s '" + text + "'");
  }
  if (static_cast<int>(s.size()) != n)
    throw ValidationError("--s needs exactly n comma-separated integers");
  return SVector(std::move(s));
}

ThetaVector parse_theta(const std::string& text, int n) {
  std::vector<double> th;
  try {
    for (const auto& part : split(text, ',')) th.push_back(std::stod(part));
  } catch (const std::exception&) {
    throw ValidationError("cannot parse --theta '" + text + "'");
  }
  if (static_cast<int>(th.size()) != n)
    throw ValidationError("--theta needs exactly n comma-separated decimals");
  return ThetaVector(std::move(th));
}

void guard_rank(int n, bool force) {
  if (n < 1) throw ValidationError("--n must be >= 1");
  if (n > kRankCap) {
    if (!force) throw ScaleGuardError("rank cap n <= 4 exceeded (override with --force)");
    std::cerr << "warning: n = " << n << " is past the default cap, expect long runtimes\n";
  }
}

void guard_exact_N(long long N, bool force) {
  if (N > kExactTableCap) {
    if (!force)
      throw ScaleGuardError("exact-table cap N <= 64 exceeded (override with --force)");
    std::cerr << "warning: exact table at N = " << N << " may be very slow\n";
  }
}

void guard_float_N(long long N, bool force) {
  if (N > kFloatCap) {
    if (!force)
      throw ScaleGuardError("cap N <= 10^6 exceeded (override with --force)");
    std::cerr << "warning: N = " << N << " is past the default cap\n";
  }
}

// Every emitter writes to --out (or stdout) with deterministic formatting.
void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file " + out_path);
  f << payload;
}

std::string csv_of_measure(const MeasureTable& table, const std::string& extra,
                           const std::string& config) {
  std::ostringstream os;
  write_csv(os, table, extra.empty() ? config : extra + "\n" + config);
  return os.str();
}

ordered_json json_rows_of_measure(const MeasureTable& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& e : table.entries) {
    ordered_json row;
    row["s"] = e.s.s;
    row["lambda"] = e.lambda.coords;
    if (table.exact) {
      row["multiplicity"] = e.multiplicity.str();
      row["probability_num"] = numerator(e.probability).str();
      row["probability_den"] = denominator(e.probability).str();
    } else {
      row["log_multiplicity"] = e.log_multiplicity;
    }
    row["probability_float"] = e.probability_float;
    rows.push_back(std::move(row));
  }
  return rows;
}

struct CommonOpts {
  std::string out;
  std::string format = "csv";
  bool force = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out, "Output path (default: stdout)");
  cmd->add_option("--format", opts.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--force", opts.force, "Override the desk-scale guards");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Tensor-power decomposition statistics of the so(2n+1) spinor representation"};
  app.require_subcommand(1);

  // ---- mult -------------------------------------------------------------
  int mult_n = 1;
  long long mult_N = 1;
  std::string mult_s;
  CommonOpts mult_opts;
  auto* mult = app.add_subcommand("mult", "Exact and asymptotic multiplicity at s");
  mult->add_option("--n", mult_n, "Rank of so(2n+1)")->required();
  mult->add_option("--N", mult_N, "Tensor power")->required();
  mult->add_option("--s", mult_s, "Boundary offsets s_1,...,s_n")->required();
  add_common(mult, mult_opts);
  mult->callback([&] {
    guard_rank(mult_n, mult_opts.force);
    guard_float_N(mult_N, mult_opts.force);
    const SVector s = parse_s(mult_s, mult_n);
    const BigInt exact = multiplicity_exact(mult_n, mult_N, s);
    const double asym = multiplicity_asymptotic(mult_n, mult_N, s);
    if (mult_opts.format == "json") {
      ordered_json j;
      j["exact"] = exact.str();
      j["asymptotic"] = asym;
      emit(mult_opts.out, j.dump(2) + "\n");
    } else {
      emit(mult_opts.out,
           "exact " + exact.str() + "\nasymptotic " + format_double(asym) + "\n");
    }
  });

  // ---- char -------------------------------------------------------------
  int char_n = 1;
  std::string char_y, char_lambda;
  bool char_spinor = false;
  CommonOpts char_opts;
  auto* chr = app.add_subcommand("char", "Character value at a rational torus point");
  chr->add_option("--n", char_n, "Rank")->required();
  chr->add_option("--y", char_y, "Torus point y_1,...,y_n as rationals p/q")->required();
  chr->add_option("--lambda", char_lambda, "Dominant weight in doubled coordinates");
  chr->add_flag("--spinor", char_spinor, "Use the spinor highest weight");
  add_common(chr, char_opts);
  chr->callback([&] {
    guard_rank(char_n, char_opts.force);
    if (char_spinor == !char_lambda.empty())
      throw ValidationError("char: give exactly one of --lambda or --spinor");
    const TorusPoint pt = parse_point(char_y, char_n);
    BigRat value;
    if (char_spinor) {
      value = spinor_character(char_n).eval(pt);
    } else {
      std::vector<Coord> lam;
      try {
        for (const auto& part : split(char_lambda, ',')) lam.push_back(std::stoll(part));
      } catch (const std::exception&) {
        throw ValidationError("cannot parse --lambda '" + char_lambda + "'");
      }
      if (static_cast<int>(lam.size()) != char_n)
        throw ValidationError("--lambda needs exactly n coordinates");
      value = character_Bn(RescaledWeight(std::move(lam)), pt);
    }
    if (char_opts.format == "json") {
      ordered_json j;
      j["num"] = numerator(value).str();
      j["den"] = denominator(value).str();
      j["float"] = to_double(value);
      emit(char_opts.out, j.dump(2) + "\n");
    } else {
      emit(char_opts.out, "exact " + numerator(value).str() + "/" +
                              denominator(value).str() + "\nfloat " +
                              format_double(to_double(value)) + "\n");
    }
  });

  // ---- measure / plancherel ----------------------------------------------
  int meas_n = 1;
  long long meas_N = 1;
  std::string meas_y, meas_mode = "exact";
  long long meas_smax = -1;
  CommonOpts meas_opts;
  auto* meas = app.add_subcommand("measure", "Character measure table at a torus point");
  meas->add_option("--n", meas_n, "Rank")->required();
  meas->add_option("--N", meas_N, "Tensor power")->required();
  meas->add_option("--y", meas_y, "Torus point y_1,...,y_n as rationals")->required();
  meas->add_option("--mode", meas_mode, "exact (default) or float (log-space)")
      ->check(CLI::IsMember({"exact", "float"}));
  meas->add_option("--s-max", meas_smax, "Boundary box bound s_n <= s-max (float mode)");
  add_common(meas, meas_opts);
  meas->callback([&] {
    guard_rank(meas_n, meas_opts.force);
    const std::string config = "bspin measure --n " + std::to_string(meas_n) + " --N " +
                               std::to_string(meas_N) + " --y " + meas_y + " --mode " +
                               meas_mode +
                               (meas_smax >= 0 ? " --s-max " + std::to_string(meas_smax)
                                               : "");
    const TorusPoint pt = parse_point(meas_y, meas_n);
    MeasureTable table;
    std::string extra;
    if (meas_mode == "exact") {
      if (meas_smax >= 0)
        throw ValidationError("measure: --s-max applies to float mode only");
      guard_exact_N(meas_N, meas_opts.force);
      table = build_measure_table(meas_n, meas_N, pt);
      BigRat total = 0;
      for (const auto& e : table.entries) total += e.probability;
      extra = "normalization " + numerator(total).str() + "/" + denominator(total).str();
    } else {
      guard_float_N(meas_N, meas_opts.force);
      if (meas_smax < 0)
        throw ValidationError("measure: float mode needs --s-max for the boundary box");
      std::vector<double> t(meas_n);
      for (int i = 0; i < meas_n; ++i) t[i] = std::log(to_double(pt.y[i]));
      table = build_measure_table_float(meas_n, meas_N, t, meas_smax);
    }
    if (meas_opts.format == "json") {
      emit(meas_opts.out, json_rows_of_measure(table).dump(2) + "\n");
    } else {
      emit(meas_opts.out, csv_of_measure(table, extra, config));
    }
  });

  int pl_n = 1;
  long long pl_N = 1;
  CommonOpts pl_opts;
  auto* pl = app.add_subcommand("plancherel", "Plancherel-type table (dimension point)");
  pl->add_option("--n", pl_n, "Rank")->required();
  pl->add_option("--N", pl_N, "Tensor power")->required();
  add_common(pl, pl_opts);
  pl->callback([&] {
    guard_rank(pl_n, pl_opts.force);
    guard_exact_N(pl_N, pl_opts.force);
    const std::string config =
        "bspin plancherel --n " + std::to_string(pl_n) + " --N " + std::to_string(pl_N);
    const MeasureTable table = build_measure_table(pl_n, pl_N, std::nullopt);
    BigRat total = 0;
    for (const auto& e : table.entries) total += e.probability;
    const std::string extra =
        "normalization " + numerator(total).str() + "/" + denominator(total).str();
    if (pl_opts.format == "json") {
      emit(pl_opts.out, json_rows_of_measure(table).dump(2) + "\n");
    } else {
      emit(pl_opts.out, csv_of_measure(table, extra, config));
    }
  });

  // ---- limit ---------------------------------------------------------------
  int lim_n = 1;
  std::string lim_theta;
  long long lim_smax = 10;
  CommonOpts lim_opts;
  auto* lim = app.add_subcommand("limit", "Boundary limit density over an s box");
  lim->add_option("--n", lim_n, "Rank")->required();
  lim->add_option("--theta", lim_theta, "Theta_1,...,Theta_n as decimals")->required();
  lim->add_option("--s-max", lim_smax, "Box bound s_n <= s-max (default 10)");
  add_common(lim, lim_opts);
  lim->callback([&] {
    guard_rank(lim_n, lim_opts.force);
    if (lim_smax < 0) throw ValidationError("--s-max must be >= 0");
    const ThetaVector theta = parse_theta(lim_theta, lim_n);
    const std::string config = "bspin limit --n " + std::to_string(lim_n) + " --theta " +
                               lim_theta + " --s-max " + std::to_string(lim_smax);
    std::vector<std::pair<SVector, double>> rows;
    std::vector<Coord> cur(lim_n);
    auto rec = [&](auto&& self, int i, Coord lo) -> void {
      if (i == lim_n) {
        rows.emplace_back(SVector(cur), limit_density(lim_n, SVector(cur), theta));
        return;
      }
      for (Coord v = lo; v <= lim_smax; ++v) {
        cur[i] = v;
        self(self, i + 1, v);
      }
    };
    rec(rec, 0, 0);
    if (lim_opts.format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& [s, p] : rows) {
        ordered_json row;
        row["s"] = s.s;
        row["p_limit"] = p;
        arr.push_back(std::move(row));
      }
      emit(lim_opts.out, arr.dump(2) + "\n");
    } else {
      std::ostringstream os;
      for (int i = 1; i <= lim_n; ++i) os << "s_" << i << ",";
      os << "p_limit\n";
      for (const auto& [s, p] : rows) {
        for (int i = 0; i < lim_n; ++i) os << s.s[i] << ",";
        os << format_double(p) << "\n";
      }
      os << "# " << config << "\n";
      emit(lim_opts.out, os.str());
    }
  });

  // ---- converge --------------------------------------------------------------
  int cv_n = 1;
  std::string cv_theta, cv_nlist;
  std::vector<std::string> cv_s;
  CommonOpts cv_opts;
  auto* cv = app.add_subcommand("converge", "Exact-vs-limit convergence table");
  cv->add_option("--n", cv_n, "Rank")->required();
  cv->add_option("--theta", cv_theta, "Theta_1,...,Theta_n as decimals")->required();
  cv->add_option("--s", cv_s, "Boundary offsets, repeatable: --s 0,0 --s 0,1")->required();
  cv->add_option("--N-list", cv_nlist, "Tensor powers N_1,N_2,...")->required();
  add_common(cv, cv_opts);
  cv->callback([&] {
    guard_rank(cv_n, cv_opts.force);
    const ThetaVector theta = parse_theta(cv_theta, cv_n);
    std::vector<SVector> s_list;
    for (const auto& text : cv_s) s_list.push_back(parse_s(text, cv_n));
    std::vector<long long> n_list;
    try {
      for (const auto& part : split(cv_nlist, ',')) n_list.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw ValidationError("cannot parse --N-list '" + cv_nlist + "'");
    }
    for (long long N : n_list) {
      if (N < 1) throw ValidationError("--N-list entries must be >= 1");
      guard_float_N(N, cv_opts.force);
    }
    std::string config = "bspin converge --n " + std::to_string(cv_n) + " --theta " +
                         cv_theta;
    for (const auto& text : cv_s) config += " --s " + text;
    config += " --N-list " + cv_nlist;
    const auto records = convergence_table(cv_n, theta, s_list, n_list);
    if (cv_opts.format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& r : records) {
        ordered_json row;
        row["N"] = r.N;
        row["s"] = r.s.s;
        row["theta"] = r.theta;
        row["p_exact"] = r.p_exact;
        row["p_limit"] = r.p_limit;
        row["rel_err"] = r.rel_err;
        arr.push_back(std::move(row));
      }
      emit(cv_opts.out, arr.dump(2) + "\n");
    } else {
      std::ostringstream os;
      write_csv(os, records, cv_n, config);
      emit(cv_opts.out, os.str());
    }
  });

  // ---- sample -----------------------------------------------------------------
  int sm_n = 1;
  long long sm_N = 1;
  std::string sm_y;
  std::uint64_t sm_seed = 1;
  long long sm_count = 1000;
  CommonOpts sm_opts;
  auto* sm = app.add_subcommand("sample", "Exact-law draws with a frequency summary");
  sm->add_option("--n", sm_n, "Rank")->required();
  sm->add_option("--N", sm_N, "Tensor power")->required();
  sm->add_option("--y", sm_y, "Torus point y_1,...,y_n as rationals")->required();
  sm->add_option("--seed", sm_seed, "Random seed")->required();
  sm->add_option("--count", sm_count, "Number of draws");
  add_common(sm, sm_opts);
  sm->callback([&] {
    guard_rank(sm_n, sm_opts.force);
    guard_exact_N(sm_N, sm_opts.force);
    if (sm_count < 1) throw ValidationError("--count must be >= 1");
    const std::string config = "bspin sample --n " + std::to_string(sm_n) + " --N " +
                               std::to_string(sm_N) + " --y " + sm_y + " --seed " +
                               std::to_string(sm_seed) + " --count " +
                               std::to_string(sm_count);
    const TorusPoint pt = parse_point(sm_y, sm_n);
    const MeasureTable table = build_measure_table(sm_n, sm_N, pt);
    std::map<SVector, long long> hist;
    for (const auto& s : sample(sm_n, sm_N, pt, sm_seed, sm_count)) ++hist[s];
    if (sm_opts.format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& e : table.entries) {
        const long long c = hist.count(e.s) ? hist.at(e.s) : 0;
        ordered_json row;
        row["s"] = e.s.s;
        row["count"] = c;
        row["frequency"] = static_cast<double>(c) / static_cast<double>(sm_count);
        row["probability_float"] = e.probability_float;
        arr.push_back(std::move(row));
      }
      emit(sm_opts.out, arr.dump(2) + "\n");
    } else {
      std::ostringstream os;
      for (int i = 1; i <= sm_n; ++i) os << "s_" << i << ",";
      os << "count,frequency,probability_float\n";
      for (const auto& e : table.entries) {
        const long long c = hist.count(e.s) ? hist.at(e.s) : 0;
        for (int i = 0; i < sm_n; ++i) os << e.s.s[i] << ",";
        os << c << "," << format_double(static_cast<double>(c) / sm_count) << ","
           << format_double(e.probability_float) << "\n";
      }
      os << "# " << config << "\n";
      emit(sm_opts.out, os.str());
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const SingularPointError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingular;
  } catch (const ScaleGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitScaleGuard;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
