#pragma once

// Tabulation of every bound over a user-supplied parameter grid.

#include <cmath>
#include <cstdio>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <type_traits>
#include <variant>
#include <vector>

#include "sunforge/bounds/formulas.hpp"

namespace sunforge {

struct BoundReport {
  using Value = std::variant<BigInt, Rational, double>;

  std::string name;
  std::vector<std::pair<std::string, double>> params;
  Value value;
  /// Per-coordinate (or per-element) exponential base of the formula, when it has one.
  std::optional<double> rate;
  /// The formula the value was computed from.
  std::string provenance;

  double value_as_double() const {
    return std::visit(
        [](const auto& v) -> double {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, double>)
            return v;
          else if constexpr (std::is_same_v<V, Rational>)
            return to_double(v);
          else
            return v == 0 ? 0.0 : std::exp2(log2_of(v));
        },
        value);
  }

  /// Exact decimal for integers, "p/q" for rationals, %.12g for reals.
  std::string value_string() const {
    return std::visit(
        [](const auto& v) -> std::string {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, double>) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g", v);
            return buf;
          } else {
            return v.str();
          }
        },
        value);
  }
};

struct BoundGrid {
  std::vector<std::size_t> n;
  std::vector<std::size_t> r;
  std::vector<std::size_t> q;
  std::vector<std::size_t> k;

  bool empty() const { return n.empty() && r.empty() && q.empty() && k.empty(); }
};

inline std::vector<BoundReport> tabulate_bounds(const BoundGrid& grid) {
  std::vector<BoundReport> rows;
  if (grid.empty()) return rows;
  auto d = [](std::size_t x) { return static_cast<double>(x); };

  for (auto r : grid.r) {
    rows.push_back({"upper_ff_rate", {{"r", d(r)}}, upper_rate(r), upper_rate(r), "2^((r-2)/(r-1))"});
    rows.push_back({"lower_rate_ns", {{"r", d(r)}}, lower_rate(r, Kind::ns), lower_rate(r, Kind::ns),
                    "2/(r+1)^(1/(r-1))"});
    rows.push_back({"lower_rate_ff", {{"r", d(r)}}, lower_rate(r, Kind::ff), lower_rate(r, Kind::ff),
                    "2/r^(1/(r-1))"});
    rows.push_back({"one_sided_base", {{"r", d(r)}}, one_sided_base(r), one_sided_base(r),
                    "1+(r-2)/(r-1)^((r-1)/(r-2))"});
    for (auto n : grid.n) {
      rows.push_back({"upper_ff", {{"n", d(n)}, {"r", d(r)}}, upper_ff(n, r), upper_rate(r),
                      "(r-1)*2^ceil((r-2)n/(r-1))"});
      rows.push_back({"count_bound_ns", {{"n", d(n)}, {"r", d(r)}}, count_bound(n, r, Kind::ns), d(2 * r + 2),
                      "(2r+2)^n/r!"});
      rows.push_back({"count_bound_ff", {{"n", d(n)}, {"r", d(r)}}, count_bound(n, r, Kind::ff), d(2 * r),
                      "(2r)^n/(r-1)!"});
      rows.push_back({"one_sided_total", {{"n", d(n)}, {"r", d(r)}}, one_sided_total_upper(n, r).sum,
                      one_sided_base(r), "(r-1)*sum_k C(n,ceil((r-2)k/(r-1)))/C(k,ceil((r-2)k/(r-1)))"});
      for (auto q : grid.q) {
        auto qb = q_bounds(n, r, q);
        const double q_upper_rate = std::pow(d(q), (d(r) - 2.0) / (d(r) - 1.0));
        rows.push_back({"q_upper", {{"n", d(n)}, {"r", d(r)}, {"q", d(q)}}, qb.upper, q_upper_rate,
                        "(r-1)*q^ceil((r-2)n/(r-1))"});
        rows.push_back({"q_lower_rate", {{"n", d(n)}, {"r", d(r)}, {"q", d(q)}}, qb.lower_rate, qb.lower_rate,
                        "q/((q-1)(r-1)+1)^(1/(r-1))"});
      }
      for (auto k : grid.k) {
        if (k > n) continue;
        rows.push_back({"one_sided_uniform", {{"n", d(n)}, {"k", d(k)}, {"r", d(r)}}, one_sided_uniform_upper(n, k, r),
                        std::nullopt, "(r-1)*C(n,ceil((r-2)k/(r-1)))/C(k,ceil((r-2)k/(r-1)))"});
      }
    }
  }

  const auto krate = theorem_k_rate();
  for (auto k : grid.k) {
    rows.push_back({"pairwise_symdiff_naive", {{"k", d(k)}}, power(2, 2 * k), 4.0, "2^(2k)"});
  }
  rows.push_back({"theorem_k_rate", {{"x_star", krate.x_star}}, krate.base, krate.base,
                  "2^(2h(x)/(1+2x)) at x=(1-x)^3"});
  for (double delta : {0.213, 0.287}) {
    rows.push_back({"mrrw_rate", {{"delta", delta}}, mrrw_rate(delta), std::nullopt,
                    "h(1/2-sqrt(delta(1-delta)))"});
  }
  return rows;
}

}  // namespace sunforge
