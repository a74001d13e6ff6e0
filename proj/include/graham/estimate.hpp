#ifndef GRAHAM_ESTIMATE_HPP_
#define GRAHAM_ESTIMATE_HPP_

// Difficulty estimates under the assumption that constraints are independent.
// A constraint on k variables admits (2^k - 2) of the 2^k local colourings,
// so it consumes -log2((2^k - 2) / 2^k) bits; n_F is the consumed fraction of
// the available bits, as a percentage.

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graham/cube.hpp"
#include "graham/quotient.hpp"

namespace graham {

struct DifficultyRow {
  std::string label;
  int n = 0;
  big_int variables;                 // n_E
  std::array<big_int, 7> profile{};  // constraint counts by size, index 0 unused
  double nf_percent = 0.0;           // +inf when infeasible

  bool infeasible() const { return std::isinf(nf_percent); }
};

/// Bits consumed by one constraint on k variables.
inline double constraint_bits(int k) {
  if (k < 1) throw std::invalid_argument("constraint_bits: k must be >= 1");
  if (k == 1) return std::numeric_limits<double>::infinity();
  return -std::log2((std::ldexp(1.0, k) - 2.0) / std::ldexp(1.0, k));
}

inline DifficultyRow naive_row(int n) {
  const CountRow counts = count_row(n);
  DifficultyRow row;
  row.label = "I";
  row.n = n;
  row.variables = counts.edges;
  row.profile[6] = counts.quads;
  row.nf_percent = 100.0 * counts.quads.convert_to<double>() / counts.edges.convert_to<double>() *
                   constraint_bits(6);
  return row;
}

inline DifficultyRow quotient_nf(const QuotientProblem& qp) {
  DifficultyRow row;
  row.label = qp.group;
  row.n = qp.n;
  row.variables = qp.variable_count;
  for (int k = 1; k <= 6; ++k) row.profile[k] = qp.profile[k];
  if (qp.infeasible || qp.profile[1] > 0) {
    row.nf_percent = std::numeric_limits<double>::infinity();
    return row;
  }
  double bits = 0.0;
  for (int k = 2; k <= 6; ++k) bits += static_cast<double>(qp.profile[k]) * constraint_bits(k);
  row.nf_percent = qp.variable_count ? 100.0 * bits / static_cast<double>(qp.variable_count) : 0.0;
  return row;
}

/// Consumed-bit fraction implied by an exact solution count.
inline double exact_fraction(int n, const big_int& solutions) {
  if (solutions <= 0) throw std::domain_error("exact_fraction: no solutions, fraction undefined");
  const double ne = static_cast<double>(edge_count(n));
  // log2 of a big integer: split off whole powers of two to stay in range.
  big_int s = solutions;
  int shift = 0;
  while (s > (big_int{1} << 60)) {
    s >>= 1;
    ++shift;
  }
  const double log2_count = std::log2(s.convert_to<double>()) + shift;
  return 100.0 * (ne - log2_count) / ne;
}

/// Three decimals, ties rounded up; "inf" for infinity.
inline std::string format_percent(double percent) {
  if (std::isinf(percent)) return "inf";
  const double scaled = std::floor(percent * 1000.0 + 0.5);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", scaled / 1000.0);
  return buf;
}

/// Profile as comma separated counts for sizes 2..6, prefixed by the size-1
/// count when there is one.
inline std::string format_profile(const std::array<big_int, 7>& p) {
  std::string out;
  for (int k = p[1] > 0 ? 1 : 2; k <= 6; ++k) {
    if (!out.empty()) out += ',';
    out += p[k].str();
  }
  return out;
}

/// Machine line: `label n nE c1,c2,c3,c4,c5,c6 nF`.
inline void write_row_line(std::ostream& os, const DifficultyRow& r) {
  os << r.label << ' ' << r.n << ' ' << r.variables.str() << ' ';
  for (int k = 1; k <= 6; ++k) os << (k > 1 ? "," : "") << r.profile[k].str();
  os << ' ' << format_percent(r.nf_percent) << '\n';
}

/// Aligned text table in the layout `label | n | nE | profile | nF%`.
inline void write_table(std::ostream& os, const std::vector<DifficultyRow>& rows) {
  std::vector<std::array<std::string, 5>> cells;
  cells.push_back({"group", "n", "nE", "profile", "nF"});
  for (const auto& r : rows)
    cells.push_back({r.label, std::to_string(r.n), r.variables.str(), format_profile(r.profile),
                     format_percent(r.nf_percent) + "%"});
  std::array<std::size_t, 5> width{};
  for (const auto& row : cells)
    for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < 5; ++i) {
      if (i) os << " | ";
      const std::string& s = row[i];
      // Text columns left aligned, numbers right aligned.
      if (i == 0 || i == 3) os << s << std::string(width[i] - s.size(), ' ');
      else os << std::string(width[i] - s.size(), ' ') << s;
    }
    os << '\n';
  }
}

}  // namespace graham

#endif  // GRAHAM_ESTIMATE_HPP_
