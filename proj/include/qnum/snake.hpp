#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qnum/continued_fraction.hpp"
#include "qnum/error.hpp"
#include "qnum/polynomial.hpp"

namespace qnum {

/// Gaussian binomial (n choose m)_q by the weighted Pascal rule
/// C(n, m) = C(n-1, m-1) + q^m C(n-1, m).
inline polynomial q_binomial(long n, long m) {
  if (n < 0 || m < 0 || m > n)
    throw error(errc::invalid_arguments, "q_binomial needs 0 <= m <= n, got n=" + std::to_string(n) +
                                             " m=" + std::to_string(m));
  std::vector<polynomial> row{polynomial{1}};
  for (long k = 1; k <= n; ++k) {
    std::vector<polynomial> next(static_cast<std::size_t>(k) + 1);
    next.front() = polynomial{1};
    next.back() = polynomial{1};
    for (std::size_t j = 1; j < static_cast<std::size_t>(k); ++j) next[j] = row[j - 1] + row[j].shifted(j);
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(m)];
}

/// Union of unit boxes, each named by its lower-left corner.
struct grid_region {
  std::vector<std::pair<long, long>> boxes;
  bool rectangle = false;

  static grid_region make_rectangle(long width, long height) {
    if (width < 0 || height < 0) throw error(errc::invalid_arguments, "negative rectangle side");
    grid_region r;
    r.rectangle = true;
    for (long y = 0; y < height; ++y)
      for (long x = 0; x < width; ++x) r.boxes.emplace_back(x, y);
    return r;
  }

  bool empty() const noexcept { return boxes.empty(); }

  /// Rows from top to bottom, '#' for a box.
  std::string ascii() const {
    if (boxes.empty()) return "(empty)\n";
    long max_x = 0, max_y = 0;
    for (const auto& [x, y] : boxes) {
      max_x = std::max(max_x, x);
      max_y = std::max(max_y, y);
    }
    const std::set<std::pair<long, long>> in(boxes.begin(), boxes.end());
    std::string out;
    for (long y = max_y; y >= 0; --y) {
      std::string line;
      for (long x = 0; x <= max_x; ++x) line += in.count({x, y}) ? '#' : ' ';
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + '\n';
    }
    return out;
  }
};

/// Snake of an even-length regular continued fraction [a1, ..., a_2l] with value >= 1:
/// start with one box, go a1-1 boxes up, a2 right, a3 up, ..., and a_2l - 1 right.
inline grid_region snake_graph(const continued_fraction& cf) {
  if (cf.kind() != cf_kind::regular) throw error(errc::invalid_snake_input, "snake needs a regular continued fraction");
  const auto& a = cf.terms();
  if (a.size() % 2 != 0)
    throw error(errc::invalid_snake_input, "snake needs an even number of terms, got " + std::to_string(a.size()));
  if (a[0] < 0 || (a[0] == 0 && a.size() > 2) || (a[0] == 0 && a[1] != 1))
    throw error(errc::invalid_snake_input, "snake needs a value >= 1");
  grid_region r;
  if (a[0] == 0) return r;  // [0, 1] = 1
  long x = 0, y = 0;
  r.boxes.emplace_back(x, y);
  for (std::size_t i = 0; i < a.size(); ++i) {
    long steps = static_cast<long>(a[i]);
    if (i == 0 || i + 1 == a.size()) --steps;
    for (long s = 0; s < steps; ++s) {
      if (i % 2 == 0) ++y;
      else ++x;
      r.boxes.emplace_back(x, y);
    }
  }
  return r;
}

inline grid_region snake_graph(const fraction& x) {
  if (x.is_infinity() || x < fraction(1)) throw error(errc::invalid_snake_input, "snake needs a value >= 1");
  return snake_graph(cf_regular(x, cf_parity::even));
}

/// Generating polynomial of north-east lattice paths along box edges of the region, from
/// its lower-left to its upper-right corner, by the number of region boxes under the path.
inline polynomial count_paths_by_area(const grid_region& region) {
  if (region.empty()) return polynomial{1};
  const std::set<std::pair<long, long>> in(region.boxes.begin(), region.boxes.end());
  auto has = [&](long x, long y) { return in.count({x, y}) > 0; };
  long min_x = region.boxes[0].first, min_y = region.boxes[0].second, max_x = min_x, max_y = min_y;
  for (const auto& [bx, by] : region.boxes) {
    min_x = std::min(min_x, bx);
    min_y = std::min(min_y, by);
    max_x = std::max(max_x, bx + 1);
    max_y = std::max(max_y, by + 1);
  }
  // Boxes of column x strictly below height y.
  std::map<long, std::vector<long>> column;
  for (const auto& [bx, by] : region.boxes) column[bx].push_back(by);
  auto under = [&](long x, long y) {
    const auto it = column.find(x);
    if (it == column.end()) return std::size_t{0};
    return static_cast<std::size_t>(std::count_if(it->second.begin(), it->second.end(), [&](long j) { return j < y; }));
  };

  std::map<std::pair<long, long>, polynomial> ways;
  ways[{min_x, min_y}] = polynomial{1};
  for (long diag = min_x + min_y; diag < max_x + max_y; ++diag) {
    for (long x = min_x; x <= max_x; ++x) {
      const long y = diag - x;
      const auto it = ways.find({x, y});
      if (it == ways.end()) continue;
      const polynomial w = it->second;
      if (has(x - 1, y) || has(x, y)) ways[{x, y + 1}] = ways[{x, y + 1}] + w;
      if (has(x, y - 1) || has(x, y)) ways[{x + 1, y}] = ways[{x + 1, y}] + w.shifted(under(x, y));
    }
  }
  const auto end = ways.find({max_x, max_y});
  return end == ways.end() ? polynomial{} : end->second;
}

/// Denominator of [x]_q for x = [a1, ..., a_2l] >= 1, obtained as the mirrored
/// numerator of [a2, ..., a_2l] counted on the smaller snake.
inline polynomial snake_denominator(const fraction& x) {
  const continued_fraction cf = cf_regular(x, cf_parity::even);
  if (cf.size() == 2 && cf.terms()[0] == 0) return polynomial{1};
  std::vector<integer> tail(cf.terms().begin() + 1, cf.terms().end());
  const fraction y = cf_evaluate(continued_fraction::regular(std::move(tail)));
  const polynomial n = count_paths_by_area(snake_graph(y));
  return n.reversed();
}

}  // namespace qnum
