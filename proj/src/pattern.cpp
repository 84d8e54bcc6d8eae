#include "sgt/pattern.hpp"

#include <algorithm>
#include <string>

namespace sgt {

GTPattern::GTPattern(int k, std::vector<Shape> rows) : k_(k), rows_(std::move(rows)) {
  if (k_ < 1) throw ShapeError("pattern depth must be >= 1");
  if (rows_.size() != static_cast<std::size_t>(k_))
    throw ShapeError("pattern must have exactly k rows");
  for (int i = 1; i <= k_; ++i) {
    if (row(i).size() != static_cast<std::size_t>(row_length(i)))
      throw ShapeError("row " + std::to_string(i) + " has wrong length");
    if (i > 1 && !interlaces(row(i - 1), row(i)))
      throw ShapeError("rows " + std::to_string(i - 1) + "," + std::to_string(i) +
                       " do not interlace");
  }
}

GTPattern GTPattern::zeros(int k) {
  std::vector<Shape> rows;
  rows.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i)
    rows.push_back(Shape::unchecked(std::vector<Coord>(static_cast<std::size_t>(row_length(i)), 0)));
  return GTPattern::unchecked(k, std::move(rows));
}

bool GTPattern::valid() const {
  if (k_ < 1 || rows_.size() != static_cast<std::size_t>(k_)) return false;
  for (int i = 1; i <= k_; ++i) {
    const Shape& r = row(i);
    if (r.size() != static_cast<std::size_t>(row_length(i))) return false;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] < 0) return false;
      if (j + 1 < r.size() && r[j] < r[j + 1]) return false;
    }
    if (i > 1 && !interlaces(row(i - 1), row(i))) return false;
  }
  return true;
}

std::vector<GTPattern> enumerate_patterns(int k, const Shape& top, std::size_t cap) {
  if (k < 1) throw ShapeError("enumerate_patterns: k must be >= 1");
  if (top.size() != static_cast<std::size_t>(row_length(k)))
    throw ShapeError("enumerate_patterns: top row has wrong length");

  // Flat odometer over all free coordinates, rows k-1 down to 1. Each
  // coordinate ranges over [upper_{j+1}, upper_j] of the row above, which is
  // already fixed at that point in the order.
  std::vector<std::vector<Coord>> rows(static_cast<std::size_t>(k));
  rows[static_cast<std::size_t>(k) - 1] = top.coords();
  for (int i = 1; i < k; ++i)
    rows[static_cast<std::size_t>(i) - 1].resize(static_cast<std::size_t>(row_length(i)));

  struct Pos {
    int row;  // 0-based storage row
    int j;
  };
  std::vector<Pos> order;
  for (int i = k - 2; i >= 0; --i)
    for (int j = 0; j < row_length(i + 1); ++j) order.push_back({i, j});

  auto lower_bound_of = [&](const Pos& p) {
    const auto& upper = rows[static_cast<std::size_t>(p.row) + 1];
    return static_cast<std::size_t>(p.j) + 1 < upper.size()
               ? upper[static_cast<std::size_t>(p.j) + 1]
               : 0;
  };
  auto upper_bound_of = [&](const Pos& p) {
    return rows[static_cast<std::size_t>(p.row) + 1][static_cast<std::size_t>(p.j)];
  };
  for (const Pos& p : order)
    rows[static_cast<std::size_t>(p.row)][static_cast<std::size_t>(p.j)] = lower_bound_of(p);

  std::vector<GTPattern> out;
  bool done = false;
  while (!done) {
    if (out.size() >= cap)
      throw OverflowError("enumerate_patterns: more than " + std::to_string(cap) + " patterns");
    std::vector<Shape> shaped;
    shaped.reserve(static_cast<std::size_t>(k));
    for (const auto& r : rows) shaped.push_back(Shape::unchecked(r));
    out.push_back(GTPattern::unchecked(k, std::move(shaped)));

    done = true;
    for (std::size_t t = order.size(); t > 0;) {
      --t;
      const Pos& p = order[t];
      auto& value = rows[static_cast<std::size_t>(p.row)][static_cast<std::size_t>(p.j)];
      if (value < upper_bound_of(p)) {
        ++value;
        for (std::size_t s = t + 1; s < order.size(); ++s)
          rows[static_cast<std::size_t>(order[s].row)][static_cast<std::size_t>(order[s].j)] =
              lower_bound_of(order[s]);
        done = false;
        break;
      }
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sgt
