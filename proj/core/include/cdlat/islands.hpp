#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cdlat::islands {

// Largest board enumerate_islands accepts by default (cells).
inline constexpr std::size_t kDefaultBoardCap = 400;
// Largest board max_islands_oracle accepts by default (cells).
inline constexpr std::size_t kDefaultOracleCap = 12;

// m columns by n rows of unit cells.
struct Board {
  int m = 1;
  int n = 1;

  int cells() const { return m * n; }
  friend bool operator==(const Board&, const Board&) = default;
};

// Cells (col, row) with 1 <= col <= m, 1 <= row <= n; row 1 is the top row.
class HeightFunction {
 public:
  HeightFunction() = default;
  HeightFunction(Board board, int fill);
  // Row-major values, row 1 first. Throws PreconditionViolated on size mismatch.
  HeightFunction(Board board, std::vector<int> row_major);

  const Board& board() const { return board_; }
  int at(int col, int row) const { return values_[index(col, row)]; }
  void set(int col, int row, int value) { values_[index(col, row)] = value; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;

 private:
  std::size_t index(int col, int row) const {
    return static_cast<std::size_t>((row - 1) * board_.m + (col - 1));
  }
  Board board_;
  std::vector<int> values_;
};

// Columns c1..c2 and rows r1..r2, 1-based and inclusive; never empty.
struct CellRect {
  int c1 = 1;
  int r1 = 1;
  int c2 = 1;
  int r2 = 1;

  static CellRect whole(Board b) { return {1, 1, b.m, b.n}; }
  bool contains(int col, int row) const {
    return c1 <= col && col <= c2 && r1 <= row && row <= r2;
  }
  bool within(Board b) const {
    return 1 <= c1 && c1 <= c2 && c2 <= b.m && 1 <= r1 && r1 <= r2 && r2 <= b.n;
  }
  friend auto operator<=>(const CellRect&, const CellRect&) = default;
};

// Grid points x0..x1 by y0..y1.
struct PointRect {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;

  bool is_subset_of(const PointRect& o) const {
    return o.x0 <= x0 && x1 <= o.x1 && o.y0 <= y0 && y1 <= o.y1;
  }
  bool disjoint_from(const PointRect& o) const {
    return x1 < o.x0 || o.x1 < x0 || y1 < o.y0 || o.y1 < y0;
  }
  friend auto operator<=>(const PointRect&, const PointRect&) = default;
};

// Sorted, duplicate-free set of cellular rectangles.
using IslandSystem = std::vector<CellRect>;

// The minimum height on R exceeds every height on the cells at Chebyshev
// distance 1 from R. The whole board is always an island.
bool is_island(const HeightFunction& h, const CellRect& rect);

// All islands in ascending (c1, r1, c2, r2) order. Throws CapExceeded when the
// board has more than `cap` cells.
IslandSystem enumerate_islands(const HeightFunction& h, std::size_t cap = kDefaultBoardCap);

// Vertices of the cells of R: [c1-1, c2] x [r1-1, r2].
PointRect grid_of(const CellRect& rect);
std::vector<PointRect> sgrid(const IslandSystem& system);

// Any two members are nested or share no point. Witness: an offending pair.
struct LaminarVerdict {
  bool holds = true;
  std::optional<std::pair<PointRect, PointRect>> witness;
  explicit operator bool() const noexcept { return holds; }
};

LaminarVerdict is_laminar(const std::vector<PointRect>& rects);

// Height = number of members containing the cell. Throws NotLaminar or
// MissingBoard when the system cannot be an island system.
HeightFunction realize_heights(Board board, const IslandSystem& system);

// floor((mn + m + n - 1) / 2).
long long f_formula(long long m, long long n);

struct OracleResult {
  long long count = 0;
  IslandSystem witness;
};

// Exact maximum number of islands on an m x n board by memoized search over
// packings of pairwise grid-disjoint proper sub-rectangles. Throws
// CapExceeded when mn > cap.
OracleResult max_islands_oracle(int m, int n, std::size_t cap = kDefaultOracleCap);

// Heights obtained by recursively cutting the board with one row or column
// and raising both sides; meant to reach f(m, n) islands.
HeightFunction max_islands_construct(int m, int n);

// Height CSV: n lines of m comma-separated integers, row 1 first.
HeightFunction read_heights_csv(std::istream& in);
HeightFunction read_heights_csv_file(const std::string& path);
void write_heights_csv(std::ostream& out, const HeightFunction& h);

}  // namespace cdlat::islands
