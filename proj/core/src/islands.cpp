#include "cdlat/islands.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "cdlat/errors.hpp"

namespace cdlat::islands {

HeightFunction::HeightFunction(Board board, int fill)
    : board_(board), values_(static_cast<std::size_t>(board.cells()), fill) {
  if (board.m < 1 || board.n < 1) throw PreconditionViolated("board needs m, n >= 1");
}

HeightFunction::HeightFunction(Board board, std::vector<int> row_major)
    : board_(board), values_(std::move(row_major)) {
  if (board.m < 1 || board.n < 1) throw PreconditionViolated("board needs m, n >= 1");
  if (values_.size() != static_cast<std::size_t>(board.cells())) {
    throw PreconditionViolated("height function has " + std::to_string(values_.size()) +
                               " values for " + std::to_string(board.cells()) + " cells");
  }
}

bool is_island(const HeightFunction& h, const CellRect& rect) {
  const Board& b = h.board();
  if (!rect.within(b)) throw PreconditionViolated("rectangle outside the board");
  int lowest = std::numeric_limits<int>::max();
  for (int row = rect.r1; row <= rect.r2; ++row) {
    for (int col = rect.c1; col <= rect.c2; ++col) lowest = std::min(lowest, h.at(col, row));
  }
  const int row_lo = std::max(1, rect.r1 - 1);
  const int row_hi = std::min(b.n, rect.r2 + 1);
  const int col_lo = std::max(1, rect.c1 - 1);
  const int col_hi = std::min(b.m, rect.c2 + 1);
  for (int row = row_lo; row <= row_hi; ++row) {
    for (int col = col_lo; col <= col_hi; ++col) {
      if (!rect.contains(col, row) && h.at(col, row) >= lowest) return false;
    }
  }
  return true;
}

IslandSystem enumerate_islands(const HeightFunction& h, std::size_t cap) {
  const Board& b = h.board();
  if (static_cast<std::size_t>(b.cells()) > cap) {
    throw CapExceeded("board has " + std::to_string(b.cells()) + " cells, cap is " +
                      std::to_string(cap));
  }
  IslandSystem out;
  for (int c1 = 1; c1 <= b.m; ++c1) {
    for (int r1 = 1; r1 <= b.n; ++r1) {
      for (int c2 = c1; c2 <= b.m; ++c2) {
        for (int r2 = r1; r2 <= b.n; ++r2) {
          CellRect rect{c1, r1, c2, r2};
          if (is_island(h, rect)) out.push_back(rect);
        }
      }
    }
  }
  return out;
}

PointRect grid_of(const CellRect& rect) {
  return {rect.c1 - 1, rect.r1 - 1, rect.c2, rect.r2};
}

std::vector<PointRect> sgrid(const IslandSystem& system) {
  std::vector<PointRect> out;
  out.reserve(system.size());
  for (const CellRect& r : system) out.push_back(grid_of(r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LaminarVerdict is_laminar(const std::vector<PointRect>& rects) {
  for (std::size_t i = 0; i < rects.size(); ++i) {
    for (std::size_t j = i + 1; j < rects.size(); ++j) {
      const PointRect& a = rects[i];
      const PointRect& b = rects[j];
      if (!a.is_subset_of(b) && !b.is_subset_of(a) && !a.disjoint_from(b)) {
        return {false, std::make_pair(a, b)};
      }
    }
  }
  return {};
}

HeightFunction realize_heights(Board board, const IslandSystem& system) {
  if (std::find(system.begin(), system.end(), CellRect::whole(board)) == system.end()) {
    throw MissingBoard("island systems always contain the whole board");
  }
  for (const CellRect& r : system) {
    if (!r.within(board)) throw PreconditionViolated("rectangle outside the board");
  }
  if (!is_laminar(sgrid(system))) throw NotLaminar("grids of the system are not laminar");
  HeightFunction h(board, 0);
  for (const CellRect& r : system) {
    for (int row = r.r1; row <= r.r2; ++row) {
      for (int col = r.c1; col <= r.c2; ++col) h.set(col, row, h.at(col, row) + 1);
    }
  }
  return h;
}

long long f_formula(long long m, long long n) {
  if (m < 1 || n < 1) throw PreconditionViolated("board needs m, n >= 1");
  return (m * n + m + n - 1) / 2;
}

namespace {

// Exhaustive packing search on w x h shapes. Cells are numbered row-major and
// held in a 64-bit mask. Every proper sub-rectangle R of a shape contributes
// best(shape of R); rectangles are placed with their first cell at the lowest
// still-open cell, so each packing is generated once.
class PackingOracle {
 public:
  long long best(int w, int h) { return shape(w, h).value; }

  IslandSystem witness(int w, int h) {
    IslandSystem out;
    collect(w, h, 0, 0, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Placement {
    int col = 0;  // 0-based offset inside the shape
    int row = 0;
    int w = 0;
    int h = 0;
  };
  struct ShapeResult {
    long long value = 0;
    std::vector<Placement> children;
  };
  struct Choice {
    long long value = 0;
    int w = 0;  // 0: leave the lowest open cell uncovered
    int h = 0;
  };

  static std::uint64_t key(int w, int h) { return static_cast<std::uint64_t>(w) << 8 | h; }

  const ShapeResult& shape(int w, int h) {
    if (auto it = shapes_.find(key(w, h)); it != shapes_.end()) return it->second;
    ShapeResult result;
    std::unordered_map<std::uint64_t, Choice> memo;
    // Solve children shapes before the packing search touches the memo.
    for (int cw = 1; cw <= w; ++cw) {
      for (int ch = 1; ch <= h; ++ch) {
        if (cw != w || ch != h) shape(cw, ch);
      }
    }
    const std::uint64_t all = w * h == 64 ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << (w * h)) - 1;
    result.value = 1 + pack(w, h, all, memo);
    for (std::uint64_t open = all; open != 0;) {
      const Choice& c = memo.at(open);
      const int cell = std::countr_zero(open);
      if (c.w == 0) {
        open &= open - 1;
        continue;
      }
      result.children.push_back({cell % w, cell / w, c.w, c.h});
      open &= ~neighbourhood(w, h, cell % w, cell / w, c.w, c.h);
    }
    return shapes_.emplace(key(w, h), std::move(result)).first->second;
  }

  static std::uint64_t rect_mask(int w, int col, int row, int rw, int rh) {
    std::uint64_t m = 0;
    for (int y = row; y < row + rh; ++y) {
      for (int x = col; x < col + rw; ++x) m |= std::uint64_t{1} << (y * w + x);
    }
    return m;
  }

  // The rectangle grown by one cell in every direction, clipped to the shape.
  static std::uint64_t neighbourhood(int w, int h, int col, int row, int rw, int rh) {
    const int x0 = std::max(0, col - 1);
    const int y0 = std::max(0, row - 1);
    const int x1 = std::min(w, col + rw + 1);
    const int y1 = std::min(h, row + rh + 1);
    return rect_mask(w, x0, y0, x1 - x0, y1 - y0);
  }

  long long pack(int w, int h, std::uint64_t open,
                 std::unordered_map<std::uint64_t, Choice>& memo) {
    if (open == 0) return 0;
    if (auto it = memo.find(open); it != memo.end()) return it->second.value;
    const int cell = std::countr_zero(open);
    const int col = cell % w;
    const int row = cell / w;
    Choice best_choice;
    bool have = false;
    for (int rh = 1; row + rh <= h; ++rh) {
      for (int rw = 1; col + rw <= w; ++rw) {
        if (rw == w && rh == h) continue;  // proper sub-rectangles only
        const std::uint64_t cells = rect_mask(w, col, row, rw, rh);
        if ((cells & open) != cells) break;  // wider ones are blocked too
        const long long v = shapes_.at(key(rw, rh)).value +
                            pack(w, h, open & ~neighbourhood(w, h, col, row, rw, rh), memo);
        if (!have || v > best_choice.value) {
          best_choice = {v, rw, rh};
          have = true;
        }
      }
    }
    const long long skip = pack(w, h, open & (open - 1), memo);
    if (!have || skip > best_choice.value) best_choice = {skip, 0, 0};
    memo[open] = best_choice;
    return best_choice.value;
  }

  void collect(int w, int h, int col, int row, IslandSystem& out) {
    out.push_back({col + 1, row + 1, col + w, row + h});
    for (const Placement& p : shape(w, h).children) {
      collect(p.w, p.h, col + p.col, row + p.row, out);
    }
  }

  std::unordered_map<std::uint64_t, ShapeResult> shapes_;
};

void construct(HeightFunction& h, int col, int row, int w, int hgt, int depth) {
  if (w <= 0 || hgt <= 0) return;
  if (w == 1 && hgt == 1) {
    h.set(col, row, depth);
    return;
  }
  const bool cut_columns = w >= hgt;
  const int k = cut_columns ? w : hgt;
  const int other = cut_columns ? hgt : w;
  int first = (k - 1 + 1) / 2;
  int second = (k - 1) / 2;
  // With an even cross dimension two even halves each lose half an island to
  // rounding; two odd halves do not.
  if (other % 2 == 0 && first % 2 == 0 && second % 2 == 0 && second > 0) {
    ++first;
    --second;
  }
  if (cut_columns) {
    for (int y = row; y < row + hgt; ++y) h.set(col + first, y, depth);
    construct(h, col, row, first, hgt, depth + 1);
    construct(h, col + first + 1, row, second, hgt, depth + 1);
  } else {
    for (int x = col; x < col + w; ++x) h.set(x, row + first, depth);
    construct(h, col, row, w, first, depth + 1);
    construct(h, col, row + first + 1, w, second, depth + 1);
  }
}

}  // namespace

OracleResult max_islands_oracle(int m, int n, std::size_t cap) {
  if (m < 1 || n < 1) throw PreconditionViolated("board needs m, n >= 1");
  if (static_cast<std::size_t>(m) * static_cast<std::size_t>(n) > std::min<std::size_t>(cap, 64)) {
    throw CapExceeded("oracle board " + std::to_string(m) + "x" + std::to_string(n) +
                      " exceeds cap of " + std::to_string(std::min<std::size_t>(cap, 64)) +
                      " cells");
  }
  PackingOracle oracle;
  return {oracle.best(m, n), oracle.witness(m, n)};
}

HeightFunction max_islands_construct(int m, int n) {
  HeightFunction h(Board{m, n}, 0);
  construct(h, 1, 1, m, n, 1);
  return h;
}

HeightFunction read_heights_csv(std::istream& in) {
  std::vector<int> values;
  int m = -1;
  int n = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream row(line);
    std::string cell;
    int count = 0;
    while (std::getline(row, cell, ',')) {
      std::istringstream num(cell);
      int v = 0;
      std::string rest;
      if (!(num >> v) || (num >> rest)) {
        throw ParseError("row " + std::to_string(n + 1) + ": bad height '" + cell + "'");
      }
      values.push_back(v);
      ++count;
    }
    if (m == -1) m = count;
    if (count != m) {
      throw ParseError("row " + std::to_string(n + 1) + " has " + std::to_string(count) +
                       " cells, expected " + std::to_string(m));
    }
    ++n;
  }
  if (n == 0 || m < 1) throw ParseError("empty height file");
  return HeightFunction(Board{m, n}, std::move(values));
}

HeightFunction read_heights_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_heights_csv(in);
}

void write_heights_csv(std::ostream& out, const HeightFunction& h) {
  const Board& b = h.board();
  for (int row = 1; row <= b.n; ++row) {
    for (int col = 1; col <= b.m; ++col) out << (col > 1 ? "," : "") << h.at(col, row);
    out << '\n';
  }
}

}  // namespace cdlat::islands
