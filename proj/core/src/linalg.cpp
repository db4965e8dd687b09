#include "lstrat/linalg.hpp"

#include <utility>

namespace lstrat {
namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVec>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

struct Bezout {
  Int g, x, y;
};

Bezout ext_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = checked_sub(old_r, checked_mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked_sub(old_s, checked_mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked_sub(old_t, checked_mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, Int a, Int b, Int c, Int d) {
  // (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j)
  for (std::size_t k = 0; k < m[i].size(); ++k) {
    Int ri = m[i][k], rj = m[j][k];
    m[i][k] = checked_add(checked_mul(a, ri), checked_mul(b, rj));
    m[j][k] = checked_add(checked_mul(c, ri), checked_mul(d, rj));
  }
}

void combine_cols(IntMatrix& m, std::size_t i, std::size_t j, Int a, Int b, Int c, Int d) {
  // (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
  for (auto& row : m) {
    Int ci = row[i], cj = row[j];
    row[i] = checked_add(checked_mul(a, ci), checked_mul(b, cj));
    row[j] = checked_add(checked_mul(c, ci), checked_mul(d, cj));
  }
}

IntMatrix identity(std::size_t n) {
  IntMatrix id(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

}  // namespace

std::size_t rank(const std::vector<RatVec>& rows, std::size_t ncols) {
  auto m = rows;
  return rref(m, ncols).size();
}

std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, std::size_t ncols) {
  auto m = rows;
  auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const std::vector<RatVec>& rows, const RatVec& rhs, std::size_t ncols) {
  std::vector<RatVec> aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RatVec r = rows[i];
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  auto pivots = rref(aug, ncols + 1);
  RatVec x(ncols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == ncols) return std::nullopt;
    x[pivots[r]] = aug[r][ncols];
  }
  return x;
}

HermiteForm hermite(const IntMatrix& rows, std::size_t ncols, bool with_transform) {
  IntMatrix a = rows;
  for (const auto& r : a) require(r.size() == ncols, ErrorCode::kDimensionMismatch, "ragged matrix");
  const std::size_t m = a.size();
  IntMatrix u, uinv;
  if (with_transform) {
    u = identity(m);
    uinv = identity(m);
  }
  HermiteForm out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m; ++col) {
    for (std::size_t i = row + 1; i < m; ++i) {
      if (a[i][col] == 0) continue;
      Int x = a[row][col], y = a[i][col];
      auto bz = ext_gcd(x, y);
      Int p = bz.x, q = bz.y, xg = x / bz.g, yg = y / bz.g;
      combine_rows(a, row, i, p, q, -yg, xg);
      if (with_transform) {
        combine_rows(u, row, i, p, q, -yg, xg);
        combine_cols(uinv, row, i, xg, yg, -q, p);
      }
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0) {
      for (auto& v : a[row]) v = -v;
      if (with_transform) {
        for (auto& v : u[row]) v = -v;
        for (auto& r : uinv) r[row] = -r[row];
      }
    }
    for (std::size_t k = 0; k < row; ++k) {
      Int f = floor_div(a[k][col], a[row][col]);
      if (f == 0) continue;
      for (std::size_t j = 0; j < ncols; ++j) a[k][j] = checked_sub(a[k][j], checked_mul(f, a[row][j]));
      if (with_transform) {
        for (std::size_t j = 0; j < m; ++j) u[k][j] = checked_sub(u[k][j], checked_mul(f, u[row][j]));
        for (auto& r : uinv) r[row] = checked_add(r[row], checked_mul(f, r[k]));
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.hnf.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(row));
  if (with_transform) {
    out.transform = std::move(u);
    out.inverse = std::move(uinv);
  }
  return out;
}

IntMatrix left_kernel(const IntMatrix& rows, std::size_t ncols) {
  auto h = hermite(rows, ncols, true);
  IntMatrix k(h.transform.begin() + static_cast<std::ptrdiff_t>(h.hnf.size()), h.transform.end());
  return k;
}

IntMatrix transpose(const IntMatrix& m, std::size_t ncols) {
  IntMatrix t(ncols, IntVec(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, std::size_t bcols) {
  IntMatrix c(a.size(), IntVec(bcols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < bcols; ++j) c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
    }
  return c;
}

}  // namespace lstrat
