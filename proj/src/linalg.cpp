#include "homlab/linalg.hpp"

#include "homlab/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/integer/common_factor_rt.hpp>

namespace homlab {

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::size_t column_count(const IntMatrix& m) { return m.empty() ? 0 : m[0].size(); }

Count abs_count(const Count& x) { return x < 0 ? Count(-x) : x; }

}  // namespace

Echelon bareiss_echelon(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.size(), cols = column_count(a);
  Echelon out;
  Count prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t exact_rank(const IntMatrix& m) { return bareiss_echelon(m).rank; }

Count determinant(const IntMatrix& input) {
  const std::size_t n = input.size();
  for (const auto& row : input)
    if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
  if (n == 0) return 1;
  IntMatrix a = input;
  Count prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return negate ? Count(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

IntMatrix transpose(const IntMatrix& m) {
  const std::size_t rows = m.size(), cols = column_count(m);
  IntMatrix t(cols, std::vector<Count>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix select_columns(const IntMatrix& m, const std::vector<std::size_t>& cols) {
  IntMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Count> r;
    r.reserve(cols.size());
    for (std::size_t c : cols) r.push_back(row.at(c));
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<std::vector<Count>> kernel_vector(const IntMatrix& m) {
  const std::size_t rows = m.size(), cols = column_count(m);
  if (cols == 0) return std::nullopt;
  // reduced row echelon form over Q
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rational(m[i][j]);
  std::vector<std::size_t> pivot_of_row;
  std::vector<char> is_pivot(cols, 0);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_of_row.push_back(c);
    is_pivot[c] = 1;
    ++r;
  }
  std::size_t free_col = cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col == cols) return std::nullopt;

  std::vector<Rational> x(cols, 0);
  x[free_col] = 1;
  for (std::size_t i = 0; i < pivot_of_row.size(); ++i) x[pivot_of_row[i]] = -a[i][free_col];

  Count lcm = 1;
  for (const auto& q : x) lcm = boost::integer::lcm(lcm, Count(boost::multiprecision::denominator(q)));
  std::vector<Count> v(cols);
  Count g = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    v[j] = Count(boost::multiprecision::numerator(x[j]) * (lcm / boost::multiprecision::denominator(x[j])));
    g = boost::integer::gcd(g, abs_count(v[j]));
  }
  bool flip = false;
  for (const auto& e : v)
    if (e != 0) {
      flip = e < 0;
      break;
    }
  for (auto& e : v) {
    e /= g;
    if (flip) e = -e;
  }
  return v;
}

std::optional<std::vector<Count>> left_kernel_vector(const IntMatrix& m) {
  if (m.empty()) return std::nullopt;
  if (column_count(m) == 0) {
    std::vector<Count> e(m.size(), 0);
    e[0] = 1;
    return e;
  }
  return kernel_vector(transpose(m));
}

std::vector<Count> left_multiply(const std::vector<Count>& y, const IntMatrix& m) {
  const std::size_t cols = column_count(m);
  if (y.size() != m.size()) throw InvalidArgument("left_multiply: dimension mismatch");
  std::vector<Count> out(cols, 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j] += y[i] * m[i][j];
  return out;
}

}  // namespace homlab
