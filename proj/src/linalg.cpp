#include "orealg/linalg.hpp"

#include <limits>

#include "orealg/error.hpp"

namespace orealg::linalg {

Echelon row_reduce(Matrix m, std::size_t cols) {
  Echelon out;
  out.cols = cols;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < m.size(); ++c) {
    std::size_t best = m.size();
    std::size_t best_weight = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = next; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      const std::size_t w = m[r][c].weight();
      if (w < best_weight) {
        best = r;
        best_weight = w;
      }
    }
    if (best == m.size()) continue;
    std::swap(m[next], m[best]);
    Vector& pivot_row = m[next];
    const Element inv = pivot_row[c].inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!pivot_row[j].is_zero()) pivot_row[j] = pivot_row[j] * inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == next || m[r][c].is_zero()) continue;
      const Element factor = m[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!pivot_row[j].is_zero()) m[r][j] = m[r][j] - factor * pivot_row[j];
      }
    }
    out.pivots.push_back(c);
    ++next;
  }
  m.resize(next);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return row_reduce(m, cols).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m, std::size_t cols, const Level& field) {
  const Echelon e = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, field.zero());
    v[f] = field.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (!e.rows[i][f].is_zero()) v[e.pivots[i]] = -field.lift(e.rows[i][f]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b, const Level& field) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "solve: shape mismatch");
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const Echelon e = row_reduce(std::move(aug), n + 1);
  Vector x(n, field.zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == n) return std::nullopt;
    x[e.pivots[i]] = field.lift(e.rows[i][n]);
  }
  return x;
}

Matrix transpose(const Matrix& m, std::size_t cols) {
  Matrix t(cols);
  for (const auto& row : m) {
    for (std::size_t j = 0; j < cols; ++j) t[j].push_back(row[j]);
  }
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  const Element zero = a[0][0].level().zero();
  Matrix c(a.size(), Vector(cols, zero));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!b[k][j].is_zero()) c[i][j] = c[i][j] + a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

Matrix identity(std::size_t n, const Level& field) {
  Matrix m(n, Vector(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = field.one();
  return m;
}

namespace {

void relation_rows(const Level& level, const std::vector<Element>& es, Matrix& out) {
  bool all_zero = true;
  for (const auto& e : es) {
    if (!e.is_zero()) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return;
  switch (level.kind()) {
    case Level::Kind::Rationals:
    case Level::Kind::PrimeField:
      out.push_back(es);
      return;
    case Level::Kind::Rational: {
      upoly::Poly common{level.inner()->one()};
      for (const auto& e : es) {
        const auto& f = std::get<Element::Frac>(e.rep());
        if (!upoly::is_one(f.den)) common = upoly::lcm(common, f.den);
      }
      std::vector<upoly::Poly> polys;
      std::size_t max_len = 0;
      for (const auto& e : es) {
        const auto& f = std::get<Element::Frac>(e.rep());
        polys.push_back(upoly::is_one(f.den)
                            ? upoly::mul(f.num, common)
                            : upoly::mul(f.num, upoly::divmod(common, f.den).first));
        max_len = std::max(max_len, polys.back().size());
      }
      const Element zero = level.inner()->zero();
      for (std::size_t j = 0; j < max_len; ++j) {
        std::vector<Element> column;
        column.reserve(es.size());
        for (const auto& p : polys) column.push_back(j < p.size() ? p[j] : zero);
        relation_rows(*level.inner(), column, out);
      }
      return;
    }
    case Level::Kind::PInsep: {
      const Element zero = level.inner()->zero();
      for (std::size_t i = 0; i < level.characteristic(); ++i) {
        std::vector<Element> column;
        column.reserve(es.size());
        for (const auto& e : es) {
          const auto& c = std::get<Element::Alg>(e.rep()).coeffs;
          column.push_back(i < c.size() ? c[i] : zero);
        }
        relation_rows(*level.inner(), column, out);
      }
      return;
    }
  }
}

}  // namespace

Matrix base_relation_rows(std::span<const Element> elems) {
  if (elems.empty()) return {};
  const Level* top = elems[0].level_ptr();
  for (const auto& e : elems) {
    if (e.level().depth() > top->depth()) top = e.level_ptr();
  }
  std::vector<Element> lifted;
  lifted.reserve(elems.size());
  for (const auto& e : elems) lifted.push_back(top->lift(e));
  Matrix out;
  relation_rows(*top, lifted, out);
  return out;
}

}  // namespace orealg::linalg
