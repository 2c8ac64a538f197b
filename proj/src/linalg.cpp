#include "reflekt/linalg.hpp"

#include <numeric>

namespace reflekt {

namespace {

void check_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::ShapeMismatch, "matrix shapes differ");
}

int legs_product(const std::vector<int>& legs) {
  return std::accumulate(legs.begin(), legs.end(), 1, std::multiplies<int>());
}

// Decode a flat tensor index into per-leg digits (leg 0 slowest).
std::vector<int> decode(int idx, const std::vector<int>& legs) {
  std::vector<int> d(legs.size());
  for (int i = static_cast<int>(legs.size()) - 1; i >= 0; --i) {
    d[i] = idx % legs[i];
    idx /= legs[i];
  }
  return d;
}

int encode(const std::vector<int>& d, const std::vector<int>& legs) {
  int idx = 0;
  for (std::size_t i = 0; i < legs.size(); ++i) idx = idx * legs[i] + d[i];
  return idx;
}

void require_legs(const Matrix& m, int leg) {
  if (m.legs().empty())
    throw Error(ErrorCode::LegMismatch, "matrix has no declared legdims");
  if (leg < 0 || leg >= static_cast<int>(m.legs().size()))
    throw Error(ErrorCode::LegMismatch, "leg index out of range");
  if (m.rows() != m.cols())
    throw Error(ErrorCode::LegMismatch, "leg operation needs a square matrix");
}

}  // namespace

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows <= 0 || cols <= 0)
    throw Error(ErrorCode::ShapeMismatch, "nonpositive matrix dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i)
    m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::ShapeMismatch, "empty matrix");
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw Error(ErrorCode::ShapeMismatch, "ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::with_legs(std::vector<int> legs) const {
  if (legs_product(legs) != rows_)
    throw Error(ErrorCode::LegMismatch, "legdims do not factor the row count");
  Matrix m = *this;
  m.legs_ = std::move(legs);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_shape(*this, o);
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(*this, o);
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& s : m.data_) s = -s;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw Error(ErrorCode::ShapeMismatch, "incompatible product shapes");
  Matrix m(rows_, o.cols_);
  m.legs_ = legs_;
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) m.at(i, j) += a * b;
      }
    }
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& s : m.data_) s *= c;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  m.legs_ = legs_;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_)
    throw Error(ErrorCode::ShapeMismatch, "trace of nonsquare matrix");
  Scalar t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::substitute(const std::map<int, Scalar>& bindings) const {
  Matrix m = *this;
  for (auto& s : m.data_) s = s.substitute(bindings);
  return m;
}

Matrix Matrix::derivative(int var) const {
  Matrix m = *this;
  for (auto& s : m.data_) s = s.derivative(var);
  return m;
}

std::size_t Matrix::term_count() const {
  std::size_t n = 0;
  for (const auto& s : data_) n += s.term_count();
  return n;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b.at(k, l).is_zero())
            m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  std::vector<int> legs;
  if (!a.legs().empty() || !b.legs().empty()) {
    auto side = [](const Matrix& x) {
      return x.legs().empty() ? std::vector<int>{x.rows()} : x.legs();
    };
    legs = side(a);
    for (int d : side(b)) legs.push_back(d);
    return m.with_legs(legs);
  }
  return m;
}

Matrix partial_transpose(const Matrix& m, int leg) {
  require_legs(m, leg);
  const auto& legs = m.legs();
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    auto di = decode(i, legs);
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      auto dj = decode(j, legs);
      std::swap(di[leg], dj[leg]);
      out.at(encode(di, legs), encode(dj, legs)) = m.at(i, j);
      std::swap(di[leg], dj[leg]);
    }
  }
  return out.with_legs(legs);
}

Matrix partial_trace(const Matrix& m, int leg) {
  require_legs(m, leg);
  const auto& legs = m.legs();
  std::vector<int> rest;
  for (std::size_t i = 0; i < legs.size(); ++i)
    if (static_cast<int>(i) != leg) rest.push_back(legs[i]);
  int n = rest.empty() ? 1 : legs_product(rest);
  Matrix out(n, n);
  for (int i = 0; i < m.rows(); ++i) {
    auto di = decode(i, legs);
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      auto dj = decode(j, legs);
      if (di[leg] != dj[leg]) continue;
      std::vector<int> ri, rj;
      for (std::size_t k = 0; k < legs.size(); ++k)
        if (static_cast<int>(k) != leg) {
          ri.push_back(di[k]);
          rj.push_back(dj[k]);
        }
      out.at(rest.empty() ? 0 : encode(ri, rest),
             rest.empty() ? 0 : encode(rj, rest)) += m.at(i, j);
    }
  }
  return rest.empty() ? out : out.with_legs(rest);
}

Matrix leg_permutation(const std::vector<int>& legs,
                       const std::vector<int>& perm) {
  if (perm.size() != legs.size())
    throw Error(ErrorCode::LegMismatch, "permutation length mismatch");
  std::vector<int> target(legs.size());
  for (std::size_t i = 0; i < legs.size(); ++i) target[perm[i]] = legs[i];
  int n = legs_product(legs);
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) {
    auto d = decode(j, legs);
    std::vector<int> t(legs.size());
    for (std::size_t i = 0; i < legs.size(); ++i) t[perm[i]] = d[i];
    m.at(encode(t, target), j) = Scalar(1);
  }
  return m.with_legs(target);
}

Matrix embed(const Matrix& op, const std::vector<int>& legs,
             const std::vector<int>& targets) {
  if (op.legs().empty()) {
    if (targets.size() != 1 || legs[targets[0]] != op.rows())
      throw Error(ErrorCode::LegMismatch, "embed: operator legdims required");
  } else if (op.legs().size() != targets.size()) {
    throw Error(ErrorCode::LegMismatch, "embed: target count mismatch");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    int t = targets[i];
    if (t < 0 || t >= static_cast<int>(legs.size()))
      throw Error(ErrorCode::LegMismatch, "embed: target out of range");
    int want = op.legs().empty() ? op.rows() : op.legs()[i];
    if (legs[t] != want)
      throw Error(ErrorCode::LegMismatch, "embed: leg dimension mismatch");
  }
  std::vector<int> oplegs =
      op.legs().empty() ? std::vector<int>{op.rows()} : op.legs();
  int n = legs_product(legs);
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    auto di = decode(i, legs);
    std::vector<int> oi(targets.size());
    for (std::size_t k = 0; k < targets.size(); ++k) oi[k] = di[targets[k]];
    int opi = encode(oi, oplegs);
    for (int opj = 0; opj < op.cols(); ++opj) {
      if (op.at(opi, opj).is_zero()) continue;
      auto dj = di;
      auto oj = decode(opj, oplegs);
      for (std::size_t k = 0; k < targets.size(); ++k) dj[targets[k]] = oj[k];
      out.at(i, encode(dj, legs)) = op.at(opi, opj);
    }
  }
  return out.with_legs(legs);
}

namespace {

// Bareiss forward pass on an augmented matrix, then back substitution.
// Returns pivot columns within the first `width` columns.
std::vector<int> eliminate(Matrix& m, int width) {
  std::vector<int> pivots;
  Scalar prev(1);
  int row = 0;
  for (int col = 0; col < width && row < m.rows(); ++col) {
    int best = -1;
    std::size_t best_terms = 0;
    for (int r = row; r < m.rows(); ++r) {
      if (m.at(r, col).is_zero()) continue;
      std::size_t t = m.at(r, col).term_count();
      if (best < 0 || t < best_terms) {
        best = r;
        best_terms = t;
      }
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(best, j));
    Scalar pivot = m.at(row, col);
    for (int r = row + 1; r < m.rows(); ++r) {
      Scalar f = m.at(r, col);
      for (int j = col; j < m.cols(); ++j)
        m.at(r, j) = (pivot * m.at(r, j) - f * m.at(row, j)) / prev;
    }
    prev = pivot;
    pivots.push_back(col);
    ++row;
  }
  // Final division: normalize pivots to 1 and clear above.
  for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
    int col = pivots[r];
    Scalar inv = m.at(r, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < r; ++i) {
      Scalar f = m.at(i, col);
      if (f.is_zero()) continue;
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
  }
  return pivots;
}

}  // namespace

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::ShapeMismatch, "inverse of nonsquare matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  auto pivots = eliminate(aug, n);
  if (static_cast<int>(pivots.size()) != n)
    throw Error(ErrorCode::Singular, "matrix is singular");
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return m.legs().empty() ? out : out.with_legs(m.legs());
}

std::vector<Matrix> nullspace(const Matrix& m) {
  Matrix work = m;
  auto pivots = eliminate(work, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Matrix> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(m.cols(), 1);
    v.at(free, 0) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v.at(pivots[r], 0) = -work.at(static_cast<int>(r), free);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace reflekt
