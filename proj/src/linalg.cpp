#include "brauer/linalg.hpp"

#include <algorithm>
#include <utility>

#include "brauer/error.hpp"

namespace brauer {

  std::string to_string(Rational const& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) {
      return c.get_num().get_str();
    }
    return c.get_num().get_str() + "/" + c.get_den().get_str();
  }

  Rational parse_rational(std::string const& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
      fail(ErrorKind::invalid_argument, "not a rational number: '" + text + "'");
    }
    q.canonicalize();
    return q;
  }

  Matrix::Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      v[r] = (*this)(r, c);
    }
    return v;
  }

  void Matrix::set_column(std::size_t c, std::span<Rational const> v) {
    if (v.size() != rows_) {
      fail(ErrorKind::size_mismatch, "set_column: length mismatch");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      (*this)(r, c) = v[r];
    }
  }

  Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  Vector Matrix::apply(std::span<Rational const> v) const {
    if (v.size() != cols_) {
      fail(ErrorKind::size_mismatch, "apply: vector length mismatch");
    }
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) == 0) {
        continue;
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        if (sgn((*this)(r, c)) != 0) {
          out[r] += (*this)(r, c) * v[c];
        }
      }
    }
    return out;
  }

  bool Matrix::is_zero() const {
    return std::all_of(
        data_.begin(), data_.end(), [](Rational const& q) { return sgn(q) == 0; });
  }

  bool Matrix::is_scalar(Rational* scalar) const {
    if (rows_ != cols_) {
      return false;
    }
    Rational s = rows_ == 0 ? Rational(0) : (*this)(0, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if ((*this)(r, c) != (r == c ? s : Rational(0))) {
          return false;
        }
      }
    }
    if (scalar != nullptr) {
      *scalar = s;
    }
    return true;
  }

  bool Matrix::is_symmetric() const {
    if (rows_ != cols_) {
      return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = r + 1; c < cols_; ++c) {
        if ((*this)(r, c) != (*this)(c, r)) {
          return false;
        }
      }
    }
    return true;
  }

  Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a.cols_ != b.rows_) {
      fail(ErrorKind::size_mismatch, "matrix product: inner dimensions differ");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Rational const& x = a(i, k);
        if (sgn(x) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (sgn(b(k, j)) != 0) {
            out(i, j) += x * b(k, j);
          }
        }
      }
    }
    return out;
  }

  Matrix operator+(Matrix const& a, Matrix const& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      fail(ErrorKind::size_mismatch, "matrix sum: shapes differ");
    }
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
      out.data_[i] += b.data_[i];
    }
    return out;
  }

  Matrix operator-(Matrix const& a, Matrix const& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      fail(ErrorKind::size_mismatch, "matrix difference: shapes differ");
    }
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
      out.data_[i] -= b.data_[i];
    }
    return out;
  }

  Matrix operator*(Rational const& s, Matrix const& a) {
    Matrix out = a;
    for (auto& x : out.data_) {
      x *= s;
    }
    return out;
  }

  namespace {
    // Gaussian elimination in place; returns the rank and the sign/product
    // bookkeeping needed by determinant().
    std::size_t eliminate(Matrix& m, Rational* det) {
      std::size_t const rows = m.rows();
      std::size_t const cols = m.cols();
      std::size_t       r    = 0;
      if (det != nullptr) {
        *det = 1;
      }
      for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) {
          ++p;
        }
        if (p == rows) {
          if (det != nullptr) {
            *det = 0;
          }
          continue;
        }
        if (p != r) {
          for (std::size_t j = 0; j < cols; ++j) {
            std::swap(m(p, j), m(r, j));
          }
          if (det != nullptr) {
            *det = -*det;
          }
        }
        Rational const pivot = m(r, c);
        if (det != nullptr) {
          *det *= pivot;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
          if (sgn(m(i, c)) == 0) {
            continue;
          }
          Rational const f = m(i, c) / pivot;
          for (std::size_t j = c; j < cols; ++j) {
            if (sgn(m(r, j)) != 0) {
              m(i, j) -= f * m(r, j);
            }
          }
        }
        ++r;
      }
      return r;
    }
  }  // namespace

  std::size_t rank(Matrix m) {
    return eliminate(m, nullptr);
  }

  Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) {
      fail(ErrorKind::size_mismatch, "determinant of a non-square matrix");
    }
    Rational det;
    std::size_t r = eliminate(m, &det);
    return r == m.rows() ? det : Rational(0);
  }

  Matrix inverse(Matrix m) {
    std::size_t const n = m.rows();
    if (n != m.cols()) {
      fail(ErrorKind::size_mismatch, "inverse of a non-square matrix");
    }
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && sgn(m(p, c)) == 0) {
        ++p;
      }
      if (p == n) {
        fail(ErrorKind::internal, "inverse of a singular matrix");
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
      Rational const pivot = m(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(c, j) /= pivot;
        inv(c, j) /= pivot;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || sgn(m(i, c)) == 0) {
          continue;
        }
        Rational const f = m(i, c);
        for (std::size_t j = 0; j < n; ++j) {
          m(i, j) -= f * m(c, j);
          inv(i, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  bool RowEchelon::add(Vector row) {
    if (row.size() != cols_) {
      fail(ErrorKind::size_mismatch, "RowEchelon::add: row length mismatch");
    }
    // Pivot rows are zero in the columns of earlier pivots, so a single pass
    // in insertion order fully reduces the new row.
    for (auto const& p : pivots_) {
      if (sgn(row[p.col]) == 0) {
        continue;
      }
      Rational const f = row[p.col];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(p.row[j]) != 0) {
          row[j] -= f * p.row[j];
        }
      }
    }
    auto it = std::find_if(
        row.begin(), row.end(), [](Rational const& q) { return sgn(q) != 0; });
    if (it == row.end()) {
      return false;
    }
    std::size_t const col   = static_cast<std::size_t>(it - row.begin());
    Rational const    pivot = row[col];
    for (auto& x : row) {
      if (sgn(x) != 0) {
        x /= pivot;
      }
    }
    pivots_.push_back({col, std::move(row)});
    return true;
  }

  std::vector<Vector> RowEchelon::null_space() const {
    // Back-substitute to reduced form, then read off one vector per free
    // column.
    std::vector<Pivot> red = pivots_;
    std::sort(red.begin(), red.end(), [](Pivot const& a, Pivot const& b) {
      return a.col < b.col;
    });
    for (std::size_t k = red.size(); k-- > 0;) {
      for (std::size_t i = 0; i < red.size(); ++i) {
        if (i == k || sgn(red[i].row[red[k].col]) == 0) {
          continue;
        }
        Rational const f = red[i].row[red[k].col];
        for (std::size_t j = 0; j < cols_; ++j) {
          if (sgn(red[k].row[j]) != 0) {
            red[i].row[j] -= f * red[k].row[j];
          }
        }
      }
    }
    std::vector<bool> is_pivot(cols_, false);
    for (auto const& p : red) {
      is_pivot[p.col] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) {
        continue;
      }
      Vector v(cols_);
      v[free] = 1;
      for (auto const& p : red) {
        v[p.col] = -p.row[free];
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

}  // namespace brauer
