#ifndef BRAUER_LINALG_HPP_
#define BRAUER_LINALG_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace brauer {

  using Rational = mpq_class;
  using Vector   = std::vector<Rational>;

  std::string to_string(Rational const& q);  // "p/q", or "p" when integral
  Rational    parse_rational(std::string const& text);

  // Dense exact matrix, row-major.
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }

    Rational& operator()(std::size_t r, std::size_t c) {
      return data_[r * cols_ + c];
    }
    Rational const& operator()(std::size_t r, std::size_t c) const {
      return data_[r * cols_ + c];
    }

    std::span<Rational const> row(std::size_t r) const {
      return {data_.data() + r * cols_, cols_};
    }

    Vector column(std::size_t c) const;
    void   set_column(std::size_t c, std::span<Rational const> v);

    Matrix transpose() const;
    Vector apply(std::span<Rational const> v) const;

    bool is_zero() const;
    bool is_scalar(Rational* scalar = nullptr) const;
    bool is_symmetric() const;

    friend Matrix operator*(Matrix const& a, Matrix const& b);
    friend Matrix operator+(Matrix const& a, Matrix const& b);
    friend Matrix operator-(Matrix const& a, Matrix const& b);
    friend Matrix operator*(Rational const& s, Matrix const& a);
    friend bool   operator==(Matrix const& a, Matrix const& b) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector      data_;
  };

  std::size_t rank(Matrix m);
  Rational    determinant(Matrix m);
  Matrix      inverse(Matrix m);  // throws on singular input

  // Incrementally maintained reduced row echelon basis of a row space.
  // Rows are fed one at a time; the null space of everything fed so far has
  // dimension cols() - rank().
  class RowEchelon {
   public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}

    // Returns true if the row was independent of the rows seen so far.
    bool add(Vector row);

    std::size_t cols() const noexcept {
      return cols_;
    }
    std::size_t rank() const noexcept {
      return pivots_.size();
    }
    std::size_t nullity() const noexcept {
      return cols_ - pivots_.size();
    }
    bool full() const noexcept {
      return pivots_.size() == cols_;
    }

    // Basis of the common null space of the rows fed so far.
    std::vector<Vector> null_space() const;

   private:
    struct Pivot {
      std::size_t col;
      Vector      row;  // pivot entry normalised to 1
    };
    std::size_t        cols_;
    std::vector<Pivot> pivots_;
  };

}  // namespace brauer

#endif  // BRAUER_LINALG_HPP_
