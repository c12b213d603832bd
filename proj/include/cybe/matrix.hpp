#pragma once

#include "cybe/scalar.hpp"

#include <cstddef>
#include <vector>

namespace cybe {

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(const Scalar& c, const Vec& x);
bool is_zero_vec(const Vec& x);

/// Dense matrix over Scalar.  Small sizes only; everything is exact.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Vec(cols)) {}
    explicit Matrix(std::vector<Vec> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const Vec& row(std::size_t i) const { return rows_[i]; }
    void push_row(Vec r);

    Matrix transposed() const;
    friend Matrix operator*(const Matrix& A, const Matrix& B);

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    /// Canonical basis of the right nullspace (one row per free column,
    /// that column's entry set to 1).
    Matrix nullspace() const;

    friend bool operator==(const Matrix& x, const Matrix& y);

  private:
    std::size_t cols_ = 0;
    std::vector<Vec> rows_;
};

/// A subspace of an ambient coordinate space, held in reduced echelon form so
/// that equality of subspaces is equality of representations.
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    Subspace(std::size_t ambient, const std::vector<Vec>& spanning);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    friend Subspace operator+(const Subspace& x, const Subspace& y);
    Subspace intersect(const Subspace& other) const;

    /// Null space of v -> (row_i . G . v)_i, i.e. the G-orthogonal complement.
    Subspace perp(const Matrix& gram) const;

    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.ambient_ == y.ambient_ && x.basis_ == y.basis_;
    }
    friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }

  private:
    std::size_t ambient_ = 0;
    Matrix basis_; // RREF, no zero rows
};

/// Solve A x = b; returns empty optional-like pair {solvable, x}.
std::pair<bool, Vec> solve_linear(const Matrix& A, const Vec& b);

Scalar dot(const Vec& x, const Vec& y);
Vec mat_vec(const Matrix& A, const Vec& x);

} // namespace cybe
