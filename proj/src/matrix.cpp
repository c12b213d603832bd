#include "cybe/matrix.hpp"

#include <cassert>

namespace cybe {

Vec operator+(const Vec& x, const Vec& y) {
    assert(x.size() == y.size());
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

Vec operator-(const Vec& x, const Vec& y) {
    assert(x.size() == y.size());
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

Vec operator*(const Scalar& c, const Vec& x) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}

bool is_zero_vec(const Vec& x) {
    for (const auto& v : x)
        if (!v.is_zero()) return false;
    return true;
}

Scalar dot(const Vec& x, const Vec& y) {
    assert(x.size() == y.size());
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Matrix::Matrix(std::vector<Vec> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : rows_[0].size();
    for (const auto& r : rows_) assert(r.size() == cols_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

void Matrix::push_row(Vec r) {
    if (rows_.empty()) cols_ = r.size();
    assert(r.size() == cols_);
    rows_.push_back(std::move(r));
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix operator*(const Matrix& A, const Matrix& B) {
    assert(A.cols() == B.rows());
    Matrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            if (A.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) {
                if (B.at(k, j).is_zero()) continue;
                C.at(i, j) += A.at(i, k) * B.at(k, j);
            }
        }
    return C;
}

bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (x.at(i, j) != y.at(i, j)) return false;
    return true;
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows(); ++c) {
        std::size_t p = r;
        while (p < rows() && rows_[p][c].is_zero()) ++p;
        if (p == rows()) continue;
        std::swap(rows_[p], rows_[r]);
        Scalar inv = rows_[r][c].inverse();
        for (std::size_t j = c; j < cols_; ++j) rows_[r][j] *= inv;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || rows_[i][c].is_zero()) continue;
            Scalar f = rows_[i][c];
            for (std::size_t j = c; j < cols_; ++j) rows_[i][j] -= f * rows_[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix c = *this;
    return c.rref().size();
}

Matrix Matrix::nullspace() const {
    Matrix red = *this;
    auto pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix out;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols_);
        v[c] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red.at(i, c);
        out.push_row(std::move(v));
    }
    if (out.rows() == 0) out = Matrix(0, cols_);
    return out;
}

Subspace::Subspace(std::size_t ambient, const std::vector<Vec>& spanning) : ambient_(ambient) {
    Matrix m;
    for (const auto& v : spanning) {
        assert(v.size() == ambient);
        m.push_row(v);
    }
    if (m.rows() == 0) {
        basis_ = Matrix(0, ambient);
        return;
    }
    auto pivots = m.rref();
    Matrix b;
    for (std::size_t i = 0; i < pivots.size(); ++i) b.push_row(m.row(i));
    if (b.rows() == 0) b = Matrix(0, ambient);
    basis_ = std::move(b);
}

bool Subspace::contains(const Vec& v) const {
    assert(v.size() == ambient_);
    Vec w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        // leading column of row i
        std::size_t c = 0;
        while (c < ambient_ && basis_.at(i, c).is_zero()) ++c;
        if (c == ambient_) continue;
        if (!w[c].is_zero()) {
            Scalar f = w[c];
            for (std::size_t j = c; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
        }
    }
    return is_zero_vec(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace operator+(const Subspace& x, const Subspace& y) {
    assert(x.ambient_ == y.ambient_);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < x.dim(); ++i) rows.push_back(x.basis_vector(i));
    for (std::size_t i = 0; i < y.dim(); ++i) rows.push_back(y.basis_vector(i));
    return Subspace(x.ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
    assert(ambient_ == other.ambient_);
    // Zassenhaus: rref of [A|A; B|0]; rows with zero left block carry the
    // intersection in the right block.
    std::size_t n = ambient_;
    Matrix big;
    for (std::size_t i = 0; i < dim(); ++i) {
        Vec r(2 * n);
        for (std::size_t j = 0; j < n; ++j) r[j] = r[n + j] = basis_.at(i, j);
        big.push_row(std::move(r));
    }
    for (std::size_t i = 0; i < other.dim(); ++i) {
        Vec r(2 * n);
        for (std::size_t j = 0; j < n; ++j) r[j] = other.basis_.at(i, j);
        big.push_row(std::move(r));
    }
    if (big.rows() == 0) return Subspace(n);
    big.rref();
    std::vector<Vec> inter;
    for (std::size_t i = 0; i < big.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (!big.at(i, j).is_zero()) left_zero = false;
        if (!left_zero) continue;
        Vec r(n);
        bool nz = false;
        for (std::size_t j = 0; j < n; ++j) {
            r[j] = big.at(i, n + j);
            nz = nz || !r[j].is_zero();
        }
        if (nz) inter.push_back(std::move(r));
    }
    return Subspace(n, inter);
}

Subspace Subspace::perp(const Matrix& gram) const {
    assert(gram.rows() == ambient_ && gram.cols() == ambient_);
    Matrix pair_rows;
    for (std::size_t i = 0; i < dim(); ++i) pair_rows.push_row(mat_vec(gram, basis_.row(i)));
    if (pair_rows.rows() == 0) {
        std::vector<Vec> full;
        for (std::size_t i = 0; i < ambient_; ++i) {
            Vec v(ambient_);
            v[i] = Scalar(1);
            full.push_back(std::move(v));
        }
        return Subspace(ambient_, full);
    }
    Matrix ns = pair_rows.nullspace();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ns.rows(); ++i) rows.push_back(ns.row(i));
    return Subspace(ambient_, rows);
}

std::pair<bool, Vec> solve_linear(const Matrix& A, const Vec& b) {
    assert(A.rows() == b.size());
    Matrix aug;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Vec r = A.row(i);
        r.push_back(b[i]);
        aug.push_row(std::move(r));
    }
    auto pivots = aug.rref();
    std::size_t n = A.cols();
    for (auto c : pivots)
        if (c == n) return {false, {}};
    Vec x(n);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, n);
    return {true, x};
}

Vec mat_vec(const Matrix& A, const Vec& x) {
    assert(A.cols() == x.size());
    Vec r(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) r[i] = dot(A.row(i), x);
    return r;
}

} // namespace cybe
