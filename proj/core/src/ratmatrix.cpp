#include "homcat/ratmatrix.hpp"

#include <stdexcept>

namespace homcat::exactalg {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in product");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& y = o.at(k, j);
                if (y != 0) r.at(i, j) += x * y;
            }
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch in sum");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch in difference");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

RatMatrix RatMatrix::scaled(const Rat& k) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * k;
    return r;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RatMatrix: vector length mismatch");
    std::vector<Rat> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

// Row echelon with full row reduction; returns pivot columns.
std::vector<std::size_t> rref_in_place(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

RankKernelImage rank_kernel_image(const RatMatrix& m) {
    RatMatrix red = m;
    std::vector<std::size_t> pivots = rref_in_place(red);

    RankKernelImage out;
    out.rank = pivots.size();

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(m.cols());
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red.at(i, c);
        out.kernel.push_back(std::move(v));
    }
    for (auto c : pivots) {
        std::vector<Rat> v(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m.at(r, c);
        out.image.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix red = m;
    return rref_in_place(red).size();
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    RatMatrix a = m;
    std::size_t n = a.rows();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a.at(p, col) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        Rat inv = Rat(1) / a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col) == 0) continue;
            Rat f = a.at(r, col) * inv;
            for (std::size_t j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
        }
    }
    return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref_in_place(aug);
    if (pivots.size() != n) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = rref_in_place(aug);
    // Inconsistent iff some pivot sits in the last column.
    for (auto c : pivots)
        if (c == a.cols()) return std::nullopt;
    std::vector<Rat> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

} // namespace homcat::exactalg
