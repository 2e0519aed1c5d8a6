#pragma once

#include "homcat/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace homcat::exactalg {

using homcat::Rat;

// Dense matrix of exact rationals. Instances in this project are tiny
// (dims up to a few hundred), so no sparse or modular tricks here.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator-() const;
    RatMatrix scaled(const Rat& k) const;
    RatMatrix transposed() const;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

struct RankKernelImage {
    std::size_t rank = 0;
    std::vector<std::vector<Rat>> kernel; // vectors of length cols, m * k = 0 exactly
    std::vector<std::vector<Rat>> image;  // vectors of length rows (pivot columns of m)
};

// Exact Gaussian elimination; bases are verified by substitution in the tests.
RankKernelImage rank_kernel_image(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
Rat determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

// One solution of A x = b with free variables set to 0, or nullopt.
std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b);

} // namespace homcat::exactalg
