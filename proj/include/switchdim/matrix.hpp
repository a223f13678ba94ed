#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "switchdim/rational.hpp"

namespace switchdim {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix zeros(std::size_t rows, std::size_t cols) { return ExactMatrix(rows, cols); }
    static ExactMatrix identity(std::size_t n);
    static ExactMatrix ones(std::size_t rows, std::size_t cols);
    static ExactMatrix diagonal(std::span<const Rational> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    ExactMatrix transpose() const;
    Rational trace() const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const Rational& s);

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const Rational& s) { return a *= s; }
    friend ExactMatrix operator*(const Rational& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend RationalVector operator*(const ExactMatrix& a, std::span<const Rational> v);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Dense row-major matrix of doubles, used by the floating-point oracle and
/// by point realization.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static RealMatrix from_exact(const ExactMatrix& m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    /// Maximum absolute row sum.
    double inf_norm() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace switchdim
