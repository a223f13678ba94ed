#include "switchdim/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace switchdim {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::ones(std::size_t rows, std::size_t cols) {
    ExactMatrix m(rows, cols);
    for (auto& x : m.data_) x = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const Rational> entries) {
    ExactMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

bool ExactMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational ExactMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix not square");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
    ExactMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                add_mul(c(i, j), aik, bkj);
            }
        }
    }
    return c;
}

RationalVector operator*(const ExactMatrix& a, std::span<const Rational> v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector mul: shape mismatch");
    RationalVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < a.cols_; ++j) add_mul(acc, a(i, j), v[j]);
        out[i] = acc;
    }
    return out;
}

RealMatrix RealMatrix::from_exact(const ExactMatrix& m) {
    RealMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_double();
    return r;
}

double RealMatrix::inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (double x : row(i)) s += std::fabs(x);
        best = std::max(best, s);
    }
    return best;
}

}  // namespace switchdim
