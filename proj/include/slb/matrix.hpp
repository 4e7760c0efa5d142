#pragma once

#include "slb/rational.hpp"

#include <cassert>
#include <cstddef>
#include <vector>

namespace slb {

/// Dense row-major matrix. Small sizes only (graphs of a few hundred vertices).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static auto identity(std::size_t n) -> Matrix
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    auto rows() const -> std::size_t { return rows_; }
    auto cols() const -> std::size_t { return cols_; }

    auto operator()(std::size_t i, std::size_t j) -> T&
    {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    auto operator()(std::size_t i, std::size_t j) const -> const T&
    {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    auto is_square() const -> bool { return rows_ == cols_; }

    auto is_symmetric() const -> bool
    {
        if (!is_square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    auto transpose() const -> Matrix
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend auto operator==(const Matrix&, const Matrix&) -> bool = default;

    friend auto operator+(Matrix a, const Matrix& b) -> Matrix
    {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            a.data_[k] += b.data_[k];
        return a;
    }

    friend auto operator-(Matrix a, const Matrix& b) -> Matrix
    {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            a.data_[k] -= b.data_[k];
        return a;
    }

    friend auto operator*(const Matrix& a, const Matrix& b) -> Matrix
    {
        assert(a.cols_ == b.rows_);
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend auto operator*(const T& s, Matrix a) -> Matrix
    {
        for (auto& x : a.data_)
            x *= s;
        return a;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using RationalMatrix = Matrix<Rational>;

inline auto to_real(const RationalMatrix& m) -> RealMatrix
{
    RealMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).get_d();
    return r;
}

}  // namespace slb
