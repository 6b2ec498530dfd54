// matrix.hpp
// Dense row-major matrix over an arbitrary scalar with the handful of
// operations the lifting oracle and rank computations need.

#pragma once

#include "braketsim/amplitude.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace braketsim {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw std::invalid_argument("matrix data size does not match dimensions");
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& data() const { return data_; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(r1, c), (*this)(r2, c));
        }
    }

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            for (std::size_t r = 0; r < b.rows(); ++r) {
                for (std::size_t c = 0; c < b.cols(); ++c) {
                    out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
                }
            }
        }
    }
    return out;
}

template <typename T>
Matrix<T> matrix_product(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            T acc = amp_zero<T>();
            for (std::size_t l = 0; l < a.cols(); ++l) {
                acc = acc + a(i, l) * b(l, j);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

template <typename T>
Matrix<T> matrix_adjoint(const Matrix<T>& m) {
    Matrix<T> out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(j, i) = amp_conj(m(i, j));
        }
    }
    return out;
}

template <typename T>
Matrix<T> matrix_transpose(const Matrix<T>& m) {
    Matrix<T> out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(j, i) = m(i, j);
        }
    }
    return out;
}

template <typename T>
bool matrix_is_identity(const Matrix<T>& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const T expect = (i == j) ? amp_one<T>() : amp_zero<T>();
            if (!(m(i, j) == expect)) return false;
        }
    }
    return true;
}

}  // namespace braketsim
