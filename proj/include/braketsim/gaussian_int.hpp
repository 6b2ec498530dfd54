// gaussian_int.hpp
// Gaussian integers re + im*i over arbitrary-precision integers.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace braketsim {

using BigInt = boost::multiprecision::cpp_int;

struct GaussianInt {
    BigInt re{0};
    BigInt im{0};

    GaussianInt() = default;
    GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    // Both components divisible by 2.
    bool is_even() const { return re % 2 == 0 && im % 2 == 0; }

    GaussianInt conj() const { return {re, -im}; }

    GaussianInt operator-() const { return {-re, -im}; }

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }

    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    // Exact halving; caller guarantees is_even().
    GaussianInt half() const { return {re / 2, im / 2}; }

    bool divisible_by(const BigInt& d) const { return re % d == 0 && im % d == 0; }

    // Exact division by an integer; caller guarantees divisible_by(d).
    GaussianInt div_exact(const BigInt& d) const { return {re / d, im / d}; }

    // |z|^2 = re^2 + im^2, always a nonnegative rational integer.
    BigInt norm() const { return re * re + im * im; }

    bool operator==(const GaussianInt& o) const = default;
};

}  // namespace braketsim
