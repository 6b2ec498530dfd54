// exact_scalar.hpp
// Exact complex scalars of the form (a + b*sqrt2) / sqrt2^k with Gaussian-integer
// a and b. This ring is closed under the entries of H, X, Y, Z and S, so every
// amplitude produced by those gates is represented with zero rounding error.
//
// Canonical form: k == 0, or at least one component of a is odd. Reduction uses
//   (a + b*sqrt2) / sqrt2  ==  b + (a/2)*sqrt2            (a even)
// and addition aligns denominators with
//   (a + b*sqrt2) * sqrt2  ==  2b + a*sqrt2.
// Canonical representations are unique, so value equality is field equality.

#pragma once

#include "braketsim/gaussian_int.hpp"

#include <complex>
#include <cstdint>
#include <string>

namespace braketsim {

class ExactScalar {
public:
    // Zero.
    ExactScalar() = default;

    // General constructor; canonicalizes.
    ExactScalar(GaussianInt a, GaussianInt b, std::uint64_t k);

    static ExactScalar zero() { return {}; }
    static ExactScalar one() { return from_int(1); }
    static ExactScalar from_int(const BigInt& n) { return {GaussianInt{n, 0}, {}, 0}; }
    static ExactScalar imaginary_unit() { return {GaussianInt{0, 1}, {}, 0}; }

    // Value sqrt2.
    static ExactScalar sqrt2() { return {{}, GaussianInt{1, 0}, 0}; }

    // Value (1/sqrt2)^m; for m = 1 this is (1 + 0*sqrt2)/sqrt2^1.
    static ExactScalar inv_sqrt2_pow(std::uint64_t m) { return {GaussianInt{1, 0}, {}, m}; }

    // Value sqrt2^m.
    static ExactScalar sqrt2_pow(std::uint64_t m);

    const GaussianInt& a() const { return a_; }
    const GaussianInt& b() const { return b_; }
    std::uint64_t k() const { return k_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return k_ == 0 && b_.is_zero() && a_ == GaussianInt{1, 0}; }
    bool is_real() const { return a_.is_real() && b_.is_real(); }

    ExactScalar operator-() const { return {-a_, -b_, k_}; }
    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const { return *this + (-o); }
    ExactScalar operator*(const ExactScalar& o) const;

    ExactScalar conj() const { return {a_.conj(), b_.conj(), k_}; }

    std::complex<double> to_float() const;

    // Renders the value so that it re-parses in the script language:
    // "0", "1", "i", "1/sqrt2", "(1+i)/2", "(1+sqrt2)/(2*sqrt2)", ...
    std::string to_string() const;

    bool operator==(const ExactScalar& o) const = default;

private:
    GaussianInt a_{};
    GaussianInt b_{};
    std::uint64_t k_ = 0;

    void canonicalize();
};

inline ExactScalar conj(const ExactScalar& s) { return s.conj(); }

// True if the rendered scalar contains a top-level '+' or '-' (other than a
// leading sign), i.e. it must be parenthesized when used as a product operand.
bool scalar_text_is_sum(const std::string& text);

}  // namespace braketsim
