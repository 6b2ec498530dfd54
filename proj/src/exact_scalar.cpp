#include "braketsim/exact_scalar.hpp"

#include <cmath>
#include <sstream>

namespace braketsim {

ExactScalar::ExactScalar(GaussianInt a, GaussianInt b, std::uint64_t k)
    : a_(std::move(a)), b_(std::move(b)), k_(k) {
    canonicalize();
}

void ExactScalar::canonicalize() {
    while (k_ > 0 && a_.is_even()) {
        GaussianInt old_a = a_;
        a_ = b_;
        b_ = old_a.half();
        --k_;
    }
}

ExactScalar ExactScalar::sqrt2_pow(std::uint64_t m) {
    BigInt pow2 = BigInt(1) << (m / 2);
    if (m % 2 == 0) {
        return {GaussianInt{pow2, 0}, {}, 0};
    }
    return {{}, GaussianInt{pow2, 0}, 0};
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    GaussianInt xa = a_, xb = b_;
    GaussianInt ya = o.a_, yb = o.b_;
    std::uint64_t k = std::max(k_, o.k_);
    for (std::uint64_t j = k_; j < k; ++j) {
        GaussianInt t = xa;
        xa = xb + xb;
        xb = t;
    }
    for (std::uint64_t j = o.k_; j < k; ++j) {
        GaussianInt t = ya;
        ya = yb + yb;
        yb = t;
    }
    return {xa + ya, xb + yb, k};
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    GaussianInt bb = b_ * o.b_;
    GaussianInt na = a_ * o.a_ + bb + bb;
    GaussianInt nb = a_ * o.b_ + o.a_ * b_;
    return {std::move(na), std::move(nb), k_ + o.k_};
}

std::complex<double> ExactScalar::to_float() const {
    const double s2 = std::sqrt(2.0);
    std::complex<double> num(a_.re.convert_to<double>() + b_.re.convert_to<double>() * s2,
                             a_.im.convert_to<double>() + b_.im.convert_to<double>() * s2);
    return num * std::pow(s2, -static_cast<double>(k_));
}

namespace {

// "3", "i", "-i", "2*i", "1+i", "3-2*i"
std::string render_gaussian(const GaussianInt& g) {
    std::ostringstream out;
    if (g.im == 0) {
        out << g.re;
        return out.str();
    }
    if (g.re != 0) out << g.re;
    if (g.im > 0 && g.re != 0) out << "+";
    if (g.im == -1) {
        out << "-i";
    } else if (g.im == 1) {
        out << "i";
    } else {
        out << g.im << "*i";
    }
    return out.str();
}

// Renders b*sqrt2: "sqrt2", "-sqrt2", "3*sqrt2", "i*sqrt2", "(1+i)*sqrt2"
std::string render_sqrt2_part(const GaussianInt& b) {
    if (b == GaussianInt{1, 0}) return "sqrt2";
    if (b == GaussianInt{-1, 0}) return "-sqrt2";
    if (b == GaussianInt{0, 1}) return "i*sqrt2";
    if (b == GaussianInt{0, -1}) return "-i*sqrt2";
    std::string coeff = render_gaussian(b);
    if (scalar_text_is_sum(coeff)) {
        return "(" + coeff + ")*sqrt2";
    }
    return coeff + "*sqrt2";
}

std::string render_denominator(std::uint64_t k) {
    BigInt pow2 = BigInt(1) << (k / 2);
    std::ostringstream out;
    if (k == 1) {
        out << "sqrt2";
    } else if (k % 2 == 0) {
        out << pow2;
    } else {
        out << "(" << pow2 << "*sqrt2)";
    }
    return out.str();
}

}  // namespace

std::string ExactScalar::to_string() const {
    if (is_zero()) return "0";

    std::string numer;
    if (!a_.is_zero()) numer = render_gaussian(a_);
    if (!b_.is_zero()) {
        std::string part = render_sqrt2_part(b_);
        if (numer.empty()) {
            numer = part;
        } else if (part[0] == '-') {
            numer += " - " + part.substr(1);
        } else {
            numer += " + " + part;
        }
    }
    if (k_ == 0) return numer;

    if (scalar_text_is_sum(numer)) numer = "(" + numer + ")";
    return numer + "/" + render_denominator(k_);
}

bool scalar_text_is_sum(const std::string& text) {
    int depth = 0;
    for (std::size_t p = 0; p < text.size(); ++p) {
        char c = text[p];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && p > 0 && (c == '+' || c == '-')) return true;
    }
    return false;
}

}  // namespace braketsim
