// state.hpp
// Pure n-qubit states: 2^n amplitudes over either backend, unit norm enforced
// at every construction.
//
// Bit convention (load-bearing, tests pin it): qubit q, 0-based with q = 0 the
// leftmost ket symbol, lives at bit position (n-1-q) of the amplitude index.
// So for n = 2 the basis order is |00>, |01>, |10>, |11> and |01> is index 1.

#pragma once

#include "braketsim/amplitude.hpp"
#include "braketsim/errors.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braketsim {

namespace detail {

inline std::string float_text(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string complex_text(Cf64 z) {
    if (z.imag() == 0.0) return float_text(z.real());
    if (z.real() == 0.0) return float_text(z.imag()) + "i";
    return "(" + float_text(z.real()) + (z.imag() < 0 ? "-" : "+") +
           float_text(std::abs(z.imag())) + "i)";
}

}  // namespace detail

template <typename A>
class PureState {
public:
    static constexpr Backend backend() { return backend_of<A>; }

    // |bits>, e.g. basis(2, "01") has its single unit amplitude at index 1.
    static PureState basis(std::size_t n_qubits, std::string_view bits) {
        if (bits.size() != n_qubits) {
            throw std::invalid_argument("basis: bitstring length does not match qubit count");
        }
        std::vector<A> amps(dim_of(n_qubits), amp_zero<A>());
        amps[index_of_bits(bits)] = amp_one<A>();
        return PureState(n_qubits, std::move(amps));
    }

    // Sum of coeff * |bits>. Duplicate bitstrings accumulate. The result must
    // be normalized; NonNormalizedError reports the actual norm^2.
    static PureState superpose(const std::vector<std::pair<A, std::string>>& terms) {
        if (terms.empty()) throw std::invalid_argument("superpose: no terms");
        const std::size_t n = terms.front().second.size();
        if (n == 0) throw std::invalid_argument("superpose: empty bitstring");
        std::vector<A> amps(dim_of(n), amp_zero<A>());
        for (const auto& [coeff, bits] : terms) {
            if (bits.size() != n) {
                throw std::invalid_argument("superpose: mixed bitstring widths");
            }
            const std::size_t idx = index_of_bits(bits);
            amps[idx] = amps[idx] + coeff;
        }
        return from_amplitudes(n, std::move(amps));
    }

    // Validates unit norm (exactly, or within 1e-12 on the floating backend).
    static PureState from_amplitudes(std::size_t n_qubits, std::vector<A> amps) {
        if (n_qubits == 0) throw std::invalid_argument("state needs at least one qubit");
        if (amps.size() != dim_of(n_qubits)) {
            throw std::invalid_argument("amplitude count is not 2^n_qubits");
        }
        PureState s(n_qubits, std::move(amps));
        s.check_norm();
        return s;
    }

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const A& amp(std::size_t index) const { return amps_.at(index); }
    const std::vector<A>& amplitudes() const { return amps_; }

    std::string bits_of_index(std::size_t index) const {
        std::string bits(n_qubits_, '0');
        for (std::size_t q = 0; q < n_qubits_; ++q) {
            if (index >> (n_qubits_ - 1 - q) & 1) bits[q] = '1';
        }
        return bits;
    }

    static std::size_t index_of_bits(std::string_view bits) {
        std::size_t idx = 0;
        for (char c : bits) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument("bitstring may contain only 0 and 1");
            }
            idx = idx << 1 | static_cast<std::size_t>(c == '1');
        }
        return idx;
    }

private:
    PureState(std::size_t n_qubits, std::vector<A> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    static std::size_t dim_of(std::size_t n_qubits) {
        return std::size_t{1} << n_qubits;
    }

    void check_norm() const;

    std::size_t n_qubits_;
    std::vector<A> amps_;
};

using ExactState = PureState<ExactScalar>;
using FloatState = PureState<Cf64>;

template <typename A>
A norm_sq(const PureState<A>& u) {
    A acc = amp_zero<A>();
    for (const A& a : u.amplitudes()) {
        acc = acc + amp_conj(a) * a;
    }
    return acc;
}

template <typename A>
void PureState<A>::check_norm() const {
    const A n2 = norm_sq(*this);
    if constexpr (backend_of<A> == Backend::exact) {
        if (!n2.is_one()) throw NonNormalizedError(n2.to_string());
    } else {
        if (std::abs(n2.real() - 1.0) > 1e-12 || std::abs(n2.imag()) > 1e-12) {
            throw NonNormalizedError(detail::float_text(n2.real()));
        }
    }
}

template <typename A>
A inner(const PureState<A>& u, const PureState<A>& v) {
    if (u.n_qubits() != v.n_qubits()) {
        throw std::invalid_argument("inner: qubit counts differ");
    }
    A acc = amp_zero<A>();
    for (std::size_t j = 0; j < u.dim(); ++j) {
        acc = acc + amp_conj(u.amp(j)) * v.amp(j);
    }
    return acc;
}

// u's qubits take the left (more significant) positions of the result.
template <typename A>
PureState<A> tensor(const PureState<A>& u, const PureState<A>& v) {
    std::vector<A> amps(u.dim() * v.dim());
    for (std::size_t x = 0; x < u.dim(); ++x) {
        for (std::size_t y = 0; y < v.dim(); ++y) {
            amps[x * v.dim() + y] = u.amp(x) * v.amp(y);
        }
    }
    return PureState<A>::from_amplitudes(u.n_qubits() + v.n_qubits(), std::move(amps));
}

template <typename A>
bool equals_exact(const PureState<A>& u, const PureState<A>& v) {
    if (u.n_qubits() != v.n_qubits()) {
        throw std::invalid_argument("equals_exact: qubit counts differ");
    }
    return u.amplitudes() == v.amplitudes();
}

// True iff u = c * v for some unit scalar c. Cross-multiplication keeps the
// test inside the ring: with j the first nonzero amplitude of v, proportional
// means u[l] * v[j] == u[j] * v[l] for all l; unit norms force |c| = 1.
inline bool equals_up_to_global_phase(const ExactState& u, const ExactState& v) {
    if (u.n_qubits() != v.n_qubits()) {
        throw std::invalid_argument("equals_up_to_global_phase: qubit counts differ");
    }
    std::size_t j = 0;
    while (j < v.dim() && v.amp(j).is_zero()) ++j;
    if (j == v.dim()) return false;
    for (std::size_t l = 0; l < u.dim(); ++l) {
        if (!(u.amp(l) * v.amp(j) == u.amp(j) * v.amp(l))) return false;
    }
    return true;
}

inline double max_amp_distance(const FloatState& u, const FloatState& v) {
    if (u.n_qubits() != v.n_qubits()) {
        throw std::invalid_argument("max_amp_distance: qubit counts differ");
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < u.dim(); ++j) {
        worst = std::max(worst, std::abs(u.amp(j) - v.amp(j)));
    }
    return worst;
}

inline bool equals_up_to_global_phase(const FloatState& u, const FloatState& v, double tol) {
    if (u.n_qubits() != v.n_qubits()) {
        throw std::invalid_argument("equals_up_to_global_phase: qubit counts differ");
    }
    std::size_t j = 0;
    for (std::size_t l = 0; l < v.dim(); ++l) {
        if (std::abs(v.amp(l)) > std::abs(v.amp(j))) j = l;
    }
    if (v.amp(j) == Cf64{0.0, 0.0}) return false;
    Cf64 c = u.amp(j) / v.amp(j);
    if (std::abs(c) == 0.0) return false;
    c /= std::abs(c);
    for (std::size_t l = 0; l < u.dim(); ++l) {
        if (std::abs(u.amp(l) - c * v.amp(l)) > tol) return false;
    }
    return true;
}

inline FloatState to_floating(const ExactState& u) {
    std::vector<Cf64> amps(u.dim());
    for (std::size_t j = 0; j < u.dim(); ++j) {
        amps[j] = u.amp(j).to_float();
    }
    return FloatState::from_amplitudes(u.n_qubits(), std::move(amps));
}

namespace detail {

inline void append_term(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
    } else if (term[0] == '-') {
        out += " - " + term.substr(1);
    } else {
        out += " + " + term;
    }
}

}  // namespace detail

// Dirac text, terms in increasing index order, zero amplitudes omitted. When
// every nonzero amplitude is +-1/sqrt2^K the common factor is pulled out:
// (|00> + |11>)/sqrt2 rather than 1/sqrt2*|00> + 1/sqrt2*|11>. Exact-backend
// output re-parses and re-evaluates to the identical state.
inline std::string format_dirac(const ExactState& u) {
    const GaussianInt one{1, 0};
    bool common = true;
    std::uint64_t shared_k = 0;
    bool saw_nonzero = false;
    for (std::size_t j = 0; j < u.dim() && common; ++j) {
        const ExactScalar& a = u.amp(j);
        if (a.is_zero()) continue;
        if (!a.b().is_zero() || !(a.a() == one || a.a() == -one)) {
            common = false;
        } else if (!saw_nonzero) {
            shared_k = a.k();
            saw_nonzero = true;
        } else if (a.k() != shared_k) {
            common = false;
        }
    }

    std::string body;
    if (common) {
        for (std::size_t j = 0; j < u.dim(); ++j) {
            const ExactScalar& a = u.amp(j);
            if (a.is_zero()) continue;
            const std::string sign = (a.a() == one) ? "" : "-";
            detail::append_term(body, sign + "|" + u.bits_of_index(j) + ">");
        }
        if (shared_k == 0) return body;
        std::string denom = ExactScalar::inv_sqrt2_pow(shared_k).to_string();
        return "(" + body + ")" + denom.substr(1);  // reuse the "/..." tail of 1/sqrt2^k
    }

    for (std::size_t j = 0; j < u.dim(); ++j) {
        const ExactScalar& a = u.amp(j);
        if (a.is_zero()) continue;
        std::string coeff = a.to_string();
        if (scalar_text_is_sum(coeff)) coeff = "(" + coeff + ")";
        detail::append_term(body, coeff + "*|" + u.bits_of_index(j) + ">");
    }
    return body;
}

// Floating rendering is for reports only; it does not round-trip.
inline std::string format_dirac(const FloatState& u) {
    constexpr double eps = 1e-12;
    std::string body;
    for (std::size_t j = 0; j < u.dim(); ++j) {
        const Cf64 a = u.amp(j);
        if (std::abs(a) <= eps) continue;
        const std::string ket = "|" + u.bits_of_index(j) + ">";
        std::string term;
        if (std::abs(a - Cf64{1.0, 0.0}) <= eps) {
            term = ket;
        } else if (std::abs(a + Cf64{1.0, 0.0}) <= eps) {
            term = "-" + ket;
        } else {
            Cf64 shown = a;
            if (std::abs(shown.imag()) <= eps) shown = {shown.real(), 0.0};
            if (std::abs(shown.real()) <= eps) shown = {0.0, shown.imag()};
            term = detail::complex_text(shown) + "*" + ket;
        }
        detail::append_term(body, term);
    }
    return body;
}

}  // namespace braketsim
