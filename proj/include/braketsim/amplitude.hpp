// amplitude.hpp
// The two amplitude backends behind one small vocabulary: ExactScalar for
// zero-tolerance arithmetic, std::complex<double> for numeric work.

#pragma once

#include "braketsim/exact_scalar.hpp"

#include <complex>

namespace braketsim {

using Cf64 = std::complex<double>;

enum class Backend { exact, floating };

template <typename A>
struct amp_backend;

template <>
struct amp_backend<ExactScalar> {
    static constexpr Backend value = Backend::exact;
};

template <>
struct amp_backend<Cf64> {
    static constexpr Backend value = Backend::floating;
};

template <typename A>
constexpr Backend backend_of = amp_backend<A>::value;

inline ExactScalar amp_conj(const ExactScalar& s) { return s.conj(); }
inline Cf64 amp_conj(const Cf64& z) { return std::conj(z); }

inline bool amp_is_zero(const ExactScalar& s) { return s.is_zero(); }
inline bool amp_is_zero(const Cf64& z) { return z == Cf64{0.0, 0.0}; }

inline Cf64 amp_to_float(const ExactScalar& s) { return s.to_float(); }
inline Cf64 amp_to_float(const Cf64& z) { return z; }

template <typename A>
A amp_zero();
template <>
inline ExactScalar amp_zero<ExactScalar>() { return ExactScalar::zero(); }
template <>
inline Cf64 amp_zero<Cf64>() { return {0.0, 0.0}; }

template <typename A>
A amp_one();
template <>
inline ExactScalar amp_one<ExactScalar>() { return ExactScalar::one(); }
template <>
inline Cf64 amp_one<Cf64>() { return {1.0, 0.0}; }

template <typename A>
A amp_from_exact(const ExactScalar& s);
template <>
inline ExactScalar amp_from_exact<ExactScalar>(const ExactScalar& s) { return s; }
template <>
inline Cf64 amp_from_exact<Cf64>(const ExactScalar& s) { return s.to_float(); }

}  // namespace braketsim
