// gates.hpp
// Single-qubit gates over the exact ring and their application to n-qubit
// states. A gate on one qubit of a superposition acts by linearity on every
// term; factoring the state first is neither needed nor, for entangled
// states, possible.
//
// Two routes compute the same map:
//   apply_1q     - stride-indexed pair kernel, O(2^n)
//   apply_matrix - dense product with the Kronecker lift I x..x U x..x I, O(4^n)
// The second exists as an independent oracle for the first.

#pragma once

#include "braketsim/matrix.hpp"
#include "braketsim/state.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace braketsim {

class Gate1Q {
public:
    Gate1Q(ExactScalar g00, ExactScalar g01, ExactScalar g10, ExactScalar g11,
           std::string label);

    // H|0> = (|0> + |1>)/sqrt2, H|1> = (|0> - |1>)/sqrt2.
    static Gate1Q hadamard();
    static Gate1Q identity();
    static Gate1Q pauli_x();
    static Gate1Q pauli_y();
    static Gate1Q pauli_z();
    static Gate1Q phase_s();

    // Rows indexed by output basis, columns by input basis.
    const ExactScalar& entry(std::size_t row, std::size_t col) const {
        return entries_[row * 2 + col];
    }

    const std::string& label() const { return label_; }

    bool operator==(const Gate1Q& o) const = default;

private:
    ExactScalar entries_[4];
    std::string label_;
};

Gate1Q compose(const Gate1Q& g, const Gate1Q& h);  // matrix product g*h
Gate1Q dagger(const Gate1Q& g);
bool is_unitary(const Gate1Q& g);

// Case-insensitive lookup of H, X, Y, Z, S, I. CNOT is not a 1-qubit gate and
// resolves to controlled pauli_x at the call sites that accept two operands.
std::optional<Gate1Q> gate_by_name(std::string_view name);

struct LiftedMatrix {
    std::size_t n_qubits;
    Matrix<ExactScalar> entries;
};

// Kronecker product with the gate in the target slot, identities elsewhere;
// slot order matches the state bit convention (qubit 0 leftmost).
LiftedMatrix lift_full(const Gate1Q& gate, std::size_t n_qubits, std::size_t target);

bool is_unitary(const LiftedMatrix& m);

// Applies a single-qubit gate to one qubit of the state by linearity over the
// whole superposition. Amplitude pairs differing only in the target bit are
// transformed together; the pair stride is 2^(n-1-target).
template <typename A>
PureState<A> apply_1q(const PureState<A>& state, const Gate1Q& gate, std::size_t target) {
    const std::size_t n = state.n_qubits();
    if (target >= n) throw std::out_of_range("apply_1q: target qubit out of range");

    const A g00 = amp_from_exact<A>(gate.entry(0, 0));
    const A g01 = amp_from_exact<A>(gate.entry(0, 1));
    const A g10 = amp_from_exact<A>(gate.entry(1, 0));
    const A g11 = amp_from_exact<A>(gate.entry(1, 1));

    std::vector<A> amps = state.amplitudes();
    const std::size_t stride = std::size_t{1} << (n - 1 - target);
    for (std::size_t block = 0; block < amps.size(); block += 2 * stride) {
        for (std::size_t j = block; j < block + stride; ++j) {
            const A a0 = amps[j];
            const A a1 = amps[j + stride];
            amps[j] = g00 * a0 + g01 * a1;
            amps[j + stride] = g10 * a0 + g11 * a1;
        }
    }
    return PureState<A>::from_amplitudes(n, std::move(amps));
}

// Gate on the target, restricted to the index subset where the control bit is 1.
template <typename A>
PureState<A> apply_controlled(const PureState<A>& state, const Gate1Q& gate,
                              std::size_t control, std::size_t target) {
    const std::size_t n = state.n_qubits();
    if (control >= n || target >= n) {
        throw std::out_of_range("apply_controlled: qubit index out of range");
    }
    if (control == target) {
        throw std::invalid_argument("apply_controlled: control and target must differ");
    }

    const A g00 = amp_from_exact<A>(gate.entry(0, 0));
    const A g01 = amp_from_exact<A>(gate.entry(0, 1));
    const A g10 = amp_from_exact<A>(gate.entry(1, 0));
    const A g11 = amp_from_exact<A>(gate.entry(1, 1));

    std::vector<A> amps = state.amplitudes();
    const std::size_t tbit = std::size_t{1} << (n - 1 - target);
    const std::size_t cbit = std::size_t{1} << (n - 1 - control);
    for (std::size_t j = 0; j < amps.size(); ++j) {
        if ((j & tbit) != 0 || (j & cbit) == 0) continue;
        const A a0 = amps[j];
        const A a1 = amps[j + tbit];
        amps[j] = g00 * a0 + g01 * a1;
        amps[j + tbit] = g10 * a0 + g11 * a1;
    }
    return PureState<A>::from_amplitudes(n, std::move(amps));
}

// Dense matrix-vector product over the amplitude ring; the oracle route.
template <typename A>
PureState<A> apply_matrix(const PureState<A>& state, const LiftedMatrix& m) {
    if (m.entries.rows() != state.dim()) {
        throw std::invalid_argument("apply_matrix: dimension mismatch");
    }
    std::vector<A> out(state.dim(), amp_zero<A>());
    for (std::size_t r = 0; r < state.dim(); ++r) {
        A acc = amp_zero<A>();
        for (std::size_t c = 0; c < state.dim(); ++c) {
            acc = acc + amp_from_exact<A>(m.entries(r, c)) * state.amp(c);
        }
        out[r] = acc;
    }
    return PureState<A>::from_amplitudes(state.n_qubits(), std::move(out));
}

}  // namespace braketsim
