// Copyright 2026 The qparrondo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qparrondo/common.hpp"

namespace qparrondo {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 24;

/// 1-based qubit position. Qubit 1 is the most significant bit of the
/// basis index, so |q1 q2 ... qn> reads left to right.
struct Qubit {
    std::size_t position = 0;

    friend constexpr bool operator==(Qubit, Qubit) = default;
};

/// Row-major 2x2 unitary. Construction checks U†U = I and |det U| = 1.
class Unitary2 {
  public:
    Unitary2(Amplitude u00, Amplitude u01, Amplitude u10, Amplitude u11)
        : m_{u00, u01, u10, u11} {
        if (!is_unitary(kStructuralTol)) {
            throw NumericValidationError("Unitary2: matrix is not unitary");
        }
    }

    static Unitary2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Amplitude operator()(std::size_t row, std::size_t col) const {
        return m_[2 * row + col];
    }

    Amplitude determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    Unitary2 adjoint() const {
        return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
                std::conj(m_[3])};
    }

    bool is_unitary(double tol) const {
        // columns orthonormal
        const double c0 = std::norm(m_[0]) + std::norm(m_[2]);
        const double c1 = std::norm(m_[1]) + std::norm(m_[3]);
        const Amplitude cross = std::conj(m_[0]) * m_[1] + std::conj(m_[2]) * m_[3];
        return std::abs(c0 - 1.0) <= tol && std::abs(c1 - 1.0) <= tol &&
               std::abs(cross) <= tol &&
               std::abs(std::abs(determinant()) - 1.0) <= tol;
    }

    const std::array<Amplitude, 4> &entries() const { return m_; }

  private:
    std::array<Amplitude, 4> m_;
};

/// Dense pure state over `num_qubits` qubits with unit norm.
class StateVector {
  public:
    /// Takes ownership of `amplitudes`; rejects wrong length or a norm
    /// differing from 1 by more than kStructuralTol.
    static StateVector from_amplitudes(std::size_t num_qubits,
                                       std::vector<Amplitude> amplitudes) {
        check_qubit_count(num_qubits);
        if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
            throw InvalidInput("StateVector: expected " +
                               std::to_string(std::size_t{1} << num_qubits) +
                               " amplitudes, got " +
                               std::to_string(amplitudes.size()));
        }
        StateVector s(num_qubits, std::move(amplitudes));
        const double n2 = s.norm_squared();
        if (std::abs(n2 - 1.0) > kStructuralTol) {
            throw NumericValidationError("StateVector: squared norm is " +
                                         std::to_string(n2) + ", expected 1");
        }
        return s;
    }

    static StateVector basis(std::size_t num_qubits, std::uint64_t index) {
        check_qubit_count(num_qubits);
        const std::size_t dim = std::size_t{1} << num_qubits;
        if (index >= dim) {
            throw InvalidInput("StateVector: basis index out of range");
        }
        std::vector<Amplitude> amps(dim);
        amps[index] = 1.0;
        return StateVector(num_qubits, std::move(amps));
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amps_.size(); }

    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude operator[](std::size_t index) const { return amps_[index]; }

    double norm_squared() const {
        double acc = 0.0;
        for (const auto &a : amps_) {
            acc += std::norm(a);
        }
        return acc;
    }

    /// Bit mask of a qubit inside the basis index.
    std::uint64_t mask_of(Qubit q) const {
        check_qubit(q);
        return std::uint64_t{1} << (num_qubits_ - q.position);
    }

    void check_qubit(Qubit q) const {
        if (q.position < 1 || q.position > num_qubits_) {
            throw InvalidInput("qubit " + std::to_string(q.position) +
                               " out of range 1.." +
                               std::to_string(num_qubits_));
        }
    }

    /// Mutable access for gate kernels; callers must keep the norm.
    std::span<Amplitude> mutable_amplitudes() { return amps_; }

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    StateVector(std::size_t n, std::vector<Amplitude> amps)
        : num_qubits_(n), amps_(std::move(amps)) {}

    static void check_qubit_count(std::size_t n) {
        if (n < 1 || n > kMaxQubits) {
            throw InvalidInput("StateVector: qubit count " + std::to_string(n) +
                               " outside 1.." + std::to_string(kMaxQubits));
        }
    }

    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// |label>, where label[0] is qubit 1 (most significant bit).
inline StateVector make_basis_state(std::size_t num_qubits,
                                    std::string_view label) {
    if (label.size() != num_qubits) {
        throw InvalidInput("basis label length " + std::to_string(label.size()) +
                           " does not match qubit count " +
                           std::to_string(num_qubits));
    }
    std::uint64_t index = 0;
    for (char c : label) {
        if (c != '0' && c != '1') {
            throw InvalidInput("basis label must contain only '0' and '1'");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return StateVector::basis(num_qubits, index);
}

/// (|0...0> + |1...1>)/√2
inline StateVector make_ghz(std::size_t num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw InvalidInput("make_ghz: qubit count out of range");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<Amplitude> amps(dim);
    const double h = 1.0 / std::numbers::sqrt2;
    amps.front() = h;
    amps.back() = h;
    return StateVector::from_amplitudes(num_qubits, std::move(amps));
}

namespace detail {

/// Inserts a zero at bit `bit` of `k`, shifting the higher bits up.
inline std::uint64_t insert_zero_bit(std::uint64_t k, unsigned bit) {
    const std::uint64_t low = k & ((std::uint64_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

inline void apply_pair(Amplitude &a0, Amplitude &a1, const Unitary2 &u) {
    const Amplitude v0 = a0;
    const Amplitude v1 = a1;
    a0 = u(0, 0) * v0 + u(0, 1) * v1;
    a1 = u(1, 0) * v0 + u(1, 1) * v1;
}

} // namespace detail

/// In-place single-qubit gate.
inline void apply_single_qubit_inplace(StateVector &state, Qubit target,
                                       const Unitary2 &u) {
    const std::uint64_t tmask = state.mask_of(target);
    const auto bit = static_cast<unsigned>(state.num_qubits() - target.position);
    auto amps = state.mutable_amplitudes();
    const std::uint64_t pairs = amps.size() / 2;
    for (std::uint64_t k = 0; k < pairs; ++k) {
        const std::uint64_t i0 = detail::insert_zero_bit(k, bit);
        detail::apply_pair(amps[i0], amps[i0 | tmask], u);
    }
}

inline StateVector apply_single_qubit(StateVector state, Qubit target,
                                      const Unitary2 &u) {
    apply_single_qubit_inplace(state, target, u);
    return state;
}

/// In-place uniformly controlled gate: the branch unitary selected by
/// (control_hi, control_lo) acts on `target`. Branch order is
/// (0,0) -> 0, (0,1) -> 1, (1,0) -> 2, (1,1) -> 3.
inline void apply_two_controlled_multiplexed_inplace(
    StateVector &state, Qubit control_hi, Qubit control_lo, Qubit target,
    const std::array<Unitary2, 4> &branches) {
    const std::uint64_t hmask = state.mask_of(control_hi);
    const std::uint64_t lmask = state.mask_of(control_lo);
    const std::uint64_t tmask = state.mask_of(target);
    if (hmask == lmask || hmask == tmask || lmask == tmask) {
        throw InvalidInput("multiplexed gate: control and target qubits must "
                           "be distinct");
    }
    const auto bit = static_cast<unsigned>(state.num_qubits() - target.position);
    auto amps = state.mutable_amplitudes();
    const std::uint64_t pairs = amps.size() / 2;
    for (std::uint64_t k = 0; k < pairs; ++k) {
        const std::uint64_t i0 = detail::insert_zero_bit(k, bit);
        const std::size_t branch = ((i0 & hmask) ? 2U : 0U) | ((i0 & lmask) ? 1U : 0U);
        detail::apply_pair(amps[i0], amps[i0 | tmask], branches[branch]);
    }
}

inline StateVector apply_two_controlled_multiplexed(
    StateVector state, Qubit control_hi, Qubit control_lo, Qubit target,
    const std::array<Unitary2, 4> &branches) {
    apply_two_controlled_multiplexed_inplace(state, control_hi, control_lo,
                                             target, branches);
    return state;
}

} // namespace qparrondo
