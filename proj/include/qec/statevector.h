#pragma once

// Dense state-vector layer used as a sign-exact oracle for the GF(2) layer.
// Basis index bit (n-1-q) is qubit q, so qubit 0 is the most significant bit
// and kets read left to right like Pauli strings. The Y letter is realised as
// the real matrix ZX.

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <vector>

#include "qec/clifford.h"
#include "qec/errors.h"
#include "qec/stabilizer.h"

namespace qec {

inline constexpr std::size_t kMaxStateQubits = 14;

template <typename Scalar>
using StateVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using DenseOperator = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Complex = std::complex<double>;

namespace detail {

template <typename Scalar>
inline constexpr bool is_complex_v = Eigen::NumTraits<Scalar>::IsComplex;

inline std::size_t qubit_bit(std::size_t n, std::size_t q) { return std::size_t{1} << (n - 1 - q); }

inline void require_capacity(std::size_t n, std::size_t cap = kMaxStateQubits) {
    if (n > cap)
        throw CapacityError("state-vector layer supports at most " + std::to_string(cap) + " qubits, got " +
                            std::to_string(n));
}

template <typename Derived>
void require_rows(const Eigen::MatrixBase<Derived> &a, std::size_t n) {
    if (static_cast<std::size_t>(a.rows()) != (std::size_t{1} << n))
        throw DimensionError("state has " + std::to_string(a.rows()) + " amplitudes, expected 2^" + std::to_string(n));
}

struct IndexMasks {
    std::size_t x = 0;
    std::size_t z = 0;
};

inline IndexMasks index_masks(const PauliString &p) {
    IndexMasks m;
    const std::size_t n = p.num_qubits();
    for (std::size_t q = 0; q < n; ++q) {
        if (p.x(q)) m.x |= qubit_bit(n, q);
        if (p.z(q)) m.z |= qubit_bit(n, q);
    }
    return m;
}

inline std::size_t count_y(const PauliString &p) { return static_cast<std::size_t>(std::popcount(p.x_bits() & p.z_bits())); }

}  // namespace detail

template <typename Scalar>
StateVector<Scalar> basis_state(std::size_t n, std::size_t index) {
    detail::require_capacity(n);
    StateVector<Scalar> s = StateVector<Scalar>::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
    s(static_cast<Eigen::Index>(index)) = Scalar(1);
    return s;
}

/// Applies the literal operator (Y as ZX) to every column of `a`.
template <typename Derived>
typename Derived::PlainObject pauli_apply(const PauliString &p, const Eigen::MatrixBase<Derived> &a) {
    const std::size_t n = p.num_qubits();
    detail::require_rows(a, n);
    const auto m = detail::index_masks(p);
    typename Derived::PlainObject out(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        std::size_t j = static_cast<std::size_t>(i) ^ m.x;
        bool neg = std::popcount(j & m.z) & 1;
        if (neg) out.row(static_cast<Eigen::Index>(j)) = -a.row(i);
        else out.row(static_cast<Eigen::Index>(j)) = a.row(i);
    }
    return out;
}

template <typename Scalar>
StateVector<Scalar> pauli_statevector_action(const PauliString &p, const StateVector<Scalar> &s) {
    detail::require_capacity(p.num_qubits());
    return pauli_apply(p, s);
}

/// Hermitian involution for p: the literal operator, times i when it holds an
/// odd number of Y letters. Real scalars cannot represent that case.
template <typename Derived>
typename Derived::PlainObject hermitian_pauli_apply(const PauliString &p, const Eigen::MatrixBase<Derived> &a) {
    using Scalar = typename Derived::Scalar;
    auto out = pauli_apply(p, a);
    if (detail::count_y(p) % 2 == 1) {
        if constexpr (detail::is_complex_v<Scalar>) {
            out *= Scalar(0, 1);
        } else {
            throw StructureError("operator " + p.str() + " squares to -1 with Y = ZX; it needs a complex scalar");
        }
    }
    return out;
}

template <typename Scalar>
void apply_gate(const CliffordGate &g, std::size_t n, StateVector<Scalar> &s) {
    if (g.max_qubit() >= n) throw DimensionError("gate " + g.str() + " exceeds state width");
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t ma = detail::qubit_bit(n, g.a);
    const std::size_t mb = g.two_qubit() ? detail::qubit_bit(n, g.b) : 0;
    auto at = [&](std::size_t i) -> Scalar & { return s(static_cast<Eigen::Index>(i)); };
    switch (g.kind) {
        case GateKind::H: {
            const Scalar r = Scalar(1.0 / std::sqrt(2.0));
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & ma) continue;
                Scalar u = at(i), v = at(i | ma);
                at(i) = r * (u + v);
                at(i | ma) = r * (u - v);
            }
            break;
        }
        case GateKind::P:
            if constexpr (detail::is_complex_v<Scalar>) {
                for (std::size_t i = 0; i < dim; ++i)
                    if (i & ma) at(i) *= Scalar(0, 1);
            } else {
                throw StructureError("phase gate needs a complex scalar");
            }
            break;
        case GateKind::CNOT:
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & ma) && !(i & mb)) std::swap(at(i), at(i | mb));
            break;
        case GateKind::CZ:
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & ma) && (i & mb)) at(i) = -at(i);
            break;
        case GateKind::SWAP:
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & ma) && !(i & mb)) std::swap(at(i), at((i & ~ma) | mb));
            break;
    }
}

template <typename Scalar>
StateVector<Scalar> apply_circuit_statevector(const CliffordCircuit &c, StateVector<Scalar> s) {
    detail::require_capacity(c.num_qubits());
    detail::require_rows(s, c.num_qubits());
    for (const auto &g : c.gates()) apply_gate(g, c.num_qubits(), s);
    return s;
}

/// Rotates the global phase so the first nonzero amplitude is positive real.
template <typename Scalar>
void fix_global_phase(StateVector<Scalar> &s, double tol = 1e-12) {
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        double mag = std::abs(s(i));
        if (mag <= tol) continue;
        if constexpr (detail::is_complex_v<Scalar>) {
            s *= std::conj(s(i)) / mag;
        } else if (s(i) < 0) {
            s = -s;
        }
        return;
    }
}

/// Codewords |x> for x = 0..2^k-1 (logical qubit 0 is the most significant bit).
///
/// The code space is the joint eigenspace of the stabilizer rows with the
/// given eigenvalues (all +1 when empty). Gauge qubits are fixed by the +1
/// eigenspace of the second row of each gauge pair. |0...0> is the +1
/// eigenstate of every logical Z; other codewords are logical X images.
template <typename Scalar>
std::vector<StateVector<Scalar>> compute_codewords(const QuantumCode &code, const std::vector<int> &eigenvalues = {}) {
    detail::require_capacity(code.n);
    if (auto d = validate_code(code)) throw StructureError("compute_codewords: invalid code: " + d->message);
    if (!eigenvalues.empty() && eigenvalues.size() != code.stabilizer.size())
        throw UsageError("compute_codewords: need one eigenvalue per stabilizer row");
    struct Constraint {
        PauliString op;
        int sign;
    };
    std::vector<Constraint> cons;
    for (std::size_t i = 0; i < code.stabilizer.size(); ++i) {
        int ev = eigenvalues.empty() ? 1 : eigenvalues[i];
        if (ev != 1 && ev != -1) throw UsageError("compute_codewords: eigenvalues must be +1 or -1");
        cons.push_back({code.stabilizer[i], ev});
    }
    for (std::size_t g = 1; g < code.gauge.size(); g += 2) cons.push_back({code.gauge[g], 1});
    for (const auto &z : code.logical_z) cons.push_back({z, 1});

    const std::size_t dim = std::size_t{1} << code.n;
    auto project = [&](StateVector<Scalar> s) {
        for (const auto &c : cons) {
            StateVector<Scalar> hs = hermitian_pauli_apply(c.op, s);
            s = (s + Scalar(c.sign) * hs) * Scalar(0.5);
        }
        return s;
    };

    std::optional<StateVector<Scalar>> zero;
    for (std::size_t j = 0; j < dim && !zero; ++j) {
        StateVector<Scalar> s = project(basis_state<Scalar>(code.n, j));
        if (s.norm() > 1e-9) zero = s / s.norm();
    }
    if (!zero) throw StructureError("compute_codewords: projector has rank 0");
    fix_global_phase(*zero);

    std::vector<StateVector<Scalar>> out;
    const std::size_t count = std::size_t{1} << code.k;
    for (std::size_t x = 0; x < count; ++x) {
        StateVector<Scalar> s = *zero;
        for (std::size_t i = 0; i < code.k; ++i)
            if ((x >> (code.k - 1 - i)) & 1) s = pauli_apply(code.logical_x[i], s);
        fix_global_phase(s);
        out.push_back(std::move(s));
    }
    return out;
}

/// Dense code-space projector prod (1 + h_i)/2 over the stabilizer rows.
inline DenseOperator<Complex> code_projector(const CheckMatrix &stabilizer, std::size_t max_qubits = 7) {
    const std::size_t n = stabilizer.num_qubits();
    detail::require_capacity(n, max_qubits);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    DenseOperator<Complex> proj = DenseOperator<Complex>::Identity(dim, dim);
    for (const auto &h : stabilizer) proj = (proj + hermitian_pauli_apply(h, proj)) * 0.5;
    return proj;
}

/// Knill-Laflamme test per operator: P E P == lambda P within `tol`.
/// Stabilizer codes only (no gauge), at most 7 qubits.
inline std::vector<bool> knill_laflamme_verdicts(const QuantumCode &code, const std::vector<PauliString> &ops,
                                                 double tol = 1e-10) {
    if (!code.gauge.empty()) throw UsageError("knill_laflamme_verdicts: gauge codes are not supported");
    DenseOperator<Complex> proj = code_projector(code.stabilizer);
    const Complex tr = proj.trace();
    std::vector<bool> out;
    out.reserve(ops.size());
    for (const auto &e : ops) {
        if (e.num_qubits() != code.n) throw DimensionError("knill_laflamme_verdicts: operator width mismatch");
        DenseOperator<Complex> m = proj * pauli_apply(e, proj);
        Complex lambda = m.trace() / tr;
        out.push_back((m - lambda * proj).cwiseAbs().maxCoeff() < tol);
    }
    return out;
}

}  // namespace qec
