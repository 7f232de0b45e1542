#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qec/stabilizer.h"
#include "qec/symplectic.h"

namespace qec {

enum class GateKind { H, P, CNOT, CZ, SWAP };

std::string_view gate_name(GateKind k);

/// One Clifford gate. Qubit indices are 0-based; `b` is used by two-qubit
/// gates only (CNOT: a = control, b = target).
struct CliffordGate {
    GateKind kind = GateKind::H;
    std::size_t a = 0;
    std::size_t b = 0;

    static CliffordGate h(std::size_t q) { return {GateKind::H, q, 0}; }
    static CliffordGate p(std::size_t q) { return {GateKind::P, q, 0}; }
    static CliffordGate cnot(std::size_t c, std::size_t t) { return {GateKind::CNOT, c, t}; }
    static CliffordGate cz(std::size_t i, std::size_t j) { return {GateKind::CZ, i, j}; }
    static CliffordGate swap(std::size_t i, std::size_t j) { return {GateKind::SWAP, i, j}; }

    bool two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::SWAP; }
    std::size_t max_qubit() const { return two_qubit() ? std::max(a, b) : a; }
    /// Text form with 1-based indices, e.g. "CNOT 1 4".
    std::string str() const;

    friend bool operator==(const CliffordGate &, const CliffordGate &) = default;
};

/// Parses one gate line ("H 3", "CNOT 1 4", 1-based). Throws ParseError.
CliffordGate parse_gate(std::string_view line);

class CliffordCircuit {
  public:
    explicit CliffordCircuit(std::size_t num_qubits) : n_(num_qubits) {}
    CliffordCircuit(std::size_t num_qubits, std::vector<CliffordGate> gates);

    std::size_t num_qubits() const { return n_; }
    const std::vector<CliffordGate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Throws DimensionError for out-of-range or coinciding indices.
    void push_back(const CliffordGate &g);
    void append(const CliffordCircuit &other);

    /// Gate list for U^dagger: reversed order, each P replaced by P P P.
    CliffordCircuit inverse() const;

    std::string str() const;
    /// One gate per line, `#` comments. When num_qubits is 0 the width is the
    /// largest index used.
    static CliffordCircuit parse(std::string_view text, std::size_t num_qubits = 0);

    friend bool operator==(const CliffordCircuit &, const CliffordCircuit &) = default;

  private:
    std::size_t n_;
    std::vector<CliffordGate> gates_;
};

/// g p g^dagger up to phase, by the binary column-update rules.
PauliString conjugate_pauli(const CliffordGate &g, const PauliString &p);
PauliString conjugate_pauli(const CliffordCircuit &c, const PauliString &p);
CheckMatrix conjugate_check_matrix(const CliffordCircuit &c, const CheckMatrix &m);

/// Column-update rule applied in place to a binary Z|X matrix (rows x 2n).
void conjugate_binary_inplace(const CliffordGate &g, BitMatrix &zx);

/// Stabilizer of `copies` side-by-side blocks of the code.
CheckMatrix block_stabilizer(const QuantumCode &code, std::size_t copies);
/// `p` placed on block `block` of `copies`, identity elsewhere.
PauliString on_block(const PauliString &p, std::size_t block, std::size_t copies);

/// True iff the circuit preserves the block stabilizer and maps each
/// expected.first to expected.second modulo that stabilizer.
bool verify_logical_circuit(const CliffordCircuit &circuit, const QuantumCode &code, std::size_t copies,
                            const std::vector<std::pair<PauliString, PauliString>> &expected);

}  // namespace qec
