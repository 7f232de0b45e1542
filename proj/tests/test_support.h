#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qec/clifford.h"
#include "qec/cssea.h"
#include "qec/stabilizer.h"
#include "qec/symplectic.h"
#include "qec/synthesis.h"

namespace qec::testing {

// "Z-block|X-block" row to a Pauli.
inline PauliString zx_row(std::string_view row) {
    const auto bar = row.find('|');
    const std::string_view z = row.substr(0, bar), x = row.substr(bar + 1);
    PauliString p(z.size());
    for (std::size_t q = 0; q < z.size(); ++q) p.set_bits(q, x[q] == '1', z[q] == '1');
    return p;
}

template <std::size_t N>
CheckMatrix zx_matrix(const std::array<std::string_view, N> &rows) {
    CheckMatrix m(zx_row(rows[0]).num_qubits());
    for (auto r : rows) m.push_back(zx_row(r));
    return m;
}

// The walkthrough's gate and row script, one group per printed step (2..17).
// Two groups carry row products the text leaves implicit.
inline const std::vector<std::string> kAppendixSteps = {
    "ROWSWAP 2 6",
    "H 1\nH 4\nH 6",
    "CNOT 1 4\nCNOT 1 6",
    "H 1\nROWADD 1 3\nROWADD 1 6",
    "H 4\nH 6",
    "CNOT 1 4\nCNOT 1 6\nROWADD 1 3\nROWADD 1 6",
    "H 2\nH 4\nH 5",
    "CNOT 2 4\nCNOT 2 5",
    "H 2",
    "SWAP 3 5",
    "H 3\nCNOT 3 6\nH 3",
    "ROWADD 4 5",
    "H 4\nCNOT 4 5\nCNOT 4 6",
    "H 4",
    "H 5\nH 6\nCNOT 5 6",
    "H 5",
};

// Logical CNOT between two blocks of the six-qubit code (1-based, 12 qubits).
inline constexpr std::string_view kLogicalCnot =
    "CZ 2 7\nCZ 5 7\nCZ 6 7\nCNOT 1 9\nCNOT 3 9\nCNOT 4 9\nCNOT 2 11\nCNOT 4 11\nCNOT 5 11\n";

// Printed codeword terms (basis string, sign), normalization suppressed.
inline const std::vector<std::pair<std::string, int>> kPrintedZero = {
    {"000000", +1}, {"100111", -1}, {"001111", +1}, {"101000", -1},
    {"010010", -1}, {"110101", +1}, {"011101", +1}, {"111010", -1},
};
inline const std::vector<std::pair<std::string, int>> kPrintedOne = {
    {"001010", +1}, {"101101", +1}, {"000101", +1}, {"100010", +1},
    {"011000", -1}, {"111111", -1}, {"010111", +1}, {"110000", +1},
};

// Generator signs under which the printed states are code states.
inline const std::vector<int> kPrintedEigenvalues = {-1, -1, 1, 1, 1};

inline std::size_t basis_index(std::string_view bits) {
    std::size_t i = 0;
    for (char c : bits) i = (i << 1) | static_cast<std::size_t>(c == '1');
    return i;
}

// The six-column parity-check matrix obtained by dropping the last Hamming column.
inline ClassicalParityCheck truncated_hamming() { return delete_column(hamming_7_4(), 6); }

inline const std::vector<std::string> kTruncatedHammingDisplay = {
    "ZIIZIZ", "IZIZZI", "IIZIZZ", "XIIXIX", "IXIXXI", "IIXIXX",
};

// --- random objects --------------------------------------------------------

inline PauliString random_pauli(std::mt19937_64 &rng, std::size_t n) {
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return PauliString(n, rng() & mask, rng() & mask);
}

inline CliffordGate random_gate(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> q(0, n - 1);
    const int kinds = n >= 2 ? 5 : 2;
    const int k = std::uniform_int_distribution<int>(0, kinds - 1)(rng);
    const std::size_t a = q(rng);
    std::size_t b = a;
    if (k >= 2)
        while (b == a) b = q(rng);
    switch (k) {
        case 0: return CliffordGate::h(a);
        case 1: return CliffordGate::p(a);
        case 2: return CliffordGate::cnot(a, b);
        case 3: return CliffordGate::cz(a, b);
        default: return CliffordGate::swap(a, b);
    }
}

inline CliffordCircuit random_circuit(std::mt19937_64 &rng, std::size_t n, std::size_t gates) {
    CliffordCircuit c(n);
    for (std::size_t i = 0; i < gates; ++i) c.push_back(random_gate(rng, n));
    return c;
}

// Scrambled version of Z on the first `rows` qubits.
inline CheckMatrix random_stabilizer(std::mt19937_64 &rng, std::size_t n, std::size_t rows) {
    CheckMatrix base(n);
    for (std::size_t i = 0; i < rows; ++i) base.push_back(PauliString::single(n, i, 'Z'));
    return conjugate_check_matrix(random_circuit(rng, n, 6 * n), base);
}

}  // namespace qec::testing
