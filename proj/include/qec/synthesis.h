#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qec/clifford.h"
#include "qec/errors.h"
#include "qec/stabilizer.h"
#include "qec/symplectic.h"

namespace qec {

struct GramSchmidtResult {
    std::vector<std::pair<PauliString, PauliString>> pairs;
    CheckMatrix isotropic{0};

    std::size_t ebits() const { return pairs.size(); }
    /// Pair members (first, second, first, second, ...) followed by isotropic rows.
    CheckMatrix rows() const;
};

/// Pairs anticommuting rows and makes every other row commute with each pair.
/// Throws IndependenceError when the rows are dependent.
GramSchmidtResult symplectic_gram_schmidt(const CheckMatrix &gens);

/// rank(H H^T) over GF(2).
std::size_t min_ebits_css(const BitMatrix &h);

/// Unencoded form: a (Z, X) row pair on each ebit column, then a Z row on each
/// ancilla column. Columns are 0-based and must partition 0..n-1.
CheckMatrix canonical_target(std::size_t n, std::size_t k, std::size_t c, const std::vector<std::size_t> &ebit_columns,
                             const std::vector<std::size_t> &ancilla_columns,
                             const std::vector<std::size_t> &info_columns);

/// One entry of a reduction script: a gate, or a free row operation.
struct ScriptOp {
    enum class Kind { gate, row_add, row_swap };
    Kind kind = Kind::gate;
    CliffordGate gate{};
    std::size_t src = 0;  // row_add: row dst *= row src; row_swap: the two rows
    std::size_t dst = 0;

    static ScriptOp of(const CliffordGate &g) { return {Kind::gate, g, 0, 0}; }
    static ScriptOp row_add(std::size_t src, std::size_t dst) { return {Kind::row_add, {}, src, dst}; }
    static ScriptOp row_swap(std::size_t a, std::size_t b) { return {Kind::row_swap, {}, a, b}; }

    /// "H 3", "ROWADD 1 3", "ROWSWAP 2 6" (1-based).
    std::string str() const;
    friend bool operator==(const ScriptOp &, const ScriptOp &) = default;
};

using Script = std::vector<ScriptOp>;

ScriptOp parse_script_op(std::string_view line);
Script parse_script(std::string_view text);
std::string format_script(const Script &s);

void apply_script_op(const ScriptOp &op, CheckMatrix &m);
/// Matrix after each operation, in order.
std::vector<CheckMatrix> replay_script(const CheckMatrix &start, const Script &script);

/// FNV-1a over the binary matrix, chained with the previous digest.
std::uint64_t matrix_digest(const CheckMatrix &m, std::uint64_t previous = 0xcbf29ce484222325ULL);

struct SynthesisError : StructureError {
    SynthesisError(const std::string &msg, Script partial) : StructureError(msg), partial_script(std::move(partial)) {}
    Script partial_script;
};

struct SynthesisResult {
    /// Maps the canonical form to the code (gates only, on Alice's columns).
    CliffordCircuit encoder{0};
    /// Gates and row operations taking the input matrix to `canonical`.
    Script reduction;
    /// Input rows restricted to Alice: stabilizer rows, then gauge rows.
    CheckMatrix input{0};
    CheckMatrix canonical{0};
    /// For each canonical row, whether it descends from a stabilizer row.
    std::vector<bool> from_stabilizer;
    std::size_t ebits = 0;
    std::size_t gauge_qubits = 0;
    std::vector<std::size_t> ebit_columns, gauge_columns, ancilla_columns, info_columns;
    /// Digest of the input followed by one digest per script step.
    std::vector<std::uint64_t> hash_chain;

    CheckMatrix canonical_stabilizer() const;
};

/// Reduces the Alice-side binary matrix of stabilizer and gauge rows to
/// canonical form and returns the reversed gate list as the encoder. The
/// encoder is checked to reproduce the input group; a stall raises
/// SynthesisError carrying the partial script.
SynthesisResult synthesize_encoder(const QuantumCode &code);

/// Encoded logical pairs (X, Z) obtained by conjugating the canonical X/Z on
/// each info column, padded with identity on Bob's columns.
std::vector<std::pair<PauliString, PauliString>> encoded_logicals(const SynthesisResult &r, const QuantumCode &code);

}  // namespace qec
