#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qec/symplectic.h"

namespace qec {

/// Stabilizer, subsystem or entanglement-assisted code.
///
/// `n` counts every column, including the receiver's (Bob) columns. Gauge rows
/// come in anticommuting pairs (gauge[2i], gauge[2i+1]); the code has
/// gauge.size()/2 gauge qubits. Column indices are 0-based.
struct QuantumCode {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::size_t> bob_columns;
    CheckMatrix stabilizer{0};
    CheckMatrix gauge{0};
    std::vector<PauliString> logical_x;
    std::vector<PauliString> logical_z;

    std::size_t gauge_qubits() const { return gauge.size() / 2; }
    std::size_t ebits() const { return bob_columns.size(); }
    bool is_bob(std::size_t col) const;
    std::vector<std::size_t> alice_columns() const;
    std::vector<std::size_t> all_columns() const;
};

enum class BuiltinCode { six_qubit_degenerate, six_qubit_subsystem, ea_613, steane };

std::string_view builtin_name(BuiltinCode b);
/// Throws UsageError for an unknown name.
BuiltinCode parse_builtin_name(std::string_view name);
QuantumCode builtin_code(BuiltinCode which);
std::vector<BuiltinCode> all_builtins();

enum class DiagnosticKind {
    shape,
    stabilizer_commutation,
    stabilizer_dependence,
    gauge_commutation,
    gauge_pairing,
    gauge_dependence,
    logical_count,
    logical_commutation,
    logical_pairing,
    row_count,
};

struct Diagnostic {
    DiagnosticKind kind;
    std::string message;
    std::vector<std::size_t> rows;
};

std::string_view diagnostic_kind_name(DiagnosticKind k);

/// First violated invariant, or nullopt when the code is well formed.
std::optional<Diagnostic> validate_code(const QuantumCode &code);

/// Weight-one Paulis on `columns` followed by products of distinct weight-one
/// Paulis, deduplicated in order of first appearance. Throws UsageError on an
/// empty or out-of-range column set.
std::vector<PauliString> error_set_single_and_pairs(std::size_t n, const std::vector<std::size_t> &columns);

/// The undeduplicated list used for correction reports: every single error,
/// then the product of every unordered pair of distinct single errors.
std::vector<PauliString> error_products(std::size_t n, const std::vector<std::size_t> &columns);

struct Verdict {
    enum class Kind { anticommutes, in_stabilizer, in_gauge, fail };
    Kind kind = Kind::fail;
    std::size_t generator = 0;  // meaningful for anticommutes only

    friend bool operator==(const Verdict &, const Verdict &) = default;
};

std::string verdict_str(const Verdict &v);

struct CorrectionReport {
    std::size_t checked = 0;
    std::vector<PauliString> errors;
    std::vector<Verdict> verdicts;

    std::size_t failures() const;
    bool corrects() const { return failures() == 0; }
};

Verdict classify_error(const QuantumCode &code, const PauliString &e);
CorrectionReport verify_correction(const QuantumCode &code, const std::vector<PauliString> &errors);

/// Columns on which single errors are considered: Alice's by default, every
/// column when `global` is set.
std::vector<std::size_t> error_columns(const QuantumCode &code, bool global);

struct DistanceResult {
    std::optional<std::size_t> distance;
    std::optional<PauliString> witness;
};

/// Smallest-weight Pauli on the chosen columns that commutes with the
/// stabilizer but is outside the stabilizer-plus-gauge span.
DistanceResult distance(const QuantumCode &code, std::size_t max_weight, bool global = false);

enum class SingletonStatus { saturated, satisfied, violated };
std::string_view singleton_status_name(SingletonStatus s);
SingletonStatus singleton_check(long n, long k, long r, long d);

/// Removes stabilizer row `row`, appending `partner` then the row to the gauge.
/// Throws StructureError if the partner does not anticommute with the row,
/// fails to commute with the remaining rows or logicals.
QuantumCode to_subsystem(const QuantumCode &code, std::size_t row, const PauliString &partner);

/// Logical pairs for the given stabilizer and gauge, identity on Bob's columns.
/// Fills code.logical_x / logical_z and sets code.k.
void derive_logicals(QuantumCode &code);

// --- text format -----------------------------------------------------------

/// Reads the sectioned code format. Missing logical sections are derived when
/// the stabilizer and gauge rows admit it, else left empty.
QuantumCode parse_code(std::string_view text);
std::string format_code(const QuantumCode &code);
QuantumCode load_code_file(const std::string &path);
void save_code_file(const QuantumCode &code, const std::string &path);

/// Bare Pauli rows, one per line; `#` comments and `[section]` headers skipped.
CheckMatrix parse_pauli_rows(std::string_view text);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view text);

}  // namespace qec
