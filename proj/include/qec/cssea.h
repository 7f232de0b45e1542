#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qec/stabilizer.h"
#include "qec/symplectic.h"

namespace qec {

/// Classical parity-check matrix (r x m).
struct ClassicalParityCheck {
    BitMatrix h;

    std::size_t length() const { return h.cols(); }
    /// All columns nonzero and pairwise distinct.
    bool corrects_single_error() const;
};

/// The [7,4,3] Hamming parity-check matrix with an identity block in columns 1-3.
ClassicalParityCheck hamming_7_4();

/// Drops column `col` (0-based). Throws UsageError when out of range.
ClassicalParityCheck delete_column(const ClassicalParityCheck &pc, std::size_t col);

/// Z-type rows from hz, then X-type rows from hx. Rows need not commute.
CheckMatrix css_generators(const ClassicalParityCheck &hx, const ClassicalParityCheck &hz);

/// Pairs the rows by symplectic Gram-Schmidt and prepends one Bob column per
/// pair (Z on the earlier member, X on the later), then derives logicals.
QuantumCode build_ea_code(const CheckMatrix &gens);

/// Row-reduces a standard code so column `qubit` (0-based) carries exactly
/// one X and one Z, and hands that column to Bob. The column stays in place.
QuantumCode reduce_to_ebit(const QuantumCode &code, std::size_t qubit);

/// Row products, row swap and column permutations taking the seven-column
/// entanglement-assisted code to a standard seven-qubit code.
QuantumCode steane_equivalence_transform(const QuantumCode &code);

/// Applies `perm` to every operator of the code: old column p moves to perm[p].
QuantumCode permute_columns(const QuantumCode &code, const std::vector<std::size_t> &perm);

ClassicalParityCheck parse_parity_check(std::string_view text);
std::string format_parity_check(const ClassicalParityCheck &pc);

}  // namespace qec
