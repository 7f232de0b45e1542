#include "qec/cssea.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "qec/errors.h"
#include "qec/synthesis.h"

namespace qec {

bool ClassicalParityCheck::corrects_single_error() const {
    std::set<std::vector<bool>> seen;
    for (std::size_t c = 0; c < h.cols(); ++c) {
        std::vector<bool> col(h.rows());
        bool nonzero = false;
        for (std::size_t r = 0; r < h.rows(); ++r) nonzero |= (col[r] = h.get(r, c));
        if (!nonzero || !seen.insert(col).second) return false;
    }
    return true;
}

ClassicalParityCheck hamming_7_4() { return {BitMatrix::from_strings({"1001011", "0101101", "0010111"})}; }

ClassicalParityCheck delete_column(const ClassicalParityCheck &pc, std::size_t col) {
    if (col >= pc.h.cols())
        throw UsageError("delete_column: column " + std::to_string(col + 1) + " out of range 1.." +
                         std::to_string(pc.h.cols()));
    return {pc.h.remove_column(col)};
}

CheckMatrix css_generators(const ClassicalParityCheck &hx, const ClassicalParityCheck &hz) {
    if (hx.h.cols() != hz.h.cols())
        throw DimensionError("css_generators: column counts differ (" + std::to_string(hx.h.cols()) + " vs " +
                             std::to_string(hz.h.cols()) + ")");
    const std::size_t n = hx.h.cols();
    CheckMatrix out(n);
    for (std::size_t r = 0; r < hz.h.rows(); ++r) {
        PauliString p(n);
        for (std::size_t c = 0; c < n; ++c)
            if (hz.h.get(r, c)) p.set(c, 'Z');
        out.push_back(p);
    }
    for (std::size_t r = 0; r < hx.h.rows(); ++r) {
        PauliString p(n);
        for (std::size_t c = 0; c < n; ++c)
            if (hx.h.get(r, c)) p.set(c, 'X');
        out.push_back(p);
    }
    return out;
}

QuantumCode build_ea_code(const CheckMatrix &gens) {
    GramSchmidtResult gs = symplectic_gram_schmidt(gens);
    const std::size_t c = gs.ebits();
    const std::size_t na = gens.num_qubits();
    QuantumCode code;
    code.n = c + na;
    code.stabilizer = CheckMatrix(code.n);
    code.gauge = CheckMatrix(code.n);
    for (std::size_t i = 0; i < c; ++i) code.bob_columns.push_back(i);
    for (std::size_t i = 0; i < c; ++i) {
        const auto &[first, second] = gs.pairs[i];
        code.stabilizer.push_back(c ? tensor(PauliString::single(c, i, 'Z'), first) : first);
        code.stabilizer.push_back(c ? tensor(PauliString::single(c, i, 'X'), second) : second);
    }
    for (const auto &row : gs.isotropic) code.stabilizer.push_back(c ? tensor(PauliString(c), row) : row);
    derive_logicals(code);
    if (auto d = validate_code(code)) throw StructureError("build_ea_code: result failed validation: " + d->message);
    return code;
}

QuantumCode reduce_to_ebit(const QuantumCode &code, std::size_t qubit) {
    if (!code.bob_columns.empty()) throw UsageError("reduce_to_ebit: input must be a standard code (no Bob columns)");
    if (!code.gauge.empty()) throw UsageError("reduce_to_ebit: input must not have gauge qubits");
    if (qubit >= code.n) throw UsageError("reduce_to_ebit: qubit " + std::to_string(qubit + 1) + " out of range");

    CheckMatrix rows = code.stabilizer;
    auto letter = [&](std::size_t r) { return rows[r].letter(qubit); };
    std::size_t a = rows.size(), b = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (letter(r) == 'I') continue;
        if (a == rows.size()) a = r;
        else if (letter(r) != letter(a)) {
            b = r;
            break;
        }
    }
    if (b == rows.size())
        throw StructureError("reduce_to_ebit: column " + std::to_string(qubit + 1) +
                             " carries fewer than two distinct letters across the generators");

    // Clear the column from every other row using the two chosen rows.
    const char la = letter(a), lb = letter(b);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == a || r == b) continue;
        char l = letter(r);
        if (l == 'I') continue;
        if (l == la) rows[r] = pauli_multiply(rows[r], rows[a]);
        else if (l == lb) rows[r] = pauli_multiply(rows[r], rows[b]);
        else rows[r] = pauli_multiply(pauli_multiply(rows[r], rows[a]), rows[b]);
    }
    // Remove Y by multiplying it into the partner.
    if (letter(a) == 'Y') rows[a] = pauli_multiply(rows[a], rows[b]);
    else if (letter(b) == 'Y') rows[b] = pauli_multiply(rows[b], rows[a]);

    QuantumCode out;
    out.n = code.n;
    out.bob_columns = {qubit};
    out.stabilizer = rows;
    out.gauge = CheckMatrix(code.n);
    derive_logicals(out);
    if (auto d = validate_code(out)) throw StructureError("reduce_to_ebit: result failed validation: " + d->message);
    return out;
}

QuantumCode permute_columns(const QuantumCode &code, const std::vector<std::size_t> &perm) {
    if (perm.size() != code.n) throw DimensionError("permute_columns: permutation length differs from n");
    std::vector<std::size_t> inverse(code.n, code.n);
    for (std::size_t p = 0; p < code.n; ++p) {
        if (perm[p] >= code.n || inverse[perm[p]] != code.n) throw UsageError("permute_columns: not a permutation");
        inverse[perm[p]] = p;
    }
    // new column q holds old column inverse[q]
    auto move = [&](const PauliString &p) { return select_columns(p, inverse); };
    QuantumCode out = code;
    for (std::size_t i = 0; i < out.stabilizer.size(); ++i) out.stabilizer[i] = move(code.stabilizer[i]);
    for (std::size_t i = 0; i < out.gauge.size(); ++i) out.gauge[i] = move(code.gauge[i]);
    for (auto &l : out.logical_x) l = move(l);
    for (auto &l : out.logical_z) l = move(l);
    for (auto &b : out.bob_columns) b = perm[b];
    std::sort(out.bob_columns.begin(), out.bob_columns.end());
    return out;
}

QuantumCode steane_equivalence_transform(const QuantumCode &code) {
    if (code.n != 7 || code.stabilizer.size() != 6)
        throw UsageError("steane_equivalence_transform: expected 7 columns (Bob + 6 Alice) and 6 generators");
    QuantumCode out = code;
    auto &g = out.stabilizer;
    g[0] = pauli_multiply(pauli_multiply(g[0], g[1]), g[2]);
    g[4] = pauli_multiply(g[4], g[5]);
    std::swap(g[3], g[4]);

    // Column moves, 0-based: swap 1,2; swap 0,4; cyclic p -> p-1; reverse.
    std::vector<std::size_t> perm(7);
    for (std::size_t p = 0; p < 7; ++p) perm[p] = p;
    auto compose = [&perm](const std::vector<std::size_t> &step) {
        for (auto &dst : perm) dst = step[dst];
    };
    compose({0, 2, 1, 3, 4, 5, 6});
    compose({4, 1, 2, 3, 0, 5, 6});
    compose({6, 0, 1, 2, 3, 4, 5});
    compose({6, 5, 4, 3, 2, 1, 0});
    out = permute_columns(out, perm);
    out.bob_columns.clear();
    return out;
}

ClassicalParityCheck parse_parity_check(std::string_view text) {
    std::vector<std::string> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::string row;
        for (char ch : line)
            if (ch != ' ' && ch != '\t' && ch != '\r') row += ch;
        if (!row.empty()) rows.push_back(row);
    }
    if (rows.empty()) throw ParseError("parity-check file has no rows");
    return {BitMatrix::from_strings(std::span<const std::string>(rows))};
}

std::string format_parity_check(const ClassicalParityCheck &pc) {
    std::string out;
    for (const auto &r : pc.h.to_strings()) out += r + '\n';
    return out;
}

}  // namespace qec
