#include "qec/stabilizer.h"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <sstream>

#include "qec/errors.h"

namespace qec {

bool QuantumCode::is_bob(std::size_t col) const {
    return std::find(bob_columns.begin(), bob_columns.end(), col) != bob_columns.end();
}

std::vector<std::size_t> QuantumCode::alice_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_bob(c)) out.push_back(c);
    return out;
}

std::vector<std::size_t> QuantumCode::all_columns() const {
    std::vector<std::size_t> out(n);
    for (std::size_t c = 0; c < n; ++c) out[c] = c;
    return out;
}

// --- builtins ---------------------------------------------------------------

std::string_view builtin_name(BuiltinCode b) {
    switch (b) {
        case BuiltinCode::six_qubit_degenerate: return "six_qubit_degenerate";
        case BuiltinCode::six_qubit_subsystem: return "six_qubit_subsystem";
        case BuiltinCode::ea_613: return "ea_613";
        case BuiltinCode::steane: return "steane";
    }
    return "?";
}

std::vector<BuiltinCode> all_builtins() {
    return {BuiltinCode::six_qubit_degenerate, BuiltinCode::six_qubit_subsystem, BuiltinCode::ea_613,
            BuiltinCode::steane};
}

BuiltinCode parse_builtin_name(std::string_view name) {
    for (auto b : all_builtins())
        if (builtin_name(b) == name) return b;
    throw UsageError("unknown builtin code '" + std::string(name) +
                     "' (expected six_qubit_degenerate, six_qubit_subsystem, ea_613 or steane)");
}

namespace {

QuantumCode make_code(std::vector<std::size_t> bob, std::initializer_list<std::string_view> stab,
                      std::initializer_list<std::string_view> gauge, std::string_view lx, std::string_view lz) {
    QuantumCode c;
    c.stabilizer = CheckMatrix::parse(stab);
    c.n = c.stabilizer.num_qubits();
    c.gauge = gauge.size() ? CheckMatrix::parse(gauge) : CheckMatrix(c.n);
    c.bob_columns = std::move(bob);
    c.logical_x = {PauliString::parse(lx)};
    c.logical_z = {PauliString::parse(lz)};
    c.k = 1;
    return c;
}

}  // namespace

QuantumCode builtin_code(BuiltinCode which) {
    switch (which) {
        case BuiltinCode::six_qubit_degenerate:
            return make_code({}, {"YIZXXY", "ZXIIXZ", "IZXXXX", "IIIZIZ", "ZZZIZI"}, {}, "ZIXIXI", "IZIIZZ");
        case BuiltinCode::six_qubit_subsystem:
            return make_code({}, {"YIZXXY", "ZXIIXZ", "IZXXXX", "ZZZIZI"}, {"IIIXII", "IIIZIZ"}, "ZIXIXI",
                             "IZIIZZ");
        case BuiltinCode::ea_613:
            // Bob's column is column 0.
            return make_code({0},
                             {"IZIZZZI", "IZZIIZZ", "ZZIIZIZ", "IXXIIXX", "IIXXXIX", "XXIIXIX"}, {},
                             "IIIIXXX", "IIZZIZI");
        case BuiltinCode::steane:
            return make_code({},
                             {"ZIIZIZZ", "IZIZZIZ", "IIZIZZZ", "XIIXIXX", "IXIXXIX", "IIXIXXX"}, {},
                             "XXXXXXX", "ZZZZZZZ");
    }
    throw UsageError("unknown builtin code");
}

// --- validation -------------------------------------------------------------

std::string_view diagnostic_kind_name(DiagnosticKind k) {
    switch (k) {
        case DiagnosticKind::shape: return "shape";
        case DiagnosticKind::stabilizer_commutation: return "stabilizer_commutation";
        case DiagnosticKind::stabilizer_dependence: return "stabilizer_dependence";
        case DiagnosticKind::gauge_commutation: return "gauge_commutation";
        case DiagnosticKind::gauge_pairing: return "gauge_pairing";
        case DiagnosticKind::gauge_dependence: return "gauge_dependence";
        case DiagnosticKind::logical_count: return "logical_count";
        case DiagnosticKind::logical_commutation: return "logical_commutation";
        case DiagnosticKind::logical_pairing: return "logical_pairing";
        case DiagnosticKind::row_count: return "row_count";
    }
    return "?";
}

namespace {

Diagnostic diag(DiagnosticKind kind, std::string msg, std::vector<std::size_t> rows = {}) {
    return Diagnostic{kind, std::move(msg), std::move(rows)};
}

std::string row_label(const char *prefix, std::size_t i) { return std::string(prefix) + std::to_string(i + 1); }

// First row index of `rows` whose removal leaves the rank unchanged.
std::size_t first_dependent_row(const CheckMatrix &rows) {
    CheckMatrix acc(rows.num_qubits());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        acc.push_back(rows[i]);
        if (!acc.is_independent()) return i;
    }
    return rows.size();
}

}  // namespace

std::optional<Diagnostic> validate_code(const QuantumCode &code) {
    const std::size_t n = code.n;
    if (n == 0) return diag(DiagnosticKind::shape, "code has no qubits");
    auto width_ok = [n](const PauliString &p) { return p.num_qubits() == n; };
    if (code.stabilizer.num_qubits() != n && !code.stabilizer.empty())
        return diag(DiagnosticKind::shape, "stabilizer width differs from n");
    if (code.gauge.num_qubits() != n && !code.gauge.empty())
        return diag(DiagnosticKind::shape, "gauge width differs from n");
    for (std::size_t i = 0; i < code.logical_x.size(); ++i)
        if (!width_ok(code.logical_x[i])) return diag(DiagnosticKind::shape, "logical X width differs from n", {i});
    for (std::size_t i = 0; i < code.logical_z.size(); ++i)
        if (!width_ok(code.logical_z[i])) return diag(DiagnosticKind::shape, "logical Z width differs from n", {i});
    std::set<std::size_t> seen;
    for (auto b : code.bob_columns) {
        if (b >= n) return diag(DiagnosticKind::shape, "Bob column " + std::to_string(b + 1) + " out of range");
        if (!seen.insert(b).second)
            return diag(DiagnosticKind::shape, "Bob column " + std::to_string(b + 1) + " listed twice");
    }

    const auto &S = code.stabilizer;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            if (symplectic_product(S[i], S[j]))
                return diag(DiagnosticKind::stabilizer_commutation,
                            row_label("stabilizer row ", i) + " (" + S[i].str() + ") anticommutes with " +
                                row_label("row ", j) + " (" + S[j].str() + ")",
                            {i, j});
    if (!S.is_independent()) {
        std::size_t i = first_dependent_row(S);
        return diag(DiagnosticKind::stabilizer_dependence,
                    row_label("stabilizer row ", i) + " is a product of earlier rows", {i});
    }

    const auto &G = code.gauge;
    if (G.size() % 2 != 0) return diag(DiagnosticKind::gauge_pairing, "gauge has an odd number of rows");
    for (std::size_t g = 0; g < G.size(); ++g)
        for (std::size_t i = 0; i < S.size(); ++i)
            if (symplectic_product(G[g], S[i]))
                return diag(DiagnosticKind::gauge_commutation,
                            row_label("gauge row ", g) + " anticommutes with " + row_label("stabilizer row ", i),
                            {g, i});
    for (std::size_t a = 0; a < G.size(); ++a)
        for (std::size_t b = a + 1; b < G.size(); ++b) {
            bool partners = (a % 2 == 0) && b == a + 1;
            if (symplectic_product(G[a], G[b]) != partners)
                return diag(DiagnosticKind::gauge_pairing,
                            row_label("gauge rows ", a) + " and " + std::to_string(b + 1) +
                                (partners ? " must anticommute" : " must commute"),
                            {a, b});
        }
    if (!G.empty() && !stack(S, G).is_independent())
        return diag(DiagnosticKind::gauge_dependence, "gauge rows are dependent on the stabilizer");

    if (code.logical_x.size() != code.k || code.logical_z.size() != code.k)
        return diag(DiagnosticKind::logical_count, "expected " + std::to_string(code.k) + " logical pairs");
    for (std::size_t i = 0; i < code.k; ++i) {
        for (const auto *L : {&code.logical_x[i], &code.logical_z[i]}) {
            for (std::size_t r = 0; r < S.size(); ++r)
                if (symplectic_product(*L, S[r]))
                    return diag(DiagnosticKind::logical_commutation,
                                "logical " + L->str() + " anticommutes with " + row_label("stabilizer row ", r),
                                {i, r});
            for (std::size_t r = 0; r < G.size(); ++r)
                if (symplectic_product(*L, G[r]))
                    return diag(DiagnosticKind::logical_commutation,
                                "logical " + L->str() + " anticommutes with " + row_label("gauge row ", r), {i, r});
        }
        for (std::size_t j = 0; j < code.k; ++j) {
            if (symplectic_product(code.logical_x[i], code.logical_z[j]) != (i == j))
                return diag(DiagnosticKind::logical_pairing,
                            "logical X" + std::to_string(i + 1) + " / Z" + std::to_string(j + 1) +
                                (i == j ? " must anticommute" : " must commute"),
                            {i, j});
            if (j > i && (symplectic_product(code.logical_x[i], code.logical_x[j]) ||
                          symplectic_product(code.logical_z[i], code.logical_z[j])))
                return diag(DiagnosticKind::logical_pairing, "logicals of different pairs must commute", {i, j});
        }
    }

    if (S.size() + code.gauge_qubits() + code.k != n)
        return diag(DiagnosticKind::row_count, "stabilizer rows + gauge qubits + k = " +
                                                   std::to_string(S.size() + code.gauge_qubits() + code.k) +
                                                   ", expected n = " + std::to_string(n));
    return std::nullopt;
}

// --- error sets and verdicts -----------------------------------------------

namespace {

std::vector<PauliString> singles(std::size_t n, const std::vector<std::size_t> &columns) {
    if (columns.empty()) throw UsageError("error set needs at least one column");
    std::vector<PauliString> out;
    for (auto c : columns) {
        if (c >= n) throw UsageError("error column " + std::to_string(c + 1) + " out of range");
        for (char L : {'X', 'Y', 'Z'}) out.push_back(PauliString::single(n, c, L));
    }
    return out;
}

}  // namespace

std::vector<PauliString> error_products(std::size_t n, const std::vector<std::size_t> &columns) {
    auto s = singles(n, columns);
    std::vector<PauliString> out = s;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) out.push_back(pauli_multiply(s[a], s[b]));
    return out;
}

std::vector<PauliString> error_set_single_and_pairs(std::size_t n, const std::vector<std::size_t> &columns) {
    std::vector<PauliString> out;
    std::set<PauliString> seen;
    for (const auto &p : error_products(n, columns))
        if (seen.insert(p).second) out.push_back(p);
    return out;
}

std::string verdict_str(const Verdict &v) {
    switch (v.kind) {
        case Verdict::Kind::anticommutes: return "anticommutes with h" + std::to_string(v.generator + 1);
        case Verdict::Kind::in_stabilizer: return "in stabilizer";
        case Verdict::Kind::in_gauge: return "in gauge";
        case Verdict::Kind::fail: return "FAIL";
    }
    return "?";
}

std::size_t CorrectionReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict &v) { return v.kind == Verdict::Kind::fail; }));
}

namespace {

struct Classifier {
    const QuantumCode &code;
    PauliSpan stab;
    std::optional<PauliSpan> full;

    explicit Classifier(const QuantumCode &c) : code(c), stab(c.stabilizer.empty() ? CheckMatrix(c.n) : c.stabilizer) {
        if (!c.gauge.empty()) full.emplace(stack(c.stabilizer.empty() ? CheckMatrix(c.n) : c.stabilizer, c.gauge));
    }

    Verdict operator()(const PauliString &e) const {
        if (e.num_qubits() != code.n)
            throw DimensionError("error width " + std::to_string(e.num_qubits()) + " differs from code width " +
                                 std::to_string(code.n));
        for (std::size_t i = 0; i < code.stabilizer.size(); ++i)
            if (symplectic_product(e, code.stabilizer[i])) return {Verdict::Kind::anticommutes, i};
        if (stab.contains(e)) return {Verdict::Kind::in_stabilizer, 0};
        if (full && full->contains(e)) return {Verdict::Kind::in_gauge, 0};
        return {Verdict::Kind::fail, 0};
    }
};

}  // namespace

Verdict classify_error(const QuantumCode &code, const PauliString &e) { return Classifier(code)(e); }

CorrectionReport verify_correction(const QuantumCode &code, const std::vector<PauliString> &errors) {
    Classifier classify(code);
    CorrectionReport rep;
    rep.errors = errors;
    rep.verdicts.reserve(errors.size());
    for (const auto &e : errors) rep.verdicts.push_back(classify(e));
    rep.checked = errors.size();
    return rep;
}

std::vector<std::size_t> error_columns(const QuantumCode &code, bool global) {
    return global ? code.all_columns() : code.alice_columns();
}

// --- distance ---------------------------------------------------------------

DistanceResult distance(const QuantumCode &code, std::size_t max_weight, bool global) {
    const auto cols = error_columns(code, global);
    const std::size_t n = code.n;
    max_weight = std::min(max_weight, cols.size());
    CheckMatrix all = code.stabilizer.empty() ? CheckMatrix(n) : code.stabilizer;
    for (const auto &g : code.gauge) all.push_back(g);
    PauliSpan span(all);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> stab;
    for (const auto &s : code.stabilizer) stab.emplace_back(s.x_bits(), s.z_bits());

    static constexpr std::array<std::pair<bool, bool>, 3> kLetters = {{{true, false}, {true, true}, {false, true}}};
    std::vector<std::size_t> pick;
    for (std::size_t w = 1; w <= max_weight; ++w) {
        pick.resize(w);
        for (std::size_t i = 0; i < w; ++i) pick[i] = i;
        while (true) {
            std::size_t combos = 1;
            for (std::size_t i = 0; i < w; ++i) combos *= 3;
            for (std::size_t code_idx = 0; code_idx < combos; ++code_idx) {
                std::uint64_t x = 0, z = 0;
                std::size_t t = code_idx;
                // most significant digit on the first chosen column
                for (std::size_t i = w; i-- > 0;) {
                    auto [xb, zb] = kLetters[t % 3];
                    t /= 3;
                    std::uint64_t m = std::uint64_t{1} << cols[pick[i]];
                    if (xb) x |= m;
                    if (zb) z |= m;
                }
                bool commutes = true;
                for (auto [sx, sz] : stab) {
                    if (std::popcount((x & sz) ^ (z & sx)) & 1) {
                        commutes = false;
                        break;
                    }
                }
                if (!commutes) continue;
                PauliString p(n, x, z);
                if (!span.contains(p)) return {w, p};
            }
            // next combination
            std::size_t i = w;
            while (i > 0 && pick[i - 1] == cols.size() - w + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < w; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {};
}

// --- singleton --------------------------------------------------------------

std::string_view singleton_status_name(SingletonStatus s) {
    switch (s) {
        case SingletonStatus::saturated: return "saturated";
        case SingletonStatus::satisfied: return "satisfied";
        case SingletonStatus::violated: return "violated";
    }
    return "?";
}

SingletonStatus singleton_check(long n, long k, long r, long d) {
    if (n < 0 || k < 0 || r < 0 || d < 0) throw UsageError("singleton_check: arguments must be nonnegative");
    long lhs = n - k - r;
    long rhs = 2 * (d - 1);
    if (lhs == rhs) return SingletonStatus::saturated;
    return lhs > rhs ? SingletonStatus::satisfied : SingletonStatus::violated;
}

// --- subsystem conversion ---------------------------------------------------

QuantumCode to_subsystem(const QuantumCode &code, std::size_t row, const PauliString &partner) {
    if (row >= code.stabilizer.size()) throw UsageError("to_subsystem: row " + std::to_string(row + 1) + " out of range");
    if (partner.num_qubits() != code.n) throw DimensionError("to_subsystem: partner width differs from code width");
    const PauliString promoted = code.stabilizer[row];
    if (!symplectic_product(promoted, partner))
        throw StructureError("to_subsystem: partner " + partner.str() + " does not anticommute with " + promoted.str());
    for (std::size_t i = 0; i < code.stabilizer.size(); ++i)
        if (i != row && symplectic_product(partner, code.stabilizer[i]))
            throw StructureError("to_subsystem: partner anticommutes with stabilizer row " + std::to_string(i + 1));
    for (const auto &g : code.gauge)
        if (symplectic_product(partner, g)) throw StructureError("to_subsystem: partner anticommutes with a gauge row");
    for (std::size_t i = 0; i < code.k; ++i)
        if (symplectic_product(partner, code.logical_x[i]) || symplectic_product(partner, code.logical_z[i]))
            throw StructureError("to_subsystem: partner anticommutes with a logical operator");
    QuantumCode out = code;
    out.stabilizer.erase(row);
    out.gauge.push_back(partner);
    out.gauge.push_back(promoted);
    return out;
}

// --- logical derivation -----------------------------------------------------


void derive_logicals(QuantumCode &code) {
    const auto alice = code.alice_columns();
    if (alice.empty()) throw StructureError("derive_logicals: no Alice columns");
    CheckMatrix m(alice.size());
    for (const auto &s : code.stabilizer) m.push_back(select_columns(s, alice));
    for (const auto &g : code.gauge) m.push_back(select_columns(g, alice));

    // Canonical basis of the centralizer, then a complement of its overlap with span(m).
    CheckMatrix cent = centralizer(m);
    std::vector<PauliString> pool;
    if (!cent.empty()) {
        CheckMatrix acc = m;
        const PauliSpan cent_span(cent);
        for (const auto &c : cent_span.basis()) {
            if (acc.empty() || !PauliSpan(acc).contains(c)) {
                pool.push_back(c);
                acc.push_back(c);
            }
        }
    }

    code.logical_x.clear();
    code.logical_z.clear();
    while (!pool.empty()) {
        PauliString u = pool.front();
        std::size_t j = 1;
        while (j < pool.size() && !symplectic_product(u, pool[j])) ++j;
        if (j == pool.size()) throw StructureError("derive_logicals: centralizer quotient is not symplectic");
        PauliString v = pool[j];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
        pool.erase(pool.begin());
        for (auto &w : pool) {
            bool with_v = symplectic_product(w, v);
            bool with_u = symplectic_product(w, u);
            if (with_v) w = pauli_multiply(w, u);
            if (with_u) w = pauli_multiply(w, v);
        }
        code.logical_z.push_back(spread_columns(u, code.n, alice));
        code.logical_x.push_back(spread_columns(v, code.n, alice));
    }
    code.k = code.logical_x.size();
}

}  // namespace qec
