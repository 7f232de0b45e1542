#include "qec/synthesis.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qec {

// --- Gram-Schmidt -----------------------------------------------------------

CheckMatrix GramSchmidtResult::rows() const {
    CheckMatrix out(isotropic.num_qubits());
    for (const auto &[a, b] : pairs) {
        out.push_back(a);
        out.push_back(b);
    }
    for (const auto &r : isotropic) out.push_back(r);
    return out;
}

GramSchmidtResult symplectic_gram_schmidt(const CheckMatrix &gens) {
    if (!gens.is_independent()) throw IndependenceError("symplectic_gram_schmidt: rows are linearly dependent");
    GramSchmidtResult res;
    res.isotropic = CheckMatrix(gens.num_qubits());
    std::vector<PauliString> pool(gens.begin(), gens.end());
    while (!pool.empty()) {
        PauliString u = pool.front();
        std::size_t j = 1;
        while (j < pool.size() && !symplectic_product(u, pool[j])) ++j;
        if (j == pool.size()) {
            res.isotropic.push_back(u);
            pool.erase(pool.begin());
            continue;
        }
        PauliString v = pool[j];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
        pool.erase(pool.begin());
        for (auto &w : pool) {
            bool with_v = symplectic_product(w, v);
            bool with_u = symplectic_product(w, u);
            if (with_v) w = pauli_multiply(w, u);
            if (with_u) w = pauli_multiply(w, v);
        }
        res.pairs.emplace_back(u, v);
    }
    return res;
}

std::size_t min_ebits_css(const BitMatrix &h) {
    if (h.rows() == 0) return 0;
    return gf2_rank(h * h.transpose());
}

// --- canonical form ---------------------------------------------------------

namespace {

void check_partition(std::size_t n, std::initializer_list<const std::vector<std::size_t> *> parts) {
    std::set<std::size_t> seen;
    std::size_t total = 0;
    for (const auto *p : parts) {
        for (auto c : *p) {
            if (c >= n) throw UsageError("canonical_target: column " + std::to_string(c + 1) + " out of range");
            if (!seen.insert(c).second)
                throw UsageError("canonical_target: column " + std::to_string(c + 1) + " listed twice");
        }
        total += p->size();
    }
    if (total != n) throw UsageError("canonical_target: column lists do not cover all " + std::to_string(n) + " columns");
}

CheckMatrix canonical_rows(std::size_t n, const std::vector<std::size_t> &pair_columns,
                           const std::vector<std::size_t> &ancilla_columns) {
    CheckMatrix out(n);
    for (auto c : pair_columns) {
        out.push_back(PauliString::single(n, c, 'Z'));
        out.push_back(PauliString::single(n, c, 'X'));
    }
    for (auto c : ancilla_columns) out.push_back(PauliString::single(n, c, 'Z'));
    return out;
}

}  // namespace

CheckMatrix canonical_target(std::size_t n, std::size_t k, std::size_t c, const std::vector<std::size_t> &ebit_columns,
                             const std::vector<std::size_t> &ancilla_columns,
                             const std::vector<std::size_t> &info_columns) {
    if (n == 0) throw UsageError("canonical_target: n must be positive");
    if (k > n || c > n - k) throw UsageError("canonical_target: need c <= n - k");
    if (ebit_columns.size() != c) throw UsageError("canonical_target: expected " + std::to_string(c) + " ebit columns");
    if (info_columns.size() != k) throw UsageError("canonical_target: expected " + std::to_string(k) + " info columns");
    check_partition(n, {&ebit_columns, &ancilla_columns, &info_columns});
    return canonical_rows(n, ebit_columns, ancilla_columns);
}

// --- scripts ----------------------------------------------------------------

std::string ScriptOp::str() const {
    switch (kind) {
        case Kind::gate: return gate.str();
        case Kind::row_add: return "ROWADD " + std::to_string(src + 1) + ' ' + std::to_string(dst + 1);
        case Kind::row_swap: return "ROWSWAP " + std::to_string(src + 1) + ' ' + std::to_string(dst + 1);
    }
    return "?";
}

ScriptOp parse_script_op(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string name;
    in >> name;
    for (auto &ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (name != "ROWADD" && name != "ROWSWAP") return ScriptOp::of(parse_gate(line));
    long a = 0, b = 0;
    std::string extra;
    if (!(in >> a >> b) || a < 1 || b < 1 || (in >> extra))
        throw ParseError("'" + std::string(line) + "': expected two 1-based row indices");
    if (a == b) throw ParseError("'" + std::string(line) + "': rows must differ");
    auto i = static_cast<std::size_t>(a - 1), j = static_cast<std::size_t>(b - 1);
    return name == "ROWADD" ? ScriptOp::row_add(i, j) : ScriptOp::row_swap(i, j);
}

Script parse_script(std::string_view text) {
    Script out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(parse_script_op(line));
        } catch (const ParseError &e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string format_script(const Script &s) {
    std::string out;
    for (const auto &op : s) out += op.str() + '\n';
    return out;
}

void apply_script_op(const ScriptOp &op, CheckMatrix &m) {
    switch (op.kind) {
        case ScriptOp::Kind::gate:
            for (std::size_t r = 0; r < m.size(); ++r) m[r] = conjugate_pauli(op.gate, m[r]);
            break;
        case ScriptOp::Kind::row_add:
            if (op.src >= m.size() || op.dst >= m.size()) throw DimensionError("ROWADD: row index out of range");
            m[op.dst] = pauli_multiply(m[op.dst], m[op.src]);
            break;
        case ScriptOp::Kind::row_swap:
            if (op.src >= m.size() || op.dst >= m.size()) throw DimensionError("ROWSWAP: row index out of range");
            std::swap(m[op.src], m[op.dst]);
            break;
    }
}

std::vector<CheckMatrix> replay_script(const CheckMatrix &start, const Script &script) {
    std::vector<CheckMatrix> out;
    out.reserve(script.size());
    CheckMatrix m = start;
    for (const auto &op : script) {
        apply_script_op(op, m);
        out.push_back(m);
    }
    return out;
}

std::uint64_t matrix_digest(const CheckMatrix &m, std::uint64_t previous) {
    std::uint64_t h = previous;
    auto feed = [&h](unsigned char byte) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    };
    for (const auto &row : m.to_binary().to_strings()) {
        for (char ch : row) feed(static_cast<unsigned char>(ch));
        feed('\n');
    }
    return h;
}

// --- encoder synthesis ------------------------------------------------------

namespace {

class Reducer {
  public:
    Reducer(CheckMatrix m, std::vector<bool> tags) : m_(std::move(m)), tags_(std::move(tags)) {
        chain_.push_back(matrix_digest(m_));
    }

    void gate(const CliffordGate &g) { record(ScriptOp::of(g)); }
    void row_add(std::size_t src, std::size_t dst) { record(ScriptOp::row_add(src, dst)); }
    void row_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        record(ScriptOp::row_swap(a, b));
        std::swap(tags_[a], tags_[b]);
    }

    [[noreturn]] void stall(const std::string &why) const { throw SynthesisError("synthesize_encoder: " + why, script_); }

    // Clifford gates on columns >= t turning row p into X_t.
    void make_x(std::size_t p, std::size_t t) {
        const std::size_t n = m_.num_qubits();
        std::size_t j = t;
        while (j < n && m_[p].letter(j) == 'I') ++j;
        if (j == n) stall("row " + std::to_string(p + 1) + " has no support left (dependent rows?)");
        if (j != t) gate(CliffordGate::swap(t, j));
        switch (m_[p].letter(t)) {
            case 'Z': gate(CliffordGate::h(t)); break;
            case 'Y': gate(CliffordGate::p(t)); break;
            default: break;
        }
        for (j = t + 1; j < n; ++j) {
            char L = m_[p].letter(j);
            if (L == 'I') continue;
            if (L == 'Z') gate(CliffordGate::h(j));
            if (L == 'Y') gate(CliffordGate::p(j));
            gate(CliffordGate::cnot(t, j));
        }
    }

    // Row p+1 anticommutes with row p == X_t; leaves the pair as (Z_t, X_t).
    void finish_pair(std::size_t p, std::size_t t) {
        const std::size_t n = m_.num_qubits();
        if (m_[p + 1].x(t)) row_add(p, p + 1);
        for (std::size_t j = t + 1; j < n; ++j) {
            char L = m_[p + 1].letter(j);
            if (L == 'I') continue;
            if (L == 'Y') gate(CliffordGate::p(j));
            if (L != 'Z') gate(CliffordGate::h(j));
            gate(CliffordGate::cnot(j, t));
        }
        gate(CliffordGate::h(t));
        for (std::size_t w = p + 2; w < m_.size(); ++w) {
            bool clear_z = m_[w].z(t), clear_x = m_[w].x(t);
            if (clear_z) row_add(p, w);
            if (clear_x) row_add(p + 1, w);
        }
    }

    void isolate_single(std::size_t p, std::size_t t) {
        make_x(p, t);
        gate(CliffordGate::h(t));
        for (std::size_t w = p + 1; w < m_.size(); ++w) {
            if (m_[w].x(t)) stall("row " + std::to_string(w + 1) + " anticommutes with an isotropic row");
            if (m_[w].z(t)) row_add(p, w);
        }
    }

    const CheckMatrix &matrix() const { return m_; }
    const std::vector<bool> &tags() const { return tags_; }
    const Script &script() const { return script_; }
    const std::vector<std::uint64_t> &chain() const { return chain_; }

  private:
    void record(const ScriptOp &op) {
        apply_script_op(op, m_);
        script_.push_back(op);
        chain_.push_back(matrix_digest(m_, chain_.back()));
    }

    CheckMatrix m_;
    std::vector<bool> tags_;
    Script script_;
    std::vector<std::uint64_t> chain_;
};

CheckMatrix rows_where(const CheckMatrix &m, const std::vector<bool> &tags, bool want) {
    CheckMatrix out(m.num_qubits());
    for (std::size_t i = 0; i < m.size(); ++i)
        if (tags[i] == want) out.push_back(m[i]);
    return out;
}

}  // namespace

CheckMatrix SynthesisResult::canonical_stabilizer() const { return rows_where(canonical, from_stabilizer, true); }

SynthesisResult synthesize_encoder(const QuantumCode &code) {
    if (auto d = validate_code(code)) throw StructureError("synthesize_encoder: invalid code: " + d->message);
    const auto alice = code.alice_columns();
    const std::size_t na = alice.size();
    CheckMatrix input(na);
    std::vector<bool> tags;
    for (const auto &s : code.stabilizer) {
        input.push_back(select_columns(s, alice));
        tags.push_back(true);
    }
    for (const auto &g : code.gauge) {
        input.push_back(select_columns(g, alice));
        tags.push_back(false);
    }

    SynthesisResult res;
    res.input = input;
    Reducer red(input, tags);
    std::vector<std::size_t> pair_columns;
    std::size_t p = 0, t = 0;

    // Anticommuting pairs first, so ebit (then gauge) columns are the lowest.
    while (true) {
        const CheckMatrix &m = red.matrix();
        std::size_t u = m.size(), v = m.size();
        for (std::size_t i = p; i < m.size() && u == m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j)
                if (symplectic_product(m[i], m[j])) {
                    u = i;
                    v = j;
                    break;
                }
        if (u == m.size()) break;
        if (t >= na) red.stall("ran out of columns while pairing rows");
        red.row_swap(u, p);
        if (v == p) v = u;
        red.row_swap(v, p + 1);
        red.make_x(p, t);
        red.finish_pair(p, t);
        pair_columns.push_back(t);
        if (red.tags()[p]) res.ebit_columns.push_back(t);
        else res.gauge_columns.push_back(t);
        p += 2;
        ++t;
    }
    while (p < red.matrix().size()) {
        if (t >= na) red.stall("ran out of columns for isotropic rows");
        red.isolate_single(p, t);
        res.ancilla_columns.push_back(t);
        ++p;
        ++t;
    }
    for (; t < na; ++t) res.info_columns.push_back(t);

    res.canonical = red.matrix();
    res.from_stabilizer = red.tags();
    res.reduction = red.script();
    res.hash_chain = red.chain();
    res.ebits = res.ebit_columns.size();
    res.gauge_qubits = res.gauge_columns.size();
    if (res.canonical != canonical_rows(na, pair_columns, res.ancilla_columns))
        throw SynthesisError("synthesize_encoder: reduction did not reach canonical form", res.reduction);

    CliffordCircuit forward(na);
    for (const auto &op : res.reduction)
        if (op.kind == ScriptOp::Kind::gate) forward.push_back(op.gate);
    res.encoder = forward.inverse();

    CheckMatrix stab_in = rows_where(input, tags, true);
    CheckMatrix stab_out = conjugate_check_matrix(res.encoder, res.canonical_stabilizer());
    if (!group_equal(conjugate_check_matrix(res.encoder, res.canonical), input) ||
        (stab_in.empty() != stab_out.empty()) || (!stab_in.empty() && !group_equal(stab_out, stab_in)))
        throw SynthesisError("synthesize_encoder: encoder does not reproduce the input group", res.reduction);
    return res;
}

std::vector<std::pair<PauliString, PauliString>> encoded_logicals(const SynthesisResult &r, const QuantumCode &code) {
    const auto alice = code.alice_columns();
    const std::size_t na = alice.size();
    std::vector<std::pair<PauliString, PauliString>> out;
    for (auto c : r.info_columns) {
        PauliString x = conjugate_pauli(r.encoder, PauliString::single(na, c, 'X'));
        PauliString z = conjugate_pauli(r.encoder, PauliString::single(na, c, 'Z'));
        out.emplace_back(spread_columns(x, code.n, alice), spread_columns(z, code.n, alice));
    }
    return out;
}

}  // namespace qec
