#include "qec/clifford.h"

#include <cctype>
#include <sstream>

#include "qec/errors.h"

namespace qec {

std::string_view gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::P: return "P";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::SWAP: return "SWAP";
    }
    return "?";
}

std::string CliffordGate::str() const {
    std::string s(gate_name(kind));
    s += ' ' + std::to_string(a + 1);
    if (two_qubit()) s += ' ' + std::to_string(b + 1);
    return s;
}

CliffordGate parse_gate(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string name;
    in >> name;
    for (auto &ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    GateKind kind;
    if (name == "H") kind = GateKind::H;
    else if (name == "P" || name == "S") kind = GateKind::P;
    else if (name == "CNOT" || name == "CN" || name == "CX") kind = GateKind::CNOT;
    else if (name == "CZ") kind = GateKind::CZ;
    else if (name == "SWAP") kind = GateKind::SWAP;
    else throw ParseError("unknown gate '" + name + "'");
    CliffordGate g{kind, 0, 0};
    long a = 0, b = 0;
    if (!(in >> a) || a < 1) throw ParseError("gate '" + std::string(line) + "': expected a 1-based qubit index");
    g.a = static_cast<std::size_t>(a - 1);
    if (g.two_qubit()) {
        if (!(in >> b) || b < 1) throw ParseError("gate '" + std::string(line) + "': expected two qubit indices");
        g.b = static_cast<std::size_t>(b - 1);
        if (g.a == g.b) throw ParseError("gate '" + std::string(line) + "': qubits must differ");
    }
    std::string extra;
    if (in >> extra) throw ParseError("gate '" + std::string(line) + "': trailing text");
    return g;
}

CliffordCircuit::CliffordCircuit(std::size_t num_qubits, std::vector<CliffordGate> gates) : n_(num_qubits) {
    for (const auto &g : gates) push_back(g);
}

void CliffordCircuit::push_back(const CliffordGate &g) {
    if (g.max_qubit() >= n_)
        throw DimensionError("gate " + g.str() + " exceeds circuit width " + std::to_string(n_));
    if (g.two_qubit() && g.a == g.b) throw DimensionError("gate " + g.str() + " uses one qubit twice");
    gates_.push_back(g);
}

void CliffordCircuit::append(const CliffordCircuit &other) {
    for (const auto &g : other.gates_) push_back(g);
}

CliffordCircuit CliffordCircuit::inverse() const {
    CliffordCircuit out(n_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(*it);
        if (it->kind == GateKind::P) {
            out.gates_.push_back(*it);
            out.gates_.push_back(*it);
        }
    }
    return out;
}

std::string CliffordCircuit::str() const {
    std::string s;
    for (const auto &g : gates_) s += g.str() + '\n';
    return s;
}

CliffordCircuit CliffordCircuit::parse(std::string_view text, std::size_t num_qubits) {
    std::vector<CliffordGate> gates;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            gates.push_back(parse_gate(line));
        } catch (const ParseError &e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (num_qubits == 0)
        for (const auto &g : gates) num_qubits = std::max(num_qubits, g.max_qubit() + 1);
    return CliffordCircuit(num_qubits, std::move(gates));
}

// --- conjugation ------------------------------------------------------------

PauliString conjugate_pauli(const CliffordGate &g, const PauliString &p) {
    if (g.max_qubit() >= p.num_qubits())
        throw DimensionError("gate " + g.str() + " exceeds Pauli width " + std::to_string(p.num_qubits()));
    PauliString out = p;
    const std::size_t i = g.a, j = g.b;
    switch (g.kind) {
        case GateKind::H: out.set_bits(i, p.z(i), p.x(i)); break;
        case GateKind::P: out.set_bits(i, p.x(i), p.z(i) ^ p.x(i)); break;
        case GateKind::CNOT:
            out.set_bits(j, p.x(j) ^ p.x(i), p.z(j));
            out.set_bits(i, p.x(i), p.z(i) ^ p.z(j));
            break;
        case GateKind::CZ:
            out.set_bits(j, p.x(j), p.z(j) ^ p.x(i));
            out.set_bits(i, p.x(i), p.z(i) ^ p.x(j));
            break;
        case GateKind::SWAP:
            out.set_bits(i, p.x(j), p.z(j));
            out.set_bits(j, p.x(i), p.z(i));
            break;
    }
    return out;
}

PauliString conjugate_pauli(const CliffordCircuit &c, const PauliString &p) {
    if (c.num_qubits() != p.num_qubits())
        throw DimensionError("circuit width " + std::to_string(c.num_qubits()) + " differs from Pauli width " +
                             std::to_string(p.num_qubits()));
    PauliString out = p;
    for (const auto &g : c.gates()) out = conjugate_pauli(g, out);
    return out;
}

CheckMatrix conjugate_check_matrix(const CliffordCircuit &c, const CheckMatrix &m) {
    if (c.num_qubits() != m.num_qubits())
        throw DimensionError("circuit width " + std::to_string(c.num_qubits()) + " differs from matrix width " +
                             std::to_string(m.num_qubits()));
    CheckMatrix out(m.num_qubits());
    for (const auto &row : m) out.push_back(conjugate_pauli(c, row));
    return out;
}

void conjugate_binary_inplace(const CliffordGate &g, BitMatrix &zx) {
    const std::size_t n = zx.cols() / 2;
    if (g.max_qubit() >= n) throw DimensionError("gate " + g.str() + " exceeds matrix width");
    const std::size_t i = g.a, j = g.b;
    for (std::size_t r = 0; r < zx.rows(); ++r) {
        auto z = [&](std::size_t q) { return zx.get(r, q); };
        auto x = [&](std::size_t q) { return zx.get(r, n + q); };
        switch (g.kind) {
            case GateKind::H: {
                bool zi = z(i), xi = x(i);
                zx.set(r, i, xi);
                zx.set(r, n + i, zi);
                break;
            }
            case GateKind::P:
                if (x(i)) zx.flip(r, i);
                break;
            case GateKind::CNOT:
                if (x(i)) zx.flip(r, n + j);
                if (z(j)) zx.flip(r, i);
                break;
            case GateKind::CZ: {
                bool xi = x(i), xj = x(j);
                if (xi) zx.flip(r, j);
                if (xj) zx.flip(r, i);
                break;
            }
            case GateKind::SWAP: {
                bool zi = z(i), xi = x(i);
                zx.set(r, i, z(j));
                zx.set(r, n + i, x(j));
                zx.set(r, j, zi);
                zx.set(r, n + j, xi);
                break;
            }
        }
    }
}

// --- logical circuits -------------------------------------------------------

PauliString on_block(const PauliString &p, std::size_t block, std::size_t copies) {
    if (block >= copies) throw DimensionError("on_block: block index out of range");
    const std::size_t n = p.num_qubits();
    PauliString out = block == 0 ? p : PauliString(n);
    for (std::size_t b = 1; b < copies; ++b) out = tensor(out, b == block ? p : PauliString(n));
    return out;
}

CheckMatrix block_stabilizer(const QuantumCode &code, std::size_t copies) {
    if (copies == 0) throw UsageError("block_stabilizer: copies must be positive");
    CheckMatrix out(code.n * copies);
    for (std::size_t b = 0; b < copies; ++b)
        for (const auto &s : code.stabilizer) out.push_back(on_block(s, b, copies));
    return out;
}

bool verify_logical_circuit(const CliffordCircuit &circuit, const QuantumCode &code, std::size_t copies,
                            const std::vector<std::pair<PauliString, PauliString>> &expected) {
    if (circuit.num_qubits() != copies * code.n)
        throw DimensionError("verify_logical_circuit: circuit width " + std::to_string(circuit.num_qubits()) +
                             " differs from " + std::to_string(copies) + " x " + std::to_string(code.n));
    CheckMatrix stab = block_stabilizer(code, copies);
    PauliSpan span(stab);
    for (const auto &s : stab)
        if (!span.contains(conjugate_pauli(circuit, s))) return false;
    for (const auto &[in, out] : expected) {
        if (in.num_qubits() != circuit.num_qubits() || out.num_qubits() != circuit.num_qubits())
            throw DimensionError("verify_logical_circuit: expected-map operator width mismatch");
        if (!span.contains(pauli_multiply(conjugate_pauli(circuit, in), out))) return false;
    }
    return true;
}

}  // namespace qec
