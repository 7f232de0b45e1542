#include <cctype>
#include <fstream>
#include <sstream>

#include "qec/errors.h"
#include "qec/stabilizer.h"

namespace qec {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Yields (line number, content) with comments stripped and blanks skipped.
template <typename Fn>
void for_each_line(std::string_view text, Fn &&fn) {
    std::size_t lineno = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) fn(lineno, line);
    }
}

[[noreturn]] void fail_at(std::size_t lineno, const std::string &msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

CheckMatrix parse_pauli_rows(std::string_view text) {
    std::vector<PauliString> rows;
    for_each_line(text, [&](std::size_t lineno, std::string_view line) {
        if (line.front() == '[') return;
        try {
            rows.push_back(PauliString::parse(line));
        } catch (const std::exception &e) {
            fail_at(lineno, e.what());
        }
        if (rows.back().num_qubits() != rows.front().num_qubits()) fail_at(lineno, "row width differs from first row");
    });
    if (rows.empty()) throw ParseError("no Pauli rows found");
    std::size_t n = rows.front().num_qubits();
    return CheckMatrix(n, std::move(rows));
}

QuantumCode parse_code(std::string_view text) {
    enum class Section { none, stabilizer, gauge, logical_x, logical_z, bob };
    Section cur = Section::none;
    std::vector<PauliString> stab, gauge, lx, lz;
    std::vector<std::size_t> bob;
    std::size_t n = 0;

    for_each_line(text, [&](std::size_t lineno, std::string_view line) {
        if (line.front() == '[') {
            if (line == "[stabilizer]") cur = Section::stabilizer;
            else if (line == "[gauge]") cur = Section::gauge;
            else if (line == "[logical_x]") cur = Section::logical_x;
            else if (line == "[logical_z]") cur = Section::logical_z;
            else if (line == "[bob_columns]") cur = Section::bob;
            else fail_at(lineno, "unknown section " + std::string(line));
            return;
        }
        if (cur == Section::none) fail_at(lineno, "content before first section header");
        if (cur == Section::bob) {
            std::size_t pos = 0;
            long v = 0;
            try {
                v = std::stol(std::string(line), &pos);
            } catch (const std::exception &) {
                fail_at(lineno, "expected a 1-based column index");
            }
            if (pos != line.size() || v < 1) fail_at(lineno, "expected a 1-based column index");
            bob.push_back(static_cast<std::size_t>(v - 1));
            return;
        }
        PauliString p(1);
        try {
            p = PauliString::parse(line);
        } catch (const std::exception &e) {
            fail_at(lineno, e.what());
        }
        if (n == 0) n = p.num_qubits();
        if (p.num_qubits() != n) fail_at(lineno, "row width " + std::to_string(p.num_qubits()) + " differs from " + std::to_string(n));
        switch (cur) {
            case Section::stabilizer: stab.push_back(p); break;
            case Section::gauge: gauge.push_back(p); break;
            case Section::logical_x: lx.push_back(p); break;
            case Section::logical_z: lz.push_back(p); break;
            default: break;
        }
    });

    if (n == 0) throw ParseError("code file has no Pauli rows");
    for (auto b : bob)
        if (b >= n) throw ParseError("Bob column " + std::to_string(b + 1) + " exceeds width " + std::to_string(n));
    if (lx.size() != lz.size()) throw ParseError("[logical_x] and [logical_z] must list the same number of rows");

    QuantumCode code;
    code.n = n;
    code.bob_columns = std::move(bob);
    code.stabilizer = CheckMatrix(n, std::move(stab));
    code.gauge = CheckMatrix(n, std::move(gauge));
    if (lx.empty()) {
        // A malformed group keeps k = 0; validate_code names the defect.
        try {
            derive_logicals(code);
        } catch (const StructureError &) {
            code.k = 0;
            code.logical_x.clear();
            code.logical_z.clear();
        }
    } else {
        code.k = lx.size();
        code.logical_x = std::move(lx);
        code.logical_z = std::move(lz);
    }
    return code;
}

std::string format_code(const QuantumCode &code) {
    std::ostringstream out;
    out << "# n=" << code.n << " k=" << code.k;
    if (code.gauge_qubits()) out << " r=" << code.gauge_qubits();
    if (code.ebits()) out << " c=" << code.ebits();
    out << "\n[stabilizer]\n";
    for (const auto &p : code.stabilizer) out << p.str() << '\n';
    if (!code.gauge.empty()) {
        out << "[gauge]\n";
        for (const auto &p : code.gauge) out << p.str() << '\n';
    }
    out << "[logical_x]\n";
    for (const auto &p : code.logical_x) out << p.str() << '\n';
    out << "[logical_z]\n";
    for (const auto &p : code.logical_z) out << p.str() << '\n';
    if (!code.bob_columns.empty()) {
        out << "[bob_columns]\n";
        for (auto b : code.bob_columns) out << b + 1 << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

QuantumCode load_code_file(const std::string &path) { return parse_code(read_text_file(path)); }

void save_code_file(const QuantumCode &code, const std::string &path) { write_text_file(path, format_code(code)); }

}  // namespace qec
