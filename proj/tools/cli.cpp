#include "cli.h"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qec/clifford.h"
#include "qec/cssea.h"
#include "qec/errors.h"
#include "qec/search.h"
#include "qec/stabilizer.h"
#include "qec/statevector.h"
#include "qec/synthesis.h"

namespace qec::cli {

using nlohmann::json;

std::string CommandOutcome::rendered() const {
    if (json_output) return report.dump(2) + "\n";
    return text;
}

namespace {

std::string read_input(const std::string &path, std::istream &in) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return read_text_file(path);
}

json rows_json(const CheckMatrix &m) { return m.to_strings(); }

json paulis_json(const std::vector<PauliString> &v) {
    json out = json::array();
    for (const auto &p : v) out.push_back(p.str());
    return out;
}

json one_based(const std::vector<std::size_t> &cols) {
    json out = json::array();
    for (auto c : cols) out.push_back(c + 1);
    return out;
}

json code_json(const QuantumCode &code) {
    return {{"n", code.n},
            {"k", code.k},
            {"r", code.gauge_qubits()},
            {"c", code.ebits()},
            {"stabilizer", rows_json(code.stabilizer)},
            {"gauge", rows_json(code.gauge)},
            {"logical_x", paulis_json(code.logical_x)},
            {"logical_z", paulis_json(code.logical_z)},
            {"bob_columns", one_based(code.bob_columns)}};
}

std::string join_rows(const std::vector<std::size_t> &rows) {
    std::string s;
    for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? " " : "") + std::to_string(rows[i] + 1);
    return s;
}

json diagnostic_json(const Diagnostic &d) {
    return {{"kind", diagnostic_kind_name(d.kind)}, {"message", d.message}, {"rows", one_based(d.rows)}};
}

std::string diagnostic_text(const Diagnostic &d) {
    std::string s = "invalid (" + std::string(diagnostic_kind_name(d.kind)) + "): " + d.message;
    if (!d.rows.empty()) s += " [rows " + join_rows(d.rows) + "]";
    return s + "\n";
}

// "+1/√8" when every nonzero amplitude shares magnitude 1/sqrt(m), m integer.
std::optional<long> common_denominator(const StateVector<Complex> &s) {
    std::optional<double> mag;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        double a = std::abs(s[i]);
        if (a < 1e-12) continue;
        if (mag && std::abs(a - *mag) > 1e-10) return std::nullopt;
        mag = a;
    }
    if (!mag) return std::nullopt;
    double m = 1.0 / (*mag * *mag);
    long rm = std::lround(m);
    if (rm < 1 || std::abs(m - static_cast<double>(rm)) > 1e-8) return std::nullopt;
    return rm;
}

std::string decimal(double v) {
    std::ostringstream os;
    os << std::showpos << std::fixed << std::setprecision(12) << v;
    return os.str();
}

std::string amplitude_text(Complex a, std::optional<long> denom) {
    const bool real = std::abs(a.imag()) < 1e-10, imag = std::abs(a.real()) < 1e-10;
    if (denom && (real || imag)) {
        double v = real ? a.real() : a.imag();
        std::string s = v < 0 ? "-" : "+";
        s += imag && !real ? "i" : "1";
        if (*denom != 1) s += "/√" + std::to_string(*denom);
        return s;
    }
    if (real) return decimal(a.real());
    return decimal(a.real()) + decimal(a.imag()) + "i";
}

std::string basis_label(std::size_t index, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t q = 0; q < n; ++q)
        if ((index >> (n - 1 - q)) & 1) s[q] = '1';
    return s;
}

std::vector<int> parse_eigenvalues(const std::string &text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "1" || item == "+1") out.push_back(1);
        else if (item == "-1") out.push_back(-1);
        else throw UsageError("--eigenvalues: expected a comma-separated list of +1/-1, got '" + item + "'");
    }
    return out;
}

std::size_t default_jobs() {
    if (const char *env = std::getenv("QEC_JOBS")) {
        try {
            return std::stoul(env);
        } catch (const std::exception &) {
            throw UsageError(std::string("QEC_JOBS: not a number: '") + env + "'");
        }
    }
    return 0;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

// ---------------------------------------------------------------------------

struct Options {
    std::string file, file2, out, name, eigenvalues;
    std::size_t max_weight = 0, qubit = 0;
    bool global = false, all = false;
    SearchSpec spec;
    std::size_t jobs = 0;
    std::string report_path;
};

CommandOutcome cmd_verify(const Options &o, std::istream &in) {
    QuantumCode code = parse_code(read_input(o.file, in));
    CommandOutcome r;
    r.report["command"] = "verify";
    r.report["code"] = code_json(code);
    if (auto d = validate_code(code)) {
        r.exit_code = kVerificationFailure;
        r.report["valid"] = false;
        r.report["diagnostic"] = diagnostic_json(*d);
        r.text = diagnostic_text(*d);
        return r;
    }
    auto errors = error_products(code.n, code.alice_columns());
    CorrectionReport rep = verify_correction(code, errors);
    const std::size_t ok = rep.checked - rep.failures();
    r.report["valid"] = true;
    json verdicts = json::array();
    for (std::size_t i = 0; i < rep.errors.size(); ++i)
        verdicts.push_back({{"error", rep.errors[i].str()}, {"verdict", verdict_str(rep.verdicts[i])}});
    r.report["correction"] = {{"checked", rep.checked}, {"corrected", ok}, {"verdicts", verdicts}};

    std::ostringstream t;
    t << "code: n=" << code.n << " k=" << code.k << " r=" << code.gauge_qubits() << " c=" << code.ebits() << "\n";
    t << "valid: yes\n";
    t << "products corrected: " << ok << "/" << rep.checked << "\n";
    for (std::size_t i = 0; i < rep.errors.size(); ++i)
        if (o.all || rep.verdicts[i].kind == Verdict::Kind::fail)
            t << "  " << rep.errors[i].str() << "  " << verdict_str(rep.verdicts[i]) << "\n";
    r.text = t.str();
    r.exit_code = rep.corrects() ? kOk : kVerificationFailure;
    return r;
}

CommandOutcome cmd_distance(const Options &o, std::istream &in) {
    QuantumCode code = parse_code(read_input(o.file, in));
    CommandOutcome r;
    r.report["command"] = "distance";
    if (auto d = validate_code(code)) {
        r.exit_code = kVerificationFailure;
        r.report["diagnostic"] = diagnostic_json(*d);
        r.text = diagnostic_text(*d);
        return r;
    }
    const std::size_t w = o.max_weight ? o.max_weight : code.n;
    DistanceResult d = distance(code, w, o.global);
    r.report["global"] = o.global;
    r.report["max_weight"] = w;
    r.report["distance"] = d.distance ? json(*d.distance) : json(nullptr);
    r.report["witness"] = d.witness ? json(d.witness->str()) : json(nullptr);
    if (d.distance) r.text = std::to_string(*d.distance) + "\nwitness: " + d.witness->str() + "\n";
    else r.text = "> " + std::to_string(w) + " (no logical operator up to the weight limit)\n";
    return r;
}

CommandOutcome cmd_codewords(const Options &o, std::istream &in) {
    QuantumCode code = parse_code(read_input(o.file, in));
    CommandOutcome r;
    r.report["command"] = "codewords";
    if (auto d = validate_code(code)) {
        r.exit_code = kVerificationFailure;
        r.report["diagnostic"] = diagnostic_json(*d);
        r.text = diagnostic_text(*d);
        return r;
    }
    auto words = compute_codewords<Complex>(code, parse_eigenvalues(o.eigenvalues));
    json arr = json::array();
    std::ostringstream t;
    for (std::size_t x = 0; x < words.size(); ++x) {
        const auto &s = words[x];
        auto denom = common_denominator(s);
        std::string label = basis_label(x, code.k);
        t << "|" << label << "_L> =\n";
        json terms = json::array();
        for (Eigen::Index i = 0; i < s.size(); ++i) {
            if (std::abs(s[i]) < 1e-12) continue;
            auto idx = static_cast<std::size_t>(i);
            t << "  " << amplitude_text(s[i], denom) << " |" << basis_label(idx, code.n) << ">\n";
            terms.push_back({{"basis", basis_label(idx, code.n)},
                             {"index", idx},
                             {"re", s[i].real()},
                             {"im", s[i].imag()},
                             {"display", amplitude_text(s[i], denom)}});
        }
        arr.push_back({{"logical", label}, {"terms", terms}});
    }
    r.report["codewords"] = arr;
    r.text = t.str();
    return r;
}

CommandOutcome cmd_synth(const Options &o, std::istream &in) {
    QuantumCode code = parse_code(read_input(o.file, in));
    CommandOutcome r;
    r.report["command"] = "synth";
    if (auto d = validate_code(code)) {
        r.exit_code = kVerificationFailure;
        r.report["diagnostic"] = diagnostic_json(*d);
        r.text = diagnostic_text(*d);
        return r;
    }
    SynthesisResult s = synthesize_encoder(code);
    json chain = json::array();
    for (auto h : s.hash_chain) chain.push_back(hex64(h));
    json script = json::array();
    for (const auto &op : s.reduction) script.push_back(op.str());
    json gates = json::array();
    for (const auto &g : s.encoder.gates()) gates.push_back(g.str());
    r.report["encoder"] = {{"n", s.encoder.num_qubits()}, {"gates", gates}};
    r.report["reduction"] = script;
    r.report["hash_chain"] = chain;
    r.report["canonical"] = rows_json(s.canonical);
    r.report["columns"] = {{"ebit", one_based(s.ebit_columns)},
                           {"gauge", one_based(s.gauge_columns)},
                           {"ancilla", one_based(s.ancilla_columns)},
                           {"info", one_based(s.info_columns)}};

    std::ostringstream t;
    t << "# encoder on " << s.encoder.num_qubits() << " Alice qubits, " << s.encoder.size() << " gates\n";
    t << "# ebits " << s.ebits << ", gauge qubits " << s.gauge_qubits << "\n";
    t << s.encoder.str();
    t << "# reduction script (" << s.reduction.size() << " steps)\n";
    for (const auto &op : s.reduction) t << "# " << op.str() << "\n";
    t << "# canonical form\n";
    for (const auto &row : s.canonical) t << "# " << row.str() << "\n";
    if (!o.out.empty()) {
        write_text_file(o.out, s.encoder.str());
        r.report["written"] = o.out;
    }
    r.text = t.str();
    return r;
}

CommandOutcome cmd_gram_schmidt(const Options &o, std::istream &in) {
    CheckMatrix gens = parse_pauli_rows(read_input(o.file, in));
    GramSchmidtResult g = symplectic_gram_schmidt(gens);
    CommandOutcome r;
    r.report["command"] = "gram-schmidt";
    json pairs = json::array();
    std::ostringstream t;
    t << "pairs: " << g.ebits() << "\n";
    for (const auto &[a, b] : g.pairs) {
        pairs.push_back({a.str(), b.str()});
        t << "  " << a.str() << "  " << b.str() << "\n";
    }
    t << "isotropic: " << g.isotropic.size() << "\n";
    for (const auto &p : g.isotropic) t << "  " << p.str() << "\n";
    r.report["pairs"] = pairs;
    r.report["isotropic"] = rows_json(g.isotropic);
    r.report["ebits"] = g.ebits();
    r.text = t.str();
    return r;
}

std::string write_or_print(const QuantumCode &code, const std::string &out, CommandOutcome &r) {
    std::string body = format_code(code);
    if (out.empty()) return body;
    save_code_file(code, out);
    r.report["written"] = out;
    return "wrote " + out + "\n";
}

CommandOutcome cmd_css_build(const Options &o, std::istream &in) {
    ClassicalParityCheck hx = parse_parity_check(read_input(o.file, in));
    ClassicalParityCheck hz = parse_parity_check(read_input(o.file2, in));
    CheckMatrix gens = css_generators(hx, hz);
    CommandOutcome r;
    r.report["command"] = "css-build";
    r.report["generators"] = rows_json(gens);
    const std::size_t needed = gens.is_independent() ? symplectic_gram_schmidt(gens).ebits() : 0;
    r.report["min_ebits"] = needed;
    std::ostringstream t;
    if (!gens.mutually_commute()) {
        t << "# generators do not commute; " << needed << " ebit(s) needed (see ea-build)\n";
        for (const auto &p : gens) t << p.str() << "\n";
        r.text = t.str();
        r.exit_code = kVerificationFailure;
        return r;
    }
    QuantumCode code;
    code.n = gens.num_qubits();
    code.stabilizer = gens;
    code.gauge = CheckMatrix(code.n);
    derive_logicals(code);
    if (auto d = validate_code(code)) {
        r.exit_code = kVerificationFailure;
        r.report["diagnostic"] = diagnostic_json(*d);
        r.text = diagnostic_text(*d);
        return r;
    }
    r.report["code"] = code_json(code);
    r.text = write_or_print(code, o.out, r);
    return r;
}

CommandOutcome cmd_ea_build(const Options &o, std::istream &in) {
    QuantumCode code = build_ea_code(parse_pauli_rows(read_input(o.file, in)));
    CommandOutcome r;
    r.report["command"] = "ea-build";
    r.report["code"] = code_json(code);
    r.text = write_or_print(code, o.out, r);
    return r;
}

CommandOutcome cmd_reduce_ebit(const Options &o, std::istream &in) {
    if (o.qubit == 0) throw UsageError("reduce-ebit: --qubit is 1-based");
    QuantumCode code = reduce_to_ebit(parse_code(read_input(o.file, in)), o.qubit - 1);
    CommandOutcome r;
    r.report["command"] = "reduce-ebit";
    r.report["code"] = code_json(code);
    CorrectionReport rep = verify_correction(code, error_products(code.n, code.alice_columns()));
    r.report["alice_products_corrected"] = rep.checked - rep.failures();
    r.report["alice_products_checked"] = rep.checked;
    r.text = write_or_print(code, o.out, r);
    if (!rep.corrects()) r.exit_code = kVerificationFailure;
    return r;
}

CommandOutcome cmd_steane_equiv(const Options &o, std::istream &in) {
    QuantumCode code = parse_code(read_input(o.file, in));
    QuantumCode out = steane_equivalence_transform(code);
    const auto h7 = hamming_7_4();
    const bool equal = group_equal(out.stabilizer, css_generators(h7, h7));
    CommandOutcome r;
    r.report["command"] = "steane-equiv";
    r.report["code"] = code_json(out);
    r.report["equals_css_hamming"] = equal;
    r.text = write_or_print(out, o.out, r);
    r.text += std::string("# same group as CSS(H7,H7): ") + (equal ? "yes" : "no") + "\n";
    return r;
}

CommandOutcome cmd_search(const Options &o) {
    SearchReport rep = search_css(o.spec, o.jobs);
    CommandOutcome r;
    r.report["command"] = "search css";
    r.report["spec"] = {{"n", o.spec.n}, {"k", o.spec.k}, {"d", o.spec.d}, {"c", o.spec.c}};
    json census = json::array();
    std::ostringstream t;
    t << "search css n=" << o.spec.n << " k=" << o.spec.k << " d=" << o.spec.d << " c=" << o.spec.c << "\n";
    t << "  dx dz   enumerated    commuting  passed\n";
    for (const auto &[key, e] : rep.census) {
        census.push_back({{"dx", key.first},
                          {"dz", key.second},
                          {"enumerated", e.enumerated},
                          {"commuting", e.commuting},
                          {"passed_distance", e.passed_distance}});
        t << std::setw(4) << key.first << std::setw(3) << key.second << std::setw(13) << e.enumerated
          << std::setw(13) << e.commuting << std::setw(8) << e.passed_distance << "\n";
    }
    json survivors = json::array();
    for (const auto &s : rep.survivors) survivors.push_back(rows_json(s));
    r.report["census"] = census;
    r.report["survivors"] = survivors;
    r.report["survivor_count"] = rep.survivors.size();
    r.report["total_enumerated"] = rep.total_enumerated();
    r.report["wall_seconds"] = rep.wall_seconds;
    r.report["jobs"] = rep.jobs;
    t << "survivors: " << rep.survivors.size() << "\n";
    for (const auto &s : rep.survivors) {
        t << " ";
        for (const auto &row : s) t << " " << row.str();
        t << "\n";
    }
    t << "wall time: " << std::fixed << std::setprecision(3) << rep.wall_seconds << " s on " << rep.jobs
      << " thread(s)\n";
    if (!o.report_path.empty()) {
        json file = r.report;
        file["schema"] = 1;
        write_text_file(o.report_path, file.dump(2) + "\n");
    }
    r.text = t.str();
    return r;
}

CommandOutcome cmd_builtin(const Options &o) {
    CommandOutcome r;
    r.report["command"] = "builtin";
    if (o.name.empty()) {
        json names = json::array();
        for (auto b : all_builtins()) {
            names.push_back(builtin_name(b));
            r.text += std::string(builtin_name(b)) + "\n";
        }
        r.report["names"] = names;
        return r;
    }
    QuantumCode code = builtin_code(parse_builtin_name(o.name));
    r.report["name"] = o.name;
    r.report["code"] = code_json(code);
    r.text = write_or_print(code, o.out, r);
    return r;
}

CommandOutcome failure(int code, const std::string &msg, bool json_output, const std::string &usage = {}) {
    CommandOutcome r;
    r.exit_code = code;
    r.json_output = json_output;
    r.report = {{"schema", 1}, {"error", msg}};
    r.text = "error: " + msg + "\n" + usage;
    return r;
}

}  // namespace

CommandOutcome run(const std::vector<std::string> &args, std::istream &in) {
    CLI::App app{"Stabilizer code toolkit", "qec"};
    app.require_subcommand(1);
    bool json_output = false;
    app.add_flag("--json", json_output, "Emit a JSON report");

    Options o;
    o.spec.k = 1;
    o.spec.d = 3;

    auto *verify = app.add_subcommand("verify", "Validate a code and check single-and-pair error correction");
    verify->add_option("code-file", o.file, "Code file, '-' for stdin");
    verify->add_flag("--all", o.all, "List every verdict");

    auto *dist = app.add_subcommand("distance", "Brute-force minimum distance");
    dist->add_option("code-file", o.file, "Code file, '-' for stdin");
    dist->add_option("--max-weight", o.max_weight, "Largest weight to try (default n)");
    dist->add_flag("--global", o.global, "Include Bob's columns");

    auto *cw = app.add_subcommand("codewords", "Logical basis states");
    cw->add_option("code-file", o.file, "Code file, '-' for stdin");
    cw->add_option("--eigenvalues", o.eigenvalues, "Per-generator signs, e.g. -1,-1,1,1,1");

    auto *synth = app.add_subcommand("synth", "Synthesize an encoding circuit");
    synth->add_option("code-file", o.file, "Code file, '-' for stdin");
    synth->add_option("-o,--output", o.out, "Write the encoder circuit here");

    auto *gs = app.add_subcommand("gram-schmidt", "Symplectic Gram-Schmidt of a generator list");
    gs->add_option("gens-file", o.file, "Pauli rows, '-' for stdin");

    auto *css = app.add_subcommand("css-build", "CSS code from two parity-check matrices");
    css->add_option("hx-file", o.file, "Parity checks for the X-type rows")->required();
    css->add_option("hz-file", o.file2, "Parity checks for the Z-type rows")->required();
    css->add_option("-o,--output", o.out, "Write the code here");

    auto *ea = app.add_subcommand("ea-build", "Entanglement-assisted code from arbitrary generators");
    ea->add_option("gens-file", o.file, "Pauli rows, '-' for stdin");
    ea->add_option("-o,--output", o.out, "Write the code here");

    auto *red = app.add_subcommand("reduce-ebit", "Turn one qubit of a standard code into an ebit");
    red->add_option("code-file", o.file, "Code file, '-' for stdin");
    red->add_option("--qubit", o.qubit, "Qubit to hand to Bob (1-based)")->required();
    red->add_option("-o,--output", o.out, "Write the code here");

    auto *st = app.add_subcommand("steane-equiv", "Row and column moves of the seven-column EA code");
    st->add_option("code-file", o.file, "Code file, '-' for stdin");
    st->add_option("-o,--output", o.out, "Write the code here");

    auto *search = app.add_subcommand("search", "Exhaustive code searches");
    search->require_subcommand(1);
    auto *search_css_cmd = search->add_subcommand("css", "CSS and one-ebit CSS stabilizers");
    search_css_cmd->add_option("--n", o.spec.n, "Alice qubits")->required();
    search_css_cmd->add_option("--k", o.spec.k, "Logical qubits");
    search_css_cmd->add_option("--d", o.spec.d, "Target distance");
    search_css_cmd->add_option("--ebits", o.spec.c, "Ebits (0 or 1)");
    auto *jobs_opt = search_css_cmd->add_option("--jobs", o.jobs, "Worker threads (0: all cores; default $QEC_JOBS)");
    search_css_cmd->add_option("--report", o.report_path, "Write the JSON report here");

    auto *builtin = app.add_subcommand("builtin", "Print or save a built-in code");
    builtin->add_option("name", o.name, "Code name (omit to list)");
    builtin->add_option("-o,--output", o.out, "Write the code here");

    // CLI11 wants argv order reversed.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        CommandOutcome r;
        r.text = app.help();
        r.report = {{"schema", 1}, {"help", r.text}};
        return r;
    } catch (const CLI::ParseError &e) {
        std::string usage = app.help();
        for (auto *sub : app.get_subcommands())
            usage = sub->help();
        return failure(kUsageError, e.what(), json_output, usage);
    }

    try {
        CommandOutcome r;
        if (verify->parsed()) r = cmd_verify(o, in);
        else if (dist->parsed()) r = cmd_distance(o, in);
        else if (cw->parsed()) r = cmd_codewords(o, in);
        else if (synth->parsed()) r = cmd_synth(o, in);
        else if (gs->parsed()) r = cmd_gram_schmidt(o, in);
        else if (css->parsed()) r = cmd_css_build(o, in);
        else if (ea->parsed()) r = cmd_ea_build(o, in);
        else if (red->parsed()) r = cmd_reduce_ebit(o, in);
        else if (st->parsed()) r = cmd_steane_equiv(o, in);
        else if (search_css_cmd->parsed()) {
            if (jobs_opt->count() == 0) o.jobs = default_jobs();
            r = cmd_search(o);
        } else r = cmd_builtin(o);
        r.report["schema"] = 1;
        r.json_output = json_output;
        return r;
    } catch (const CapacityError &e) {
        return failure(kCapacityError, e.what(), json_output);
    } catch (const std::invalid_argument &e) {  // usage, parse and dimension errors
        return failure(kUsageError, e.what(), json_output);
    } catch (const StructureError &e) {
        return failure(kVerificationFailure, e.what(), json_output);
    }
}

CommandOutcome run(const std::vector<std::string> &args) { return run(args, std::cin); }

}  // namespace qec::cli
