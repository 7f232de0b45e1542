#include <gtest/gtest.h>

#include "appendix_matrices.h"
#include "qec/clifford.h"
#include "qec/errors.h"
#include "qec/statevector.h"
#include "test_support.h"

namespace qec {
namespace {

PauliString P(const char *s) { return PauliString::parse(s); }

TEST(Conjugation, SingleGateRules) {
    EXPECT_EQ(conjugate_pauli(CliffordGate::h(0), P("X")).str(), "Z");
    EXPECT_EQ(conjugate_pauli(CliffordGate::h(0), P("Y")).str(), "Y");
    EXPECT_EQ(conjugate_pauli(CliffordGate::p(0), P("X")).str(), "Y");
    EXPECT_EQ(conjugate_pauli(CliffordGate::p(0), P("Z")).str(), "Z");
    EXPECT_EQ(conjugate_pauli(CliffordGate::cnot(0, 1), P("XI")).str(), "XX");
    EXPECT_EQ(conjugate_pauli(CliffordGate::cnot(0, 1), P("IZ")).str(), "ZZ");
    EXPECT_EQ(conjugate_pauli(CliffordGate::cnot(0, 1), P("ZI")).str(), "ZI");
    EXPECT_EQ(conjugate_pauli(CliffordGate::cz(0, 1), P("XI")).str(), "XZ");
    EXPECT_EQ(conjugate_pauli(CliffordGate::cz(0, 1), P("IX")).str(), "ZX");
    EXPECT_EQ(conjugate_pauli(CliffordGate::swap(0, 2), P("XIZ")).str(), "ZIX");
}

TEST(Conjugation, RejectsOutOfRange) {
    EXPECT_THROW(conjugate_pauli(CliffordGate::h(3), P("XX")), DimensionError);
    CliffordCircuit c(2);
    EXPECT_THROW(c.push_back(CliffordGate::cnot(0, 2)), DimensionError);
    EXPECT_THROW(c.push_back(CliffordGate::cnot(1, 1)), DimensionError);
    EXPECT_THROW(conjugate_check_matrix(CliffordCircuit(3), CheckMatrix::parse({"XX"})), DimensionError);
}

TEST(Conjugation, EmptyCircuitIsIdentity) {
    auto m = builtin_code(BuiltinCode::six_qubit_degenerate).stabilizer;
    EXPECT_EQ(conjugate_check_matrix(CliffordCircuit(6), m), m);
}

TEST(Conjugation, InverseUndoes) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        auto c = testing::random_circuit(rng, 5, 30);
        auto p = testing::random_pauli(rng, 5);
        EXPECT_EQ(conjugate_pauli(c.inverse(), conjugate_pauli(c, p)), p);
    }
}

TEST(Conjugation, AppendixHadamardStep) {
    auto m2 = testing::zx_matrix(fixtures::kAppendixMatrices[1]);
    auto m3 = testing::zx_matrix(fixtures::kAppendixMatrices[2]);
    auto c = CliffordCircuit::parse("H 1\nH 4\nH 6\n", 6);
    EXPECT_EQ(conjugate_check_matrix(c, m2), m3);
}

TEST(Circuit, ParseAndPrint) {
    auto c = CliffordCircuit::parse("# comment\nH 1\nS 2\nCX 1 3\nCZ 2 3\nSWAP 1 2\n");
    EXPECT_EQ(c.num_qubits(), 3u);
    EXPECT_EQ(c.str(), "H 1\nP 2\nCNOT 1 3\nCZ 2 3\nSWAP 1 2\n");
    EXPECT_EQ(CliffordCircuit::parse(c.str()), c);
    EXPECT_THROW(CliffordCircuit::parse("T 1\n"), ParseError);
    EXPECT_THROW(CliffordCircuit::parse("CNOT 1\n"), ParseError);
    EXPECT_THROW(CliffordCircuit::parse("H 0\n"), ParseError);
    EXPECT_THROW(CliffordCircuit::parse("H 4\n", 3), DimensionError);
}

TEST(Circuit, InverseUsesThreePhases) {
    CliffordCircuit c(2, {CliffordGate::p(0), CliffordGate::cnot(0, 1)});
    EXPECT_EQ(c.inverse().str(), "CNOT 1 2\nP 1\nP 1\nP 1\n");
}

TEST(LogicalCnot, SixQubitBlocks) {
    auto code = builtin_code(BuiltinCode::six_qubit_degenerate);
    auto circuit = CliffordCircuit::parse(testing::kLogicalCnot, 12);
    const auto &x = code.logical_x[0], &z = code.logical_z[0];
    auto a = [](const PauliString &p) { return on_block(p, 0, 2); };
    auto b = [](const PauliString &p) { return on_block(p, 1, 2); };
    std::vector<std::pair<PauliString, PauliString>> expected = {
        {a(x), pauli_multiply(a(x), b(x))},
        {b(z), pauli_multiply(a(z), b(z))},
        {a(z), a(z)},
        {b(x), b(x)},
    };
    EXPECT_TRUE(verify_logical_circuit(circuit, code, 2, expected));
    // a wrong target map is rejected
    expected[0].second = a(x);
    EXPECT_FALSE(verify_logical_circuit(circuit, code, 2, expected));
}

TEST(StateVector, GateActions) {
    auto zero = basis_state<double>(2, 0);
    auto s = zero;
    apply_gate(CliffordGate::h(0), 2, s);
    apply_gate(CliffordGate::cnot(0, 1), 2, s);
    const double r = 1 / std::sqrt(2.0);
    EXPECT_NEAR(s(0), r, 1e-12);
    EXPECT_NEAR(s(3), r, 1e-12);
    EXPECT_NEAR(s(1), 0, 1e-12);
    auto one = basis_state<double>(1, 1);
    EXPECT_THROW(apply_gate(CliffordGate::p(0), 1, one), StructureError);
    auto c = basis_state<Complex>(1, 1);
    apply_gate(CliffordGate::p(0), 1, c);
    EXPECT_NEAR(std::abs(c(1) - Complex(0, 1)), 0, 1e-12);
    EXPECT_THROW(basis_state<double>(15, 0), CapacityError);
}

TEST(StateVector, PauliActionIsMsbFirst) {
    // X on qubit 0 flips the most significant bit
    auto s = pauli_statevector_action(P("XI"), basis_state<double>(2, 0));
    EXPECT_EQ(s(2), 1.0);
}

TEST(Codewords, ReproducePrintedSigns) {
    auto code = builtin_code(BuiltinCode::six_qubit_degenerate);
    auto words = compute_codewords<double>(code, testing::kPrintedEigenvalues);
    ASSERT_EQ(words.size(), 2u);
    const double amp = 1 / std::sqrt(8.0);
    for (int w = 0; w < 2; ++w) {
        const auto &printed = w == 0 ? testing::kPrintedZero : testing::kPrintedOne;
        StateVector<double> expect = StateVector<double>::Zero(64);
        for (const auto &[bits, sign] : printed) expect(static_cast<Eigen::Index>(testing::basis_index(bits))) = sign * amp;
        EXPECT_LT((words[w] - expect).cwiseAbs().maxCoeff(), 1e-10) << "codeword " << w;
    }
}

TEST(Codewords, DefaultSignsDifferByPauliFrame) {
    auto code = builtin_code(BuiltinCode::six_qubit_degenerate);
    auto plus = compute_codewords<double>(code);
    auto printed = compute_codewords<double>(code, testing::kPrintedEigenvalues);
    for (int w = 0; w < 2; ++w) {
        EXPECT_LT((plus[w].cwiseAbs() - printed[w].cwiseAbs()).cwiseAbs().maxCoeff(), 1e-12);
        for (const auto &g : code.stabilizer) {
            auto h = hermitian_pauli_apply(g, plus[w].cast<Complex>().eval());
            EXPECT_LT((h - plus[w].cast<Complex>()).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
    EXPECT_NEAR(std::abs(plus[0].dot(plus[1])), 0, 1e-12);
}

TEST(Codewords, LogicalXMapsZeroToOne) {
    auto code = builtin_code(BuiltinCode::six_qubit_degenerate);
    auto w = compute_codewords<double>(code, testing::kPrintedEigenvalues);
    StateVector<double> flipped = pauli_apply(code.logical_x[0], w[0]);
    EXPECT_NEAR(std::abs(flipped.dot(w[1])), 1.0, 1e-10);
}

TEST(Codewords, SubsystemAndSteane) {
    auto sub = compute_codewords<double>(builtin_code(BuiltinCode::six_qubit_subsystem));
    EXPECT_EQ(sub.size(), 2u);
    auto steane = compute_codewords<double>(builtin_code(BuiltinCode::steane));
    EXPECT_EQ((steane[0].array().abs() > 1e-9).count(), 8);
    EXPECT_THROW(compute_codewords<double>(builtin_code(BuiltinCode::six_qubit_degenerate), {1, 1}), UsageError);
}

TEST(KnillLaflamme, RejectsGaugeCodes) {
    EXPECT_THROW(knill_laflamme_verdicts(builtin_code(BuiltinCode::six_qubit_subsystem), {}), UsageError);
}

}  // namespace
}  // namespace qec
