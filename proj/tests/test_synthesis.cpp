#include <gtest/gtest.h>

#include "appendix_matrices.h"
#include "qec/errors.h"
#include "qec/synthesis.h"
#include "test_support.h"

namespace qec {
namespace {

CheckMatrix appendix(std::size_t step) { return testing::zx_matrix(fixtures::kAppendixMatrices[step - 1]); }

CheckMatrix alice_stabilizer(const QuantumCode &code) {
    CheckMatrix out(code.alice_columns().size());
    for (const auto &s : code.stabilizer) out.push_back(select_columns(s, code.alice_columns()));
    return out;
}

void expect_symplectic_basis(const GramSchmidtResult &g) {
    for (std::size_t i = 0; i < g.pairs.size(); ++i) {
        EXPECT_TRUE(symplectic_product(g.pairs[i].first, g.pairs[i].second));
        for (std::size_t j = 0; j < g.pairs.size(); ++j) {
            if (i == j) continue;
            EXPECT_FALSE(symplectic_product(g.pairs[i].first, g.pairs[j].first));
            EXPECT_FALSE(symplectic_product(g.pairs[i].first, g.pairs[j].second));
            EXPECT_FALSE(symplectic_product(g.pairs[i].second, g.pairs[j].second));
        }
        for (const auto &r : g.isotropic) {
            EXPECT_FALSE(symplectic_product(g.pairs[i].first, r));
            EXPECT_FALSE(symplectic_product(g.pairs[i].second, r));
        }
    }
    EXPECT_TRUE(g.isotropic.mutually_commute());
}

TEST(GramSchmidt, TruncatedHammingNeedsOnePair) {
    auto h = testing::truncated_hamming();
    auto gens = css_generators(h, h);
    auto g = symplectic_gram_schmidt(gens);
    EXPECT_EQ(g.ebits(), 1u);
    EXPECT_EQ(g.isotropic.size(), 4u);
    expect_symplectic_basis(g);
    EXPECT_TRUE(group_equal(g.rows(), gens));
}

TEST(GramSchmidt, RandomSetsAgreeWithRankFormula) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        CheckMatrix m(6);
        while (m.size() < 5) {
            auto p = testing::random_pauli(rng, 6);
            auto trial = m;
            trial.push_back(p);
            if (trial.is_independent()) m = trial;
        }
        auto g = symplectic_gram_schmidt(m);
        expect_symplectic_basis(g);
        EXPECT_TRUE(group_equal(g.rows(), m));
        // the Gram matrix of commutation has rank 2 * pairs
        BitMatrix gram(m.size(), m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) gram.set(i, j, symplectic_product(m[i], m[j]));
        EXPECT_EQ(gf2_rank(gram), 2 * g.ebits());
    }
}

TEST(GramSchmidt, RejectsDependentRows) {
    EXPECT_THROW(symplectic_gram_schmidt(CheckMatrix::parse({"XX", "ZZ", "YY"})), IndependenceError);
}

TEST(MinEbits, CssRankFormula) {
    EXPECT_EQ(min_ebits_css(testing::truncated_hamming().h), 1u);
    EXPECT_EQ(min_ebits_css(hamming_7_4().h), 0u);
    EXPECT_EQ(min_ebits_css(BitMatrix(0, 4)), 0u);
}

TEST(CanonicalTarget, LayoutAndErrors) {
    auto t = canonical_target(6, 1, 1, {0}, {1, 2, 3, 4}, {5});
    EXPECT_EQ(t.to_strings(), (std::vector<std::string>{"ZIIIII", "XIIIII", "IZIIII", "IIZIII", "IIIZII", "IIIIZI"}));
    EXPECT_THROW(canonical_target(6, 1, 1, {0}, {1, 2, 3}, {5}), UsageError);
    EXPECT_THROW(canonical_target(6, 1, 1, {0}, {0, 2, 3, 4}, {5}), UsageError);
    EXPECT_THROW(canonical_target(3, 1, 3, {0, 1, 2}, {}, {}), UsageError);
}

TEST(Script, ParseFormatRoundTrip) {
    auto s = parse_script("ROWSWAP 2 6\nH 1\n# note\nCNOT 1 4\nROWADD 1 3\n");
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[0], ScriptOp::row_swap(1, 5));
    EXPECT_EQ(s[3], ScriptOp::row_add(0, 2));
    EXPECT_EQ(parse_script(format_script(s)), s);
    EXPECT_THROW(parse_script("ROWADD 1 1\n"), ParseError);
    EXPECT_THROW(parse_script("ROWADD 1\n"), ParseError);
    CheckMatrix m = CheckMatrix::parse({"XI", "ZI"});
    EXPECT_THROW(apply_script_op(ScriptOp::row_add(0, 5), m), DimensionError);
}

TEST(Script, RowAddMultipliesDestination) {
    CheckMatrix m = CheckMatrix::parse({"XI", "ZZ"});
    apply_script_op(ScriptOp::row_add(0, 1), m);
    EXPECT_EQ(m[1].str(), "YZ");
    EXPECT_EQ(m[0].str(), "XI");
}

// Replays the walkthrough one printed step at a time and returns the steps
// whose printed matrix differs from the cumulative replay.
std::vector<std::size_t> appendix_mismatches(std::vector<CheckMatrix> *states = nullptr) {
    std::vector<std::size_t> bad;
    CheckMatrix m = appendix(1);
    for (std::size_t i = 0; i < testing::kAppendixSteps.size(); ++i) {
        for (const auto &op : parse_script(testing::kAppendixSteps[i])) apply_script_op(op, m);
        if (states) states->push_back(m);
        if (m != appendix(i + 2)) bad.push_back(i + 2);
    }
    return bad;
}

TEST(AppendixReplay, OnlyThePrintedSwapStepDiffers) {
    std::vector<CheckMatrix> states;
    EXPECT_EQ(appendix_mismatches(&states), (std::vector<std::size_t>{11}));
    // the printed step-11 matrix is not even the same group as the replay
    EXPECT_FALSE(group_equal(states[9], appendix(11)));
    EXPECT_EQ(states.back(), appendix(17));
}

TEST(AppendixReplay, StartsFromTheEaGenerators) {
    auto code = builtin_code(BuiltinCode::ea_613);
    // same group, different generator choice
    EXPECT_TRUE(group_equal(appendix(1), alice_stabilizer(code)));
}

TEST(AppendixReplay, EndpointIsCanonical) {
    auto end = appendix(17);
    EXPECT_EQ(end, canonical_target(6, 1, 1, {0}, {1, 2, 3, 4}, {5}));
}

TEST(Synthesis, EveryBuiltinReproducesItsGroup) {
    for (auto b : all_builtins()) {
        auto code = builtin_code(b);
        auto r = synthesize_encoder(code);
        auto encoded = conjugate_check_matrix(r.encoder, r.canonical_stabilizer());
        EXPECT_TRUE(group_equal(encoded, alice_stabilizer(code))) << builtin_name(b);
        EXPECT_EQ(r.ebits, code.ebits()) << builtin_name(b);
        EXPECT_EQ(r.gauge_qubits, code.gauge_qubits()) << builtin_name(b);
        EXPECT_EQ(r.info_columns.size(), code.k);
        EXPECT_EQ(r.hash_chain.size(), r.reduction.size() + 1);

        auto logicals = encoded_logicals(r, code);
        ASSERT_EQ(logicals.size(), 1u);
        const auto &[lx, lz] = logicals[0];
        EXPECT_TRUE(symplectic_product(lx, lz));
        for (const auto &s : code.stabilizer) {
            EXPECT_FALSE(symplectic_product(s, lx)) << builtin_name(b);
            EXPECT_FALSE(symplectic_product(s, lz)) << builtin_name(b);
        }
        for (const auto &g : code.gauge) {
            EXPECT_FALSE(symplectic_product(g, lx));
            EXPECT_FALSE(symplectic_product(g, lz));
        }
    }
}

TEST(Synthesis, EaCanonicalMatchesWalkthroughEndpoint) {
    auto r = synthesize_encoder(builtin_code(BuiltinCode::ea_613));
    EXPECT_EQ(r.canonical, appendix(17));
    EXPECT_EQ(r.ebit_columns, (std::vector<std::size_t>{0}));
    EXPECT_EQ(r.info_columns, (std::vector<std::size_t>{5}));
}

TEST(Synthesis, HashChainReplays) {
    auto r = synthesize_encoder(builtin_code(BuiltinCode::six_qubit_degenerate));
    auto states = replay_script(r.input, r.reduction);
    std::uint64_t h = matrix_digest(r.input);
    ASSERT_EQ(r.hash_chain[0], h);
    for (std::size_t i = 0; i < states.size(); ++i) {
        h = matrix_digest(states[i], h);
        EXPECT_EQ(r.hash_chain[i + 1], h);
    }
    EXPECT_EQ(states.back(), r.canonical);
}

TEST(Synthesis, RandomCodes) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        QuantumCode code;
        code.n = 5;
        code.stabilizer = testing::random_stabilizer(rng, 5, 1 + t % 4);
        code.gauge = CheckMatrix(5);
        derive_logicals(code);
        ASSERT_FALSE(validate_code(code));
        auto r = synthesize_encoder(code);
        EXPECT_TRUE(group_equal(conjugate_check_matrix(r.encoder, r.canonical_stabilizer()), code.stabilizer));
    }
}

TEST(Synthesis, RejectsInvalidCode) {
    auto code = builtin_code(BuiltinCode::six_qubit_degenerate);
    code.stabilizer[1] = PauliString::parse("XIIIII");
    EXPECT_THROW(synthesize_encoder(code), StructureError);
}

}  // namespace
}  // namespace qec
