#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qec/stabilizer.h"
#include "qec/symplectic.h"

namespace qec {

/// Number of dim-dimensional subspaces of GF(2)^m. CapacityError beyond 64 bits.
std::uint64_t gaussian_binomial(std::size_t m, std::size_t dim);

/// Calls fn once per dim-dimensional subspace of GF(2)^m with its unique
/// reduced basis. Vectors are bit masks, bit j = coordinate j; each basis row
/// has its pivot as lowest set bit and the rows are ordered by pivot.
void for_each_subspace(std::size_t m, std::size_t dim, const std::function<void(const std::vector<std::uint32_t> &)> &fn);

/// The same enumeration materialised as BitMatrix bases (dim x m).
std::vector<BitMatrix> enumerate_gf2_subspaces(std::size_t m, std::size_t dim);

struct SearchSpec {
    std::size_t n = 0;  // Alice qubits
    std::size_t k = 1;
    std::size_t d = 3;
    std::size_t c = 0;  // 0 or 1; Bob's column is index n
};

/// Throws UsageError for malformed specs and CapacityError beyond n + c = 8.
void check_search_spec(const SearchSpec &spec);

struct CensusEntry {
    std::uint64_t enumerated = 0;
    std::uint64_t commuting = 0;
    std::uint64_t passed_distance = 0;

    friend bool operator==(const CensusEntry &, const CensusEntry &) = default;
};

struct SearchReport {
    SearchSpec spec;
    /// Keyed by (X-space dimension, Z-space dimension).
    std::map<std::pair<std::size_t, std::size_t>, CensusEntry> census;
    /// Z rows then X rows, over n + c columns.
    std::vector<CheckMatrix> survivors;
    double wall_seconds = 0.0;
    std::size_t jobs = 1;

    std::uint64_t total_enumerated() const;
    /// Census and survivors agree (timing and job count ignored).
    bool same_result(const SearchReport &other) const;
};

/// Outcome of the search filters for one (X basis, Z basis) candidate.
enum class CandidateStage { rejected_policy, rejected_commutation, rejected_distance, passed };

/// Applies the search's filters to one candidate; bases are bit masks over n + c columns.
CandidateStage css_candidate_stage(const SearchSpec &spec, const std::vector<std::uint32_t> &x_basis,
                                   const std::vector<std::uint32_t> &z_basis);

/// Exhaustive enumeration of CSS (or one-ebit CSS) stabilizers. jobs == 0 uses
/// the hardware concurrency.
SearchReport search_css(const SearchSpec &spec, std::size_t jobs = 1);

/// Survivor as a code: Bob's column registered, logicals derived.
QuantumCode survivor_code(const SearchSpec &spec, const CheckMatrix &rows);

/// Independent re-check: validates the code and confirms no nontrivial
/// logical of weight below d on Alice's columns.
bool recheck_survivor(const SearchSpec &spec, const CheckMatrix &rows);

/// (3n+1) * 2 <= 2^(n+c).
bool dimension_feasibility(std::size_t n, std::size_t c);

}  // namespace qec
