#include "qec/search.h"

#include <algorithm>
#include <bit>
#include <bitset>
#include <chrono>
#include <thread>

#include "qec/errors.h"

namespace qec {

std::uint64_t gaussian_binomial(std::size_t m, std::size_t dim) {
    if (dim > m) return 0;
    dim = std::min(dim, m - dim);  // keeps every intermediate below the result
    // G(r, j) = G(r-1, j-1) + 2^j G(r-1, j), one row at a time
    std::vector<std::uint64_t> row(dim + 1, 0);
    row[0] = 1;
    for (std::size_t r = 1; r <= m; ++r) {
        for (std::size_t j = std::min(r, dim); j >= 1; --j) {
            std::uint64_t sum = 0;
            if (row[j] && (j >= 64 || row[j] > (~std::uint64_t{0} >> j)))
                throw CapacityError("gaussian_binomial: result exceeds 64 bits");
            if (__builtin_add_overflow(row[j - 1], row[j] ? row[j] << j : 0, &sum))
                throw CapacityError("gaussian_binomial: result exceeds 64 bits");
            row[j] = sum;
        }
    }
    return row[dim];
}

namespace {

// Recursive pivot choice, then every assignment of the free entries.
void enumerate_pivots(std::size_t m, std::size_t dim, std::size_t first, std::vector<std::size_t> &pivots,
                      const std::function<void(const std::vector<std::uint32_t> &)> &fn) {
    if (pivots.size() == dim) {
        std::uint32_t pivot_mask = 0;
        for (auto p : pivots) pivot_mask |= std::uint32_t{1} << p;
        // free positions per row: columns after its pivot that are not pivots
        std::vector<std::vector<std::size_t>> free(dim);
        std::size_t total_free = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t c = pivots[i] + 1; c < m; ++c)
                if (!(pivot_mask >> c & 1)) free[i].push_back(c);
            total_free += free[i].size();
        }
        std::vector<std::uint32_t> basis(dim);
        for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << total_free); ++assign) {
            std::uint64_t bits = assign;
            for (std::size_t i = 0; i < dim; ++i) {
                std::uint32_t row = std::uint32_t{1} << pivots[i];
                for (auto c : free[i]) {
                    if (bits & 1) row |= std::uint32_t{1} << c;
                    bits >>= 1;
                }
                basis[i] = row;
            }
            fn(basis);
        }
        return;
    }
    for (std::size_t p = first; p + (dim - pivots.size()) <= m; ++p) {
        pivots.push_back(p);
        enumerate_pivots(m, dim, p + 1, pivots, fn);
        pivots.pop_back();
    }
}

}  // namespace

void for_each_subspace(std::size_t m, std::size_t dim, const std::function<void(const std::vector<std::uint32_t> &)> &fn) {
    if (dim > m) throw UsageError("for_each_subspace: dimension " + std::to_string(dim) + " exceeds " + std::to_string(m));
    if (m > 20) throw CapacityError("for_each_subspace: ambient dimension above 20");
    std::vector<std::size_t> pivots;
    enumerate_pivots(m, dim, 0, pivots, fn);
}

std::vector<BitMatrix> enumerate_gf2_subspaces(std::size_t m, std::size_t dim) {
    std::vector<BitMatrix> out;
    for_each_subspace(m, dim, [&](const std::vector<std::uint32_t> &basis) {
        BitMatrix b(dim, m);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t c = 0; c < m; ++c)
                if (basis[i] >> c & 1) b.set(i, c, true);
        out.push_back(std::move(b));
    });
    return out;
}

void check_search_spec(const SearchSpec &spec) {
    if (spec.n < 1 || spec.k < 1 || spec.d < 1) throw UsageError("search: n, k and d must be at least 1");
    if (spec.c > 1) throw UsageError("search: only 0 or 1 ebits are supported");
    if (spec.n + spec.c > 8)
        throw CapacityError("search: n + c = " + std::to_string(spec.n + spec.c) + " exceeds the limit of 8");
    if (spec.k > spec.n + spec.c) throw UsageError("search: k exceeds the number of columns");
    if (spec.n + spec.c - spec.k > 2 * (spec.n + spec.c)) throw UsageError("search: too many generators");
}

std::uint64_t SearchReport::total_enumerated() const {
    std::uint64_t t = 0;
    for (const auto &[split, e] : census) t += e.enumerated;
    return t;
}

bool SearchReport::same_result(const SearchReport &other) const {
    return census == other.census && survivors == other.survivors;
}

namespace {

using Table = std::bitset<256>;

struct SubspaceInfo {
    std::vector<std::uint32_t> basis;
    Table span;
    Table perp;
};

SubspaceInfo describe(std::size_t m, const std::vector<std::uint32_t> &basis) {
    SubspaceInfo s;
    s.basis = basis;
    const std::size_t d = basis.size();
    for (std::uint32_t combo = 0; combo < (std::uint32_t{1} << d); ++combo) {
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (combo >> i & 1) v ^= basis[i];
        s.span.set(v);
    }
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << m); ++v) {
        bool orth = true;
        for (auto r : basis)
            if (std::popcount(v & r) & 1) {
                orth = false;
                break;
            }
        if (orth) s.perp.set(v);
    }
    return s;
}

bool touches(const std::vector<std::uint32_t> &basis, std::uint32_t bit) {
    for (auto r : basis)
        if (r & bit) return true;
    return false;
}

// Paulis X^a Z^b of weight 1..d-1 on Alice's columns.
std::vector<std::pair<std::uint32_t, std::uint32_t>> low_weight_errors(std::size_t n, std::size_t d) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t support = 1; support < (std::uint32_t{1} << n); ++support) {
        const auto w = static_cast<std::size_t>(std::popcount(support));
        if (w + 1 > d) continue;
        // each supported column takes X, Y or Z
        std::size_t combos = 1;
        for (std::size_t i = 0; i < w; ++i) combos *= 3;
        for (std::size_t code = 0; code < combos; ++code) {
            std::uint32_t a = 0, b = 0;
            std::size_t t = code;
            for (std::size_t c = 0; c < n; ++c) {
                if (!(support >> c & 1)) continue;
                switch (t % 3) {
                    case 0: a |= 1u << c; break;
                    case 1: a |= 1u << c; b |= 1u << c; break;
                    default: b |= 1u << c; break;
                }
                t /= 3;
            }
            out.emplace_back(a, b);
        }
    }
    return out;
}

bool commute(const SubspaceInfo &x, const SubspaceInfo &z) {
    for (auto r : z.basis)
        if (!x.perp.test(r)) return false;
    return true;
}

bool corrects(const SubspaceInfo &x, const SubspaceInfo &z,
              const std::vector<std::pair<std::uint32_t, std::uint32_t>> &errors) {
    for (const auto &[a, b] : errors)
        if (z.perp.test(a) && x.perp.test(b) && !(x.span.test(a) && z.span.test(b))) return false;
    return true;
}

CheckMatrix rows_of(std::size_t m, const SubspaceInfo &x, const SubspaceInfo &z) {
    CheckMatrix out(m);
    auto emit = [&](std::uint32_t mask, char letter) {
        PauliString p(m);
        for (std::size_t c = 0; c < m; ++c)
            if (mask >> c & 1) p.set(c, letter);
        out.push_back(p);
    };
    for (auto r : z.basis) emit(r, 'Z');
    for (auto r : x.basis) emit(r, 'X');
    return out;
}

struct ChunkResult {
    CensusEntry census;
    std::vector<CheckMatrix> survivors;
};

}  // namespace

CandidateStage css_candidate_stage(const SearchSpec &spec, const std::vector<std::uint32_t> &x_basis,
                                   const std::vector<std::uint32_t> &z_basis) {
    check_search_spec(spec);
    const std::size_t m = spec.n + spec.c;
    if (spec.c == 1) {
        const std::uint32_t bob = std::uint32_t{1} << spec.n;
        if (!touches(x_basis, bob) || !touches(z_basis, bob)) return CandidateStage::rejected_policy;
    }
    auto x = describe(m, x_basis);
    auto z = describe(m, z_basis);
    if (!commute(x, z)) return CandidateStage::rejected_commutation;
    if (!corrects(x, z, low_weight_errors(spec.n, spec.d))) return CandidateStage::rejected_distance;
    return CandidateStage::passed;
}

SearchReport search_css(const SearchSpec &spec, std::size_t jobs) {
    check_search_spec(spec);
    if (jobs == 0) jobs = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const auto start = std::chrono::steady_clock::now();
    const std::size_t m = spec.n + spec.c;
    const std::size_t gens = spec.n + spec.c - spec.k;
    const std::uint32_t bob = spec.c ? (std::uint32_t{1} << spec.n) : 0;
    const auto errors = low_weight_errors(spec.n, spec.d);

    std::map<std::size_t, std::vector<SubspaceInfo>> cache;
    auto infos = [&](std::size_t dim) -> const std::vector<SubspaceInfo> & {
        auto it = cache.find(dim);
        if (it != cache.end()) return it->second;
        std::vector<SubspaceInfo> list;
        for_each_subspace(m, dim, [&](const std::vector<std::uint32_t> &basis) {
            if (bob && !touches(basis, bob)) return;
            list.push_back(describe(m, basis));
        });
        return cache.emplace(dim, std::move(list)).first->second;
    };

    SearchReport rep;
    rep.spec = spec;
    rep.jobs = jobs;
    for (std::size_t dx = 0; dx <= gens; ++dx) {
        const std::size_t dz = gens - dx;
        if (dx > m || dz > m) continue;
        const auto &xs = infos(dx);
        const auto &zs = infos(dz);

        const std::size_t chunks = std::min<std::size_t>(jobs, std::max<std::size_t>(1, xs.size()));
        std::vector<ChunkResult> results(chunks);
        auto work = [&](std::size_t chunk) {
            const std::size_t lo = xs.size() * chunk / chunks, hi = xs.size() * (chunk + 1) / chunks;
            ChunkResult &out = results[chunk];
            for (std::size_t i = lo; i < hi; ++i) {
                for (const auto &z : zs) {
                    ++out.census.enumerated;
                    if (!commute(xs[i], z)) continue;
                    ++out.census.commuting;
                    if (!corrects(xs[i], z, errors)) continue;
                    ++out.census.passed_distance;
                    out.survivors.push_back(rows_of(m, xs[i], z));
                }
            }
        };
        if (chunks == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t c = 0; c < chunks; ++c) pool.emplace_back(work, c);
            for (auto &t : pool) t.join();
        }

        CensusEntry &entry = rep.census[{dx, dz}];
        for (auto &r : results) {
            entry.enumerated += r.census.enumerated;
            entry.commuting += r.census.commuting;
            entry.passed_distance += r.census.passed_distance;
            for (auto &s : r.survivors) rep.survivors.push_back(std::move(s));
        }
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

QuantumCode survivor_code(const SearchSpec &spec, const CheckMatrix &rows) {
    QuantumCode code;
    code.n = rows.num_qubits();
    code.stabilizer = rows;
    code.gauge = CheckMatrix(code.n);
    if (spec.c) code.bob_columns = {spec.n};
    derive_logicals(code);
    return code;
}

bool recheck_survivor(const SearchSpec &spec, const CheckMatrix &rows) {
    QuantumCode code = survivor_code(spec, rows);
    if (validate_code(code) || code.k != spec.k) return false;
    if (spec.d > 1 && distance(code, spec.d - 1).distance) return false;
    if (spec.d == 3 && !verify_correction(code, error_products(code.n, code.alice_columns())).corrects()) return false;
    return true;
}

bool dimension_feasibility(std::size_t n, std::size_t c) {
    if (n + c >= 62) return true;
    return (3 * n + 1) * 2 <= (std::uint64_t{1} << (n + c));
}

}  // namespace qec
