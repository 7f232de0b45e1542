#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qec {

/// Widest Pauli string supported by the packed representation.
inline constexpr std::size_t kMaxQubits = 64;

/// Phase-free n-qubit Pauli operator stored as paired X/Z bit words.
///
/// Bit j of each word is qubit j (0-based); qubit 0 is the leftmost printed
/// letter. Letters decode as (x,z): (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y, where
/// Y is understood as the product ZX.
class PauliString {
  public:
    explicit PauliString(std::size_t num_qubits);
    PauliString(std::size_t num_qubits, std::uint64_t x_bits, std::uint64_t z_bits);

    /// Parses a row over {I,X,Y,Z}; any other character is rejected.
    static PauliString parse(std::string_view text);
    static PauliString single(std::size_t num_qubits, std::size_t qubit, char letter);

    std::size_t num_qubits() const { return n_; }
    std::uint64_t x_bits() const { return x_; }
    std::uint64_t z_bits() const { return z_; }
    bool x(std::size_t q) const { return (x_ >> q) & 1; }
    bool z(std::size_t q) const { return (z_ >> q) & 1; }
    char letter(std::size_t q) const;
    void set(std::size_t q, char letter);
    void set_bits(std::size_t q, bool x, bool z);

    std::uint64_t support() const { return x_ | z_; }
    std::size_t weight() const;
    bool is_identity() const { return (x_ | z_) == 0; }

    std::string str() const;

    /// Orders by qubit count, then Z word, then X word.
    friend auto operator<=>(const PauliString &a, const PauliString &b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        if (auto c = a.z_ <=> b.z_; c != 0) return c;
        return a.x_ <=> b.x_;
    }
    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::size_t n_;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

/// 1 iff the operators anticommute. Throws DimensionError on width mismatch.
bool symplectic_product(const PauliString &a, const PauliString &b);

/// Product up to global phase (componentwise XOR).
PauliString pauli_multiply(const PauliString &a, const PauliString &b);

/// a on the first a.num_qubits() columns, b on the rest.
PauliString tensor(const PauliString &a, const PauliString &b);

/// Letters of p on `cols`, in that order, as a cols.size()-qubit operator.
PauliString select_columns(const PauliString &p, const std::vector<std::size_t> &cols);
/// Inverse of select_columns: an n-qubit operator with p's letters on `cols`.
PauliString spread_columns(const PauliString &p, std::size_t n, const std::vector<std::size_t> &cols);

/// Dense GF(2) matrix, rows packed into 64-bit words (column j = bit j%64 of word j/64).
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// Rows given as strings of '0'/'1'; all rows must have equal length.
    static BitMatrix from_strings(std::span<const std::string> rows);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v);
    void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

    /// row dst ^= row src
    void add_row(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);
    void append_row(const std::vector<bool> &bits);
    bool row_is_zero(std::size_t r) const;

    BitMatrix transpose() const;
    BitMatrix remove_column(std::size_t c) const;
    std::vector<std::string> to_strings() const;

    friend BitMatrix operator*(const BitMatrix &a, const BitMatrix &b);
    friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

struct RrefResult {
    BitMatrix reduced;
    std::vector<std::size_t> pivots;  // increasing
    std::size_t rank = 0;
};

/// Reduced row-echelon form over GF(2). Zero rows are kept at the bottom.
RrefResult gf2_rref(const BitMatrix &m);
std::size_t gf2_rank(const BitMatrix &m);

/// Ordered generator list over a fixed qubit count.
class CheckMatrix {
  public:
    explicit CheckMatrix(std::size_t num_qubits) : n_(num_qubits) {}
    CheckMatrix(std::size_t num_qubits, std::vector<PauliString> rows);
    static CheckMatrix parse(std::initializer_list<std::string_view> rows);
    static CheckMatrix parse(std::span<const std::string> rows);

    /// Inverse of `to_binary`: a (r x 2n) matrix in Z|X layout.
    static CheckMatrix from_binary(const BitMatrix &zx);

    std::size_t num_qubits() const { return n_; }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    const PauliString &operator[](std::size_t i) const { return rows_[i]; }
    PauliString &operator[](std::size_t i) { return rows_[i]; }
    auto begin() const { return rows_.begin(); }
    auto end() const { return rows_.end(); }
    const std::vector<PauliString> &rows() const { return rows_; }

    void push_back(const PauliString &p);
    void erase(std::size_t i);

    /// Binary symplectic form: Z block in columns [0,n), X block in [n,2n).
    BitMatrix to_binary() const;
    bool is_independent() const;
    bool mutually_commute() const;
    std::vector<std::string> to_strings() const;

    friend bool operator==(const CheckMatrix &, const CheckMatrix &) = default;

  private:
    std::size_t n_;
    std::vector<PauliString> rows_;
};

/// Concatenation of two generator lists of equal width.
CheckMatrix stack(const CheckMatrix &a, const CheckMatrix &b);

/// Row span of a generator set, reduced once for repeated membership queries.
class PauliSpan {
  public:
    explicit PauliSpan(const CheckMatrix &gens);

    std::size_t num_qubits() const { return n_; }
    std::size_t rank() const { return basis_.size(); }
    bool contains(const PauliString &p) const;
    /// Canonical coset representative: p with every pivot position cleared.
    PauliString reduce(const PauliString &p) const;
    /// Reduced basis, one row per pivot, pivots increasing in Z|X column order.
    const std::vector<PauliString> &basis() const { return basis_; }

  private:
    std::size_t n_;
    std::vector<PauliString> basis_;
    std::vector<std::size_t> pivots_;
};

bool group_contains(const CheckMatrix &gens, const PauliString &p);
bool group_equal(const CheckMatrix &g1, const CheckMatrix &g2);

/// Basis of every Pauli commuting with all of `gens` (the phase-free centralizer).
CheckMatrix centralizer(const CheckMatrix &gens);

}  // namespace qec
