#include "qec/symplectic.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "qec/errors.h"

namespace qec {

namespace {

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void require_same_width(const PauliString &a, const PauliString &b, const char *op) {
    if (a.num_qubits() != b.num_qubits()) {
        std::ostringstream ss;
        ss << op << ": width mismatch (" << a.num_qubits() << " vs " << b.num_qubits() << ")";
        throw DimensionError(ss.str());
    }
}

}  // namespace

PauliString::PauliString(std::size_t num_qubits) : n_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw DimensionError("PauliString: qubit count must be in [1, 64], got " + std::to_string(num_qubits));
    }
}

PauliString::PauliString(std::size_t num_qubits, std::uint64_t x_bits, std::uint64_t z_bits) : PauliString(num_qubits) {
    if ((x_bits | z_bits) & ~low_mask(num_qubits)) {
        throw DimensionError("PauliString: bits set beyond qubit count");
    }
    x_ = x_bits;
    z_ = z_bits;
}

PauliString PauliString::parse(std::string_view text) {
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    if (text.empty()) throw ParseError("empty Pauli row");
    if (text.size() > kMaxQubits) throw DimensionError("Pauli row longer than 64 qubits");
    PauliString p(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        char c = text[q];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ParseError("invalid Pauli letter '" + std::string(1, c) + "' in row \"" + std::string(text) + "\"");
        }
        p.set(q, c);
    }
    return p;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, char letter) {
    PauliString p(num_qubits);
    p.set(qubit, letter);
    return p;
}

char PauliString::letter(std::size_t q) const {
    static constexpr char kLetters[] = {'I', 'X', 'Z', 'Y'};
    if (q >= n_) throw DimensionError("PauliString: qubit index " + std::to_string(q) + " out of range");
    return kLetters[x(q) | (z(q) << 1)];
}

void PauliString::set_bits(std::size_t q, bool xb, bool zb) {
    if (q >= n_) throw DimensionError("PauliString: qubit index " + std::to_string(q) + " out of range");
    std::uint64_t m = std::uint64_t{1} << q;
    x_ = xb ? (x_ | m) : (x_ & ~m);
    z_ = zb ? (z_ | m) : (z_ & ~m);
}

void PauliString::set(std::size_t q, char c) {
    switch (c) {
        case 'I': set_bits(q, false, false); break;
        case 'X': set_bits(q, true, false); break;
        case 'Z': set_bits(q, false, true); break;
        case 'Y': set_bits(q, true, true); break;
        default: throw ParseError("invalid Pauli letter '" + std::string(1, c) + "'");
    }
}

std::size_t PauliString::weight() const { return std::popcount(x_ | z_); }

std::string PauliString::str() const {
    std::string s(n_, 'I');
    for (std::size_t q = 0; q < n_; ++q) s[q] = letter(q);
    return s;
}

bool symplectic_product(const PauliString &a, const PauliString &b) {
    require_same_width(a, b, "symplectic_product");
    return std::popcount((a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits())) & 1;
}

PauliString pauli_multiply(const PauliString &a, const PauliString &b) {
    require_same_width(a, b, "pauli_multiply");
    return PauliString(a.num_qubits(), a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits());
}

PauliString tensor(const PauliString &a, const PauliString &b) {
    const std::size_t na = a.num_qubits();
    if (na + b.num_qubits() > kMaxQubits) throw DimensionError("tensor: result wider than 64 qubits");
    return PauliString(na + b.num_qubits(), a.x_bits() | (b.x_bits() << na), a.z_bits() | (b.z_bits() << na));
}

PauliString select_columns(const PauliString &p, const std::vector<std::size_t> &cols) {
    PauliString out(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] >= p.num_qubits()) throw DimensionError("select_columns: column out of range");
        out.set_bits(i, p.x(cols[i]), p.z(cols[i]));
    }
    return out;
}

PauliString spread_columns(const PauliString &p, std::size_t n, const std::vector<std::size_t> &cols) {
    if (cols.size() != p.num_qubits()) throw DimensionError("spread_columns: column list length differs from width");
    PauliString out(n);
    for (std::size_t i = 0; i < cols.size(); ++i) out.set_bits(cols[i], p.x(i), p.z(i));
    return out;
}

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
    if (rows.empty()) return BitMatrix();
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionError("BitMatrix: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1') throw ParseError("BitMatrix: expected 0/1, got '" + std::string(1, ch) + "'");
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<std::string> v(rows.begin(), rows.end());
    return from_strings(std::span<const std::string>(v));
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t &w = data_[r * words_ + c / 64];
    std::uint64_t m = std::uint64_t{1} << (c % 64);
    w = v ? (w | m) : (w & ~m);
}

void BitMatrix::add_row(std::size_t src, std::size_t dst) {
    for (std::size_t w = 0; w < words_; ++w) data_[dst * words_ + w] ^= data_[src * words_ + w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_; ++w) std::swap(data_[a * words_ + w], data_[b * words_ + w]);
}

void BitMatrix::append_row(const std::vector<bool> &bits) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = bits.size();
        words_ = (cols_ + 63) / 64;
    }
    if (bits.size() != cols_) throw DimensionError("BitMatrix::append_row: width mismatch");
    data_.resize(data_.size() + words_, 0);
    ++rows_;
    for (std::size_t c = 0; c < cols_; ++c) set(rows_ - 1, c, bits[c]);
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    for (std::size_t w = 0; w < words_; ++w) {
        if (data_[r * words_ + w]) return false;
    }
    return true;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

BitMatrix BitMatrix::remove_column(std::size_t col) const {
    if (col >= cols_) throw DimensionError("BitMatrix::remove_column: column out of range");
    BitMatrix out(rows_, cols_ - 1);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0, k = 0; c < cols_; ++c)
            if (c != col) out.set(r, k++, get(r, c));
    return out;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::string s(cols_, '0');
        for (std::size_t c = 0; c < cols_; ++c) s[c] = get(r, c) ? '1' : '0';
        out.push_back(std::move(s));
    }
    return out;
}

BitMatrix operator*(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols_ != b.rows_) throw DimensionError("BitMatrix product: inner dimension mismatch");
    BitMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a.get(i, k))
                for (std::size_t w = 0; w < out.words_; ++w) out.data_[i * out.words_ + w] ^= b.data_[k * b.words_ + w];
    return out;
}

RrefResult gf2_rref(const BitMatrix &m) {
    RrefResult res{m, {}, 0};
    BitMatrix &a = res.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && !a.get(p, c)) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i != r && a.get(i, c)) a.add_row(r, i);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t gf2_rank(const BitMatrix &m) { return gf2_rref(m).rank; }

// ---------------------------------------------------------------------------

CheckMatrix::CheckMatrix(std::size_t num_qubits, std::vector<PauliString> rows) : n_(num_qubits), rows_(std::move(rows)) {
    for (const auto &p : rows_) {
        if (p.num_qubits() != n_) throw DimensionError("CheckMatrix: row width differs from qubit count");
    }
}

CheckMatrix CheckMatrix::parse(std::initializer_list<std::string_view> rows) {
    std::vector<std::string> v(rows.begin(), rows.end());
    return parse(std::span<const std::string>(v));
}

CheckMatrix CheckMatrix::parse(std::span<const std::string> rows) {
    if (rows.empty()) throw ParseError("CheckMatrix::parse: no rows (qubit count unknown)");
    std::vector<PauliString> ps;
    for (const auto &r : rows) ps.push_back(PauliString::parse(r));
    std::size_t n = ps[0].num_qubits();
    return CheckMatrix(n, std::move(ps));
}

CheckMatrix CheckMatrix::from_binary(const BitMatrix &zx) {
    if (zx.cols() % 2 != 0) throw DimensionError("CheckMatrix::from_binary: odd column count");
    std::size_t n = zx.cols() / 2;
    CheckMatrix out(n);
    for (std::size_t r = 0; r < zx.rows(); ++r) {
        PauliString p(n);
        for (std::size_t q = 0; q < n; ++q) p.set_bits(q, zx.get(r, n + q), zx.get(r, q));
        out.push_back(p);
    }
    return out;
}

void CheckMatrix::push_back(const PauliString &p) {
    if (p.num_qubits() != n_) throw DimensionError("CheckMatrix::push_back: width mismatch");
    rows_.push_back(p);
}

void CheckMatrix::erase(std::size_t i) {
    if (i >= rows_.size()) throw DimensionError("CheckMatrix::erase: row out of range");
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
}

BitMatrix CheckMatrix::to_binary() const {
    BitMatrix m(rows_.size(), 2 * n_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t q = 0; q < n_; ++q) {
            m.set(r, q, rows_[r].z(q));
            m.set(r, n_ + q, rows_[r].x(q));
        }
    }
    return m;
}

bool CheckMatrix::is_independent() const { return gf2_rank(to_binary()) == rows_.size(); }

bool CheckMatrix::mutually_commute() const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = i + 1; j < rows_.size(); ++j)
            if (symplectic_product(rows_[i], rows_[j])) return false;
    return true;
}

std::vector<std::string> CheckMatrix::to_strings() const {
    std::vector<std::string> out;
    for (const auto &p : rows_) out.push_back(p.str());
    return out;
}

CheckMatrix stack(const CheckMatrix &a, const CheckMatrix &b) {
    if (a.num_qubits() != b.num_qubits()) throw DimensionError("stack: width mismatch");
    CheckMatrix out = a;
    for (const auto &p : b) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------------------

PauliSpan::PauliSpan(const CheckMatrix &gens) : n_(gens.num_qubits()) {
    RrefResult rr = gf2_rref(gens.to_binary());
    CheckMatrix reduced = CheckMatrix::from_binary(rr.reduced);
    for (std::size_t i = 0; i < rr.rank; ++i) basis_.push_back(reduced[i]);
    pivots_ = std::move(rr.pivots);
}

PauliString PauliSpan::reduce(const PauliString &p) const {
    if (p.num_qubits() != n_) throw DimensionError("PauliSpan: width mismatch");
    PauliString v = p;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::size_t c = pivots_[i];
        bool bit = c < n_ ? v.z(c) : v.x(c - n_);
        if (bit) v = pauli_multiply(v, basis_[i]);
    }
    return v;
}

bool PauliSpan::contains(const PauliString &p) const { return reduce(p).is_identity(); }

bool group_contains(const CheckMatrix &gens, const PauliString &p) {
    if (gens.num_qubits() != p.num_qubits()) throw DimensionError("group_contains: width mismatch");
    return PauliSpan(gens).contains(p);
}

bool group_equal(const CheckMatrix &g1, const CheckMatrix &g2) {
    if (g1.num_qubits() != g2.num_qubits()) throw DimensionError("group_equal: width mismatch");
    return PauliSpan(g1).basis() == PauliSpan(g2).basis();
}

CheckMatrix centralizer(const CheckMatrix &gens) {
    const std::size_t n = gens.num_qubits();
    // Row i of the constraint matrix is g_i in X|Z order, so that its dot product
    // with a Z|X vector is the symplectic product.
    BitMatrix a(gens.size(), 2 * n);
    for (std::size_t r = 0; r < gens.size(); ++r) {
        for (std::size_t q = 0; q < n; ++q) {
            a.set(r, q, gens[r].x(q));
            a.set(r, n + q, gens[r].z(q));
        }
    }
    RrefResult rr = gf2_rref(a);
    std::vector<bool> is_pivot(2 * n, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    BitMatrix kernel;
    for (std::size_t f = 0; f < 2 * n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<bool> v(2 * n, false);
        v[f] = true;
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = rr.reduced.get(i, f);
        kernel.append_row(v);
    }
    if (kernel.rows() == 0) return CheckMatrix(n);
    return CheckMatrix::from_binary(kernel);
}

}  // namespace qec
