#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lhom {

/// Arithmetic in the prime field GF(p). The modulus is validated once here;
/// matrices carry the field by value.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                        " is not prime");
    }

    std::uint32_t modulus() const { return p_; }

    std::uint32_t reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    /// Multiplicative inverse of a != 0, by Fermat: a^(p-2).
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
        std::uint32_t result = 1, base = a % p_;
        std::uint32_t e = p_ - 2;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        return a.p_ == b.p_;
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint32_t d = 3; d <= n / d; d += 2)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

/// Dense row-major matrix over GF(p). Degenerate shapes are first-class:
/// the 0x0 empty matrix and matrices with zero rows or zero columns.
class GfMatrix {
public:
    GfMatrix(std::size_t rows, std::size_t cols, PrimeField field)
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

    static GfMatrix empty_matrix(PrimeField field) { return GfMatrix(0, 0, field); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_empty() const { return rows_ == 0 && cols_ == 0; }
    const PrimeField& field() const { return field_; }

    std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::int64_t value) {
        data_[i * cols_ + j] = field_.reduce(value);
    }

    friend bool operator==(const GfMatrix& a, const GfMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.field_ == b.field_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    PrimeField field_;
    std::vector<std::uint32_t> data_;
};

namespace detail {

/// Rank over GF(2) with rows packed into 64-bit words.
inline std::size_t rank_gf2_packed(const GfMatrix& m) {
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::uint64_t> rows(m.rows() * words, 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j)) rows[i * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);

    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const std::size_t w = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        std::size_t pivot = r;
        while (pivot < m.rows() && !(rows[pivot * words + w] & bit)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t k = w; k < words; ++k)
                std::swap(rows[pivot * words + k], rows[r * words + k]);
        for (std::size_t i = r + 1; i < m.rows(); ++i)
            if (rows[i * words + w] & bit)
                for (std::size_t k = w; k < words; ++k)
                    rows[i * words + k] ^= rows[r * words + k];
        ++r;
    }
    return r;
}

/// Rank over GF(p) for odd p, scalar row elimination.
inline std::size_t rank_generic(const GfMatrix& m) {
    const PrimeField& f = m.field();
    const std::size_t p = f.modulus();
    const std::size_t cols = m.cols();
    std::vector<std::uint32_t> a(m.rows() * cols);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m.at(i, j);

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t k = c; k < cols; ++k)
                std::swap(a[pivot * cols + k], a[r * cols + k]);
        const std::uint32_t inv = f.inv(a[r * cols + c]);
        for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = f.mul(a[r * cols + k], inv);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const std::uint32_t factor = a[i * cols + c];
            if (factor == 0) continue;
            const std::uint64_t mneg = p - factor;
            for (std::size_t k = c; k < cols; ++k)
                a[i * cols + k] = static_cast<std::uint32_t>(
                    (a[i * cols + k] + mneg * a[r * cols + k]) % p);
        }
        ++r;
    }
    return r;
}

}  // namespace detail

/// Rank of m over its field, by Gaussian elimination.
inline std::size_t rank(const GfMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return m.field().modulus() == 2 ? detail::rank_gf2_packed(m) : detail::rank_generic(m);
}

/// Smith Normal Form over a field: a matrix of the same shape with
/// rank(m) leading ones on the diagonal and zeros elsewhere. The input
/// is not modified; the empty matrix maps to itself.
inline GfMatrix smith_normal_form(const GfMatrix& m) {
    GfMatrix out(m.rows(), m.cols(), m.field());
    const std::size_t r = rank(m);
    for (std::size_t i = 0; i < r; ++i) out.set(i, i, 1);
    return out;
}

/// Number of all-zero columns of m. Columns of a 0-row matrix count as zero;
/// the empty matrix has none.
inline std::size_t zero_col_count(const GfMatrix& m) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < m.rows() && zero; ++i)
            if (m.at(i, j) != 0) zero = false;
        if (zero) ++count;
    }
    return count;
}

inline std::size_t nonzero_col_count(const GfMatrix& m) {
    return m.cols() - zero_col_count(m);
}

}  // namespace lhom
