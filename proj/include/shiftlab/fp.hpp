/**
 * Exact linear algebra over a prime field F_p, p < 2^31.
 *
 * Everything is deterministic and sequential; ranks, kernels and minor
 * determinants are the workhorses behind shifting and rigidity.
 */

#ifndef SHIFTLAB_FP_HPP
#define SHIFTLAB_FP_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace shiftlab {

using fp_t = std::uint32_t;

inline bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Arithmetic helpers for a fixed prime modulus.
class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p) : p_(p)
    {
        if (p >= (1ULL << 31) || !is_prime_u64(p))
            throw std::invalid_argument("PrimeField: modulus must be a prime < 2^31");
    }

    std::uint64_t prime() const { return p_; }

    fp_t reduce(std::int64_t x) const
    {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0)
            r += static_cast<std::int64_t>(p_);
        return static_cast<fp_t>(r);
    }
    fp_t add(fp_t a, fp_t b) const
    {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        if (s >= p_)
            s -= p_;
        return static_cast<fp_t>(s);
    }
    fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : static_cast<fp_t>(a + p_ - b); }
    fp_t neg(fp_t a) const { return a == 0 ? 0 : static_cast<fp_t>(p_ - a); }
    fp_t mul(fp_t a, fp_t b) const
    {
        return static_cast<fp_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    fp_t pow(fp_t a, std::uint64_t e) const
    {
        fp_t r = 1 % static_cast<fp_t>(p_);
        fp_t base = a;
        while (e) {
            if (e & 1)
                r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    fp_t inv(fp_t a) const
    {
        if (a == 0)
            throw std::domain_error("PrimeField::inv(0)");
        return pow(a, p_ - 2);
    }

  private:
    std::uint64_t p_;
};

/// Dense row-major matrix over F_p.
class FpMatrix {
  public:
    FpMatrix(const PrimeField& F, std::size_t rows, std::size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return F_; }

    fp_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    fp_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<fp_t> row(std::size_t r) const
    {
        return std::vector<fp_t>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    }

    FpMatrix transpose() const
    {
        FpMatrix t(F_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

  private:
    PrimeField F_;
    std::size_t rows_, cols_;
    std::vector<fp_t> a_;
};

/**
 * Incremental reduced row-echelon basis.  Rows are inserted one at a time;
 * the basis reports whether each insertion enlarged the span.  Acceptance
 * order matters and is exactly the insertion order.
 */
class EchelonBasis {
  public:
    EchelonBasis(const PrimeField& F, std::size_t cols) : F_(F), cols_(cols) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    /// Reduce `v` against the basis in place; returns first nonzero column
    /// or cols_ if v reduced to zero.
    std::size_t reduce(std::vector<fp_t>& v) const
    {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            fp_t c = v[pivots_[i]];
            if (c == 0)
                continue;
            const auto& b = rows_[i];
            for (std::size_t j = pivots_[i]; j < cols_; ++j)
                if (b[j])
                    v[j] = F_.sub(v[j], F_.mul(c, b[j]));
        }
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j])
                return j;
        return cols_;
    }

    /// Insert a row; true iff it was independent of the current span.
    bool insert(std::vector<fp_t> v)
    {
        if (v.size() != cols_)
            throw std::invalid_argument("EchelonBasis::insert: dimension mismatch");
        std::size_t piv = reduce(v);
        if (piv == cols_)
            return false;
        fp_t inv = F_.inv(v[piv]);
        for (std::size_t j = piv; j < cols_; ++j)
            if (v[j])
                v[j] = F_.mul(v[j], inv);
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

  private:
    PrimeField F_;
    std::size_t cols_;
    std::vector<std::vector<fp_t>> rows_;
    std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const FpMatrix& M)
{
    EchelonBasis basis(M.field(), M.cols());
    for (std::size_t r = 0; r < M.rows(); ++r)
        basis.insert(M.row(r));
    return basis.rank();
}

/// One solution of M x = b, if any.
inline std::optional<std::vector<fp_t>> solve(const FpMatrix& M, const std::vector<fp_t>& b)
{
    if (b.size() != M.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    const PrimeField& F = M.field();
    std::size_t n = M.rows(), m = M.cols();
    // augmented Gauss-Jordan
    std::vector<std::vector<fp_t>> a(n);
    for (std::size_t r = 0; r < n; ++r) {
        a[r] = M.row(r);
        a[r].push_back(b[r]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m && pr < n; ++c) {
        std::size_t sel = pr;
        while (sel < n && a[sel][c] == 0)
            ++sel;
        if (sel == n)
            continue;
        std::swap(a[sel], a[pr]);
        fp_t inv = F.inv(a[pr][c]);
        for (std::size_t j = c; j <= m; ++j)
            a[pr][j] = F.mul(a[pr][j], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == pr || a[r][c] == 0)
                continue;
            fp_t f = a[r][c];
            for (std::size_t j = c; j <= m; ++j)
                a[r][j] = F.sub(a[r][j], F.mul(f, a[pr][j]));
        }
        pivot_col.push_back(c);
        ++pr;
    }
    for (std::size_t r = pr; r < n; ++r)
        if (a[r][m] != 0)
            return std::nullopt;
    std::vector<fp_t> x(m, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = a[i][m];
    return x;
}

/**
 * Determinant of the square submatrix A[rows; cols].  Empty index sets give
 * 1 (the empty minor).
 */
inline fp_t minor_det(const FpMatrix& A, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols)
{
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor_det: index sets of unequal size");
    const PrimeField& F = A.field();
    std::size_t k = rows.size();
    if (k == 0)
        return 1;
    std::vector<std::vector<fp_t>> m(k, std::vector<fp_t>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            m[i][j] = A.at(rows[i], cols[j]);
    fp_t det = 1;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t sel = i;
        while (sel < k && m[sel][i] == 0)
            ++sel;
        if (sel == k)
            return 0;
        if (sel != i) {
            std::swap(m[sel], m[i]);
            det = F.neg(det);
        }
        det = F.mul(det, m[i][i]);
        fp_t inv = F.inv(m[i][i]);
        for (std::size_t r = i + 1; r < k; ++r) {
            if (m[r][i] == 0)
                continue;
            fp_t f = F.mul(m[r][i], inv);
            for (std::size_t c = i; c < k; ++c)
                m[r][c] = F.sub(m[r][c], F.mul(f, m[i][c]));
        }
    }
    return det;
}

} // namespace shiftlab

#endif
