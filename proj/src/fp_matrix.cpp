#include "cyclocrit/fp_matrix.hpp"

#include "cyclocrit/fp_core.hpp"

#include <stdexcept>
#include <utility>

namespace cyclocrit {

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus)
    : rows_(rows), cols_(cols), m_(modulus), a_(rows * cols, 0)
{
    if (modulus < 2) throw std::invalid_argument("ModMatrix: modulus must be >= 2");
}

ModMatrix ModMatrix::from_signed(const std::vector<std::int64_t>& row_major, std::size_t rows, std::size_t cols,
                                 std::uint64_t modulus)
{
    if (row_major.size() != rows * cols) throw std::invalid_argument("ModMatrix: size mismatch");
    ModMatrix r(rows, cols, modulus);
    for (std::size_t i = 0; i < row_major.size(); ++i) r.a_[i] = pow_mod(row_major[i], 1, modulus);
    return r;
}

namespace {

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= b ? a - b : a + (m - b); }

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) { return pow_mod(static_cast<std::int64_t>(a), m - 2, m); }

}  // namespace

std::size_t ModMatrix::rank() const
{
    std::vector<std::uint64_t> a = a_;
    const std::size_t R = rows_, C = cols_;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c)
    {
        std::size_t piv = r;
        while (piv < R && a[piv * C + c] == 0) ++piv;
        if (piv == R) continue;
        if (piv != r)
            for (std::size_t k = 0; k < C; ++k) std::swap(a[r * C + k], a[piv * C + k]);
        const std::uint64_t inv = inv_mod(a[r * C + c], m_);
        for (std::size_t i = r + 1; i < R; ++i)
        {
            const std::uint64_t f = mul_mod(a[i * C + c], inv, m_);
            if (f == 0) continue;
            for (std::size_t k = c; k < C; ++k) a[i * C + k] = sub_mod(a[i * C + k], mul_mod(f, a[r * C + k], m_), m_);
        }
        ++r;
    }
    return r;
}

std::uint64_t ModMatrix::det() const
{
    if (rows_ != cols_) throw std::invalid_argument("ModMatrix::det: matrix is not square");
    std::vector<std::uint64_t> a = a_;
    const std::size_t n = rows_;
    std::uint64_t d = 1;
    for (std::size_t c = 0; c < n; ++c)
    {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c)
        {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
            d = (d == 0) ? 0 : m_ - d;
        }
        d = mul_mod(d, a[c * n + c], m_);
        const std::uint64_t inv = inv_mod(a[c * n + c], m_);
        for (std::size_t i = c + 1; i < n; ++i)
        {
            const std::uint64_t f = mul_mod(a[i * n + c], inv, m_);
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k) a[i * n + k] = sub_mod(a[i * n + k], mul_mod(f, a[c * n + k], m_), m_);
        }
    }
    return d;
}

}  // namespace cyclocrit
