#include "cyclocrit/classnum.hpp"
#include "cyclocrit/fp_matrix.hpp"
#include "cyclocrit/parallel.hpp"

#include <mutex>

namespace cyclocrit {

IntMatrix::IntMatrix(std::size_t dim, std::vector<std::int64_t> row_major) : dim_(dim), e_(std::move(row_major))
{
    if (e_.size() != dim * dim) throw std::invalid_argument("IntMatrix: expected dim*dim entries");
}

IntMatrix IntMatrix::identity(std::size_t dim)
{
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

std::string to_string(const ExactInt& v) { return v.get_str(); }

ExactInt hadamard_bound(const IntMatrix& m)
{
    ExactInt bound = 1;
    for (std::size_t r = 0; r < m.dim(); ++r)
    {
        ExactInt norm2 = 0;
        for (std::size_t c = 0; c < m.dim(); ++c)
        {
            const ExactInt v = static_cast<long>(m.at(r, c));
            norm2 += v * v;
        }
        if (norm2 == 0) return 0;
        ExactInt s = sqrt(norm2);
        if (s * s != norm2) ++s;
        bound *= s;
    }
    return bound;
}

namespace {

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (const std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    // These twelve bases are deterministic for all 64-bit n.
    for (const std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    {
        std::uint64_t x = pow_mod(static_cast<std::int64_t>(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r)
        {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

std::vector<std::uint64_t> crt_moduli(std::size_t count)
{
    static std::mutex mutex;
    static std::vector<std::uint64_t> moduli;
    std::lock_guard lock(mutex);
    std::uint64_t candidate = moduli.empty() ? (std::uint64_t(1) << 62) - 1 : moduli.back() - 2;
    while (moduli.size() < count)
    {
        if (is_prime_u64(candidate)) moduli.push_back(candidate);
        candidate -= 2;
    }
    return {moduli.begin(), moduli.begin() + static_cast<std::ptrdiff_t>(count)};
}

ExactInt exact_det(const IntMatrix& m, unsigned jobs)
{
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    const ExactInt bound = hadamard_bound(m);
    if (bound == 0) return 0;

    // Need product of moduli > 2 * bound; each modulus exceeds 2^61.
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 1;
    const std::size_t count = bits / 61 + 1;
    const std::vector<std::uint64_t> moduli = crt_moduli(count);

    const auto residues = parallel_map<std::uint64_t>(count, jobs, [&](std::size_t k) {
        return ModMatrix::from_signed(m.entries(), n, n, moduli[k]).det();
    });

    // Incremental CRT: x = r_0 mod M, then fold in each modulus.
    ExactInt x = static_cast<unsigned long>(residues[0]);
    ExactInt M = static_cast<unsigned long>(moduli[0]);
    for (std::size_t k = 1; k < count; ++k)
    {
        const ExactInt mk = static_cast<unsigned long>(moduli[k]);
        const ExactInt rk = static_cast<unsigned long>(residues[k]);
        ExactInt inv;
        mpz_invert(inv.get_mpz_t(), M.get_mpz_t(), mk.get_mpz_t());
        ExactInt t = ((rk - x) % mk) * inv % mk;
        if (t < 0) t += mk;
        x += M * t;
        M *= mk;
    }
    if (2 * x > M) x -= M;
    return x;
}

ExactInt bareiss_det(const IntMatrix& m)
{
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    std::vector<ExactInt> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = static_cast<long>(m.entries()[i]);
    ExactInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (a[k * n + k] == 0)
        {
            std::size_t piv = k + 1;
            while (piv < n && a[piv * n + k] == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
        {
            for (std::size_t j = k + 1; j < n; ++j)
            {
                ExactInt v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i * n + j] = std::move(v);
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    return sign * a[(n - 1) * n + (n - 1)];
}

}  // namespace cyclocrit
