#include "cyclocrit/fp_core.hpp"

#include <stdexcept>
#include <string>

namespace cyclocrit {

std::uint64_t pow_mod(std::int64_t a, std::uint64_t e, std::uint64_t m)
{
    if (m < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
    std::uint64_t base;
    if (a >= 0)
        base = static_cast<std::uint64_t>(a) % m;
    else
    {
        // -(a + 1) does not overflow for INT64_MIN
        const std::uint64_t na = (static_cast<std::uint64_t>(-(a + 1)) + 1) % m;
        base = na == 0 ? 0 : m - na;
    }
    std::uint64_t r = 1;
    while (e != 0)
    {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_trial(std::uint64_t n)
{
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> r;
    for (std::uint64_t d = 2; d <= n / d; ++d)
    {
        if (n % d != 0) continue;
        r.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) r.push_back(n);
    return r;
}

namespace {

void require_odd_prime(std::uint32_t p, const char* who)
{
    if (p < 3 || p % 2 == 0 || !is_prime_trial(p))
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) + " is not an odd prime");
    if (p >= (1u << 31))
        throw std::invalid_argument(std::string(who) + ": primes must be below 2^31");
}

}  // namespace

bool is_primitive_root(std::uint32_t g, std::uint32_t p)
{
    if (g % p == 0) return false;
    for (const auto q : prime_divisors(p - 1))
        if (pow_mod(g, (p - 1) / q, p) == 1) return false;
    return true;
}

std::uint32_t smallest_primitive_root(std::uint32_t p)
{
    require_odd_prime(p, "smallest_primitive_root");
    const auto qs = prime_divisors(p - 1);
    for (std::uint32_t u = 2; u < p; ++u)
    {
        bool ok = true;
        for (const auto q : qs)
            if (pow_mod(u, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return u;
    }
    throw std::logic_error("smallest_primitive_root: none found");
}

std::uint32_t mult_order(std::int64_t a, std::uint32_t p)
{
    require_odd_prime(p, "mult_order");
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    if (r == 0) throw std::invalid_argument("mult_order: a must be nonzero mod p");
    // Strip prime factors from p - 1 while the power stays 1.
    std::uint64_t k = p - 1;
    for (const auto q : prime_divisors(p - 1))
        while (k % q == 0 && pow_mod(r, k / q, p) == 1) k /= q;
    return static_cast<std::uint32_t>(k);
}

Residue fermat_quotient(std::int64_t q, std::uint32_t p)
{
    require_odd_prime(p, "fermat_quotient");
    if (q % static_cast<std::int64_t>(p) == 0)
        throw std::invalid_argument("fermat_quotient: q must be coprime to p");
    const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
    const std::uint64_t v = pow_mod(q, p - 1, p2);
    // v = 1 mod p, so v - 1 is an exact multiple of p.
    return Residue(static_cast<std::uint32_t>(((v + p2 - 1) % p2) / p % p));
}

PrimeContext::PrimeContext(std::uint32_t p) : p_(p), root_(smallest_primitive_root(p))
{
    build_tables();
}

PrimeContext::PrimeContext(std::uint32_t p, std::uint32_t root) : p_(p), root_(root)
{
    require_odd_prime(p, "PrimeContext");
    if (root < 2 || root >= p || !is_primitive_root(root, p))
        throw std::invalid_argument("PrimeContext: " + std::to_string(root) + " is not a primitive root mod " +
                                    std::to_string(p));
    build_tables();
}

void PrimeContext::build_tables()
{
    upow_.resize(p_ - 1);
    ind_.assign(p_, 0);
    inv_.assign(p_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < p_; ++i)
    {
        upow_[i] = x;
        ind_[x] = i;
        x = mul(x, root_);
    }
    // u^i * u^(p-1-i) = 1
    for (std::uint32_t i = 0; i + 1 < p_; ++i)
        inv_[upow_[i]] = upow_[(p_ - 1 - i) % (p_ - 1)];
}

std::uint32_t PrimeContext::ind(std::uint32_t a) const
{
    a %= p_;
    if (a == 0) throw std::invalid_argument("PrimeContext::ind: zero has no index");
    return ind_[a];
}

std::uint32_t PrimeContext::inv(std::uint32_t a) const
{
    a %= p_;
    if (a == 0) throw std::invalid_argument("PrimeContext::inv: zero is not invertible");
    return inv_[a];
}

std::uint32_t PrimeContext::pow_signed(std::uint32_t a, std::int64_t e) const
{
    if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
    return pow(inv(a), static_cast<std::uint64_t>(-e));
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi)
{
    std::vector<std::uint32_t> r;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (is_prime_trial(n)) r.push_back(static_cast<std::uint32_t>(n));
    return r;
}

}  // namespace cyclocrit
