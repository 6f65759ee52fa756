#pragma once

// Modular arithmetic substrate: residues, powers, inverses, primitive roots,
// multiplicative orders, Fermat quotients and the per-prime context.

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

namespace cyclocrit {

// An element of Z/pZ, always stored in [0, p).
// The modulus is not carried; it is implied by the PrimeContext in use.
class Residue
{
public:
    constexpr Residue() = default;
    constexpr explicit Residue(std::uint32_t v) : v_(v) {}

    constexpr std::uint32_t value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    constexpr auto operator<=>(const Residue&) const = default;

private:
    std::uint32_t v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Residue r) { return os << r.value(); }

// a^e mod m by square-and-multiply. Negative a is reduced into [0, m) first.
// 128-bit intermediates, so any 64-bit m works (in particular p^2 for p < 2^31).
// Throws std::invalid_argument when m < 2.
std::uint64_t pow_mod(std::int64_t a, std::uint64_t e, std::uint64_t m);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Trial division up to sqrt(n).
bool is_prime_trial(std::uint64_t n);

// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

bool is_primitive_root(std::uint32_t g, std::uint32_t p);

// Smallest u >= 2 of order p - 1. Throws std::invalid_argument unless p is an odd prime.
std::uint32_t smallest_primitive_root(std::uint32_t p);

// Least k >= 1 with a^k = 1 mod p. Throws std::invalid_argument when a = 0 mod p.
std::uint32_t mult_order(std::int64_t a, std::uint32_t p);

// ((q^(p-1) mod p^2) - 1) / p mod p. Zero iff q is a base for which p is Wieferich.
Residue fermat_quotient(std::int64_t q, std::uint32_t p);

// An odd prime p < 2^31 together with a primitive root u and the tables
// u_i = u^i mod p, ind_u(a) and a^-1 that every other module leans on.
// Immutable after construction, so freely shareable between threads.
class PrimeContext
{
public:
    // Uses the smallest primitive root.
    explicit PrimeContext(std::uint32_t p);
    // Uses the given root; throws std::invalid_argument if it is not one.
    PrimeContext(std::uint32_t p, std::uint32_t root);

    std::uint32_t p() const { return p_; }
    std::uint32_t root() const { return root_; }
    // nu = (p - 1) / 2
    std::uint32_t nu() const { return (p_ - 1) / 2; }

    // u_i = u^i mod p in 1..p-1, for any integer i (negative exponents are inverse powers).
    std::uint32_t upow(std::int64_t i) const
    {
        const std::int64_t n = p_ - 1;
        std::int64_t r = i % n;
        if (r < 0) r += n;
        return upow_[static_cast<std::size_t>(r)];
    }

    // Discrete logarithm ind_u(a) in 0..p-2. Requires a != 0 mod p.
    std::uint32_t ind(std::uint32_t a) const;

    // a^-1 mod p. Requires a != 0 mod p.
    std::uint32_t inv(std::uint32_t a) const;

    std::uint32_t reduce(std::int64_t a) const
    {
        std::int64_t r = a % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t pow(std::int64_t a, std::uint64_t e) const
    {
        return static_cast<std::uint32_t>(pow_mod(a, e, p_));
    }
    // a^e for a signed exponent; negative e requires a != 0.
    std::uint32_t pow_signed(std::uint32_t a, std::int64_t e) const;

    Residue residue(std::int64_t a) const { return Residue(reduce(a)); }

private:
    void build_tables();

    std::uint32_t p_;
    std::uint32_t root_;
    std::vector<std::uint32_t> upow_;  // upow_[i] = u^i, i = 0..p-2
    std::vector<std::uint32_t> ind_;   // ind_[a] for a = 1..p-1
    std::vector<std::uint32_t> inv_;   // inv_[a] for a = 1..p-1
};

// Primes in [lo, hi], ascending.
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

}  // namespace cyclocrit
