#pragma once

// Exact relative class number h^- of Q(zeta_p) by three determinant formulas,
// the exact integer determinant engine behind them, integer factorization for
// printing h^- in factored form, and the subfield prime-factor predicates.

#include "cyclocrit/fp_core.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclocrit {

using ExactInt = mpz_class;

std::string to_string(const ExactInt& v);

// Raised when an exact identity that must hold by construction fails
// (inexact Maillet division, disagreeing h^- formulas).
class InconsistencyError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Square matrix of word-sized signed integers.
class IntMatrix
{
public:
    explicit IntMatrix(std::size_t dim) : dim_(dim), e_(dim * dim, 0) {}
    IntMatrix(std::size_t dim, std::vector<std::int64_t> row_major);

    static IntMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::int64_t& at(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }
    const std::vector<std::int64_t>& entries() const { return e_; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<std::int64_t> e_;
};

// Upper bound on |det M|: product over rows of ceil(sqrt(sum of squares)).
ExactInt hadamard_bound(const IntMatrix& m);

// Word-sized primes just below 2^62, descending, as many as requested.
std::vector<std::uint64_t> crt_moduli(std::size_t count);

// Exact determinant by Chinese remaindering: det mod enough 62-bit primes for
// their product to exceed twice the Hadamard bound, then lifted to the
// balanced range to recover the sign. Moduli are processed on `jobs` threads.
ExactInt exact_det(const IntMatrix& m, unsigned jobs = 1);

// Fraction-free Gaussian elimination over the integers. Independent of exact_det.
ExactInt bareiss_det(const IntMatrix& m);

// delta_{a,i} = ([(a+1)u_i/p] - [a u_i/p]) - ([(a+1)(p-u_i)/p] - [a(p-u_i)/p]),
// a, i = 1..(p-1)/2. Every entry is +-1.
IntMatrix hminus_sign_matrix(const PrimeContext& ctx);

// (i * (j^-1 mod p)) mod p, i, j = 1..(p-1)/2.
IntMatrix maillet_matrix(const PrimeContext& ctx);

// [ij/p] - [(i-1)j/p], i, j = 3..(p-1)/2. Needs p >= 7.
IntMatrix masley_matrix(const PrimeContext& ctx);

// h^- = |det(delta)| / 2^((p-3)/2). Throws InconsistencyError if the division is inexact.
ExactInt hminus_new(const PrimeContext& ctx, unsigned jobs = 1);
// h^- = |Maillet determinant| / p^((p-3)/2). Throws InconsistencyError if inexact.
ExactInt hminus_maillet(const PrimeContext& ctx, unsigned jobs = 1);
// h^- = |Masley determinant|.
ExactInt hminus_masley(const PrimeContext& ctx, unsigned jobs = 1);

struct HminusComparison
{
    std::uint32_t p = 0;
    ExactInt sign_det, maillet_det, masley_det;  // raw signed determinants
    ExactInt by_new, by_maillet, by_masley;     // -1 marks an inexact division
    bool agree() const { return by_new == by_maillet && by_new == by_masley; }
};

// Computes all three. Does not throw on disagreement; see hminus_checked.
HminusComparison hminus_compare(const PrimeContext& ctx, unsigned jobs = 1);

// All three formulas; throws InconsistencyError with every determinant in the
// message if they disagree.
ExactInt hminus_checked(const PrimeContext& ctx, unsigned jobs = 1);

// Prime factorization, ascending primes: trial division to 10^6, then Brent's
// Pollard rho with Miller-Rabin certification. factor(1) is empty.
// Throws std::invalid_argument for n < 1.
std::vector<std::pair<ExactInt, unsigned>> factor(const ExactInt& n);

// Miller-Rabin: deterministic (first 13 prime bases) below 3.3e24, otherwise
// those 13 bases plus 27 seeded random bases.
bool is_probable_prime(const ExactInt& n);

// "5 * 13^2 * 157^2 * ..." ; "1" for the empty factorization.
std::string format_factorization(const std::vector<std::pair<ExactInt, unsigned>>& f);

// gcd(n, q - 1). Both arguments must be positive.
ExactInt subfield_factor_gcd(const ExactInt& n, const ExactInt& qminus1);

// Necessary condition for a prime q to divide the class number of the degree-g
// subfield (g an odd prime divisor of p-1): q == g or q == 1 mod g.
bool subfield_prime_predicate(const ExactInt& g, const ExactInt& q);

}  // namespace cyclocrit
