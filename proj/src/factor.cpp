#include "cyclocrit/classnum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cyclocrit {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

const std::vector<unsigned long>& small_primes()
{
    static const std::vector<unsigned long> primes = [] {
        std::vector<char> sieve(kTrialLimit + 1, 1);
        std::vector<unsigned long> r;
        for (unsigned long i = 2; i <= kTrialLimit; ++i)
        {
            if (!sieve[i]) continue;
            r.push_back(i);
            for (unsigned long j = i * i; j <= kTrialLimit; j += i) sieve[j] = 0;
        }
        return r;
    }();
    return primes;
}

bool miller_rabin_round(const ExactInt& n, const ExactInt& d, unsigned s, const ExactInt& a)
{
    const ExactInt nm1 = n - 1;
    ExactInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned r = 1; r < s; ++r)
    {
        x = x * x % n;
        if (x == nm1) return true;
    }
    return false;
}

// Brent's variant with batched gcds. Returns a nontrivial divisor of composite n.
ExactInt pollard_brent(const ExactInt& n, gmp_randclass& rng)
{
    for (;;)
    {
        const ExactInt c = rng.get_z_range(n - 1) + 1;
        ExactInt y = rng.get_z_range(n), x, ys, q = 1, g = 1;
        const unsigned long batch = 128;
        unsigned long r = 1;
        auto f = [&](const ExactInt& v) { return ExactInt((v * v + c) % n); };
        while (g == 1)
        {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1)
            {
                ys = y;
                const unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i)
                {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n)
        {
            // batch overshot; walk the last stretch one step at a time
            do
            {
                ys = f(ys);
                g = gcd(ExactInt(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const ExactInt& n, std::map<ExactInt, unsigned>& out, gmp_randclass& rng)
{
    if (n == 1) return;
    if (is_probable_prime(n))
    {
        ++out[n];
        return;
    }
    const ExactInt d = pollard_brent(n, rng);
    factor_into(d, out, rng);
    factor_into(ExactInt(n / d), out, rng);
}

}  // namespace

bool is_probable_prime(const ExactInt& n)
{
    if (n < 2) return false;
    static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (const auto b : bases)
    {
        if (n == b) return true;
        if (n % b == 0) return false;
    }
    ExactInt d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t()))
    {
        d /= 2;
        ++s;
    }
    for (const auto b : bases)
        if (!miller_rabin_round(n, d, s, ExactInt(b))) return false;

    // The 13 prime bases are a proof below 3317044064679887385961981.
    static const ExactInt deterministic_limit("3317044064679887385961981");
    if (n < deterministic_limit) return true;

    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eed);
    for (int round = 0; round < 27; ++round)
        if (!miller_rabin_round(n, d, s, rng.get_z_range(n - 3) + 2)) return false;
    return true;
}

std::vector<std::pair<ExactInt, unsigned>> factor(const ExactInt& n)
{
    if (n < 1) throw std::invalid_argument("factor: n must be positive");
    std::map<ExactInt, unsigned> out;
    ExactInt rest = n;
    for (const auto q : small_primes())
    {
        if (ExactInt(q) * q > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), q))
        {
            rest /= q;
            ++out[ExactInt(q)];
        }
    }
    if (rest > 1)
    {
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(0xfac7);
        factor_into(rest, out, rng);
    }
    return {out.begin(), out.end()};
}

std::string format_factorization(const std::vector<std::pair<ExactInt, unsigned>>& f)
{
    if (f.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i)
    {
        if (i) os << " * ";
        os << f[i].first.get_str();
        if (f[i].second > 1) os << '^' << f[i].second;
    }
    return os.str();
}

ExactInt subfield_factor_gcd(const ExactInt& n, const ExactInt& qminus1)
{
    if (n <= 0 || qminus1 <= 0) throw std::invalid_argument("subfield_factor_gcd: arguments must be positive");
    return gcd(n, qminus1);
}

bool subfield_prime_predicate(const ExactInt& g, const ExactInt& q)
{
    if (g < 3 || !is_probable_prime(g)) throw std::invalid_argument("subfield_prime_predicate: g must be an odd prime");
    if (!is_probable_prime(q)) throw std::invalid_argument("subfield_prime_predicate: q must be prime");
    return q == g || q % g == 1;
}

}  // namespace cyclocrit
