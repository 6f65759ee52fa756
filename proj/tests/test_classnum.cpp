#include "cyclocrit/classnum.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cyclocrit;

namespace {

ExactInt product(const std::vector<std::pair<ExactInt, unsigned>>& f)
{
    ExactInt r = 1;
    for (const auto& [q, e] : f)
        for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

}  // namespace

TEST_SUITE("classnum")
{
    TEST_CASE("exact determinant basics")
    {
        CHECK(exact_det(IntMatrix::identity(5)) == 1);
        CHECK(exact_det(IntMatrix(2, {1, 2, 3, 4})) == -2);
        CHECK(bareiss_det(IntMatrix(2, {1, 2, 3, 4})) == -2);
        CHECK(exact_det(IntMatrix(0)) == 1);
        CHECK(exact_det(IntMatrix(3, {1, 2, 3, 2, 4, 6, 0, 1, 1})) == 0);
        CHECK(bareiss_det(IntMatrix(3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
        CHECK(exact_det(IntMatrix(3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
        CHECK(exact_det(IntMatrix(2, {0, 0, 1, 1})) == 0);
        CHECK_THROWS_AS(IntMatrix(2, {1, 2, 3}), std::invalid_argument);
        CHECK(hadamard_bound(IntMatrix(2, {3, 4, 1, 0})) == 5);
    }

    TEST_CASE("CRT determinant against Bareiss and Leibniz")
    {
        std::mt19937_64 rng(20);
        std::uniform_int_distribution<std::int64_t> small(-100, 100);
        for (std::size_t n = 1; n <= 7; ++n)
            for (int k = 0; k < 5; ++k)
            {
                std::vector<std::int64_t> a(n * n);
                for (auto& v : a) v = small(rng);
                const IntMatrix m(n, a);
                const ExactInt d = oracle::leibniz_det(a, n);
                REQUIRE(exact_det(m) == d);
                REQUIRE(bareiss_det(m) == d);
            }
        for (std::size_t n : {20u, 30u})
            for (int k = 0; k < 3; ++k)
            {
                std::vector<std::int64_t> a(n * n);
                for (auto& v : a) v = small(rng);
                const IntMatrix m(n, a);
                const ExactInt d = exact_det(m, 4);
                REQUIRE(d == bareiss_det(m));
                REQUIRE(abs(d) <= hadamard_bound(m));
            }
        // entries near 2^40 force several moduli
        std::uniform_int_distribution<std::int64_t> big(-(1LL << 40), 1LL << 40);
        std::vector<std::int64_t> a(15 * 15);
        for (auto& v : a) v = big(rng);
        CHECK(exact_det(IntMatrix(15, a), 3) == bareiss_det(IntMatrix(15, a)));
    }

    TEST_CASE("crt moduli")
    {
        const auto m = crt_moduli(5);
        REQUIRE(m.size() == 5);
        for (std::size_t i = 0; i < m.size(); ++i)
        {
            CHECK(m[i] < (1ULL << 62));
            CHECK(m[i] > (1ULL << 61));
            CHECK(is_probable_prime(ExactInt(std::to_string(m[i]))));
            if (i) CHECK(m[i] < m[i - 1]);
        }
        CHECK(crt_moduli(2) == std::vector<std::uint64_t>(m.begin(), m.begin() + 2));
    }

    TEST_CASE("sign matrix entries are +-1")
    {
        for (const auto p : oracle::primes(7, 101))
        {
            const PrimeContext ctx(p);
            const IntMatrix m = hminus_sign_matrix(ctx);
            REQUIRE(m.dim() == ctx.nu());
            for (const auto v : m.entries()) REQUIRE((v == 1 || v == -1));
        }
        const IntMatrix m7 = hminus_sign_matrix(PrimeContext(7));
        CHECK(m7 == IntMatrix(3, {-1, -1, 1, 1, -1, 1, -1, 1, 1}));
        CHECK_THROWS_AS(hminus_sign_matrix(PrimeContext(5)), std::invalid_argument);
    }

    TEST_CASE("Maillet and Masley matrices")
    {
        const PrimeContext c7(7);
        CHECK(maillet_matrix(c7) == IntMatrix(3, {1, 4, 5, 2, 1, 3, 3, 5, 1}));
        CHECK(masley_matrix(c7) == IntMatrix(1, {1}));
        CHECK(hminus_masley(c7) == 1);
    }

    TEST_CASE("h^- small primes")
    {
        for (const std::uint32_t p : {7u, 11u, 13u, 17u, 19u})
        {
            const PrimeContext ctx(p);
            CHECK(hminus_new(ctx) == 1);
            CHECK(hminus_maillet(ctx) == 1);
            CHECK(hminus_masley(ctx) == 1);
        }
        CHECK(hminus_maillet(PrimeContext(23)) == 3);
        CHECK(hminus_checked(PrimeContext(31)) == 9);
        CHECK(hminus_checked(PrimeContext(37)) == 37);
        CHECK(hminus_checked(PrimeContext(41)) == 121);
    }

    TEST_CASE("h^- against the analytic class number formula")
    {
        for (const auto p : oracle::primes(7, 101))
        {
            const HminusComparison c = hminus_compare(PrimeContext(p));
            REQUIRE(c.agree());
            const long double h = oracle::hminus_analytic(p);
            REQUIRE(c.by_new.get_str() == std::to_string(static_cast<unsigned long long>(std::llround(h))));
        }
    }

    TEST_CASE("h^- published values")
    {
        const ExactInt h97 = hminus_checked(PrimeContext(97), 4);
        CHECK(h97 == ExactInt(577) * 3457 * 206209);
        const ExactInt h157 = hminus_checked(PrimeContext(157), 4);
        CHECK(h157 == ExactInt(5) * 13 * 13 * 157 * 157 * 1093 * 1873 * 418861 * 3148601);
        const auto f = factor(h157);
        CHECK(format_factorization(f) == "5 * 13^2 * 157^2 * 1093 * 1873 * 418861 * 3148601");
    }

    TEST_CASE("root independence of |det|")
    {
        for (const auto p : oracle::primes(7, 61))
        {
            const PrimeContext base(p);
            const ExactInt d = abs(exact_det(hminus_sign_matrix(base)));
            for (std::uint32_t g = 2; g < p; ++g)
                if (is_primitive_root(g, p)) REQUIRE(abs(exact_det(hminus_sign_matrix(PrimeContext(p, g)))) == d);
        }
    }

    TEST_CASE("factorization")
    {
        CHECK(factor(1).empty());
        CHECK(format_factorization(factor(1)) == "1");
        CHECK(factor(37) == std::vector<std::pair<ExactInt, unsigned>>{{37, 1}});
        CHECK(format_factorization(factor(ExactInt(1) << 10)) == "2^10");
        CHECK_THROWS_AS(factor(0), std::invalid_argument);
        // product of two primes above the trial-division limit
        const ExactInt a("1000000007"), b("998244353"), c("18446744073709551557");
        CHECK(factor(a * b * b) == std::vector<std::pair<ExactInt, unsigned>>{{b, 2}, {a, 1}});
        CHECK(factor(a * c) == std::vector<std::pair<ExactInt, unsigned>>{{a, 1}, {c, 1}});

        gmp_randclass rng(gmp_randinit_default);
        rng.seed(99);
        for (int k = 0; k < 25; ++k)
        {
            const ExactInt n = rng.get_z_bits(k < 20 ? 64 : 80) + 1;
            const auto f = factor(n);
            REQUIRE(product(f) == n);
            for (const auto& [q, e] : f) REQUIRE(is_probable_prime(q));
        }
        // up to 2^128 with a planted structure: smooth part times a product of two ~40-bit primes
        for (int k = 0; k < 5; ++k)
        {
            ExactInt p1, p2;
            mpz_nextprime(p1.get_mpz_t(), ExactInt(rng.get_z_bits(40)).get_mpz_t());
            mpz_nextprime(p2.get_mpz_t(), ExactInt(rng.get_z_bits(40)).get_mpz_t());
            const ExactInt n = p1 * p2 * (rng.get_z_bits(40) + 1);
            REQUIRE(product(factor(n)) == n);
        }
    }

    TEST_CASE("primality")
    {
        CHECK_FALSE(is_probable_prime(0));
        CHECK_FALSE(is_probable_prime(1));
        CHECK(is_probable_prime(2));
        CHECK(is_probable_prime(41));
        CHECK_FALSE(is_probable_prime(ExactInt("3215031751")));  // strong pseudoprime to 2, 3, 5, 7
        CHECK(is_probable_prime(ExactInt("170141183460469231731687303715884105727")));
        CHECK_FALSE(is_probable_prime(ExactInt("3317044064679887385961981")));
        for (unsigned long n = 0; n < 5000; ++n) REQUIRE(is_probable_prime(n) == oracle::is_prime(n));
    }

    TEST_CASE("subfield predicates")
    {
        CHECK(subfield_factor_gcd(119, 511122) == 17);
        CHECK(subfield_factor_gcd(119, 14136486) == 119);
        CHECK(subfield_factor_gcd(119, ExactInt("123373184788")) == 119);
        CHECK(subfield_factor_gcd(119, ExactInt("22497399987891136953078")) == 119);
        CHECK(subfield_factor_gcd(12345, 12345) == 12345);
        CHECK_THROWS_AS(subfield_factor_gcd(0, 5), std::invalid_argument);
        CHECK(subfield_prime_predicate(7, 7));
        CHECK(subfield_prime_predicate(7, 29));
        CHECK_FALSE(subfield_prime_predicate(7, 11));
        CHECK_THROWS_AS(subfield_prime_predicate(9, 11), std::invalid_argument);
        CHECK_THROWS_AS(subfield_prime_predicate(2, 11), std::invalid_argument);
        CHECK_THROWS_AS(subfield_prime_predicate(7, 15), std::invalid_argument);
    }
}
