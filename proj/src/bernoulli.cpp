#include "cyclocrit/bernoulli.hpp"

#include <stdexcept>
#include <string>

namespace cyclocrit {

BernoulliTable::BernoulliTable(std::uint32_t p, std::vector<Residue> even_values) : p_(p), values_(std::move(even_values))
{
    if (values_.size() != (p - 3) / 2) throw std::invalid_argument("BernoulliTable: expected (p-3)/2 entries");
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (values_[k].is_zero()) irregular_.push_back(static_cast<std::uint32_t>(2 * (k + 1)));
}

Residue BernoulliTable::at(std::uint32_t n) const
{
    if (n < 2 || n % 2 != 0 || n > p_ - 3)
        throw std::out_of_range("BernoulliTable::at: index " + std::to_string(n) + " outside even 2..p-3");
    return values_[n / 2 - 1];
}

BernoulliTable bernoulli_even_mod_p(const PrimeContext& ctx)
{
    const std::uint32_t p = ctx.p();
    if (p < 7) throw std::invalid_argument("bernoulli_even_mod_p: requires p >= 7");

    // B[j] for j = 0..p-3; odd j > 1 stay zero.
    std::vector<std::uint32_t> B(p - 2, 0);
    B[0] = 1;
    B[1] = ctx.neg(ctx.inv(2));

    // row holds C(n+1, j) for j = 0..n+1; start at n+1 = 2.
    std::vector<std::uint32_t> row = {1, 2, 1};
    for (std::uint32_t n = 2; n <= p - 3; ++n)
    {
        // advance to row n+1
        std::vector<std::uint32_t> next(n + 2, 1);
        for (std::uint32_t j = 1; j <= n; ++j) next[j] = ctx.add(row[j - 1], row[j]);
        row.swap(next);
        if (n % 2 == 1) continue;

        std::uint32_t s = ctx.add(B[0], ctx.mul(row[1], B[1]));
        for (std::uint32_t j = 2; j < n; j += 2) s = ctx.add(s, ctx.mul(row[j], B[j]));
        // (n+1) B_n = -s, and n+1 <= p-2 is invertible
        B[n] = ctx.neg(ctx.mul(s, ctx.inv(n + 1)));
    }

    std::vector<Residue> even;
    even.reserve((p - 3) / 2);
    for (std::uint32_t n = 2; n <= p - 3; n += 2) even.emplace_back(B[n]);
    return BernoulliTable(p, std::move(even));
}

Residue vandiver_bernoulli_rhs(const PrimeContext& ctx, std::uint32_t d, std::uint32_t m)
{
    const std::uint32_t p = ctx.p();
    if (d < 2 || d > p - 2) throw std::invalid_argument("vandiver_bernoulli_rhs: d must lie in 2..p-2");
    if (m < 1 || m > (p - 3) / 2) throw std::invalid_argument("vandiver_bernoulli_rhs: m must lie in 1..(p-3)/2");

    const std::uint64_t mu = 2ull * m + 1;
    // prefix[j] = sum_{i=1}^{j} i^-mu
    std::vector<std::uint32_t> prefix(p, 0);
    for (std::uint32_t j = 1; j < p; ++j) prefix[j] = ctx.add(prefix[j - 1], ctx.pow(ctx.inv(j), mu));

    std::uint32_t s = 0;
    for (std::uint64_t l = 1; l < d; ++l)
    {
        // largest j with j*d < l*p; l*p is never a multiple of d here
        const std::uint64_t jmax = (l * p - 1) / d;
        s = ctx.add(s, prefix[jmax]);
    }
    const std::uint32_t coeff = ctx.mul(ctx.reduce(static_cast<std::int64_t>(p) - 1 - 2 * m), ctx.pow(ctx.inv(d), mu));
    return Residue(ctx.mul(coeff, s));
}

std::uint32_t irregular_index(const PrimeContext& ctx) { return bernoulli_even_mod_p(ctx).index_of_irregularity(); }

}  // namespace cyclocrit
