#include "cyclocrit/kummer_sets.hpp"

#include "cyclocrit/fp_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclocrit {

bool IndexSet::contains(std::uint32_t i) const { return std::binary_search(members.begin(), members.end(), i); }

SignMatrix::SignMatrix(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim), e_(dim * dim, 1) {}

void SignMatrix::set(std::size_t r, std::size_t c, int v)
{
    if (v != 1 && v != -1) throw std::invalid_argument("SignMatrix: entries must be +-1");
    e_[r * dim_ + c] = static_cast<std::int8_t>(v);
}

namespace {

ModMatrix to_mod(const SignMatrix& m)
{
    ModMatrix r(m.dim(), m.dim(), m.p());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(i, j) == 1 ? 1 : m.p() - 1;
    return r;
}

void require_d(const PrimeContext& ctx, std::uint32_t d, const char* who)
{
    if (d < 1 || d > ctx.p() - 2) throw std::invalid_argument(std::string(who) + ": d must lie in 1..p-2");
}

void require_mu(const PrimeContext& ctx, std::uint32_t mu, const char* who)
{
    if (mu % 2 == 0 || mu < 3 || mu > ctx.p() - 2)
        throw std::invalid_argument(std::string(who) + ": mu must be odd with 3 <= mu <= p-2");
}

}  // namespace

std::size_t SignMatrix::rank_mod_p() const { return to_mod(*this).rank(); }

Residue SignMatrix::det_mod_p() const { return Residue(static_cast<std::uint32_t>(to_mod(*this).det())); }

bool in_kummer_interval(std::uint32_t p, std::uint32_t d, std::uint32_t j)
{
    // The only candidate is the smallest l with l*p > j*d.
    const std::uint64_t l = static_cast<std::uint64_t>(j) * d / p + 1;
    return l <= d && l * p < static_cast<std::uint64_t>(j) * (d + 1);
}

IndexSet index_set(const PrimeContext& ctx, std::uint32_t d)
{
    require_d(ctx, d, "index_set");
    const std::uint32_t p = ctx.p();
    const std::int64_t nu = ctx.nu(), s = ctx.ind(d);
    IndexSet r{p, ctx.root(), d, {}};
    for (std::int64_t i = 1; i <= p - 1; ++i)
        if (ctx.upow(nu - i) + ctx.upow(nu - i + s) > p) r.members.push_back(static_cast<std::uint32_t>(i));
    return r;
}

IndexSet index_set_by_intervals(const PrimeContext& ctx, std::uint32_t k)
{
    require_d(ctx, k, "index_set_by_intervals");
    const std::uint32_t p = ctx.p();
    IndexSet r{p, ctx.root(), k, {}};
    for (std::uint32_t j = 1; j < p; ++j)
    {
        if (!in_kummer_interval(p, k, j)) continue;
        const std::uint32_t i = ctx.ind(ctx.neg(ctx.inv(j)));
        r.members.push_back(i == 0 ? p - 1 : i);
    }
    std::sort(r.members.begin(), r.members.end());
    return r;
}

Residue criterion_sum(const PrimeContext& ctx, std::uint32_t d, std::uint32_t mu)
{
    require_d(ctx, d, "criterion_sum");
    require_mu(ctx, mu, "criterion_sum");
    std::uint32_t s = 0;
    for (std::uint32_t j = 1; j < ctx.p(); ++j)
        if (in_kummer_interval(ctx.p(), d, j)) s = ctx.add(s, ctx.pow(ctx.inv(j), mu));
    return Residue(s);
}

Residue double_criterion_sum(const PrimeContext& ctx, std::uint32_t d1, std::uint32_t d2, std::uint32_t mu)
{
    require_d(ctx, d1, "double_criterion_sum");
    require_d(ctx, d2, "double_criterion_sum");
    if (d1 >= d2) throw std::invalid_argument("double_criterion_sum: requires d1 < d2");
    require_mu(ctx, mu, "double_criterion_sum");
    std::uint32_t s = 0;
    for (std::uint32_t j = 1; j < ctx.p(); ++j)
        if (in_kummer_interval(ctx.p(), d1, j) && in_kummer_interval(ctx.p(), d2, j))
            s = ctx.add(s, ctx.pow(ctx.inv(j), mu));
    return Residue(s);
}

Residue bernoulli_link_residual(const PrimeContext& ctx, const BernoulliTable& table, std::uint32_t d, std::uint32_t m)
{
    const std::uint32_t p = ctx.p();
    if (table.p() != p) throw std::invalid_argument("bernoulli_link_residual: table built for another prime");
    require_d(ctx, d, "bernoulli_link_residual");
    if (m < 1 || m > (p - 3) / 2) throw std::invalid_argument("bernoulli_link_residual: m must lie in 1..(p-3)/2");

    const std::uint32_t lhs = criterion_sum(ctx, d, 2 * m + 1).value();
    const std::uint32_t a = ctx.mul(d, ctx.sub(ctx.pow(d, 2 * m), 1));
    const std::uint32_t b = ctx.mul(ctx.reduce(d + 1), ctx.sub(ctx.pow(d + 1, 2 * m), 1));
    const std::uint32_t coeff = ctx.mul(ctx.sub(a, b), ctx.inv(p - 1 - 2 * m));
    const std::uint32_t rhs = ctx.mul(coeff, table.at(p - 1 - 2 * m).value());
    return Residue(ctx.sub(lhs, rhs));
}

Residue bernoulli_link_residual(const PrimeContext& ctx, std::uint32_t d, std::uint32_t m)
{
    return bernoulli_link_residual(ctx, bernoulli_even_mod_p(ctx), d, m);
}

SignMatrix mp_matrix(const PrimeContext& ctx)
{
    const std::uint32_t p = ctx.p();
    const std::int64_t nu = ctx.nu();
    SignMatrix m(p, ctx.nu());
    for (std::uint32_t d = 1; d <= ctx.nu(); ++d)
        for (std::int64_t i = 1; i <= nu; ++i)
        {
            const std::uint32_t a = ctx.upow(nu - i);
            const std::uint32_t b = ctx.upow(-i);
            const bool plus = a + ctx.mul(d, a) > p;
            const bool minus = b + ctx.mul(d, b) > p;
            if (plus == minus)
                throw std::logic_error("mp_matrix: eps conditions not complementary at p=" + std::to_string(p) +
                                       " d=" + std::to_string(d) + " i=" + std::to_string(i));
            m.set(d - 1, static_cast<std::size_t>(i - 1), plus ? 1 : -1);
        }
    return m;
}

std::size_t mp_rank(const PrimeContext& ctx) { return mp_matrix(ctx).rank_mod_p(); }

SignMatrix deltap_matrix(const PrimeContext& ctx)
{
    const std::uint32_t p = ctx.p();
    SignMatrix m(p, ctx.nu());
    for (std::uint32_t d = 1; d <= ctx.nu(); ++d)
        for (std::uint32_t j = 1; j <= ctx.nu(); ++j) m.set(d - 1, j - 1, in_kummer_interval(p, d, j) ? 1 : -1);
    return m;
}

Residue deltap_det_mod_p(const PrimeContext& ctx) { return deltap_matrix(ctx).det_mod_p(); }

std::size_t deltap_rank(const PrimeContext& ctx) { return deltap_matrix(ctx).rank_mod_p(); }

}  // namespace cyclocrit
