#include "cyclocrit/classnum.hpp"

#include <sstream>

namespace cyclocrit {

namespace {

void require_p7(const PrimeContext& ctx, const char* who)
{
    if (ctx.p() < 7) throw std::invalid_argument(std::string(who) + ": needs p >= 7");
}

std::int64_t fl(std::int64_t num, std::int64_t p) { return num / p; }  // num >= 0 throughout

ExactInt divide_exactly(const ExactInt& n, const ExactInt& d, const char* who, std::uint32_t p)
{
    if (n % d != 0)
        throw InconsistencyError(std::string(who) + ": inexact division at p=" + std::to_string(p) + " (" +
                                 n.get_str() + " / " + d.get_str() + ")");
    return n / d;
}

ExactInt power(unsigned long base, unsigned long e)
{
    ExactInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

}  // namespace

IntMatrix hminus_sign_matrix(const PrimeContext& ctx)
{
    require_p7(ctx, "hminus_sign_matrix");
    const std::int64_t p = ctx.p();
    const std::size_t n = ctx.nu();
    IntMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i)
    {
        const std::int64_t u = ctx.upow(static_cast<std::int64_t>(i));
        const std::int64_t v = p - u;
        for (std::size_t a = 1; a <= n; ++a)
        {
            const std::int64_t aa = static_cast<std::int64_t>(a);
            m.at(a - 1, i - 1) = (fl((aa + 1) * u, p) - fl(aa * u, p)) - (fl((aa + 1) * v, p) - fl(aa * v, p));
        }
    }
    return m;
}

IntMatrix maillet_matrix(const PrimeContext& ctx)
{
    require_p7(ctx, "maillet_matrix");
    const std::size_t n = ctx.nu();
    IntMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            m.at(i - 1, j - 1) = ctx.mul(static_cast<std::uint32_t>(i), ctx.inv(static_cast<std::uint32_t>(j)));
    return m;
}

IntMatrix masley_matrix(const PrimeContext& ctx)
{
    require_p7(ctx, "masley_matrix");
    const std::int64_t p = ctx.p();
    const std::size_t n = ctx.nu() - 2;
    IntMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
        {
            const std::int64_t i = static_cast<std::int64_t>(r) + 3, j = static_cast<std::int64_t>(c) + 3;
            m.at(r, c) = fl(i * j, p) - fl((i - 1) * j, p);
        }
    return m;
}

ExactInt hminus_new(const PrimeContext& ctx, unsigned jobs)
{
    const ExactInt d = abs(exact_det(hminus_sign_matrix(ctx), jobs));
    return divide_exactly(d, power(2, (ctx.p() - 3) / 2), "hminus_new", ctx.p());
}

ExactInt hminus_maillet(const PrimeContext& ctx, unsigned jobs)
{
    const ExactInt d = abs(exact_det(maillet_matrix(ctx), jobs));
    return divide_exactly(d, power(ctx.p(), (ctx.p() - 3) / 2), "hminus_maillet", ctx.p());
}

ExactInt hminus_masley(const PrimeContext& ctx, unsigned jobs) { return abs(exact_det(masley_matrix(ctx), jobs)); }

HminusComparison hminus_compare(const PrimeContext& ctx, unsigned jobs)
{
    HminusComparison r;
    r.p = ctx.p();
    r.sign_det = exact_det(hminus_sign_matrix(ctx), jobs);
    r.maillet_det = exact_det(maillet_matrix(ctx), jobs);
    r.masley_det = exact_det(masley_matrix(ctx), jobs);
    const unsigned long e = (ctx.p() - 3) / 2;
    // quotients are floored here so the comparison itself never throws
    r.by_new = abs(r.sign_det) / power(2, e);
    r.by_maillet = abs(r.maillet_det) / power(ctx.p(), e);
    r.by_masley = abs(r.masley_det);
    if (abs(r.sign_det) % power(2, e) != 0) r.by_new = -1;
    if (abs(r.maillet_det) % power(ctx.p(), e) != 0) r.by_maillet = -1;
    return r;
}

ExactInt hminus_checked(const PrimeContext& ctx, unsigned jobs)
{
    const HminusComparison c = hminus_compare(ctx, jobs);
    if (!c.agree() || c.by_new < 1)
    {
        std::ostringstream os;
        os << "h^- formulas disagree at p=" << c.p << ": sign det " << c.sign_det << " -> " << c.by_new
           << ", Maillet det " << c.maillet_det << " -> " << c.by_maillet << ", Masley det " << c.masley_det
           << " -> " << c.by_masley;
        throw InconsistencyError(os.str());
    }
    return c.by_new;
}

}  // namespace cyclocrit
