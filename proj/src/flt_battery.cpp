#include "cyclocrit/flt_battery.hpp"

#include "cyclocrit/bernoulli.hpp"
#include "cyclocrit/fp_matrix.hpp"
#include "cyclocrit/fppoly.hpp"
#include "cyclocrit/kummer_sets.hpp"
#include "cyclocrit/parallel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace cyclocrit {

namespace {

CriterionReport make(std::uint32_t p, std::string id, std::map<std::string, std::int64_t> params, std::uint64_t value,
                     Verdict verdict)
{
    return {p, std::move(id), std::move(params), std::to_string(value), verdict};
}

// nonzero certifies, zero says nothing
Verdict certifying(std::uint32_t v) { return v != 0 ? Verdict::criterion_holds : Verdict::inconclusive; }

}  // namespace

Residue exp_det(const PrimeContext& ctx, const ExpDetSpec& spec, std::uint32_t t)
{
    const std::uint32_t p = ctx.p();
    if (spec.p != p) throw std::invalid_argument("exp_det: spec built for another prime");
    if (spec.rows.empty() || spec.rows.size() != spec.cols.size())
        throw std::invalid_argument("exp_det: E_f and K_f must be nonempty and of equal size");
    if (t >= p) throw std::invalid_argument("exp_det: t must lie in 0..p-1");
    for (const auto v : spec.rows)
        if (v == 0 || v >= p) throw std::invalid_argument("exp_det: E_f entries must lie in 1..p-1");
    for (const auto v : spec.cols)
        if (v == 0 || v >= p) throw std::invalid_argument("exp_det: K_f entries must lie in 1..p-1");

    const std::size_t f = spec.rows.size();
    std::vector<std::uint32_t> tpow(p + 1);
    tpow[0] = 1;
    for (std::uint32_t e = 1; e <= p; ++e) tpow[e] = ctx.mul(tpow[e - 1], t);

    ModMatrix m(f, f, p);
    for (std::size_t i = 0; i < f; ++i)
    {
        const std::uint32_t gi = ctx.inv(spec.rows[i]);
        for (std::size_t j = 0; j < f; ++j)
        {
            const std::uint32_t e = ctx.mul(gi, spec.cols[j]);
            m.at(i, j) = ctx.add(tpow[e], tpow[p - e]);
        }
    }
    return Residue(static_cast<std::uint32_t>(m.det()));
}

ExpDetSpec conjecture_spec(const PrimeContext& ctx, std::uint32_t f, std::uint32_t l)
{
    ExpDetSpec s{ctx.p(), {}, {}};
    for (std::uint32_t i = 1; i <= f; ++i)
    {
        s.rows.push_back(ctx.inv(ctx.reduce(i)));
        s.cols.push_back(ctx.reduce(static_cast<std::int64_t>(i) + l));
    }
    return s;
}

ConjectureResult gcd_conjecture_roots(const PrimeContext& ctx, unsigned jobs)
{
    const std::uint32_t p = ctx.p();
    if (p < 17) throw std::domain_error("gcd_conjecture_roots: supported for p >= 17 only");
    const std::uint32_t f = p / 3;
    ConjectureResult r{p, {}, 0};
    for (std::uint32_t t = 1; t < p; ++t) r.roots.push_back(t);

    const std::vector<std::uint32_t> trivial{1, p - 1};
    for (std::uint32_t l = 1; l <= p / 2; ++l)
    {
        const ExpDetSpec spec = conjecture_spec(ctx, f, l);
        const auto zero = parallel_map<char>(r.roots.size(), jobs,
                                             [&](std::size_t k) { return exp_det(ctx, spec, r.roots[k]).is_zero(); });
        std::vector<std::uint32_t> kept;
        for (std::size_t k = 0; k < r.roots.size(); ++k)
            if (zero[k]) kept.push_back(r.roots[k]);
        r.roots = std::move(kept);
        r.l_used = l;
        if (r.roots == trivial) break;
    }
    return r;
}

std::vector<Residue> vieta_weights(const PrimeContext& ctx, const std::vector<std::uint32_t>& mus)
{
    std::set<std::uint32_t> seen;
    for (const auto mu : mus)
    {
        const std::uint32_t v = ctx.reduce(mu);
        if (v == 0) throw std::invalid_argument("vieta_weights: mu must be nonzero mod p");
        if (!seen.insert(v).second) throw std::invalid_argument("vieta_weights: duplicate mu");
    }
    // c[i] is the coefficient of X^i
    std::vector<std::uint32_t> c{1};
    for (const auto mu : mus)
    {
        const std::uint32_t neg = ctx.neg(ctx.reduce(mu));
        std::vector<std::uint32_t> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i)
        {
            next[i + 1] = ctx.add(next[i + 1], c[i]);
            next[i] = ctx.add(next[i], ctx.mul(c[i], neg));
        }
        c = std::move(next);
    }
    std::vector<Residue> out;
    for (const auto v : c) out.emplace_back(v);
    return out;
}

std::vector<CriterionReport> t_battery(const PrimeContext& ctx, std::uint32_t t, const TBatteryOptions& options)
{
    const std::uint32_t p = ctx.p();
    if (p < 5) throw std::invalid_argument("t_battery: needs p >= 5");
    if (t >= p || t == 0 || t == 1 || t == p - 1)
        throw std::invalid_argument("t_battery: t must lie in 2..p-2");

    std::vector<CriterionReport> out;
    const std::int64_t T = t;

    // (a) sum_j j^(p-2) t^((kj mod p) + j), k = 1..p-1
    std::vector<std::uint32_t> tpow(2 * p);
    tpow[0] = 1;
    for (std::size_t e = 1; e < tpow.size(); ++e) tpow[e] = ctx.mul(tpow[e - 1], t);
    for (std::uint32_t k = 1; k < p; ++k)
    {
        std::uint32_t s = 0;
        for (std::uint32_t j = 1; j < p; ++j) s = ctx.add(s, ctx.mul(ctx.inv(j), tpow[ctx.mul(k, j) + j]));
        out.push_back(make(p, "twisted_congruence", {{"t", T}, {"k", k}}, s, certifying(s)));
    }

    // (b)
    const std::uint32_t t2 = ctx.mul(t, t);
    const std::vector<std::uint32_t> phi = mirimanoff_all(ctx, t);
    const std::pair<std::uint32_t, std::uint32_t> points[] = {{p - 1, t}, {p - 1, p - t}, {p - 1, t2}, {p - 2, t2}};
    for (const auto& [m, x] : points)
    {
        const std::uint32_t v = x == t ? phi[m - 1] : mirimanoff_eval(ctx, m, x).value();
        out.push_back(make(p, "mirimanoff", {{"t", T}, {"m", m}, {"x", x}}, v, certifying(v)));
    }

    // (c)
    for (std::uint32_t m = 1; m < p; ++m)
    {
        const std::uint32_t v = ctx.mul(phi[m - 1], phi[p - m - 1]);
        out.push_back(make(p, "mirimanoff_pair", {{"t", T}, {"m", m}}, v, certifying(v)));
    }

    // (d) p - 1 = f g with f odd
    for (std::uint32_t f = 1; f < p - 1; f += 2)
    {
        if ((p - 1) % f != 0) continue;
        const std::uint32_t g = (p - 1) / f;
        for (std::uint32_t n = 0; 2 * n + 1 < g; ++n)
        {
            const std::uint32_t m = f * (2 * n + 1);
            out.push_back(make(p, "mirimanoff_subfield", {{"t", T}, {"f", f}, {"n", n}, {"m", m}}, phi[m - 1],
                               Verdict::inconclusive));
        }
        std::uint32_t s = 0;
        for (std::uint32_t i = 1; i < p; ++i)
            if (ctx.pow(i, 2ULL * f) == 1) s = ctx.add(s, ctx.mul(ctx.pow(i, f - 1), tpow[i]));
        out.push_back(make(p, "masked_sum", {{"t", T}, {"f", f}}, s, Verdict::inconclusive));
    }

    // (e)
    std::vector<ExpDetSpec> specs = options.exp_specs;
    if (specs.empty()) specs.push_back(conjecture_spec(ctx, std::max<std::uint32_t>(1, p / 3), 1));
    for (std::size_t s = 0; s < specs.size(); ++s)
    {
        const std::uint32_t v = exp_det(ctx, specs[s], t).value();
        out.push_back(make(p, "exp_det",
                           {{"t", T}, {"spec", static_cast<std::int64_t>(s)},
                            {"f", static_cast<std::int64_t>(specs[s].rows.size())}},
                           v, Verdict::inconclusive));
    }

    // (f) vanishing count next to (p-3)/2 - i_p
    std::uint32_t count = 0;
    for (std::uint32_t m = 1; m <= (p - 3) / 2; ++m)
        if (phi[2 * m] == 0) ++count;
    const std::uint32_t ip = options.irregular_index ? *options.irregular_index
                                                     : (p >= 7 ? irregular_index(ctx) : 0);
    const std::int64_t threshold = static_cast<std::int64_t>((p - 3) / 2) - ip;
    out.push_back(make(p, "vanishing_count", {{"t", T}, {"threshold", threshold}}, count, Verdict::inconclusive));
    return out;
}

std::vector<CriterionReport> p_battery(const PrimeContext& ctx, const PBatteryOptions& options)
{
    const std::uint32_t p = ctx.p();
    if (p < 7) throw std::invalid_argument("p_battery: needs p >= 7");
    std::vector<CriterionReport> out;

    std::uint32_t cauchy = 0;
    for (std::uint32_t j = 1; j <= (p - 1) / 2; ++j) cauchy = ctx.add(cauchy, ctx.pow(ctx.inv(j), 3));
    out.push_back(make(p, "cauchy_half", {{"mu", 3}}, cauchy, certifying(cauchy)));

    const std::uint32_t d_max = std::min(options.d_max.value_or(p - 2), p - 2);
    std::vector<std::uint32_t> mus;
    for (const auto mu : options.mus)
        if (mu % 2 == 1 && mu >= 3 && mu <= p - 2) mus.push_back(mu);

    for (const auto mu : mus)
        for (std::uint32_t d = 1; d <= d_max; ++d)
        {
            const std::uint32_t v = criterion_sum(ctx, d, mu).value();
            out.push_back(make(p, "criterion_sum", {{"d", d}, {"mu", mu}}, v, certifying(v)));
        }

    const std::uint32_t d2_max = std::min(options.double_d2_max, p - 2);
    for (const auto mu : mus)
        for (std::uint32_t d2 = 2; d2 <= d2_max; ++d2)
            for (std::uint32_t d1 = 1; d1 < d2; ++d1)
            {
                const std::uint32_t v = double_criterion_sum(ctx, d1, d2, mu).value();
                out.push_back(make(p, "double_criterion_sum", {{"d1", d1}, {"d2", d2}, {"mu", mu}}, v, certifying(v)));
            }

    std::uint32_t taken = 0;
    for (std::uint32_t q = 2; taken < options.fermat_bases; ++q)
    {
        if (!is_prime_trial(q)) continue;
        ++taken;
        if (q == p) continue;
        const std::uint32_t v = fermat_quotient(q, p).value();
        out.push_back(make(p, "fermat_quotient", {{"q", q}}, v, certifying(v)));
    }
    return out;
}

bool t_excluded(const std::vector<CriterionReport>& reports)
{
    return std::any_of(reports.begin(), reports.end(),
                       [](const CriterionReport& r) { return r.verdict == Verdict::criterion_holds; });
}

bool first_case_certified(const std::vector<CriterionReport>& reports) { return t_excluded(reports); }

bool has_violation(const std::vector<CriterionReport>& reports)
{
    return std::any_of(reports.begin(), reports.end(),
                       [](const CriterionReport& r) { return r.verdict == Verdict::violated_expectation; });
}

}  // namespace cyclocrit
