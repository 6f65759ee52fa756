#include "cyclocrit/fppoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclocrit {

FpPoly::FpPoly(std::uint32_t p) : p_(p) {}

FpPoly::FpPoly(std::uint32_t p, const std::vector<std::int64_t>& coeffs) : p_(p)
{
    c_.reserve(coeffs.size());
    for (const auto v : coeffs) c_.push_back(static_cast<std::uint32_t>(pow_mod(v, 1, p)));
    normalize();
}

FpPoly FpPoly::monomial(std::uint32_t p, std::uint32_t coeff, std::size_t degree)
{
    FpPoly r(p);
    r.c_.assign(degree + 1, 0);
    r.c_[degree] = coeff % p;
    r.normalize();
    return r;
}

void FpPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Residue FpPoly::evaluate(std::uint32_t t) const
{
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * t + *it) % p_;
    return Residue(static_cast<std::uint32_t>(acc));
}

FpPoly FpPoly::monic() const
{
    if (c_.empty()) return *this;
    const std::uint64_t inv = pow_mod(c_.back(), p_ - 2, p_);
    FpPoly r = *this;
    for (auto& v : r.c_) v = static_cast<std::uint32_t>(v * inv % p_);
    return r;
}

namespace {

void require_same(const FpPoly& a, const FpPoly& b)
{
    if (a.p() != b.p())
        throw std::invalid_argument("FpPoly: mismatched moduli " + std::to_string(a.p()) + " and " +
                                    std::to_string(b.p()));
}

}  // namespace

FpPoly operator+(const FpPoly& a, const FpPoly& b)
{
    require_same(a, b);
    FpPoly r(a.p_);
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = static_cast<std::uint32_t>((std::uint64_t(a.coeff(i)) + b.coeff(i)) % a.p_);
    r.normalize();
    return r;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b)
{
    require_same(a, b);
    FpPoly r(a.p_);
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = static_cast<std::uint32_t>((std::uint64_t(a.coeff(i)) + a.p_ - b.coeff(i)) % a.p_);
    r.normalize();
    return r;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b)
{
    require_same(a, b);
    FpPoly r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = static_cast<std::uint32_t>((r.c_[i + j] + std::uint64_t(a.c_[i]) * b.c_[j]) % a.p_);
    r.normalize();
    return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const
{
    require_same(*this, divisor);
    if (divisor.is_zero()) throw std::domain_error("FpPoly::divmod: division by zero polynomial");
    FpPoly q(p_), r = *this;
    if (r.degree() < divisor.degree()) return {q, r};
    const std::uint64_t inv = pow_mod(divisor.lead(), p_ - 2, p_);
    const std::size_t dd = divisor.c_.size() - 1;
    q.c_.assign(r.c_.size() - dd, 0);
    for (std::size_t k = r.c_.size(); k-- > dd;)
    {
        const std::uint32_t f = static_cast<std::uint32_t>(r.c_[k] * inv % p_);
        q.c_[k - dd] = f;
        if (f == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i)
        {
            const std::uint64_t sub = std::uint64_t(f) * divisor.c_[i] % p_;
            r.c_[k - dd + i] = static_cast<std::uint32_t>((r.c_[k - dd + i] + p_ - sub) % p_);
        }
    }
    q.normalize();
    r.normalize();
    return {q, r};
}

FpPoly poly_gcd(const FpPoly& a, const FpPoly& b)
{
    require_same(a, b);
    FpPoly x = a, y = b;
    while (!y.is_zero())
    {
        FpPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<std::uint32_t> roots_in_units(const FpPoly& a)
{
    if (a.is_zero()) throw std::invalid_argument("roots_in_units: zero polynomial has every unit as a root");
    std::vector<std::uint32_t> r;
    for (std::uint32_t t = 1; t < a.p(); ++t)
        if (a.evaluate(t).is_zero()) r.push_back(t);
    return r;
}

namespace {

void require_point(const PrimeContext& ctx, std::uint32_t t, const char* who)
{
    if (t >= ctx.p()) throw std::invalid_argument(std::string(who) + ": t must lie in 0..p-1");
}

}  // namespace

Residue mirimanoff_eval(const PrimeContext& ctx, std::uint32_t m, std::uint32_t t)
{
    const std::uint32_t p = ctx.p();
    if (m < 1 || m > p - 1) throw std::invalid_argument("mirimanoff_eval: m must lie in 1..p-1");
    require_point(ctx, t, "mirimanoff_eval");
    // Horner from the top coefficient (p-1)^(m-1) down to 1^(m-1), then one more factor t.
    std::uint32_t acc = 0;
    for (std::uint32_t i = p - 1; i >= 1; --i) acc = ctx.add(ctx.mul(acc, t), ctx.pow(i, m - 1));
    return Residue(ctx.mul(acc, t));
}

std::vector<std::uint32_t> mirimanoff_all(const PrimeContext& ctx, std::uint32_t t)
{
    const std::uint32_t p = ctx.p();
    require_point(ctx, t, "mirimanoff_all");
    std::vector<std::uint32_t> tp(p), ip(p, 1), out(p - 1);
    tp[0] = 1;
    for (std::uint32_t i = 1; i < p; ++i) tp[i] = ctx.mul(tp[i - 1], t);
    for (std::uint32_t m = 1; m < p; ++m)
    {
        // ip[i] = i^(m-1)
        std::uint64_t s = 0;
        for (std::uint32_t i = 1; i < p; ++i) s += static_cast<std::uint64_t>(ip[i]) * tp[i] % p;
        out[m - 1] = static_cast<std::uint32_t>(s % p);
        for (std::uint32_t i = 1; i < p; ++i) ip[i] = ctx.mul(ip[i], i);
    }
    return out;
}

Residue mirimanoff_star_eval(const PrimeContext& ctx, std::uint32_t m, std::uint32_t t)
{
    if (m % 2 == 0) throw std::invalid_argument("mirimanoff_star_eval: m must be odd");
    if (m > ctx.p() - 2) throw std::invalid_argument("mirimanoff_star_eval: m must lie in 1..p-2");
    require_point(ctx, t, "mirimanoff_star_eval");
    if (m == 1) return Residue(1);
    return mirimanoff_eval(ctx, m, t);
}

FpPoly kummer_polynomial(const PrimeContext& ctx, std::uint32_t m)
{
    const std::uint32_t p = ctx.p();
    const FpPoly minus_t(p, {0, -1});
    const FpPoly one_plus_t(p, {1, 1});
    switch (m)
    {
    case 0:
        return minus_t;
    case 1:
        return minus_t * one_plus_t;
    case 2:
        return minus_t * one_plus_t * FpPoly(p, {1, 10, 1});
    case 3:
        return minus_t * one_plus_t * FpPoly(p, {1, 56, 246, 56, 1});
    default:
        throw std::domain_error("kummer_polynomial: explicit form only known for m <= 3");
    }
}

Residue kummer_relation_residual(const PrimeContext& ctx, std::uint32_t m, std::uint32_t t)
{
    const std::uint32_t p = ctx.p();
    if (m < 1 || m > 3) throw std::invalid_argument("kummer_relation_residual: m must lie in 1..3");
    if (2 * m + 1 > p - 1) throw std::invalid_argument("kummer_relation_residual: 2m+1 exceeds p-1");
    require_point(ctx, t, "kummer_relation_residual");
    if (t <= 1) throw std::invalid_argument("kummer_relation_residual: t must not be 0 or 1");
    const std::uint32_t phi = mirimanoff_eval(ctx, 2 * m + 1, t).value();
    const std::uint32_t factor = ctx.pow(ctx.sub(1, t), p - 1 - 2 * m);
    const std::uint32_t kp = kummer_polynomial(ctx, m).evaluate(t).value();
    return Residue(ctx.add(phi, ctx.mul(factor, kp)));
}

SymmetricSumResiduals symmetric_sum_residuals(const PrimeContext& ctx, std::uint32_t t)
{
    const std::uint32_t p = ctx.p();
    require_point(ctx, t, "symmetric_sum_residuals");
    const auto phi = mirimanoff_all(ctx, t);
    auto at = [&](std::uint32_t m) { return phi[m - 1]; };
    const std::uint32_t sq = mirimanoff_eval(ctx, p - 1, ctx.mul(t, t)).value();

    std::uint32_t full = 0;
    for (std::uint32_t m = 1; m < p; ++m) full = ctx.add(full, ctx.mul(at(m), at(p - m)));
    full = ctx.add(full, sq);

    std::uint32_t even = 0;
    for (std::uint32_t n = 1; n <= (p - 1) / 2; ++n) even = ctx.add(even, ctx.mul(at(2 * n), at(p - 2 * n)));
    even = ctx.sub(even, ctx.mul(ctx.nu(), sq));
    return {Residue(full), Residue(even)};
}

Residue twisted_sum(const PrimeContext& ctx, std::uint32_t k, std::uint32_t t)
{
    const std::uint32_t p = ctx.p();
    if (k < 1 || k > p - 1) throw std::invalid_argument("twisted_sum: k must lie in 1..p-1");
    require_point(ctx, t, "twisted_sum");
    std::uint32_t s = 0;
    for (std::uint32_t j = 1; j < p; ++j)
    {
        const auto e = static_cast<std::uint32_t>(static_cast<std::uint64_t>(k) * j % p);
        s = ctx.add(s, ctx.mul(ctx.inv(j), ctx.pow(t, e)));
    }
    return Residue(s);
}

Residue twisted_sum_residual(const PrimeContext& ctx, std::uint32_t k, std::uint32_t t)
{
    const std::uint32_t p = ctx.p();
    const std::uint32_t lhs = twisted_sum(ctx, k, t).value();
    const std::uint32_t rhs = ctx.mul(p - k, mirimanoff_eval(ctx, p - 1, t).value());
    return Residue(ctx.sub(lhs, rhs));
}

}  // namespace cyclocrit
