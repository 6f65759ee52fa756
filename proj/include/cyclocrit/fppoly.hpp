#pragma once

#include "cyclocrit/fp_core.hpp"

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace cyclocrit {

// Dense polynomial over F_p; coeffs()[i] is the coefficient of T^i.
// Trailing zeros are always stripped, so the zero polynomial has no coefficients
// and degree() == -1.
class FpPoly
{
public:
    explicit FpPoly(std::uint32_t p);
    // Coefficients may be any integers; they are reduced mod p.
    FpPoly(std::uint32_t p, const std::vector<std::int64_t>& coeffs);
    FpPoly(std::uint32_t p, std::initializer_list<std::int64_t> coeffs)
        : FpPoly(p, std::vector<std::int64_t>(coeffs)) {}

    static FpPoly monomial(std::uint32_t p, std::uint32_t coeff, std::size_t degree);

    std::uint32_t p() const { return p_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    Residue evaluate(std::uint32_t t) const;

    FpPoly monic() const;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

    // Euclidean division; throws std::domain_error on division by zero.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;

private:
    void normalize();
    std::uint32_t p_;
    std::vector<std::uint32_t> c_;
};

// Monic gcd by Euclid. gcd(A, 0) = monic(A), gcd(0, 0) = 0.
// Throws std::invalid_argument on mismatched moduli.
FpPoly poly_gcd(const FpPoly& a, const FpPoly& b);

// { t in 1..p-1 : A(t) = 0 } by exhaustive evaluation, ascending.
// Throws std::invalid_argument for the zero polynomial.
std::vector<std::uint32_t> roots_in_units(const FpPoly& a);

// Mirimanoff polynomial phi_m(t) = sum_{i=1}^{p-1} i^(m-1) t^i, for 1 <= m <= p-1.
Residue mirimanoff_eval(const PrimeContext& ctx, std::uint32_t m, std::uint32_t t);

// phi_1 .. phi_{p-1} at one point; element m-1 holds phi_m(t). O(p^2).
std::vector<std::uint32_t> mirimanoff_all(const PrimeContext& ctx, std::uint32_t t);

// phi*_1 = 1, phi*_m = phi_m for odd m >= 3.
Residue mirimanoff_star_eval(const PrimeContext& ctx, std::uint32_t m, std::uint32_t t);

// P_{2m+1}(-t) as a polynomial in t, m = 0..3:
//   P_1(-t) = -t, P_3(-t) = -t(1+t), P_5(-t) = -t(1+t)(1+10t+t^2),
//   P_7(-t) = -t(1+t)(1+56t+246t^2+56t^3+t^4).
// No closed form is available past m = 3; larger m throws std::domain_error.
FpPoly kummer_polynomial(const PrimeContext& ctx, std::uint32_t m);

// phi_{2m+1}(t) + (1-t)^(p-1-2m) P_{2m+1}(-t); zero when the Kummer relation holds.
// Requires 1 <= m <= 3 and t not in {0, 1}.
Residue kummer_relation_residual(const PrimeContext& ctx, std::uint32_t m, std::uint32_t t);

struct SymmetricSumResiduals
{
    Residue full;  // sum_{m=1}^{p-1} phi_m(t) phi_{p-m}(t) + phi_{p-1}(t^2)
    Residue even;  // sum_{n=1}^{(p-1)/2} phi_{2n}(t) phi_{p-2n}(t) - (p-1)/2 phi_{p-1}(t^2)
};

SymmetricSumResiduals symmetric_sum_residuals(const PrimeContext& ctx, std::uint32_t t);

// sum_{j=1}^{p-1} j^(p-2) t^(kj mod p) - (p-k) phi_{p-1}(t), for 1 <= k <= p-1.
Residue twisted_sum_residual(const PrimeContext& ctx, std::uint32_t k, std::uint32_t t);

// The left-hand side alone: sum_{j=1}^{p-1} j^(p-2) t^(kj mod p).
Residue twisted_sum(const PrimeContext& ctx, std::uint32_t k, std::uint32_t t);

}  // namespace cyclocrit
