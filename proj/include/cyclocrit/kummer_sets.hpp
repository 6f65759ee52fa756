#pragma once

// Kummer's index sets I(u, d), the summation criteria built on the rational
// intervals ]lp/(d+1), lp/d[, their link with Bernoulli numbers, and the two
// +-1 matrices M_p and Delta_p.

#include "cyclocrit/bernoulli.hpp"
#include "cyclocrit/fp_core.hpp"

#include <cstdint>
#include <vector>

namespace cyclocrit {

// I(u, d) = { i in 1..p-1 : u_{nu-i} + u_{nu-i+ind_u(d)} > p }.
struct IndexSet
{
    std::uint32_t p = 0;
    std::uint32_t root = 0;
    std::uint32_t d = 0;
    std::vector<std::uint32_t> members;  // ascending

    bool contains(std::uint32_t i) const;
    friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

// Square matrix with entries in {-1, +1}, row-major.
class SignMatrix
{
public:
    SignMatrix(std::uint32_t p, std::size_t dim);

    std::uint32_t p() const { return p_; }
    std::size_t dim() const { return dim_; }
    int at(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }
    // Throws std::invalid_argument for values other than +-1.
    void set(std::size_t r, std::size_t c, int v);

    const std::vector<std::int8_t>& entries() const { return e_; }

    std::size_t rank_mod_p() const;
    Residue det_mod_p() const;

private:
    std::uint32_t p_;
    std::size_t dim_;
    std::vector<std::int8_t> e_;
};

// True iff l*p < j*(d+1) and j*d < l*p for some l in 1..d, i.e. j lies strictly
// inside one of the intervals ]lp/(d+1), lp/d[.
bool in_kummer_interval(std::uint32_t p, std::uint32_t d, std::uint32_t j);

// Requires 1 <= d <= p-2.
IndexSet index_set(const PrimeContext& ctx, std::uint32_t d);

// Same set via the interval characterization u_i = -j^-1 with j in the
// intervals of k. Requires 1 <= k <= p-2.
IndexSet index_set_by_intervals(const PrimeContext& ctx, std::uint32_t k);

// sum of j^-mu over the intervals of d. A nonzero value proves the first case
// of FLT for p (mu in {3, 5, 7}). Requires 1 <= d <= p-2, mu odd, 3 <= mu <= p-2.
Residue criterion_sum(const PrimeContext& ctx, std::uint32_t d, std::uint32_t mu);

// sum of j^-mu over j lying in an interval of d1 and an interval of d2.
// Requires 1 <= d1 < d2 <= p-2.
Residue double_criterion_sum(const PrimeContext& ctx, std::uint32_t d1, std::uint32_t d2, std::uint32_t mu);

// criterion_sum(d, 2m+1) - [d(d^2m - 1) - (d+1)((d+1)^2m - 1)] / (p-1-2m) * B_{p-1-2m}.
// Zero when the Bernoulli link holds. 1 <= d <= p-2, 1 <= m <= (p-3)/2.
Residue bernoulli_link_residual(const PrimeContext& ctx, const BernoulliTable& table, std::uint32_t d,
                                std::uint32_t m);
Residue bernoulli_link_residual(const PrimeContext& ctx, std::uint32_t d, std::uint32_t m);

// M_p: rows d = 1..(p-1)/2, columns i = 1..(p-1)/2,
// eps_{i,d} = +1 iff u_{nu-i} + (d u_{nu-i} mod p) > p. Construction also checks
// the complementary condition through u_{-i} and throws std::logic_error if the
// two ever agree.
SignMatrix mp_matrix(const PrimeContext& ctx);

// k_p = rank of M_p over F_p.
std::size_t mp_rank(const PrimeContext& ctx);

// Delta_p: rows d, columns j in 1..(p-1)/2, delta_{d,j} = +1 iff j lies in an
// interval of d.
SignMatrix deltap_matrix(const PrimeContext& ctx);
Residue deltap_det_mod_p(const PrimeContext& ctx);
std::size_t deltap_rank(const PrimeContext& ctx);

}  // namespace cyclocrit
