#pragma once

#include "cyclocrit/fp_core.hpp"

#include <vector>

namespace cyclocrit {

// Even Bernoulli numbers B_2 .. B_{p-3} reduced mod p, with the irregular indices.
class BernoulliTable
{
public:
    BernoulliTable(std::uint32_t p, std::vector<Residue> even_values);

    std::uint32_t p() const { return p_; }

    // B_n mod p for even n in 2..p-3.
    Residue at(std::uint32_t n) const;

    // Number of stored entries, (p - 3) / 2.
    std::size_t size() const { return values_.size(); }

    // Even indices n with B_n = 0 mod p, ascending.
    const std::vector<std::uint32_t>& irregular() const { return irregular_; }

    // i_p
    std::uint32_t index_of_irregularity() const { return static_cast<std::uint32_t>(irregular_.size()); }

private:
    std::uint32_t p_;
    std::vector<Residue> values_;  // values_[k - 1] = B_{2k}
    std::vector<std::uint32_t> irregular_;
};

// Recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 with B_0 = 1, B_1 = -1/2.
// Binomials come from Pascal rows mod p. Requires p >= 7.
BernoulliTable bernoulli_even_mod_p(const PrimeContext& ctx);

// (p - 1 - 2m) d^(-2m-1) sum_{l=1}^{d-1} sum_{1 <= j < lp/d} j^-(2m+1) mod p.
// Equals (1 - d^-2m) B_{p-1-2m} by Vandiver's power-sum identity, which makes it
// an oracle for the recurrence that shares no code with it.
// Requires 2 <= d <= p - 2 and 1 <= m <= (p - 3) / 2.
Residue vandiver_bernoulli_rhs(const PrimeContext& ctx, std::uint32_t d, std::uint32_t m);

// i_p = number of m in 1..(p-3)/2 with B_{p-1-2m} = 0 mod p. Requires p >= 7.
std::uint32_t irregular_index(const PrimeContext& ctx);

}  // namespace cyclocrit
