#pragma once

// Criterion batteries for the first case of FLT. p_battery evaluates the
// criteria that depend on p alone; t_battery evaluates, for a hypothetical
// residue t = -x/y mod p of a first-case solution, the congruences such a
// solution would force.

#include "cyclocrit/fp_core.hpp"
#include "cyclocrit/report.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cyclocrit {

// Rows g_1..g_f and columns k_1..k_f of the exponential determinant.
struct ExpDetSpec
{
    std::uint32_t p = 0;
    std::vector<std::uint32_t> rows;  // E_f
    std::vector<std::uint32_t> cols;  // K_f
};

// det( t^m + t^(p-m) ) mod p with m = g_i^-1 k_j mod p taken in 1..p-1.
// Throws std::invalid_argument for a zero or out-of-range entry, a size
// mismatch, an empty spec, t >= p, or a spec built for another prime.
Residue exp_det(const PrimeContext& ctx, const ExpDetSpec& spec, std::uint32_t t);

// g_i = i^-1 for i = 1..f, k_j = j + l.
ExpDetSpec conjecture_spec(const PrimeContext& ctx, std::uint32_t f, std::uint32_t l);

struct ConjectureResult
{
    std::uint32_t p = 0;
    std::vector<std::uint32_t> roots;  // ascending
    std::uint32_t l_used = 0;          // shifts evaluated before the early exit
};

// Common zeros in 1..p-1 of Delta_l(t) for f = floor(p/3) and l = 1..floor(p/2),
// stopping as soon as only {1, p-1} remain. Parallel over t.
// Throws std::domain_error for p < 17.
ConjectureResult gcd_conjecture_roots(const PrimeContext& ctx, unsigned jobs = 1);

// l_1..l_r with sum_i l_i X^(i-1) = prod_i (X - mu_i), so l_r = 1.
// Throws std::invalid_argument for duplicate or zero mu.
std::vector<Residue> vieta_weights(const PrimeContext& ctx, const std::vector<std::uint32_t>& mus);

struct TBatteryOptions
{
    // Families for the exp_det entries; empty means conjecture_spec(floor(p/3), 1).
    std::vector<ExpDetSpec> exp_specs;
    // i_p for the vanishing-count threshold; computed when absent.
    std::optional<std::uint32_t> irregular_index;
};

// Reports for one residue t. Families that every first-case solution must
// annihilate (twisted congruences, phi_{p-1} at t, -t, t^2, phi_{p-2}(t^2),
// and the Mirimanoff pair products) give criterion_holds when nonzero: t is
// excluded. Subfield, masked-sum and exp_det entries hold only under extra
// hypotheses and the vanishing count is a statistic; those stay inconclusive.
// Throws std::invalid_argument for t in {0, 1, p-1} or t >= p; needs p >= 5.
std::vector<CriterionReport> t_battery(const PrimeContext& ctx, std::uint32_t t, const TBatteryOptions& options = {});

struct PBatteryOptions
{
    std::vector<std::uint32_t> mus{3, 5, 7};  // values above p-2 are skipped
    std::optional<std::uint32_t> d_max;       // default p-2
    std::uint32_t double_d2_max = 4;          // pairs d1 < d2 <= this
    std::uint32_t fermat_bases = 10;          // first primes, skipping p itself
};

// Cauchy half-sum sum_{j <= (p-1)/2} j^-3, criterion_sum(d, mu),
// double_criterion_sum(d1, d2, mu) and fermat_quotient(q). Each nonzero value
// certifies the first case; zeros are inconclusive. Needs p >= 7.
std::vector<CriterionReport> p_battery(const PrimeContext& ctx, const PBatteryOptions& options = {});

// Any report with verdict criterion_holds.
bool t_excluded(const std::vector<CriterionReport>& reports);
bool first_case_certified(const std::vector<CriterionReport>& reports);

// Any report with verdict violated_expectation.
bool has_violation(const std::vector<CriterionReport>& reports);

}  // namespace cyclocrit
