#include "cyclocrit/cli.hpp"

#include "cyclocrit/bernoulli.hpp"
#include "cyclocrit/classnum.hpp"
#include "cyclocrit/flt_battery.hpp"
#include "cyclocrit/kummer_sets.hpp"
#include "cyclocrit/parallel.hpp"
#include "cyclocrit/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#ifndef CYCLOCRIT_FIXTURE_DIR
#define CYCLOCRIT_FIXTURE_DIR "fixtures"
#endif

namespace cyclocrit::cli {

namespace {

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Config
{
    std::optional<std::uint64_t> p;
    std::string range;
    std::string method = "all";
    bool factored = false;
    std::string fixture;
    std::string fixtures_dir = CYCLOCRIT_FIXTURE_DIR;
    std::vector<std::uint32_t> mus{3, 5, 7};
    std::optional<std::uint32_t> d_max;
    std::string t = "all";
    std::string format = "plain";
    bool json = false;
    unsigned jobs = 0;
};

std::uint32_t checked_prime(std::uint64_t p)
{
    if (p < 3 || p >= (1ULL << 31) || !is_prime_trial(p))
        throw UsageError("--p must be an odd prime below 2^31, got " + std::to_string(p));
    return static_cast<std::uint32_t>(p);
}

std::vector<std::uint32_t> parse_range(const std::string& s)
{
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("--range expects A..B, got '" + s + "'");
    std::uint64_t a = 0, b = 0;
    try
    {
        std::size_t used = 0;
        const std::string left = s.substr(0, dots), right = s.substr(dots + 2);
        a = std::stoull(left, &used);
        if (used != left.size()) throw std::invalid_argument("");
        b = std::stoull(right, &used);
        if (used != right.size()) throw std::invalid_argument("");
    }
    catch (const std::exception&)
    {
        throw UsageError("--range expects A..B with integers, got '" + s + "'");
    }
    if (a > b) throw UsageError("--range must be ascending");
    if (b >= (1ULL << 31)) throw UsageError("--range upper end must stay below 2^31");
    return primes_in_range(static_cast<std::uint32_t>(std::max<std::uint64_t>(a, 3)), static_cast<std::uint32_t>(b));
}

// --p or --range, exactly one.
std::vector<std::uint32_t> primes_of(const Config& c, bool allow_range)
{
    if (c.p && !c.range.empty()) throw UsageError("give either --p or --range, not both");
    if (c.p) return {checked_prime(*c.p)};
    if (!c.range.empty())
    {
        if (!allow_range) throw UsageError("this subcommand takes --p only");
        return parse_range(c.range);
    }
    throw UsageError(allow_range ? "missing --p or --range" : "missing --p");
}

std::uint32_t require_min(std::uint32_t p, std::uint32_t lo)
{
    if (p < lo) throw UsageError("p=" + std::to_string(p) + " is below the supported minimum " + std::to_string(lo));
    return p;
}

std::uint32_t ip_of(const PrimeContext& ctx) { return ctx.p() >= 7 ? irregular_index(ctx) : 0; }

class Output
{
public:
    Output(std::ostream& out, const Config& c) : out_(out), format_(c.json ? "json" : c.format) {}

    bool plain() const { return format_ == "plain"; }
    std::ostream& text() { return out_; }

    void add(CriterionReport r) { reports_.push_back(std::move(r)); }
    void add(const std::vector<CriterionReport>& rs) { reports_.insert(reports_.end(), rs.begin(), rs.end()); }

    void flush()
    {
        if (format_ == "json")
            out_ << to_json(reports_) << '\n';
        else if (format_ == "csv")
        {
            out_ << csv_header() << '\n';
            for (const auto& r : reports_) out_ << to_csv(r) << '\n';
        }
    }

private:
    std::ostream& out_;
    std::string format_;
    std::vector<CriterionReport> reports_;
};

CriterionReport record(std::uint32_t p, std::string id, std::map<std::string, std::int64_t> params, std::string value,
                       Verdict v)
{
    return {p, std::move(id), std::move(params), std::move(value), v};
}

Verdict check(bool ok) { return ok ? Verdict::criterion_holds : Verdict::violated_expectation; }

struct Csv
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(const std::string& name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw UsageError("fixture lacks column '" + name + "'");
    }
};

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

Csv read_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read fixture " + path);
    Csv csv;
    std::string line;
    while (std::getline(in, line))
    {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (csv.header.empty())
            csv.header = split(line);
        else
            csv.rows.push_back(split(line));
    }
    if (csv.header.empty() || csv.header[0] != "p") throw UsageError("fixture " + path + " must start with a p column");
    for (const auto& r : csv.rows)
        if (r.size() != csv.header.size()) throw UsageError("ragged row in fixture " + path);
    return csv;
}

std::uint32_t fixture_prime(const std::string& cell)
{
    try
    {
        return checked_prime(std::stoull(cell));
    }
    catch (const std::logic_error&)
    {
        throw UsageError("bad prime '" + cell + "' in fixture");
    }
}

// ---- subcommands ----

int cmd_bernoulli(const Config& c, Output& o)
{
    const std::uint32_t p = require_min(primes_of(c, false)[0], 7);
    const PrimeContext ctx(p);
    const BernoulliTable table = bernoulli_even_mod_p(ctx);
    for (std::uint32_t n = 2; n + 3 <= p; n += 2)
    {
        const auto v = table.at(n).value();
        o.add(record(p, "bernoulli", {{"n", n}}, std::to_string(v), Verdict::inconclusive));
        if (o.plain()) o.text() << "B_" << n << " = " << v << " mod " << p << '\n';
    }
    o.add(record(p, "irregular_index", {}, std::to_string(table.index_of_irregularity()), Verdict::inconclusive));
    if (o.plain())
    {
        o.text() << "irregular indices:";
        for (const auto n : table.irregular()) o.text() << ' ' << n;
        o.text() << "\ni_p = " << table.index_of_irregularity() << '\n';
    }
    return 0;
}

int cmd_irregular(const Config& c, Output& o)
{
    const auto primes = primes_of(c, true);
    const auto tables = parallel_map<std::vector<std::uint32_t>>(primes.size(), c.jobs, [&](std::size_t k) {
        if (primes[k] < 7) return std::vector<std::uint32_t>{};
        return bernoulli_even_mod_p(PrimeContext(primes[k])).irregular();
    });
    for (std::size_t k = 0; k < primes.size(); ++k)
    {
        const auto& irr = tables[k];
        o.add(record(primes[k], "irregular_index", {}, std::to_string(irr.size()), Verdict::inconclusive));
        if (o.plain())
        {
            o.text() << primes[k] << ' ' << irr.size();
            for (const auto n : irr) o.text() << ' ' << n;
            o.text() << '\n';
        }
    }
    return 0;
}

int cmd_hminus(const Config& c, Output& o, std::ostream& err)
{
    static const std::set<std::string> methods{"new", "maillet", "masley", "all"};
    if (!methods.count(c.method)) throw UsageError("--method must be new, maillet, masley or all");
    const auto primes = primes_of(c, true);
    for (const auto p : primes) require_min(p, 7);
    const unsigned inner = primes.size() == 1 ? c.jobs : 1;
    const unsigned outer = primes.size() == 1 ? 1 : c.jobs;

    struct Row
    {
        std::vector<std::pair<std::string, ExactInt>> values;
        bool agree = true;
    };
    const auto rows = parallel_map<Row>(primes.size(), outer, [&](std::size_t k) {
        const PrimeContext ctx(primes[k]);
        Row r;
        if (c.method == "all")
        {
            const HminusComparison cmp = hminus_compare(ctx, inner);
            r.values = {{"new", cmp.by_new}, {"maillet", cmp.by_maillet}, {"masley", cmp.by_masley}};
            r.agree = cmp.agree() && cmp.by_new >= 1;
        }
        else if (c.method == "new")
            r.values = {{"new", hminus_new(ctx, inner)}};
        else if (c.method == "maillet")
            r.values = {{"maillet", hminus_maillet(ctx, inner)}};
        else
            r.values = {{"masley", hminus_masley(ctx, inner)}};
        return r;
    });

    int rc = 0;
    for (std::size_t k = 0; k < primes.size(); ++k)
    {
        const auto& r = rows[k];
        for (const auto& [name, v] : r.values)
        {
            const Verdict verdict = c.method == "all" ? check(r.agree) : Verdict::inconclusive;
            o.add(record(primes[k], "hminus_" + name, {}, v.get_str(), verdict));
            if (o.plain())
            {
                o.text() << "p=" << primes[k] << ' ' << name << ": " << v.get_str();
                if (c.factored && v >= 1) o.text() << " = " << format_factorization(factor(v));
                o.text() << '\n';
            }
        }
        if (!r.agree)
        {
            rc = 1;
            err << "h^- formulas disagree at p=" << primes[k] << '\n';
        }
    }
    return rc;
}

int cmd_mrank(const Config& c, Output& o, std::ostream& err)
{
    const auto primes = primes_of(c, true);
    struct Row
    {
        std::size_t k = 0;
        std::uint32_t bound = 0;
    };
    const auto rows = parallel_map<Row>(primes.size(), c.jobs, [&](std::size_t i) {
        const PrimeContext ctx(primes[i]);
        return Row{mp_rank(ctx), ctx.nu() - ip_of(ctx)};
    });

    std::map<std::uint32_t, std::size_t> expected;
    if (!c.fixture.empty())
    {
        const Csv csv = read_csv(c.fixture);
        const std::size_t kc = csv.col("k_p");
        for (const auto& r : csv.rows) expected[fixture_prime(r[0])] = std::stoull(r[kc]);
    }

    int rc = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
    {
        const auto p = primes[i];
        bool ok = rows[i].k == rows[i].bound;
        if (auto it = expected.find(p); it != expected.end() && it->second != rows[i].k)
        {
            err << "mismatch kp_table p=" << p << " expected=" << it->second << " got=" << rows[i].k << '\n';
            ok = false;
        }
        if (!ok) rc = 1;
        o.add(record(p, "mp_rank", {{"bound", rows[i].bound}}, std::to_string(rows[i].k), check(ok)));
        if (o.plain()) o.text() << p << ' ' << rows[i].k << (ok ? "" : "  MISMATCH") << '\n';
    }
    return rc;
}

int cmd_deltap(const Config& c, Output& o)
{
    const auto primes = primes_of(c, true);
    struct Row
    {
        std::uint32_t det = 0;
        std::size_t rank = 0;
        std::uint32_t bound = 0;
    };
    const auto rows = parallel_map<Row>(primes.size(), c.jobs, [&](std::size_t i) {
        const PrimeContext ctx(primes[i]);
        const SignMatrix m = deltap_matrix(ctx);
        return Row{m.det_mod_p().value(), m.rank_mod_p(), ctx.nu() - ip_of(ctx)};
    });
    int rc = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
    {
        const auto& r = rows[i];
        const bool ok = r.rank <= r.bound;
        if (!ok) rc = 1;
        o.add(record(primes[i], "deltap_det", {}, std::to_string(r.det), Verdict::inconclusive));
        o.add(record(primes[i], "deltap_rank", {{"bound", r.bound}}, std::to_string(r.rank), check(ok)));
        if (o.plain())
            o.text() << "p=" << primes[i] << " det=" << r.det << " rank=" << r.rank << " bound=" << r.bound
                     << (ok ? " ok" : " VIOLATED") << '\n';
    }
    return rc;
}

int cmd_criteria(const Config& c, Output& o)
{
    const auto primes = primes_of(c, true);
    for (const auto p : primes) require_min(p, 7);
    PBatteryOptions opt;
    opt.mus = c.mus;
    opt.d_max = c.d_max;
    const auto all = parallel_map<std::vector<CriterionReport>>(
        primes.size(), c.jobs, [&](std::size_t i) { return p_battery(PrimeContext(primes[i]), opt); });
    int rc = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
    {
        o.add(all[i]);
        if (has_violation(all[i])) rc = 1;
        if (o.plain())
        {
            for (const auto& r : all[i]) o.text() << to_plain(r) << '\n';
            o.text() << "p=" << primes[i] << (first_case_certified(all[i]) ? " first case certified" : " inconclusive")
                     << '\n';
        }
    }
    return rc;
}

int cmd_battery(const Config& c, Output& o)
{
    const std::uint32_t p = require_min(primes_of(c, false)[0], 5);
    const PrimeContext ctx(p);
    std::vector<std::uint32_t> ts;
    if (c.t == "all")
        for (std::uint32_t t = 2; t + 2 <= p; ++t) ts.push_back(t);
    else
    {
        std::uint64_t t = 0;
        try
        {
            std::size_t used = 0;
            t = std::stoull(c.t, &used);
            if (used != c.t.size()) throw std::invalid_argument("");
        }
        catch (const std::exception&)
        {
            throw UsageError("--t expects an integer or 'all'");
        }
        if (t < 2 || t + 2 > p) throw UsageError("--t must lie in 2..p-2");
        ts.push_back(static_cast<std::uint32_t>(t));
    }
    TBatteryOptions opt;
    opt.irregular_index = ip_of(ctx);
    const auto all = parallel_map<std::vector<CriterionReport>>(ts.size(), c.jobs,
                                                                [&](std::size_t i) { return t_battery(ctx, ts[i], opt); });
    int rc = 0;
    for (std::size_t i = 0; i < ts.size(); ++i)
    {
        o.add(all[i]);
        if (has_violation(all[i])) rc = 1;
        if (!o.plain()) continue;
        const auto first = std::find_if(all[i].begin(), all[i].end(),
                                        [](const CriterionReport& r) { return r.verdict == Verdict::criterion_holds; });
        if (ts.size() == 1)
            for (const auto& r : all[i]) o.text() << to_plain(r) << '\n';
        o.text() << "p=" << p << " t=" << ts[i];
        if (first != all[i].end())
            o.text() << " excluded by " << to_plain(*first) << '\n';
        else
            o.text() << " not excluded\n";
    }
    return rc;
}

int cmd_gcd_conjecture(const Config& c, Output& o)
{
    const auto primes = primes_of(c, true);
    for (const auto p : primes) require_min(p, 17);
    int rc = 0;
    for (const auto p : primes)
    {
        const ConjectureResult r = gcd_conjecture_roots(PrimeContext(p), c.jobs);
        const bool ok = r.roots == std::vector<std::uint32_t>{1, p - 1};
        if (!ok) rc = 1;
        o.add(record(p, "gcd_conjecture_roots", {{"l_used", r.l_used}}, std::to_string(r.roots.size()), check(ok)));
        if (o.plain())
        {
            o.text() << "p=" << p << " roots={";
            for (std::size_t i = 0; i < r.roots.size(); ++i) o.text() << (i ? "," : "") << r.roots[i];
            o.text() << "} l_used=" << r.l_used << (ok ? " ok" : " FAIL") << '\n';
        }
    }
    return rc;
}

struct FixtureCheck
{
    std::string group, source, label, expected, got;
    std::uint32_t p = 0;
    bool ok() const { return expected == got; }
};

int cmd_verify(const Config& c, Output& o, std::ostream& err)
{
    const std::string dir = c.fixtures_dir;
    std::vector<FixtureCheck> checks;

    {
        const Csv csv = read_csv(dir + "/hminus.csv");
        const std::size_t hc = csv.col("hminus"), sc = csv.col("source");
        const auto got = parallel_map<std::string>(csv.rows.size(), c.jobs, [&](std::size_t i) {
            const HminusComparison cmp = hminus_compare(PrimeContext(fixture_prime(csv.rows[i][0])), 1);
            return cmp.agree() ? cmp.by_new.get_str() : std::string("disagreement");
        });
        for (std::size_t i = 0; i < csv.rows.size(); ++i)
            checks.push_back({"hminus", csv.rows[i][sc], "h^-", csv.rows[i][hc], got[i], fixture_prime(csv.rows[i][0])});
    }
    {
        const Csv csv = read_csv(dir + "/kp_table.csv");
        const std::size_t kc = csv.col("k_p"), sc = csv.col("source");
        const auto got = parallel_map<std::size_t>(csv.rows.size(), c.jobs, [&](std::size_t i) {
            return mp_rank(PrimeContext(fixture_prime(csv.rows[i][0])));
        });
        for (std::size_t i = 0; i < csv.rows.size(); ++i)
            checks.push_back({"kp_table", csv.rows[i][sc], "k_p", csv.rows[i][kc], std::to_string(got[i]),
                              fixture_prime(csv.rows[i][0])});
    }
    {
        const Csv csv = read_csv(dir + "/deltap.csv");
        const std::size_t dc = csv.col("det_mod_p"), sc = csv.col("source");
        for (const auto& r : csv.rows)
        {
            const std::uint32_t p = fixture_prime(r[0]);
            checks.push_back({"deltap", r[sc], "det mod p", r[dc],
                              std::to_string(deltap_det_mod_p(PrimeContext(p)).value()), p});
        }
    }
    {
        // the full list of irregular pairs below the largest listed prime
        const Csv csv = read_csv(dir + "/irregular_pairs.csv");
        const std::size_t nc = csv.col("index"), sc = csv.col("source");
        std::set<std::pair<std::uint32_t, std::uint32_t>> listed;
        std::string source = "computed";
        for (const auto& r : csv.rows)
        {
            listed.insert({fixture_prime(r[0]), static_cast<std::uint32_t>(std::stoul(r[nc]))});
            source = r[sc];
        }
        const std::uint32_t top = listed.empty() ? 7 : std::max<std::uint32_t>(listed.rbegin()->first, 7);
        const auto primes = primes_in_range(7, top);
        const auto irr = parallel_map<std::vector<std::uint32_t>>(primes.size(), c.jobs, [&](std::size_t i) {
            return bernoulli_even_mod_p(PrimeContext(primes[i])).irregular();
        });
        std::set<std::pair<std::uint32_t, std::uint32_t>> found;
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (const auto n : irr[i]) found.insert({primes[i], n});
        auto show = [](const std::set<std::pair<std::uint32_t, std::uint32_t>>& s) {
            std::string out;
            for (const auto& [p, n] : s) out += (out.empty() ? "" : " ") + std::to_string(p) + ":" + std::to_string(n);
            return out;
        };
        checks.push_back({"irregular_pairs", source, "pairs up to " + std::to_string(top), show(listed), show(found), 0});
    }
    {
        const Csv csv = read_csv(dir + "/subfield_gcd.csv");
        const std::size_t nc = csv.col("n"), qc = csv.col("qminus1"), gc = csv.col("gcd"), sc = csv.col("source");
        for (const auto& r : csv.rows)
        {
            const ExactInt g = subfield_factor_gcd(ExactInt(r[nc]), ExactInt(r[qc]));
            checks.push_back({"subfield_gcd", r[sc], "gcd(" + r[nc] + ", " + r[qc] + ")", r[gc], g.get_str(),
                              fixture_prime(r[0])});
        }
    }
    {
        for (const auto p : primes_in_range(17, 67))
        {
            const ConjectureResult r = gcd_conjecture_roots(PrimeContext(p), c.jobs);
            std::string got;
            for (const auto t : r.roots) got += (got.empty() ? "" : " ") + std::to_string(t);
            checks.push_back({"gcd_conjecture", "published", "common roots", "1 " + std::to_string(p - 1), got, p});
        }
    }

    int rc = 0;
    for (const std::string source : {"published", "computed"})
    {
        if (o.plain()) o.text() << "== " << source << " ==\n";
        for (const auto& ch : checks)
        {
            if (ch.source != source) continue;
            if (!ch.ok())
            {
                rc = 1;
                err << "mismatch " << ch.group << " p=" << ch.p << ' ' << ch.label << " expected=" << ch.expected
                    << " got=" << ch.got << '\n';
            }
            o.add(record(ch.p, "fixture_" + ch.group, {}, ch.got, check(ch.ok())));
            if (o.plain())
                o.text() << ch.group << " p=" << ch.p << ' ' << ch.label << ": " << ch.got << (ch.ok() ? " ok" : " MISMATCH")
                         << '\n';
        }
    }
    for (const auto& ch : checks)
        if (ch.source != "published" && ch.source != "computed")
        {
            rc = 1;
            err << "fixture row with unknown source '" << ch.source << "' in " << ch.group << '\n';
        }
    if (o.plain()) o.text() << (rc == 0 ? "all fixtures reproduced\n" : "fixture mismatches found\n");
    return rc;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Kummer-Mirimanoff criteria, Bernoulli numbers mod p and relative class numbers", "cyclocrit"};
    app.require_subcommand(1, 1);
    Config c;

    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", c.format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));
        s->add_flag("--json", c.json, "same as --format json");
        s->add_option("--jobs", c.jobs, "worker threads (default CYCLOCRIT_JOBS or all cores)")
            ->check(CLI::PositiveNumber);
    };
    auto add_p = [&](CLI::App* s) { s->add_option("--p", c.p, "odd prime"); };
    auto add_range = [&](CLI::App* s) { s->add_option("--range", c.range, "inclusive prime range A..B"); };

    auto* bern = app.add_subcommand("bernoulli", "B_2..B_{p-3} mod p and the irregular indices");
    add_p(bern);
    auto* irr = app.add_subcommand("irregular", "index of irregularity per prime");
    add_p(irr);
    add_range(irr);
    auto* hm = app.add_subcommand("hminus", "exact relative class number");
    add_p(hm);
    add_range(hm);
    hm->add_option("--method", c.method, "new, maillet, masley or all");
    hm->add_flag("--factored", c.factored, "also print the factorization");
    auto* mr = app.add_subcommand("mrank", "p-rank k_p of M_p");
    add_p(mr);
    add_range(mr);
    mr->add_option("--fixture", c.fixture, "CSV with p,k_p columns to diff against");
    auto* dp = app.add_subcommand("deltap", "Delta_p determinant and rank mod p");
    add_p(dp);
    add_range(dp);
    auto* cr = app.add_subcommand("criteria", "t-independent first case criteria");
    add_p(cr);
    add_range(cr);
    cr->add_option("--mu", c.mus, "odd exponents")->delimiter(',');
    cr->add_option("--d-max", c.d_max, "largest d for criterion sums");
    auto* bat = app.add_subcommand("battery", "congruences forced on t = -x/y");
    add_p(bat);
    bat->add_option("--t", c.t, "residue in 2..p-2 or 'all'");
    auto* gc = app.add_subcommand("gcd-conjecture", "common roots of the exponential determinants");
    add_p(gc);
    add_range(gc);
    auto* vp = app.add_subcommand("verify-paper", "reproduce every fixture table");
    vp->add_option("--fixtures", c.fixtures_dir, "fixture directory");
    for (auto* s : {bern, irr, hm, mr, dp, cr, bat, gc, vp}) add_format(s);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError& e)
    {
        err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
        return 2;
    }
    if (c.jobs == 0) c.jobs = default_jobs();

    Output o(out, c);
    try
    {
        int rc = 0;
        if (*bern) rc = cmd_bernoulli(c, o);
        else if (*irr) rc = cmd_irregular(c, o);
        else if (*hm) rc = cmd_hminus(c, o, err);
        else if (*mr) rc = cmd_mrank(c, o, err);
        else if (*dp) rc = cmd_deltap(c, o);
        else if (*cr) rc = cmd_criteria(c, o);
        else if (*bat) rc = cmd_battery(c, o);
        else if (*gc) rc = cmd_gcd_conjecture(c, o);
        else if (*vp) rc = cmd_verify(c, o, err);
        o.flush();
        return rc;
    }
    catch (const UsageError& e)
    {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    catch (const InconsistencyError& e)
    {
        err << "inconsistency: " << e.what() << '\n';
        return 1;
    }
    catch (const std::invalid_argument& e)
    {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::domain_error& e)
    {
        err << "unsupported: " << e.what() << '\n';
        return 2;
    }
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace cyclocrit::cli
