#pragma once

// One evaluated criterion, and its JSON / CSV serializations.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cyclocrit {

enum class Verdict
{
    criterion_holds,       // a certifying value is nonzero
    inconclusive,          // value says nothing either way
    violated_expectation,  // an identity that must hold did not
};

std::string to_string(Verdict v);
// Throws std::invalid_argument on an unknown name.
Verdict verdict_from_string(const std::string& s);

struct CriterionReport
{
    std::uint32_t p = 0;
    std::string criterion;
    std::map<std::string, std::int64_t> params;
    std::string value;  // decimal
    Verdict verdict = Verdict::inconclusive;

    friend bool operator==(const CriterionReport&, const CriterionReport&) = default;
};

// {"p": int, "criterion": string, "params": object, "value": string, "verdict": string}
std::string to_json(const CriterionReport& r);
std::string to_json(const std::vector<CriterionReport>& rs);

// Inverse of to_json for a single object. Throws std::invalid_argument when a
// field is missing or has the wrong type.
CriterionReport report_from_json(const std::string& text);
std::vector<CriterionReport> reports_from_json(const std::string& text);

// p,criterion,params,value,verdict ; params as k=v pairs joined by ';'.
std::string csv_header();
std::string to_csv(const CriterionReport& r);

// "p=37 cauchy_half mu=3: 5 [criterion_holds]"
std::string to_plain(const CriterionReport& r);

}  // namespace cyclocrit
