#include "cyclocrit/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace cyclocrit {

using nlohmann::json;

std::string to_string(Verdict v)
{
    switch (v)
    {
    case Verdict::criterion_holds: return "criterion_holds";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::violated_expectation: return "violated_expectation";
    }
    return "inconclusive";
}

Verdict verdict_from_string(const std::string& s)
{
    if (s == "criterion_holds") return Verdict::criterion_holds;
    if (s == "inconclusive") return Verdict::inconclusive;
    if (s == "violated_expectation") return Verdict::violated_expectation;
    throw std::invalid_argument("unknown verdict: " + s);
}

namespace {

json as_json(const CriterionReport& r)
{
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return {{"p", r.p}, {"criterion", r.criterion}, {"params", params}, {"value", r.value},
            {"verdict", to_string(r.verdict)}};
}

CriterionReport from_json_value(const json& j)
{
    auto need = [&](const char* key, bool ok) {
        if (!j.contains(key) || !ok) throw std::invalid_argument(std::string("report: bad or missing field ") + key);
    };
    need("p", j.contains("p") && j["p"].is_number_unsigned());
    need("criterion", j.contains("criterion") && j["criterion"].is_string());
    need("params", j.contains("params") && j["params"].is_object());
    need("value", j.contains("value") && j["value"].is_string());
    need("verdict", j.contains("verdict") && j["verdict"].is_string());
    CriterionReport r;
    r.p = j["p"].get<std::uint32_t>();
    r.criterion = j["criterion"].get<std::string>();
    for (const auto& [k, v] : j["params"].items())
    {
        if (!v.is_number_integer()) throw std::invalid_argument("report: params must be integers");
        r.params[k] = v.get<std::int64_t>();
    }
    r.value = j["value"].get<std::string>();
    r.verdict = verdict_from_string(j["verdict"].get<std::string>());
    return r;
}

json parse(const std::string& text)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw std::invalid_argument(std::string("report: ") + e.what());
    }
}

}  // namespace

std::string to_json(const CriterionReport& r) { return as_json(r).dump(); }

std::string to_json(const std::vector<CriterionReport>& rs)
{
    json a = json::array();
    for (const auto& r : rs) a.push_back(as_json(r));
    return a.dump(2);
}

CriterionReport report_from_json(const std::string& text) { return from_json_value(parse(text)); }

std::vector<CriterionReport> reports_from_json(const std::string& text)
{
    const json a = parse(text);
    if (!a.is_array()) throw std::invalid_argument("report: expected an array");
    std::vector<CriterionReport> out;
    for (const auto& j : a) out.push_back(from_json_value(j));
    return out;
}

std::string csv_header() { return "p,criterion,params,value,verdict"; }

std::string to_csv(const CriterionReport& r)
{
    std::ostringstream os;
    os << r.p << ',' << r.criterion << ',';
    bool first = true;
    for (const auto& [k, v] : r.params)
    {
        if (!first) os << ';';
        os << k << '=' << v;
        first = false;
    }
    os << ',' << r.value << ',' << to_string(r.verdict);
    return os.str();
}

std::string to_plain(const CriterionReport& r)
{
    std::ostringstream os;
    os << "p=" << r.p << ' ' << r.criterion;
    for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
    os << ": " << r.value << " [" << to_string(r.verdict) << ']';
    return os.str();
}

}  // namespace cyclocrit
