#include "acsb/serialize.hpp"

#include <stdexcept>

namespace serialize {

namespace {

Json valuation_json(const acsb::Valuation& v) {
    if (v.is_infinite()) return nullptr;
    return v.value();
}

} // namespace

std::string rational_str(const acsb::Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Json to_json(const padic::PrimeFactorization& f) {
    Json j = Json::object();
    for (const auto& [prime, e] : f.factors()) {
        j[std::to_string(prime)] = e;
    }
    return j;
}

Json to_json(const symfunc::SymbolicCombination& comb) {
    Json j = Json::array();
    for (const auto& term : comb.terms) {
        Json t;
        t["multiplicities"] = term.partition.multiplicities();
        t["lowest_part"] = term.partition.lowest_part();
        t["coefficient"] = rational_str(term.coefficient);
        j.push_back(std::move(t));
    }
    return j;
}

Json to_json(const cherndiv::TermValuationReport& report) {
    Json j;
    j["partition"] = report.partition.multiplicities();
    j["valuation"] = valuation_json(report.valuation);
    Json breakdown = Json::array();
    for (const auto& entry : report.breakdown) {
        Json e;
        e["kind"] = "factor";
        e["part"] = entry.part;
        e["multiplicity"] = entry.multiplicity;
        e["valuation"] = valuation_json(entry.factor_valuation);
        breakdown.push_back(std::move(e));
    }
    Json corr;
    corr["kind"] = "multinomial";
    corr["valuation"] = valuation_json(report.multiset_correction);
    breakdown.push_back(std::move(corr));
    j["breakdown"] = std::move(breakdown);
    return j;
}

Json to_json(const cherndiv::DivisibilityRange& range) {
    if (range.empty) return nullptr;
    Json j;
    j["k_min"] = range.k_min;
    if (range.k_max.fits_slong_p()) {
        j["k_max"] = acsb::to_i64(range.k_max);
    } else {
        j["k_max"] = range.k_max.get_str();
    }
    j["inclusive"] = range.inclusive;
    j["exponent"] = valuation_json(range.exponent);
    return j;
}

Json to_json(const acs::WitnessCertificate& cert) {
    Json j;
    j["n"] = cert.n;
    j["q"] = cert.q;
    j["chi"] = cert.chi;
    j["prime"] = cert.prime;
    j["condition"] = cert.condition == acs::WitnessCondition::A ? "A" : "B";
    if (cert.exponent) {
        j["exponent"] = *cert.exponent;
    } else {
        j["exponent"] = nullptr;
    }
    j["lhs"] = cert.lhs.get_str();
    j["rhs"] = cert.rhs;
    j["strict"] = cert.strict;
    j["delta_p"] = cert.delta_p;
    j["section_assumed"] = cert.section_assumed;
    return j;
}

acs::WitnessCertificate certificate_from_json(const Json& j) {
    acs::WitnessCertificate cert;
    cert.n = j.at("n").get<std::int64_t>();
    cert.q = j.at("q").get<std::int64_t>();
    cert.chi = j.at("chi").get<std::int64_t>();
    cert.prime = j.at("prime").get<std::uint64_t>();
    std::string cond = j.at("condition").get<std::string>();
    if (cond == "A") {
        cert.condition = acs::WitnessCondition::A;
    } else if (cond == "B") {
        cert.condition = acs::WitnessCondition::B;
    } else {
        throw std::invalid_argument("certificate_from_json: bad condition " + cond);
    }
    if (j.at("exponent").is_null()) {
        cert.exponent = std::nullopt;
    } else {
        cert.exponent = j.at("exponent").get<std::int64_t>();
    }
    cert.lhs = acsb::BigInt(j.at("lhs").get<std::string>());
    cert.rhs = j.at("rhs").get<std::int64_t>();
    cert.strict = j.at("strict").get<bool>();
    cert.delta_p = j.at("delta_p").get<std::int64_t>();
    cert.section_assumed = j.at("section_assumed").get<bool>();
    return cert;
}

Json to_json(const acs::ScanRow& row) {
    Json j;
    j["n"] = row.n;
    j["q"] = row.q;
    j["a_n"] = row.a_n;
    j["expected"] = row.expected;
    j["witness"] = row.witness ? to_json(*row.witness) : Json(nullptr);
    return j;
}

} // namespace serialize
