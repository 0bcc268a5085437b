#ifndef ACSB_SERIALIZE_HPP
#define ACSB_SERIALIZE_HPP

// JSON encodings of the public result types. Key order is fixed by insertion
// (ordered_json), so identical inputs serialize to byte-identical text.

#include <string>

#include <json.hpp>

#include "acsb/acs.hpp"
#include "acsb/cherndiv.hpp"
#include "acsb/padic.hpp"
#include "acsb/symfunc.hpp"

namespace serialize {

using Json = nlohmann::ordered_json;

std::string rational_str(const acsb::Rational& r); // "num/den", reduced

// Object with string prime keys, ascending numerically: {"2": 3, "5": 1}.
Json to_json(const padic::PrimeFactorization& f);

// List of {multiplicities, lowest_part, coefficient} records.
Json to_json(const symfunc::SymbolicCombination& comb);

// {"partition": [...], "valuation": int, "breakdown": [...]} where breakdown
// lists one {"kind":"factor",...} entry per part and a final
// {"kind":"multinomial",...} entry for the subtracted v_p((sum m)!).
Json to_json(const cherndiv::TermValuationReport& report);

// {"k_min": int, "k_max": int|string, "inclusive": bool, "exponent": int};
// k_max falls back to a decimal string when it exceeds int64. Empty ranges
// encode as JSON null.
Json to_json(const cherndiv::DivisibilityRange& range);

Json to_json(const acs::WitnessCertificate& cert);
acs::WitnessCertificate certificate_from_json(const Json& j);

// {"n","q","a_n","expected","witness": certificate|null}
Json to_json(const acs::ScanRow& row);

} // namespace serialize

#endif
