#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "contraction/checks.hpp"
#include "contraction/classify.hpp"
#include "contraction/cocycle.hpp"
#include "contraction/fingerprint.hpp"

namespace contraction {

// Every document carries "format": 1.

/// {"format":1,"p":..,"m":..,"lo":..,"hi":..,"entries":{"<n>":"<series>"},
///  "pos_tail":"zero"|"unknown"|{"floor":v},"neg_tail":...}, on one line.
std::string param_seq_to_json(const ParamSeq& a);
/// Throws SyntaxError for malformed JSON or entries, RingMismatch when "p" or
/// "m" are present and differ from `ring`.
ParamSeq param_seq_from_json(const Modulus& ring, std::string_view text);

/// {"format":1,"checked":..,"failed":..,"witnesses":[{"inputs":[..],"lhs":..,"rhs":..}]}
std::string check_report_json(const CheckReport& report);

/// {"format":1,"status":..,"c":..,"bits":..,"insufficient_at":..,
///  "profile":[{"m":..,"v":..} | {"m":..,"bound":..}], "probe_check":{..}}
std::string fingerprint_json(const DeltaProfile& profile, const Recovery& recovery,
                             const std::optional<ProbeCheck>& probes);

/// {"format":1,"table":[{"p":..,"n":..,"nu":..}],"length":..,"delta":".."}
std::string nu_table_json(const NuTable& table);

/// {"format":1,"contractive":..,"test":"schur-cohn"|"p-adic-valuation","poly":..,"place":..}
std::string poly_result_json(const Place& place, const RationalPoly& f,
                             bool contractive);

/// {"format":1,"blocks":[{"place":"inf"|"p:<p>","poly":..,"n":..,"mult":..}],
///  "torsion":[{"p":..,"n":..,"nu":..}]}
std::string contraction_spec_json(const ContractionSpec& spec);
ContractionSpec contraction_spec_from_json(std::string_view text);

}  // namespace contraction
