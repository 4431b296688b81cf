#pragma once

// JSON and CSV encodings of invariant records and sweep reports.
//
// Record objects carry exactly these keys, in this order:
//   p, q, parity, genus, crossing, crosscap,
//   bound_clark, bound_my, bound_thm1, bound_thm2, gap
// and the CSV header is the same list joined by commas.

#include <ostream>
#include <string>

#include "crosscap/torus_knots.hpp"
#include "crosscap/verify_harness.hpp"
#include "json.hpp"

namespace crosscap {

using Json = nlohmann::ordered_json;

Json to_json(const InvariantRecord& rec);
Json to_json(const BoundCheckRecord& rec);
Json to_json(const VerificationReport& report);

extern const char* const kCsvHeader;

std::string csv_row(const InvariantRecord& rec);

// Names of the checks in the set, joined with ';'.
std::string joined_checks(const CheckSet& checks);

// Header plus one row per record, with an extra `violated` column.
void write_report_csv(std::ostream& os, const VerificationReport& report);

}  // namespace crosscap
