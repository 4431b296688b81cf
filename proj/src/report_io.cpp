#include "crosscap/report_io.hpp"

namespace crosscap {

const char* const kCsvHeader =
    "p,q,parity,genus,crossing,crosscap,bound_clark,bound_my,bound_thm1,bound_thm2,gap";

Json to_json(const InvariantRecord& rec) {
  Json j;
  j["p"] = knot_p(rec.knot);
  j["q"] = knot_q(rec.knot);
  j["parity"] = parity_name(rec.knot);
  j["genus"] = rec.genus;
  j["crossing"] = rec.crossing;
  j["crosscap"] = rec.crosscap;
  j["bound_clark"] = rec.bounds.clark;
  j["bound_my"] = rec.bounds.murakami_yasuhara;
  j["bound_thm1"] = rec.bounds.thm1;
  j["bound_thm2"] = rec.bounds.thm2;
  j["gap"] = rec.gap;
  return j;
}

namespace {

Json check_list(const CheckSet& checks) {
  Json arr = Json::array();
  for (Check c : checks.to_vector()) arr.push_back(std::string(check_name(c)));
  return arr;
}

}  // namespace

Json to_json(const BoundCheckRecord& rec) {
  Json j = to_json(rec.record);
  j["violated"] = check_list(rec.violated);
  j["equality_hits"] = check_list(rec.equality_hits);
  return j;
}

Json to_json(const VerificationReport& report) {
  Json j;
  // workers is deliberately absent so reports compare equal across worker counts.
  j["config"] = {{"max_p", report.config.max_p}, {"checks", check_list(report.config.checks)}};
  j["knots_checked"] = report.knots_checked;

  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(to_json(v));
  j["violations"] = std::move(violations);

  Json hits = Json::array();
  for (const auto& k : report.sharpness_hits) hits.push_back(Json::array({k.p(), k.q()}));
  j["sharpness_hits"] = std::move(hits);

  if (report.max_gap_witness) {
    const auto& w = *report.max_gap_witness;
    j["max_gap_witness"] = {{"p", w.knot.p()}, {"q", w.knot.q()}, {"gap", w.gap}};
  } else {
    j["max_gap_witness"] = nullptr;
  }

  Json lemma = Json::array();
  for (const auto& f : report.lemma_failures)
    lemma.push_back({{"p", f.knot.p()}, {"q", f.knot.q()}, {"check", std::string(check_name(f.check))}});
  j["lemma_failures"] = std::move(lemma);
  return j;
}

std::string csv_row(const InvariantRecord& rec) {
  std::string row;
  auto field = [&](const std::string& s) {
    if (!row.empty()) row += ',';
    row += s;
  };
  field(std::to_string(knot_p(rec.knot)));
  field(std::to_string(knot_q(rec.knot)));
  field(parity_name(rec.knot));
  for (auto v : {rec.genus, rec.crossing, rec.crosscap, rec.bounds.clark, rec.bounds.murakami_yasuhara,
                 rec.bounds.thm1, rec.bounds.thm2, rec.gap})
    field(std::to_string(v));
  return row;
}

std::string joined_checks(const CheckSet& checks) {
  std::string s;
  for (Check c : checks.to_vector()) {
    if (!s.empty()) s += ';';
    s += check_name(c);
  }
  return s;
}

void write_report_csv(std::ostream& os, const VerificationReport& report) {
  os << kCsvHeader << ",violated\n";
  for (const auto& r : report.records) os << csv_row(r.record) << ',' << joined_checks(r.violated) << '\n';
}

}  // namespace crosscap
