#include "crosscap/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>

#include "CLI11.hpp"
#include "crosscap/cf_core.hpp"
#include "crosscap/report_io.hpp"
#include "crosscap/torus_knots.hpp"
#include "crosscap/verify_harness.hpp"

namespace crosscap::cli {

namespace {

struct Options {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::string family;
  std::int64_t count = 0;
  std::int64_t max_p = 0;
  int workers = 1;
  std::string checks;
  std::string json_path;
  std::string csv_path;
  bool json = false;
  bool csv = false;
};

// Either a file or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw InvalidArgument("cannot open " + path + " for writing");
    os_ = &file_;
  }
  std::ostream& stream() { return *os_; }
  bool is_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

std::string knot_text(std::int64_t p, std::int64_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

void print_record(std::ostream& os, const InvariantRecord& r) {
  const auto p = knot_p(r.knot);
  const auto q = knot_q(r.knot);
  os << "torus knot " << knot_text(p, q) << " [" << parity_name(r.knot) << "]\n"
     << "  genus            " << r.genus << '\n'
     << "  crossing number  " << r.crossing << '\n'
     << "  crosscap number  " << r.crosscap << '\n'
     << "  bounds           clark " << r.bounds.clark << ", murakami-yasuhara "
     << r.bounds.murakami_yasuhara << ", thm1 " << r.bounds.thm1 << ", thm2 " << r.bounds.thm2 << '\n'
     << "  gap g - c        " << r.gap << '\n';
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const auto rec = invariants(normalize(o.a, o.b));
  if (o.json) {
    out << to_json(rec).dump() << '\n';
  } else if (o.csv) {
    Sink sink(o.csv_path, out);
    sink.stream() << kCsvHeader << '\n' << csv_row(rec) << '\n';
  } else {
    print_record(out, rec);
  }
  return kExitOk;
}

int cmd_cf(const Options& o, std::ostream& out) {
  if (o.a < 0 || o.b < 1) throw InvalidArgument("cf requires a >= 0 and b >= 1");
  if (gcd(o.a, o.b) != 1) throw InvalidArgument("cf arguments not coprime");
  const auto cf = cf_expand(make_rational(o.a, o.b));
  const auto total = skipped_sum(cf);
  const HalfInteger n{total};
  if (o.json) {
    Json j;
    j["numerator"] = o.a;
    j["denominator"] = o.b;
    Json coeffs = Json::array();
    for (Int c : cf.coefficients()) coeffs.push_back(to_int64(c));
    j["coefficients"] = std::move(coeffs);
    j["sum"] = to_int64(coefficient_sum(cf));
    j["skipped"] = to_int64(total);
    j["N"] = to_string(n);
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << o.a << '/' << o.b << " = " << to_string(cf) << '\n'
      << "  coefficient sum  " << to_string(coefficient_sum(cf)) << '\n'
      << "  skipped total    " << to_string(total) << '\n'
      << "  N                " << to_string(n) << '\n';
  return kExitOk;
}

CheckSet parse_checks(const std::string& text) {
  if (text.empty()) return CheckSet::all();
  CheckSet set;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const auto name = text.substr(start, end - start);
    const auto c = parse_check(name);
    if (!c) throw InvalidArgument("unknown check '" + name + "'");
    set.insert(*c);
    start = end + 1;
  }
  return set;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SweepConfig config{.max_p = o.max_p, .workers = o.workers, .checks = parse_checks(o.checks)};
  config.collect_records = o.csv;
  if (config.max_p < 3) throw InvalidArgument("--max-p must be >= 3: no torus knots with p <= " + std::to_string(o.max_p));
  validate(config);

  const auto t0 = std::chrono::steady_clock::now();
  const auto report = run_verification(config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;

  bool summary = true;
  if (o.json) {
    Sink sink(o.json_path, out);
    sink.stream() << to_json(report).dump(2) << '\n';
    summary = sink.is_file();
  } else if (o.csv) {
    Sink sink(o.csv_path, out);
    write_report_csv(sink.stream(), report);
    summary = sink.is_file();
  }
  if (summary) {
    out << "checked " << report.knots_checked << " torus knots with 2 <= q < p <= " << config.max_p << " in "
        << std::fixed << std::setprecision(3) << elapsed.count() << " s\n"
        << report.violations.size() << " violations\n"
        << report.lemma_failures.size() << " lemma failures\n"
        << report.sharpness_hits.size() << " knots meet thm1 or thm2 with equality\n";
    if (report.max_gap_witness) {
      const auto& w = *report.max_gap_witness;
      out << "max gap g - c = " << w.gap << " at " << knot_text(w.knot.p(), w.knot.q()) << '\n';
    }
    for (const auto& v : report.violations) {
      out << "VIOLATION " << knot_text(knot_p(v.record.knot), knot_q(v.record.knot)) << ": "
          << joined_checks(v.violated) << '\n';
    }
  }
  return report.clean() ? kExitOk : kExitFinding;
}

int cmd_family(const Options& o, std::ostream& out) {
  if (o.count < 1) throw InvalidArgument("family count must be >= 1");
  const bool sharp = o.family == "sharp";

  struct Row {
    FamilyMember member;
    InvariantRecord computed;
    bool match;
  };
  std::vector<Row> rows;
  bool all_match = true;
  for (std::int64_t n = 1; n <= o.count; ++n) {
    auto m = sharp ? sharp_family(n) : mobius_family(n);
    auto computed = invariants(m.knot);
    bool match = computed == m.expected;
    if (sharp) match = match && computed.bounds.thm1 == computed.crosscap && computed.bounds.thm2 == computed.crosscap;
    all_match = all_match && match;
    rows.push_back({std::move(m), std::move(computed), match});
  }

  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["n"] = r.member.n;
      j["expected"] = to_json(r.member.expected);
      j["computed"] = to_json(r.computed);
      j["match"] = r.match;
      arr.push_back(std::move(j));
    }
    Json doc;
    doc["family"] = o.family;
    doc["rows"] = std::move(arr);
    doc["all_match"] = all_match;
    out << doc.dump(2) << '\n';
  } else if (o.csv) {
    Sink sink(o.csv_path, out);
    sink.stream() << kCsvHeader << ",n,expected_genus,expected_crosscap,match\n";
    for (const auto& r : rows) {
      sink.stream() << csv_row(r.computed) << ',' << r.member.n << ',' << r.member.expected.genus << ','
                    << r.member.expected.crosscap << ',' << (r.match ? "true" : "false") << '\n';
    }
  } else {
    out << std::setw(4) << "n" << "  " << std::left << std::setw(12) << "knot" << std::right << std::setw(19)
        << "genus exp / got" << std::setw(20) << "crosscap exp / got" << std::setw(6) << "thm1" << std::setw(6)
        << "thm2" << std::setw(5) << "gap" << "  match\n";
    for (const auto& r : rows) {
      const auto& e = r.member.expected;
      const auto& c = r.computed;
      out << std::setw(4) << r.member.n << "  " << std::left << std::setw(12)
          << knot_text(r.member.knot.p(), r.member.knot.q()) << std::right << std::setw(8) << e.genus << " / "
          << std::setw(8) << c.genus << std::setw(11) << e.crosscap << " / " << std::setw(6) << c.crosscap
          << std::setw(6) << c.bounds.thm1 << std::setw(6) << c.bounds.thm2 << std::setw(5) << c.gap << "  "
          << (r.match ? "yes" : "NO") << '\n';
    }
    out << (all_match ? "all rows match\n" : "MISMATCH\n");
  }
  return all_match ? kExitOk : kExitFinding;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torus knot crosscap numbers and bound verification"};
  app.require_subcommand(1);
  Options o;

  auto* inv = app.add_subcommand("invariants", "Genus, crossing number, crosscap number and bounds of a (p,q) torus knot");
  inv->add_option("p", o.a, "first parameter")->required();
  inv->add_option("q", o.b, "second parameter")->required();
  auto* inv_json = inv->add_flag("--json", o.json, "print one JSON object");
  inv->add_option("--csv", o.csv_path, "write CSV to a file ('-' for stdout)")->excludes(inv_json);

  auto* cf = app.add_subcommand("cf", "Continued fraction of a/b with its coefficient sums and N(a,b)");
  cf->add_option("a", o.a, "numerator")->required();
  cf->add_option("b", o.b, "denominator")->required();
  cf->add_flag("--json", o.json, "print one JSON object");

  auto* verify = app.add_subcommand("verify", "Check every torus knot with p <= max-p");
  verify->add_option("--max-p", o.max_p, "largest parameter p")->required();
  verify->add_option("--workers", o.workers, "worker threads")->capture_default_str();
  verify->add_option("--checks", o.checks, "comma-separated subset of thm1,thm2,clark,my,lemma2,lemma9,q3,gap");
  auto* verify_json = verify->add_option("--json", o.json_path, "write the JSON report (to a file if given)")
                          ->expected(0, 1);
  verify->add_option("--csv", o.csv_path, "write one CSV row per knot to a file ('-' for stdout)")
      ->excludes(verify_json);

  auto* family = app.add_subcommand("family", "Tabulate the (2n+1,2) or (6n-2,3) family");
  family->add_option("name", o.family, "mobius or sharp")->required()->check(CLI::IsMember({"mobius", "sharp"}));
  family->add_option("count", o.count, "number of members")->required();
  auto* family_json = family->add_flag("--json", o.json, "print JSON");
  family->add_option("--csv", o.csv_path, "write CSV to a file ('-' for stdout)")->excludes(family_json);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    for (auto* sub : {inv, verify, family})
      if (sub->parsed()) o.csv = sub->count("--csv") > 0;
    if (verify->parsed()) o.json = verify->count("--json") > 0;

    if (inv->parsed()) return cmd_invariants(o, out);
    if (cf->parsed()) return cmd_cf(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (family->parsed()) return cmd_family(o, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kExitFinding;
  } catch (const IntegralityError& e) {
    err << "internal failure: " << e.what() << '\n';
    return kExitFinding;
  }
  return kExitUsage;
}

}  // namespace crosscap::cli
