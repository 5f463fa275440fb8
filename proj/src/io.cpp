#include "symcyc/io.hpp"

#include <ostream>

namespace symcyc {

namespace {

std::string opt_field(std::int16_t v) { return v < 0 ? std::string() : std::to_string(v); }

nlohmann::ordered_json key_json(const StatKey& key) {
  nlohmann::ordered_json j;
  j["pattern_a"] = std::string(end_touch_label(key.pattern_a));
  j["pattern_b"] = std::string(end_touch_label(key.pattern_b));
  auto put = [&j](const char* name, std::int16_t v) {
    if (v >= 0) j[name] = v;
  };
  put("j_prime", key.j_prime);
  put("j_dblprime", key.j_dblprime);
  put("j", key.j);
  put("ell_prime", key.ell_prime);
  put("ell_dblprime", key.ell_dblprime);
  put("ell_cap", key.ell_cap);
  put("ell_delta", key.ell_delta);
  put("ell", key.ell);
  return j;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const FamilySweep& sweep) {
  os << "family,t,pattern_a,pattern_b,j_prime,j_dblprime,j,ell_prime,ell_dblprime,"
        "ell_cap,ell_delta,ell,closed_form,oracle,match\n";
  for (const SweepRow& row : sweep.rows) {
    const StatKey& k = row.key;
    const std::uint64_t expected =
        sweep.reading_configurations ? row.oracle.configurations : row.oracle.pairs;
    os << family_name(sweep.kind) << ',' << sweep.t << ',' << end_touch_label(k.pattern_a)
       << ',' << end_touch_label(k.pattern_b) << ',' << opt_field(k.j_prime) << ','
       << opt_field(k.j_dblprime) << ',' << opt_field(k.j) << ',' << opt_field(k.ell_prime)
       << ',' << opt_field(k.ell_dblprime) << ',' << opt_field(k.ell_cap) << ','
       << opt_field(k.ell_delta) << ',' << opt_field(k.ell) << ','
       << (row.closed.covered ? row.closed.value.str() : std::string()) << ',' << expected
       << ',' << match_label(row.state) << '\n';
  }
}

nlohmann::ordered_json sweep_json(const FamilySweep& sweep) {
  nlohmann::ordered_json out;
  out["family"] = std::string(family_name(sweep.kind));
  out["t"] = sweep.t;
  out["reading"] = sweep.reading_configurations
                       ? "distinct (A n B, A symdiff B) configurations"
                       : "ordered pairs";
  out["all_match"] = sweep.all_match();
  out["total_pairs"] = sweep.total_pairs;
  out["mismatches"] = sweep.mismatches;
  out["uncovered_nonempty"] = sweep.uncovered_nonempty;
  out["pair_reading_mismatches"] = sweep.pair_reading_mismatches;

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& row : sweep.rows) {
    nlohmann::ordered_json r = key_json(row.key);
    if (row.closed.covered) {
      r["closed_form"] = row.closed.value.str();
      r["item"] = row.closed.item;
      r["transform"] = std::string(transform_label(row.closed.transform));
    } else {
      r["closed_form"] = nullptr;
    }
    r["oracle_pairs"] = row.oracle.pairs;
    if (sweep.reading_configurations) r["oracle_configurations"] = row.oracle.configurations;
    r["match"] = std::string(match_label(row.state));
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);

  nlohmann::ordered_json uncovered = nlohmann::ordered_json::array();
  for (const UncoveredPattern& up : sweep.uncovered_patterns) {
    nlohmann::ordered_json u;
    u["pattern_a"] = std::string(end_touch_label(up.pattern_a));
    u["pattern_b"] = std::string(end_touch_label(up.pattern_b));
    u["oracle_pairs"] = up.oracle_pairs;
    u["status"] = up.oracle_pairs == 0 ? "uncovered, empty" : "uncovered, nonempty";
    uncovered.push_back(std::move(u));
  }
  out["uncovered_patterns"] = std::move(uncovered);
  return out;
}

nlohmann::ordered_json report_json(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["suite"] = report.suite;
  out["t_range"] = {report.t_min, report.t_max};
  out["seed"] = report.seed;
  out["checked"] = report.checked;
  out["skipped"] = report.skipped;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const CheckFailure& f : report.failures) {
    nlohmann::ordered_json j;
    j["case"] = f.case_id;
    j["witness"] = f.witness;
    failures.push_back(std::move(j));
  }
  out["failures"] = std::move(failures);
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

}  // namespace symcyc
