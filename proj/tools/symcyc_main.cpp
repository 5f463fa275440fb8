// Command-line front end: vertex decompositions over the distinguished cycle,
// Smirnov-word counts, hypercube pair statistics, family-statistics sweeps,
// and the identity verification suites. Exit codes: 0 success, 1 verification
// or match failure, 2 usage error.

#include "symcyc/cycle.hpp"
#include "symcyc/family_stats.hpp"
#include "symcyc/identities.hpp"
#include "symcyc/io.hpp"
#include "symcyc/pair_stats.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::ordered_json;
using namespace symcyc;

constexpr int kDecomposeMaxT = 16;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

// Output goes to the named file, or stdout when the path is empty.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

// ---- decompose ----

struct DecomposeArgs {
  int t = 0;
  std::string vertex;
  std::string set_spec;
  bool set_given = false;
  std::string format = "text";
  std::string output;
};

int run_decompose(const DecomposeArgs& args) {
  if (args.t < kMinGround || args.t > kDecomposeMaxT)
    return usage_error("decompose requires t in [3, 16]");
  SignVec vertex;
  if (!args.vertex.empty() && args.set_given)
    return usage_error("give either --vertex or --set, not both");
  try {
    if (!args.vertex.empty()) {
      vertex = parse_sign_vector(args.vertex);
      if (vertex.size() != args.t) return usage_error("vertex length does not match --t");
    } else if (args.set_given) {
      vertex = negate_at(GroundSubset::from_members(args.t, parse_int_list(args.set_spec)));
    } else {
      return usage_error("decompose needs --vertex or --set");
    }
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }

  const Decomposition dec = decompose_distinguished(vertex);
  Sink sink(args.output);
  std::ostream& os = sink.stream();
  if (args.format == "json") {
    ordered_json j;
    j["t"] = args.t;
    j["vertex"] = format_sign_vector(vertex);
    j["x"] = std::vector<int>(dec.x.begin(), dec.x.end());
    j["q"] = dec.q();
    j["q_indices"] = dec.q_indices;
    std::vector<std::string> qv;
    for (const SignVec& u : dec.q_vertices()) qv.push_back(format_sign_vector(u));
    j["q_vertices"] = qv;
    os << j.dump(2) << "\n";
  } else {
    os << "t        " << args.t << "\n";
    os << "vertex   " << format_sign_vector(vertex) << "\n";
    os << "x        ";
    for (int i = 0; i < dec.x.size(); ++i) os << (i ? "," : "") << dec.x[i];
    os << "\n";
    os << "q        " << dec.q() << "\n";
    for (std::size_t i = 0; i < dec.q_indices.size(); ++i)
      os << "Q[" << dec.q_indices[i] << "]     " << format_sign_vector(dec.q_vertices()[i])
         << "\n";
  }
  return 0;
}

// ---- smirnov ----

struct SmirnovArgs {
  int alphabet = 3;
  std::string parikh;
  int first = 0;
  int last = 0;
  std::string format = "text";
  std::string output;
};

int run_smirnov(const SmirnovArgs& args) {
  std::vector<int> parikh;
  try {
    parikh = parse_int_list(args.parikh);
  } catch (const std::exception&) {
    return usage_error("bad --parikh list");
  }
  CountValue closed;
  try {
    closed = smirnov_count(args.alphabet, parikh, args.first, args.last);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  long long total = 0;
  for (int c : parikh) total += c;
  std::optional<CountValue> oracle;
  if (total <= 12) oracle = smirnov_bruteforce(args.alphabet, parikh, args.first, args.last);

  Sink sink(args.output);
  std::ostream& os = sink.stream();
  const bool match = !oracle || *oracle == closed;
  if (args.format == "json") {
    ordered_json j;
    j["alphabet"] = args.alphabet;
    j["parikh"] = parikh;
    j["first"] = args.first;
    j["last"] = args.last;
    j["count"] = closed.str();
    j["oracle"] = oracle ? ordered_json(oracle->str()) : ordered_json(nullptr);
    j["match"] = match;
    os << j.dump(2) << "\n";
  } else {
    os << closed.str();
    if (oracle) os << " / oracle " << oracle->str() << (match ? " (match)" : " (MISMATCH)");
    os << "\n";
  }
  return match ? 0 : 1;
}

// ---- pairs ----

struct PairsArgs {
  int t = 0;
  std::string statistic;
  int k = -1, j1 = -1, j2 = -1, s = -1, i = -1;
  int oracle_bound = kDefaultOracleBound;
  std::string format = "text";
  std::string output;
};

int run_pairs(const PairsArgs& args) {
  const int t = args.t;
  if (t < kMinGround || t > kDecomposeMaxT) return usage_error("pairs requires t in [3, 16]");
  if (args.oracle_bound > kMaxOracleBound)
    return usage_error("oracle bound exceeds the hard cap of 10");
  const bool with_oracle = t <= args.oracle_bound;

  CountValue closed;
  std::optional<std::uint64_t> oracle;
  std::string params;
  try {
    const std::string& name = args.statistic;
    if (name == "distance") {
      if (args.k < 0) return usage_error("distance statistic needs --k");
      params = "k=" + std::to_string(args.k);
      closed = pairs_at_distance(t, args.k);
      if (with_oracle) oracle = oracle::pairs_at_distance(t, args.k);
    } else if (name == "orthogonal") {
      closed = orthogonal_pairs(t);
      if (with_oracle) oracle = oracle::orthogonal_pairs(t);
    } else if (name == "mutual-orthogonal") {
      closed = mutual_orthogonal_count(t);
      if (with_oracle) {
        // canonical orthogonal pair: T^(+) and the vertex negating [1..t/2]
        const Mask y = (Mask{1} << (t / 2)) - 1;
        oracle = oracle::mutual_orthogonal_count(t, 0, y);
      }
    } else if (name == "negpart-distance") {
      if (args.j1 < 0 || args.j2 < 0 || args.k < 0)
        return usage_error("negpart-distance needs --j1 --j2 --k");
      params = "j1=" + std::to_string(args.j1) + ";j2=" + std::to_string(args.j2) +
               ";k=" + std::to_string(args.k);
      closed = pairs_with_negparts_at_distance(t, args.j1, args.j2, args.k);
      if (with_oracle)
        oracle = oracle::pairs_with_negparts_at_distance(t, args.j1, args.j2, args.k);
    } else if (name == "negpart-orthogonal") {
      if (args.j1 < 0 || args.j2 < 0) return usage_error("negpart-orthogonal needs --j1 --j2");
      params = "j1=" + std::to_string(args.j1) + ";j2=" + std::to_string(args.j2);
      closed = orthogonal_pairs_with_negparts(t, args.j1, args.j2);
      if (with_oracle) oracle = oracle::orthogonal_pairs_with_negparts(t, args.j1, args.j2);
    } else if (name == "johnson-layer") {
      if (args.s < 0 || args.i < 0) return usage_error("johnson-layer needs --s --i");
      params = "s=" + std::to_string(args.s) + ";i=" + std::to_string(args.i);
      closed = johnson_layer_pairs(t, args.s, args.i);
      if (with_oracle) oracle = oracle::johnson_layer_pairs(t, args.s, args.i);
    } else if (name == "johnson-orthogonal") {
      if (args.s < 0) return usage_error("johnson-orthogonal needs --s");
      params = "s=" + std::to_string(args.s);
      closed = johnson_orthogonal_pairs(t, args.s);
      if (with_oracle) oracle = oracle::johnson_orthogonal_pairs(t, args.s);
    } else if (name == "johnson-mutual") {
      if (args.s < 0) return usage_error("johnson-mutual needs --s");
      params = "s=" + std::to_string(args.s);
      closed = johnson_mutual_count(t, args.s);
      if (with_oracle) {
        // first layer-orthogonal pair in mask order
        const Mask n = Mask{1} << t;
        const Mask x = (Mask{1} << args.s) - 1;
        for (Mask y = 0; y < n; ++y) {
          if (__builtin_popcount(y) == args.s && t - 2 * __builtin_popcount(x ^ y) == 0) {
            oracle = oracle::johnson_mutual_count(t, args.s, x, y);
            break;
          }
        }
      }
    } else {
      return usage_error("unknown statistic: " + name);
    }
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }

  const bool match = !oracle || closed == CountValue{*oracle};
  Sink sink(args.output);
  std::ostream& os = sink.stream();
  if (args.format == "json") {
    ordered_json j;
    j["t"] = t;
    j["statistic"] = args.statistic;
    j["parameters"] = params;
    j["closed_form"] = closed.str();
    j["oracle"] = oracle ? ordered_json(*oracle) : ordered_json(nullptr);
    j["match"] = oracle ? ordered_json(match) : ordered_json(nullptr);
    os << j.dump(2) << "\n";
  } else if (args.format == "csv") {
    os << "t,statistic,parameters,closed_form,oracle,match\n";
    os << t << ',' << args.statistic << ',' << params << ',' << closed.str() << ',';
    if (oracle)
      os << *oracle << ',' << (match ? "yes" : "no");
    else
      os << ',';
    os << "\n";
  } else {
    os << closed.str();
    if (oracle) os << " / oracle " << *oracle << (match ? " (match)" : " (MISMATCH)");
    os << "\n";
  }
  return match ? 0 : 1;
}

// ---- stats ----

struct StatsArgs {
  int t = 0;
  std::string family;
  int oracle_bound = kDefaultOracleBound;
  std::string format = "csv";
  std::string output;
};

int run_stats(const StatsArgs& args) {
  const auto kind = family_from_name(args.family);
  if (!kind) return usage_error("unknown family: " + args.family);
  if (args.oracle_bound > kMaxOracleBound)
    return usage_error("oracle bound exceeds the hard cap of 10");
  if (args.t < kMinGround || args.t > args.oracle_bound)
    return usage_error("stats sweep refused: t must lie in [3, " +
                       std::to_string(args.oracle_bound) +
                       "]; raise --oracle-bound to override");

  const FamilySweep sweep = full_sweep(args.t, *kind, args.oracle_bound);
  Sink sink(args.output);
  if (args.format == "json")
    sink.stream() << sweep_json(sweep).dump(2) << "\n";
  else
    write_sweep_csv(sink.stream(), sweep);
  return sweep.all_match() ? 0 : 1;
}

// ---- verify ----

struct VerifyArgs {
  std::string suite = "all";
  int t_min = kMinGround;
  int t_max = 6;
  std::uint64_t seed = kDefaultSeed;
  int oracle_bound = kDefaultOracleBound;
  std::string output;
};

int run_verify(const VerifyArgs& args) {
  if (args.t_min < kMinGround || args.t_max < args.t_min)
    return usage_error("bad t range");
  const int cap = std::max(kDefaultOracleBound, std::min(args.oracle_bound, 10));
  if (args.t_max > cap)
    return usage_error("verify sweep refused: t-max above " + std::to_string(cap) +
                       "; raise --oracle-bound to override (hard cap 10)");

  std::vector<Suite> suites;
  if (args.suite == "all") {
    suites.assign(std::begin(kAllSuites), std::end(kAllSuites));
  } else if (auto s = suite_from_name(args.suite)) {
    suites.push_back(*s);
  } else {
    return usage_error("unknown suite: " + args.suite);
  }

  SuiteOptions opts;
  opts.t_min = args.t_min;
  opts.t_max = args.t_max;
  opts.seed = args.seed;

  ordered_json out;
  out["t_range"] = {opts.t_min, opts.t_max};
  out["seed"] = opts.seed;
  ordered_json reports = ordered_json::array();
  std::uint64_t total_failures = 0, total_checked = 0, total_skipped = 0;
  for (Suite s : suites) {
    const VerificationReport report = run_suite(s, opts);
    total_failures += report.failures.size();
    total_checked += report.checked;
    total_skipped += report.skipped;
    reports.push_back(report_json(report));
  }
  out["suites"] = std::move(reports);
  out["checked"] = total_checked;
  out["skipped"] = total_skipped;
  out["total_failures"] = total_failures;

  Sink sink(args.output);
  sink.stream() << out.dump(2) << "\n";
  return total_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric-cycle decompositions of hypercube vertices: exact counts, "
               "statistics sweeps, and identity verification"};
  app.require_subcommand(1);

  DecomposeArgs dec;
  CLI::App* cmd_dec = app.add_subcommand("decompose",
                                         "decompose a vertex over the distinguished cycle");
  cmd_dec->add_option("--t", dec.t, "ground set size")->required();
  cmd_dec->add_option("--vertex", dec.vertex, "vertex as a +- string");
  CLI::Option* set_opt = cmd_dec->add_option("--set", dec.set_spec,
                                             "negative part as comma-separated members");
  cmd_dec->add_option("--format", dec.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_dec->add_option("--output", dec.output, "output path (default stdout)");

  SmirnovArgs smi;
  CLI::App* cmd_smi = app.add_subcommand("smirnov", "count Smirnov words");
  cmd_smi->add_option("--alphabet", smi.alphabet, "alphabet size")->required();
  cmd_smi->add_option("--parikh", smi.parikh, "comma-separated letter multiplicities")
      ->required();
  cmd_smi->add_option("--first", smi.first, "first letter (0-based)")->required();
  cmd_smi->add_option("--last", smi.last, "last letter (0-based)")->required();
  cmd_smi->add_option("--format", smi.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_smi->add_option("--output", smi.output, "output path (default stdout)");

  PairsArgs pr;
  CLI::App* cmd_pr = app.add_subcommand("pairs", "vertex-pair statistics");
  cmd_pr->add_option("--t", pr.t, "ground set size")->required();
  cmd_pr->add_option("--statistic", pr.statistic,
                     "distance | orthogonal | mutual-orthogonal | negpart-distance | "
                     "negpart-orthogonal | johnson-layer | johnson-orthogonal | johnson-mutual")
      ->required();
  cmd_pr->add_option("--k", pr.k, "Hamming distance");
  cmd_pr->add_option("--j1", pr.j1, "negative-part size of the first vertex");
  cmd_pr->add_option("--j2", pr.j2, "negative-part size of the second vertex");
  cmd_pr->add_option("--s", pr.s, "layer (common negative-part size)");
  cmd_pr->add_option("--i", pr.i, "layer dissimilarity");
  cmd_pr->add_option("--oracle-bound", pr.oracle_bound, "largest t swept by the oracle");
  cmd_pr->add_option("--format", pr.format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd_pr->add_option("--output", pr.output, "output path (default stdout)");

  StatsArgs st;
  CLI::App* cmd_st = app.add_subcommand("stats", "family-statistics sweep vs oracle");
  cmd_st->add_option("--family", st.family,
                     "partition | disjoint-noncover | intersect-cover3 | intersect-cover2 | "
                     "intersect-noncover4 | intersect-noncover3")
      ->required();
  cmd_st->add_option("--t", st.t, "ground set size")->required();
  cmd_st->add_option("--oracle-bound", st.oracle_bound,
                     "largest t the sweep accepts (default 8, hard cap 10)");
  cmd_st->add_option("--format", st.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_st->add_option("--output", st.output, "output path (default stdout)");

  VerifyArgs vf;
  CLI::App* cmd_vf = app.add_subcommand("verify", "run identity verification suites");
  cmd_vf->add_option("--suite", vf.suite,
                     "all | valuation | moebius | negpart | pairwise | two-tope | coherent | "
                     "weight | translation | readings");
  cmd_vf->add_option("--t-min", vf.t_min, "smallest t");
  cmd_vf->add_option("--t-max", vf.t_max, "largest t (default 6)");
  cmd_vf->add_option("--seed", vf.seed, "random seed recorded in the report");
  cmd_vf->add_option("--oracle-bound", vf.oracle_bound, "raises the t-max ceiling (hard cap 10)");
  cmd_vf->add_option("--output", vf.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  dec.set_given = set_opt->count() > 0;
  try {
    if (cmd_dec->parsed()) return run_decompose(dec);
    if (cmd_smi->parsed()) return run_smirnov(smi);
    if (cmd_pr->parsed()) return run_pairs(pr);
    if (cmd_st->parsed()) return run_stats(st);
    if (cmd_vf->parsed()) return run_verify(vf);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
