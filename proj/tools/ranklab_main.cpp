// ranklab command-line front end.
//
// Exit codes: 0 = YES / success, 1 = NO, 2 = any error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ranklab/costmodel.hpp"
#include "ranklab/errors.hpp"
#include "ranklab/generator.hpp"
#include "ranklab/instance_io.hpp"
#include "ranklab/mingap.hpp"
#include "ranklab/ranksum.hpp"
#include "ranklab/reduction.hpp"

namespace {

using ranklab::Decision;
using ranklab::Scalar;
using ranklab::Sequence;
using Json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

int exit_for(Decision d) { return d == Decision::yes ? kExitYes : kExitNo; }

void print_fields(const std::vector<std::pair<std::string, std::string>>& fields, bool json) {
  if (json) {
    Json j;
    for (const auto& [k, v] : fields) j[k] = v;
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& [k, v] : fields) std::cout << k << '=' << v << '\n';
  }
}

struct InputOptions {
  std::string file;
  bool json = false;
};

int cmd_sum(const InputOptions& in) {
  const Sequence xs = ranklab::read_instance_file(in.file);
  const Scalar r = ranklab::even_rank_sum(xs);
  if (in.json) {
    Json j;
    j["length"] = xs.size();
    j["even_rank_sum"] = r.to_string();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << r << '\n';
  }
  return kExitYes;
}

int cmd_ranksums(const InputOptions& in) {
  const Sequence xs = ranklab::read_instance_file(in.file);
  const auto rs = ranklab::rank_sums(xs);
  if (in.json) {
    Json j;
    j["length"] = rs.length;
    j["R"] = rs.even_sum.to_string();
    j["U"] = rs.odd_sum.to_string();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "R=" << rs.even_sum << "\nU=" << rs.odd_sum << '\n';
  }
  return kExitYes;
}

struct MingapOptions {
  InputOptions in;
  std::string g;
  std::string via = "direct";
};

int cmd_mingap(const MingapOptions& opt) {
  const Sequence xs = ranklab::read_instance_file(opt.in.file);
  const Scalar g = Scalar::parse(opt.g);

  std::vector<std::pair<std::string, std::string>> fields;
  Decision d;
  if (opt.via == "direct") {
    const auto report = ranklab::min_gap_at_least(xs, g);
    d = report.decision;
    fields = {{"decision", std::string(to_string(d))},
              {"via", "direct"},
              {"g", g.to_string()},
              {"min_gap", report.min_gap.to_string()}};
  } else {
    const auto out = ranklab::run_reduction(xs, g);
    d = out.decision;
    fields = {{"decision", std::string(to_string(d))},
              {"via", "reduction"},
              {"g", g.to_string()},
              {"S", out.S.to_string()},
              {"R", out.R.to_string()},
              {"ng", out.ng.to_string()},
              {"S+ng", out.target.to_string()}};
  }
  if (opt.in.json) {
    print_fields(fields, true);
  } else {
    std::cout << to_string(d) << '\n';
    fields.erase(fields.begin());
    print_fields(fields, false);
  }
  return exit_for(d);
}

int cmd_certify(const InputOptions& in, const std::string& g_text) {
  const Sequence xs = ranklab::read_instance_file(in.file);
  const auto cert = ranklab::lemma1_certificate(xs, Scalar::parse(g_text));
  auto fields = ranklab::certificate_fields(cert);
  if (in.json) {
    Json j;
    for (const auto& [k, v] : fields) {
      if (k == "n") {
        j[k] = cert.n;
      } else {
        j[k] = v;
      }
    }
    std::cout << j.dump() << '\n';
  } else {
    print_fields(fields, false);
  }
  return exit_for(cert.decision);
}

struct GenOptions {
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> g;
  std::string start = "0";
  std::string epsilon = "1/7";
  std::int64_t low = -1000;
  std::int64_t high = 1000;
  std::int64_t max_den = 1;
  std::string out;
};

int cmd_gen(const GenOptions& opt) {
  ranklab::GeneratorSpec spec;
  spec.kind = ranklab::parse_generator_kind(opt.kind);
  spec.n = opt.n;
  spec.seed = opt.seed;
  if (opt.g) spec.g = Scalar::parse(*opt.g);
  spec.start = Scalar::parse(opt.start);
  spec.epsilon = Scalar::parse(opt.epsilon);
  spec.low = opt.low;
  spec.high = opt.high;
  spec.max_denominator = opt.max_den;

  const Sequence xs = ranklab::generate_instance(spec);
  if (opt.out.empty()) {
    ranklab::write_instance(std::cout, xs, ranklab::describe(spec));
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw ranklab::UsageError("cannot write '" + opt.out + "'");
    ranklab::write_instance(f, xs, ranklab::describe(spec));
  }
  return kExitYes;
}

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::string out;
  bool wallclock = false;
};

int cmd_bench(const BenchOptions& opt) {
  const auto rows = ranklab::growth_report(opt.sizes, opt.trials, opt.seed);

  std::ostream* summary = &std::cout;
  if (opt.out.empty()) {
    ranklab::write_growth_csv(std::cout, rows);
    summary = &std::cerr;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw ranklab::UsageError("cannot write '" + opt.out + "'");
    ranklab::write_growth_csv(f, rows);
  }

  auto& s = *summary;
  for (const auto& r : rows) {
    s << "m=" << r.m << std::fixed << std::setprecision(1) << " comparisons=" << r.comparisons
      << " total=" << r.total << std::setprecision(4) << " total/(m log2 m)=" << r.normalized << '\n';
  }
  if (opt.wallclock) {
    for (const auto& w : ranklab::wallclock_report(opt.sizes, opt.trials, opt.seed)) {
      s << "m=" << w.m << std::fixed << std::setprecision(0) << " exact_ns=" << w.exact_ns
        << " float_ns=" << w.float_ns << " (float path is value-unsound)\n";
    }
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ranklab: even-rank-sums, minimum gaps and the MinGap -> EvenRankSum reduction"};
  app.require_subcommand(1);

  InputOptions sum_opt;
  auto* sum = app.add_subcommand("sum", "Print the even-rank-sum of an instance file");
  sum->add_option("file", sum_opt.file, "Instance file")->required();
  sum->add_flag("--json", sum_opt.json, "JSON output");

  InputOptions rs_opt;
  auto* rs = app.add_subcommand("ranksums", "Print the even- and odd-position sums R and U");
  rs->add_option("file", rs_opt.file, "Instance file")->required();
  rs->add_flag("--json", rs_opt.json, "JSON output");

  MingapOptions mg_opt;
  auto* mg = app.add_subcommand("mingap", "Decide whether every gap is at least g");
  mg->add_option("file", mg_opt.in.file, "Instance file")->required();
  mg->add_option("--g", mg_opt.g, "Threshold (exact scalar text)")->required();
  mg->add_option("--via", mg_opt.via, "direct | reduction")->check(CLI::IsMember({"direct", "reduction"}));
  mg->add_flag("--json", mg_opt.in.json, "JSON output");

  InputOptions cert_opt;
  std::string cert_g;
  auto* cert = app.add_subcommand("certify", "Emit the full reduction certificate");
  cert->add_option("file", cert_opt.file, "Instance file")->required();
  cert->add_option("--g", cert_g, "Threshold g > 0")->required();
  cert->add_flag("--json", cert_opt.json, "JSON output");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--kind", gen_opt.kind, "uniform | progression | near-equal")->required();
  gen->add_option("--n", gen_opt.n, "Number of values")->required();
  gen->add_option("--seed", gen_opt.seed, "Seed")->required();
  gen->add_option("--g", gen_opt.g, "Gap (progression, near-equal)");
  gen->add_option("--start", gen_opt.start, "First value (progression, near-equal)");
  gen->add_option("--epsilon", gen_opt.epsilon, "Gap reduction (near-equal)");
  gen->add_option("--low", gen_opt.low, "Smallest numerator (uniform)");
  gen->add_option("--high", gen_opt.high, "Largest numerator (uniform)");
  gen->add_option("--max-den", gen_opt.max_den, "Largest denominator (uniform)");
  gen->add_option("--out", gen_opt.out, "Output file (default stdout)");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Operation-count growth table as CSV");
  bench->add_option("--sizes", bench_opt.sizes, "Comma-separated sizes, each >= 2")->required()->delimiter(',');
  bench->add_option("--trials", bench_opt.trials, "Trials per size")->required();
  bench->add_option("--seed", bench_opt.seed, "Seed")->required();
  bench->add_option("--out", bench_opt.out, "CSV output file (default stdout)");
  bench->add_flag("--wallclock", bench_opt.wallclock, "Also report exact vs double wall-clock time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*sum) return cmd_sum(sum_opt);
    if (*rs) return cmd_ranksums(rs_opt);
    if (*mg) return cmd_mingap(mg_opt);
    if (*cert) return cmd_certify(cert_opt, cert_g);
    if (*gen) return cmd_gen(gen_opt);
    if (*bench) return cmd_bench(bench_opt);
  } catch (const std::exception& e) {
    std::cerr << "ranklab: error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
