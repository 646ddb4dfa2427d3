// orientseq: construct and verify special orientable sequences over Z_q.
//
// Subcommands: verify, bound, gen-os2, construct, lift, sos, examples.
// Exit codes: 0 success/verified, 1 property failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orientseq/bounds.hpp"
#include "orientseq/constructions.hpp"
#include "orientseq/euler_os2.hpp"
#include "orientseq/examples_registry.hpp"
#include "orientseq/lempel.hpp"
#include "orientseq/ring_sequence.hpp"
#include "orientseq/seq_io.hpp"
#include "orientseq/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

using orientseq::RingSequence;

void emit_sequence(const RingSequence& s, int n, const std::string& out_path, bool as_json) {
  const auto format = as_json ? orientseq::SeqFormat::json : orientseq::SeqFormat::text;
  if (out_path.empty())
    std::cout << orientseq::write_sequence(s, n, format);
  else
    orientseq::write_sequence_file(out_path, s, n, format);
}

void print_report_pretty(const orientseq::PropertyReport& r) {
  std::cout << "q                     " << r.q << "\n"
            << "n                     " << r.n << "\n"
            << "period                " << r.period << "\n"
            << "weight                " << r.weight << "\n"
            << "weight mod q          " << r.weight_mod << "\n"
            << "window sequence       " << (r.is_window ? "yes" : "no") << "\n"
            << "orientable            " << (r.is_orientable ? "yes" : "no") << "\n"
            << "negative orientable   " << (r.is_negative_orientable ? "yes" : "no") << "\n"
            << "special               " << (r.is_special ? "yes" : "no") << "\n"
            << "good                  " << (r.is_good ? "yes" : "no") << "\n";
  for (const auto& v : r.violations)
    std::cout << "violation             " << orientseq::to_string(v.kind) << " at (i=" << v.i
              << ", j=" << v.j << ") tuple " << v.tuple.to_string() << "\n";
}

std::uint64_t oracle_guard_from_env() {
  if (const char* env = std::getenv("ORIENTSEQ_MAX_TUPLES")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw orientseq::error("invalid ORIENTSEQ_MAX_TUPLES value");
    }
  }
  return orientseq::kDefaultTupleGuard;
}

struct VerifyOptions {
  std::string file;
  int n = 0;  // 0 = take n from the file header
  std::string require = "special";
  bool pretty = false;
};

int run_verify(const VerifyOptions& opt) {
  auto gate = [&opt]() -> bool (*)(const orientseq::PropertyReport&) {
    if (opt.require == "window") return [](const orientseq::PropertyReport& r) { return r.is_window; };
    if (opt.require == "orientable")
      return [](const orientseq::PropertyReport& r) { return r.is_orientable; };
    if (opt.require == "negative-orientable")
      return [](const orientseq::PropertyReport& r) { return r.is_negative_orientable; };
    if (opt.require == "special")
      return [](const orientseq::PropertyReport& r) { return r.is_special; };
    if (opt.require == "good") return [](const orientseq::PropertyReport& r) { return r.is_good; };
    if (opt.require == "good-special")
      return [](const orientseq::PropertyReport& r) { return r.is_special && r.is_good; };
    throw CLI::ValidationError("--require", "unknown property " + opt.require);
  }();

  orientseq::SequenceFile in = orientseq::read_sequence_file(opt.file);
  const int n = opt.n > 0 ? opt.n : in.n;
  orientseq::PropertyReport r = orientseq::report(in.seq, n);
  if (opt.pretty)
    print_report_pretty(r);
  else
    std::cout << orientseq::to_json(r) << "\n";
  return gate(r) ? kExitOk : kExitPropertyFailure;
}

int run_bound(int q, int n, bool pretty) {
  const std::uint64_t closed = orientseq::sos_bound(q, n);
  std::optional<orientseq::BoundBreakdown> oracle;
  try {
    oracle = orientseq::sos_bound_oracle(q, n, oracle_guard_from_env());
  } catch (const orientseq::error&) {
    // over the enumeration guard: report the closed form only
  }
  if (pretty) {
    std::cout << "sos_bound(" << q << ", " << n << ") = " << closed << "\n";
    if (oracle) {
      std::cout << "oracle breakdown over " << oracle->total() << " tuples:\n"
                << "  fixed (s=s^R=-s)      " << oracle->count_fixed_both << "\n"
                << "  negation-fixed        " << oracle->count_negself << "\n"
                << "  palindromic           " << oracle->count_palindromic << "\n"
                << "  antipalindromic       " << oracle->count_antipalindromic << "\n"
                << "  free                  " << oracle->count_free << "\n"
                << "  oracle bound          " << oracle->bound << "\n";
    } else {
      std::cout << "oracle skipped: q^n exceeds the enumeration guard\n";
    }
    return kExitOk;
  }
  nlohmann::ordered_json doc;
  doc["q"] = q;
  doc["n"] = n;
  doc["bound"] = closed;
  if (oracle) {
    nlohmann::ordered_json o;
    o["count_fixed_both"] = oracle->count_fixed_both;
    o["count_negself"] = oracle->count_negself;
    o["count_palindromic"] = oracle->count_palindromic;
    o["count_antipalindromic"] = oracle->count_antipalindromic;
    o["count_free"] = oracle->count_free;
    o["bound"] = oracle->bound;
    doc["oracle"] = std::move(o);
  } else {
    doc["oracle"] = nullptr;
  }
  std::cout << doc.dump() << "\n";
  return oracle && oracle->bound != closed ? kExitPropertyFailure : kExitOk;
}

struct ConstructOptions {
  std::string variant;
  int q = 0;
  int q_prime = 0;
  int n = 2;
  std::string starter_file;
  std::string out;
  bool json = false;
  bool force_first_two = false;
};

int run_construct(const ConstructOptions& opt) {
  auto variant = orientseq::variant_from_string(opt.variant);
  if (!variant) throw CLI::ValidationError("--variant", "unknown variant " + opt.variant);

  std::optional<RingSequence> starter;
  if (!opt.starter_file.empty()) starter = orientseq::read_sequence_file(opt.starter_file).seq;

  if (*variant == orientseq::Variant::embed && opt.q_prime < 2 * opt.q - 1)
    std::cerr << "warning: q' < 2q-1, the embedding carries no specialness claim\n";

  orientseq::ConstructionParams params;
  params.variant = *variant;
  params.q = opt.q;
  params.q_prime = opt.q_prime;
  params.n = opt.n;

  RingSequence out = [&]() -> RingSequence {
    if (*variant == orientseq::Variant::u_prime && opt.force_first_two) {
      RingSequence s = starter ? *starter
                               : orientseq::os2_maximal(opt.q, 1, 2, 3, /*lead_zero=*/true);
      return orientseq::goodify(orientseq::make_U(s, opt.n, opt.q_prime), opt.n, opt.q, true);
    }
    return orientseq::run_construction(params, starter);
  }();

  emit_sequence(out, opt.n, opt.out, opt.json);
  return kExitOk;
}

struct GenOs2Options {
  int q = 0;
  std::vector<int> xyz;
  bool lead_zero = false;
  std::string out;
  bool json = false;
};

int run_gen_os2(const GenOs2Options& opt) {
  if (opt.xyz.size() != 3) throw CLI::ValidationError("--xyz", "expected three symbols x,y,z");
  RingSequence s = orientseq::os2_maximal(opt.q, opt.xyz[0], opt.xyz[1], opt.xyz[2], opt.lead_zero);
  emit_sequence(s, 2, opt.out, opt.json);
  return kExitOk;
}

struct LiftOptions {
  std::string input;
  int steps = 1;
  int start = 0;
  int beta = 1;
  std::string out;
  bool json = false;
};

int run_lift(const LiftOptions& opt) {
  orientseq::SequenceFile in = orientseq::read_sequence_file(opt.input);
  RingSequence cur = in.seq;
  for (int step = 0; step < opt.steps; ++step) {
    if (std::gcd(orientseq::weight_mod(cur), cur.q()) != 1)
      std::cerr << "warning: weight not coprime to q, the lift closes into a shorter cycle\n";
    cur = orientseq::d_inverse(cur, opt.start, opt.beta);
  }
  emit_sequence(cur, in.n + opt.steps, opt.out, opt.json);
  return kExitOk;
}

struct SosOptions {
  int q = 0;
  int n = 0;
  std::string out;
  bool json = false;
};

int run_sos(const SosOptions& opt) {
  RingSequence s = (opt.n == 3 && opt.q < 12) ? orientseq::sos3(opt.q)
                                              : orientseq::sos_general(opt.q, opt.n);
  emit_sequence(s, opt.n, opt.out, opt.json);
  return kExitOk;
}

struct ExamplesOptions {
  bool list = false;
  std::string id;
  bool check = false;
  std::string out;
  bool json = false;
};

int run_examples(const ExamplesOptions& opt) {
  if (opt.list) {
    for (const auto& r : orientseq::example_registry())
      std::cout << r.id << "  q=" << r.q << " q'=" << r.q_prime << " n=" << r.n
                << " period=" << r.expected_period << "  " << r.title << "\n";
    return kExitOk;
  }
  if (opt.id.empty()) throw CLI::ValidationError("examples", "pass --list or --id ID");
  const orientseq::ExampleRecord* record = orientseq::find_example(opt.id);
  if (!record) throw orientseq::error("unknown example id: " + opt.id);

  if (!opt.check) {
    emit_sequence(record->expected, record->n, opt.out, opt.json);
    return kExitOk;
  }

  RingSequence rebuilt = orientseq::reproduce(*record);
  const bool match = rebuilt == record->expected &&
                     rebuilt.period() == record->expected_period &&
                     orientseq::weight_mod(rebuilt) == record->expected_weight_mod;
  nlohmann::ordered_json doc;
  doc["id"] = record->id;
  doc["match"] = match;
  doc["period"] = rebuilt.period();
  doc["weight_mod"] = orientseq::weight_mod(rebuilt);
  std::cout << doc.dump() << "\n";
  return match ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct and verify special orientable sequences over Z_q"};
  app.require_subcommand(1);

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "check a sequence file and emit a JSON report");
  verify->add_option("file", verify_opt.file, "sequence file")->required();
  verify->add_option("--n", verify_opt.n, "window length (default: header value)");
  verify->add_option("--require", verify_opt.require,
                     "property gating the exit code: window|orientable|negative-orientable|"
                     "special|good|good-special (default special)");
  verify->add_flag("--pretty", verify_opt.pretty, "human-readable table instead of JSON");

  int bound_q = 0, bound_n = 0;
  bool bound_pretty = false;
  auto* bound = app.add_subcommand("bound", "period bound: closed form plus enumeration oracle");
  bound->add_option("--q", bound_q, "alphabet size")->required();
  bound->add_option("--n", bound_n, "window length")->required();
  bound->add_flag("--pretty", bound_pretty, "human-readable output");

  GenOs2Options gen_opt;
  auto* gen = app.add_subcommand("gen-os2", "maximal-period OS_q(2) via an Eulerian circuit");
  gen->add_option("--q", gen_opt.q, "alphabet size")->required();
  gen->add_option("--xyz", gen_opt.xyz, "anchor symbols x,y,z")->required()->delimiter(',');
  gen->add_flag("--lead-zero", gen_opt.lead_zero, "ring form [0,x,y,z,x,...]");
  gen->add_option("--out", gen_opt.out, "output file (default stdout)");
  gen->add_flag("--json", gen_opt.json, "JSON sequence format");

  ConstructOptions con_opt;
  auto* con = app.add_subcommand("construct", "run one construction pipeline");
  con->add_option("--variant", con_opt.variant,
                  "embed|s2|t|t2|u|ustar|uprime|ustarstar")->required();
  con->add_option("--q", con_opt.q, "starter modulus")->required();
  con->add_option("--qprime", con_opt.q_prime, "target modulus")->required();
  con->add_option("--n", con_opt.n, "window length (default 2)");
  con->add_option("--starter", con_opt.starter_file, "starter sequence file");
  con->add_option("--out", con_opt.out, "output file (default stdout)");
  con->add_flag("--json", con_opt.json, "JSON sequence format");
  con->add_flag("--force-first-two", con_opt.force_first_two,
                "uprime only: pin the first two zeros to q+1");

  LiftOptions lift_opt;
  auto* lift = app.add_subcommand("lift", "apply the inverse Lempel morphism");
  lift->add_option("--input", lift_opt.input, "input sequence file")->required();
  lift->add_option("--steps", lift_opt.steps, "number of lifts (default 1)");
  lift->add_option("--start", lift_opt.start, "initial term of each lift (default 0)");
  lift->add_option("--beta", lift_opt.beta, "morphism coefficient (default 1)");
  lift->add_option("--out", lift_opt.out, "output file (default stdout)");
  lift->add_flag("--json", lift_opt.json, "JSON sequence format");

  SosOptions sos_opt;
  auto* sos = app.add_subcommand("sos", "full pipeline: good special sequence of order n");
  sos->add_option("--q", sos_opt.q, "alphabet size (>= 12; n=3 also allows 11)")->required();
  sos->add_option("--n", sos_opt.n, "window length")->required();
  sos->add_option("--out", sos_opt.out, "output file (default stdout)");
  sos->add_flag("--json", sos_opt.json, "JSON sequence format");

  ExamplesOptions ex_opt;
  auto* ex = app.add_subcommand("examples", "registry of the worked examples");
  ex->add_flag("--list", ex_opt.list, "list registry entries");
  ex->add_option("--id", ex_opt.id, "example id");
  ex->add_flag("--check", ex_opt.check, "rebuild from the registered starter and compare");
  ex->add_option("--out", ex_opt.out, "write the expected sequence to a file");
  ex->add_flag("--json", ex_opt.json, "JSON sequence format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return run_verify(verify_opt);
    if (*bound) return run_bound(bound_q, bound_n, bound_pretty);
    if (*gen) return run_gen_os2(gen_opt);
    if (*con) return run_construct(con_opt);
    if (*lift) return run_lift(lift_opt);
    if (*sos) return run_sos(sos_opt);
    if (*ex) return run_examples(ex_opt);
  } catch (const orientseq::certification_error& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kExitPropertyFailure;
  } catch (const orientseq::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const orientseq::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
