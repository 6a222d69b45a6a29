#include "hecke_tools/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hecke/hecke_nested.hpp"
#include "hecke/hecke_simple.hpp"
#include "hecke/serialize.hpp"
#include "hecke/tower.hpp"
#include "hecke_tools/bench_harness.hpp"
#include "hecke_tools/verify.hpp"

namespace hecke::tools {

namespace {

class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
std::string list_text(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string read_element_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw CommandError("cannot open '" + arg + "' (expected inline JSON or a file path)");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TowerArgs {
  std::string action;
  std::vector<std::string> operands;
  bool images = false;
};

int cmd_tower(const TowerArgs& a, std::ostream& out) {
  auto need = [&](std::size_t n) {
    if (a.operands.size() != n)
      throw CommandError("tower " + a.action + " takes " + std::to_string(n) + " operand" + (n == 1 ? "" : "s") +
                         ", got " + std::to_string(a.operands.size()));
  };
  auto tower = [&](std::size_t i) { return parse_tower(a.operands[i]); };

  if (a.action == "mult") {
    need(2);
    out << format_tower(tower_product(tower(0), tower(1))) << '\n';
  } else if (a.action == "inv") {
    need(1);
    out << format_tower(tower_inverse(tower(0))) << '\n';
  } else if (a.action == "len") {
    need(1);
    out << tower_length(tower(0)) << '\n';
  } else if (a.action == "descents") {
    need(1);
    out << list_text(descent_set(tower(0))) << '\n';
  } else if (a.action == "word") {
    need(1);
    out << list_text(tower_to_reduced_word(tower(0)).letters) << '\n';
  } else if (a.action == "perm") {
    need(1);
    const Tower t = tower(0);
    const Permutation p = tower_to_permutation(t, t.size() + 1);
    out << (a.images ? format_images(p) : format_cycles(p)) << '\n';
  } else if (a.action == "fromperm") {
    need(1);
    out << format_tower(tower_from_permutation(parse_permutation(a.operands[0]))) << '\n';
  } else if (a.action == "diagram") {
    need(1);
    out << render_tower_diagram(tower(0));
  } else {
    throw CommandError("unknown tower action '" + a.action + "'");
  }
  return 0;
}

struct HeckeArgs {
  std::string left, right;
  std::string repr = "nested";
  bool count = false;
  std::string format = "json";
};

int cmd_hecke(const HeckeArgs& a, std::ostream& out) {
  const Repr repr = parse_repr(a.repr);
  const HeckeElement h = parse_hecke_json(read_element_text(a.left));
  const HeckeElement g = parse_hecke_json(read_element_text(a.right));
  const int mh = std::visit([](const auto& x) { return x.m(); }, h);
  const int mg = std::visit([](const auto& x) { return x.m(); }, g);
  if (mg > mh)
    throw CommandError("rank mismatch: right factor has rank " + std::to_string(mg) + ", left factor rank " +
                       std::to_string(mh));

  RingCtx ctx = a.count ? RingCtx::counting() : RingCtx();
  SimpleElement product(mh);
  std::string json;
  if (repr == Repr::simple) {
    product = simple_multiply(as_simple(h), as_simple(g), ctx);
    json = to_json(product);
  } else {
    const NestedElement p = nested_multiply(as_nested(h), as_nested(g), ctx);
    product = nested_to_simple(p);
    json = to_json(p);
  }
  if (a.format == "text")
    out << format_terms(product) << '\n';
  else
    out << json << '\n';
  if (a.count)
    out << "ops=" << ctx.total() << " adds=" << ctx.counter()->adds << " muls=" << ctx.counter()->muls << '\n';
  return 0;
}

int cmd_bench(BenchConfig config, const std::string& out_path, std::ostream& out) {
  if (const char* env = std::getenv("HECKE_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw CommandError(std::string("HECKE_SEED is not an integer: ") + env);
    config.seed = v;
  }
  const std::string csv = bench_csv(run_bench(config));
  if (out_path.empty()) {
    out << csv;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw CommandError("cannot write '" + out_path + "'");
    f << csv;
  }
  return 0;
}

int cmd_verify(const std::string& only, bool inject_mu_fault, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.only = only;
  options.log = &out;
  if (inject_mu_fault)
    options.mu = [](int m, int j, int k, int l) {
      MuResult r = mu(m, j, k, l);
      // Drop the l-decrement of the cancel branch.
      if (mu_branch(m, j, k, l) == MuBranch::cancel) r.l += 1;
      return r;
    };
  const auto results = run_acceptance(options);
  const auto failed = std::find_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  out << passed << "/" << results.size() << " criteria passed\n";
  if (failed == results.end()) return 0;
  err << "first failing criterion: " << failed->id << " " << failed->name << " (" << failed->group
      << "): " << failed->detail << '\n';
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Towers of permutations and Iwahori-Hecke algebras of type A"};
  app.name("hecke");
  app.require_subcommand(1);

  TowerArgs tower_args;
  auto* tower = app.add_subcommand("tower", "Tower arithmetic and conversions");
  tower->add_option("action", tower_args.action, "mult | inv | len | descents | word | perm | fromperm | diagram")
      ->required()
      ->check(CLI::IsMember({"mult", "inv", "len", "descents", "word", "perm", "fromperm", "diagram"}));
  // Operands stay raw: CLI11 would otherwise read "[1,2]" as its own list syntax.
  tower->allow_extras();
  tower->footer("Operands: towers like [1,2,0,3]; fromperm takes [2,3,1] or (1,2,3)");
  tower->add_flag("--images", tower_args.images, "perm: print one-line images instead of cycles");

  HeckeArgs hecke_args;
  auto* hecke = app.add_subcommand("hecke", "Multiply two Hecke algebra elements");
  hecke->add_option("left", hecke_args.left, "Left factor: JSON text or a file holding it")->required();
  hecke->add_option("right", hecke_args.right, "Right factor, rank at most that of the left")->required();
  hecke->add_option("--repr", hecke_args.repr, "Representation used for the product")
      ->check(CLI::IsMember({"simple", "nested"}))
      ->capture_default_str();
  hecke->add_flag("--count", hecke_args.count, "Append the ring operation tally");
  hecke->add_option("--format", hecke_args.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  BenchConfig bench_config;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Worst-case operation counts for both representations as CSV");
  bench->add_option("--m-max", bench_config.m_max, "Largest rank")->capture_default_str();
  bench->add_option("--trials", bench_config.trials, "Random dense pairs per rank")->capture_default_str();
  bench->add_option("--seed", bench_config.seed, "RNG seed (HECKE_SEED overrides)")->capture_default_str();
  bench->add_option("--jobs", bench_config.jobs, "Worker threads")->capture_default_str();
  bench->add_flag("--timing", bench_config.timing, "Fill wall_ns (output no longer reproducible)");
  bench->add_flag("--big", bench_config.big, "Allow m = 6");
  bench->add_option("--out", bench_out, "Write the CSV here instead of stdout");

  std::string only;
  bool inject_mu_fault = false;
  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--only", only, "Group (towers, hecke, cost, cli), criterion name or number");
  verify->add_flag("--inject-mu-fault", inject_mu_fault, "Corrupt the mu cancel branch to exercise the checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*tower) {
      tower_args.operands = tower->remaining();
      return cmd_tower(tower_args, out);
    }
    if (*hecke) return cmd_hecke(hecke_args, out);
    if (*bench) return cmd_bench(bench_config, bench_out, out);
    if (*verify) return cmd_verify(only, inject_mu_fault, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace hecke::tools
