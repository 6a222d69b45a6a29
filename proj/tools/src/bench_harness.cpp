#include "hecke_tools/bench_harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <thread>

#include "hecke/hecke_nested.hpp"

namespace hecke::tools {

namespace {

struct Cell {
  int m;
  Repr repr;
  int trial;
  std::uint64_t ops = 0;
  std::uint64_t wall_ns = 0;
};

void run_cell(Cell& cell, std::uint64_t seed, bool timing) {
  auto [h, g] = random_dense_pair(cell.m, seed, cell.trial);
  const auto start = std::chrono::steady_clock::now();
  cell.ops = counted_product(cell.repr, h, g);
  if (timing)
    cell.wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count());
}

}  // namespace

const char* to_string(Repr r) { return r == Repr::simple ? "simple" : "nested"; }

Repr parse_repr(const std::string& name) {
  if (name == "simple") return Repr::simple;
  if (name == "nested") return Repr::nested;
  throw std::invalid_argument("unknown representation '" + name + "' (expected simple or nested)");
}

double simple_bound(int m) {
  const double M = static_cast<double>(factorial(m + 1));
  return (m * m + m + 4) / 2.0 * M * M;
}

double nested_bound(int m) {
  const double M = static_cast<double>(factorial(m + 1));
  return (1 + std::numbers::e) * M * M;
}

std::pair<SimpleElement, SimpleElement> random_dense_pair(int m, std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  auto fill = [&](SimpleElement& x) {
    for (PolyZ& z : x.mutable_coeffs()) {
      std::vector<Integer> c(3);
      for (Integer& a : c) a = static_cast<int>(rng() % 19) - 9;
      z = PolyZ(std::move(c));
    }
  };
  SimpleElement h(m), g(m);
  fill(h);
  fill(g);
  return {std::move(h), std::move(g)};
}

std::uint64_t counted_product(Repr repr, const SimpleElement& h, const SimpleElement& g, SimpleElement* out) {
  RingCtx ctx = RingCtx::counting();
  if (repr == Repr::simple) {
    SimpleElement p = simple_multiply(h, g, ctx);
    if (out) *out = std::move(p);
  } else {
    NestedElement p = nested_multiply(simple_to_nested(h), simple_to_nested(g), ctx);
    if (out) *out = nested_to_simple(p);
  }
  return ctx.total();
}

std::uint64_t estimated_bytes(int m) {
  // Five live leaf buffers of M polynomials, each about three limbs.
  const double M = std::tgamma(m + 2);
  return static_cast<std::uint64_t>(5 * M * (sizeof(PolyZ) + 3 * sizeof(Integer)));
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.trials < 0) throw BenchError("--trials must be non-negative");
  if (config.m_max > 6 || (config.m_max == 6 && !config.big)) {
    const int m = config.m_max;
    const double M = std::tgamma(m + 2);
    char msg[256];
    std::snprintf(msg, sizeof msg,
                  "m = %d is too large: M = %.0f, a simple product counts about %.2g operations and "
                  "keeps about %.1f MB of coefficients live%s",
                  m, M, simple_bound(m), static_cast<double>(estimated_bytes(m)) / 1e6,
                  m == 6 ? "; pass --big to run it anyway" : "; the harness stops at m = 6");
    throw BenchError(msg);
  }

  std::vector<Cell> cells;
  for (int m = 2; m <= config.m_max; ++m)
    for (Repr r : {Repr::simple, Repr::nested})
      for (int t = 0; t < config.trials; ++t) cells.push_back({m, r, t});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) run_cell(cells[i], config.seed, config.timing);
  };
  const int jobs = std::max(1, config.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<BenchRecord> out;
  if (config.trials == 0) return out;
  for (std::size_t i = 0; i < cells.size(); i += static_cast<std::size_t>(config.trials)) {
    const Cell& first = cells[i];
    BenchRecord rec;
    rec.m = first.m;
    rec.repr = first.repr;
    rec.trials = config.trials;
    rec.M = factorial(first.m + 1);
    for (int t = 0; t < config.trials; ++t) {
      const Cell& c = cells[i + static_cast<std::size_t>(t)];
      if (c.ops != first.ops)
        throw BenchError(std::string("operation count varies across trials at m = ") + std::to_string(c.m) + " (" +
                         to_string(c.repr) + "): " + std::to_string(first.ops) + " vs " + std::to_string(c.ops));
      rec.max_ops = std::max(rec.max_ops, c.ops);
      rec.wall_ns += c.wall_ns;
    }
    rec.bound = first.repr == Repr::simple ? simple_bound(first.m) : nested_bound(first.m);
    rec.ratio = static_cast<double>(rec.max_ops) / rec.bound;
    out.push_back(rec);
  }
  return out;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::string out = "m,repr,trials,M,max_ops,bound,ratio,wall_ns\n";
  char line[256];
  for (const auto& r : records) {
    std::snprintf(line, sizeof line, "%d,%s,%d,%llu,%llu,%.3f,%.6f,%llu\n", r.m, to_string(r.repr), r.trials,
                  static_cast<unsigned long long>(r.M), static_cast<unsigned long long>(r.max_ops), r.bound, r.ratio,
                  static_cast<unsigned long long>(r.wall_ns));
    out += line;
  }
  return out;
}

}  // namespace hecke::tools
