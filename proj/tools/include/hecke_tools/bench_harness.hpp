#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke/hecke_simple.hpp"

namespace hecke::tools {

enum class Repr { simple, nested };

const char* to_string(Repr r);
Repr parse_repr(const std::string& name);

struct BenchConfig {
  int m_max = 5;
  int trials = 10;
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Fill wall_ns; off by default so the CSV stays byte-stable.
  bool timing = false;
  /// Permit m = 6.
  bool big = false;
};

struct BenchRecord {
  int m = 0;
  Repr repr = Repr::simple;
  int trials = 0;
  std::uint64_t M = 0;
  std::uint64_t max_ops = 0;
  double bound = 0;
  double ratio = 0;
  std::uint64_t wall_ns = 0;
};

class BenchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (m^2 + m + 4)/2 M^2.
double simple_bound(int m);
/// (1 + e) M^2.
double nested_bound(int m);

/// The dense pair multiplied in trial `trial` at rank m. Coefficients are
/// degree-2 polynomials with entries in [-9, 9]; the same pair feeds both
/// representations.
std::pair<SimpleElement, SimpleElement> random_dense_pair(int m, std::uint64_t seed, int trial);

/// Counted operations for one product; the result is returned through out
/// as a simple list so the two representations can be compared.
std::uint64_t counted_product(Repr repr, const SimpleElement& h, const SimpleElement& g, SimpleElement* out = nullptr);

/// One record per (m, repr) for m = 2..m_max, simple before nested. Throws
/// BenchError when the counts differ between trials at the same m.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchRecord>& records);

/// Rough resident size of one dense product at rank m, for the refusal message.
std::uint64_t estimated_bytes(int m);

}  // namespace hecke::tools
