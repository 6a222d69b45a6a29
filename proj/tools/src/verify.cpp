#include "hecke_tools/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hecke/hecke_nested.hpp"
#include "hecke/hecke_simple.hpp"
#include "hecke/serialize.hpp"
#include "hecke_tools/bench_harness.hpp"

namespace hecke::tools {

namespace {

// Thrown by a check to stop at the first counterexample.
struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void require_time(std::chrono::steady_clock::time_point t0, double limit, const char* what) {
  const double s = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s took %.1f s, limit %.0f s", what, s, limit);
  require(s < limit, buf);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(img[static_cast<std::size_t>(i)], img[rng() % static_cast<unsigned>(i + 1)]);
  return Permutation(img);
}

Permutation transposition(int i, int n) { return Permutation::from_cycles(n, {{i, i + 1}}); }

// a(m, k) multiplied out from its word s_m s_{m-1} ... s_{m-k+1}.
Permutation coset_word(int m, int k, int n) {
  Permutation p = Permutation::identity(n);
  for (int i = 0; i < k; ++i) p = p * transposition(m - i, n);
  return p;
}

Tower coset_tower(int j, int l) {
  if (l == 0) return Tower();
  std::vector<int> d(static_cast<std::size_t>(j), 0);
  d.back() = l;
  return Tower(d);
}

std::string tower_text(const Tower& t) { return format_tower(t); }

// ---- towers ---------------------------------------------------------------

std::string check_roundtrip() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t count = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : all_permutations(n)) {
      const Tower t = tower_from_permutation(p);
      const Permutation back = tower_to_permutation(t, n);
      require(back == p, "permutation " + format_cycles(p) + " came back as " + format_cycles(back));
      require(tower_from_permutation(back) == t, "tower " + tower_text(t) + " not stable");
      ++count;
    }
  require_time(t0, 10, "roundtrip");
  return std::to_string(count) + " permutations, n <= 7";
}

std::string check_worked_example() {
  const Permutation w = Permutation::from_cycles(10, {{1, 8, 10, 3}, {2, 4, 6, 7, 5}});
  const Tower t = tower_from_permutation(w);
  require(t == Tower({1, 2, 1, 3, 1, 3, 0, 1, 7}), "tower is " + tower_text(t));
  const Tower inv = tower_inverse(t);
  require(inv == Tower({0, 0, 3, 1, 3, 2, 7, 1, 2}), "inverse tower is " + tower_text(inv));
  require(tower_to_permutation(inv, 10) == w.inverse(), "inverse tower does not give w^-1");
  return "tower " + tower_text(t) + ", inverse " + tower_text(inv);
}

std::string check_product_homomorphism() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto sym4 = all_permutations(4);
  for (const auto& p : sym4)
    for (const auto& q : sym4) {
      const Tower t = tower_product(tower_from_permutation(p), tower_from_permutation(q));
      require(tower_to_permutation(t, 4) == p * q, "Sym_4 pair " + format_cycles(p) + " * " + format_cycles(q));
    }
  std::mt19937_64 rng(8);
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    const Permutation p = random_permutation(8, rng), q = random_permutation(8, rng);
    const Tower t = tower_product(tower_from_permutation(p), tower_from_permutation(q));
    require(tower_to_permutation(t, 8) == p * q, "Sym_8 pair " + format_cycles(p) + " * " + format_cycles(q));
  }
  require_time(t0, 30, "product check");
  return "576 pairs in Sym_4, " + std::to_string(trials) + " random pairs in Sym_8";
}

std::string check_descent_law() {
  const int n = 5;
  for (const auto& w : all_permutations(n)) {
    const auto d = descent_set(tower_from_permutation(w));
    const std::set<int> ds(d.begin(), d.end());
    for (int i = 1; i < n; ++i) {
      const bool shorter = (transposition(i, n) * w).inversion_count() < w.inversion_count();
      require(shorter == (ds.count(i) == 1), "w = " + format_cycles(w) + ", s_" + std::to_string(i));
    }
  }
  return "120 elements of Sym_5";
}

std::string check_mu(const VerifyOptions& options) {
  auto mu_fn = options.mu;
  if (!mu_fn) mu_fn = [](int m, int j, int k, int l) { return mu(m, j, k, l); };
  std::size_t count = 0;
  for (int m = 1; m <= 8; ++m) {
    const int n = m + 1;
    for (int j = 1; j <= m; ++j)
      for (int k = 0; k <= m; ++k)
        for (int l = 0; l <= j; ++l) {
          const MuResult r = mu_fn(m, j, k, l);
          char where[96];
          std::snprintf(where, sizeof where, "mu_%d(%d,%d,%d) = (%d,%d,%d)", m, j, k, l, r.j, r.k, r.l);
          require(r.j >= 0 && r.j <= m - 1 && r.l >= 0 && r.l <= std::max(r.j, 0) && r.k >= 0 && r.k <= m,
                  std::string(where) + " out of range");
          const Permutation lhs = coset_word(m, k, n) * coset_word(j, l, n);
          require(lhs == coset_word(r.j, r.l, n) * coset_word(m, r.k, n), std::string(where) + " wrong product");
          const int drop = mu_branch(m, j, k, l) == MuBranch::cancel ? 2 : 0;
          require(lhs.inversion_count() == k + l - drop, std::string(where) + " wrong length");
          ++count;
        }
  }
  return std::to_string(count) + " tuples, m <= 8";
}

// ---- hecke ----------------------------------------------------------------

SimpleElement scaled(SimpleElement h, const PolyZ& z) {
  for (PolyZ& c : h.mutable_coeffs()) c = c * z;
  return h;
}

SimpleElement product(Repr repr, const SimpleElement& a, const SimpleElement& b) {
  SimpleElement out(a.m());
  counted_product(repr, a, b, &out);
  return out;
}

std::string check_relations() {
  for (Repr repr : {Repr::simple, Repr::nested})
    for (int m = 1; m <= 4; ++m) {
      auto s = [m](int i) { return SimpleElement::basis(m, coset_tower(i, 1)); };
      auto mul = [repr](const SimpleElement& a, const SimpleElement& b) { return product(repr, a, b); };
      const std::string tag = std::string(to_string(repr)) + ", m = " + std::to_string(m);
      for (int i = 1; i <= m; ++i) {
        const SimpleElement rhs = simple_add(scaled(s(i), q_minus_one()), scaled(SimpleElement::unit(m), q_elem()));
        require(mul(s(i), s(i)) == rhs, "quadratic relation for s_" + std::to_string(i) + " (" + tag + ")");
      }
      for (int i = 1; i < m; ++i)
        require(mul(mul(s(i), s(i + 1)), s(i)) == mul(mul(s(i + 1), s(i)), s(i + 1)),
                "braid relation for s_" + std::to_string(i) + ", s_" + std::to_string(i + 1) + " (" + tag + ")");
      for (int i = 1; i <= m; ++i)
        for (int k = i + 2; k <= m; ++k)
          require(mul(s(i), s(k)) == mul(s(k), s(i)),
                  "s_" + std::to_string(i) + " and s_" + std::to_string(k) + " do not commute (" + tag + ")");
    }
  return "quadratic, braid and commuting relations, m <= 4, both representations";
}

std::string check_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t u = 0; u < 24; ++u)
    for (std::uint64_t v = 0; v < 24; ++v) {
      const SimpleElement a = SimpleElement::basis(3, unrank(u, 3)), b = SimpleElement::basis(3, unrank(v, 3));
      require(product(Repr::simple, a, b) == product(Repr::nested, a, b),
              "basis pair " + tower_text(unrank(u, 3)) + ", " + tower_text(unrank(v, 3)));
    }
  const int dense = 200;
  for (int t = 0; t < dense; ++t) {
    auto [h, g] = random_dense_pair(4, 7, t);
    require(product(Repr::simple, h, g) == product(Repr::nested, h, g), "dense pair " + std::to_string(t) + " in H(A_4)");
  }
  require_time(t0, 60, "equivalence check");
  return "576 basis pairs in H(A_3), " + std::to_string(dense) + " dense pairs in H(A_4)";
}

std::string check_specialization() {
  for (Repr repr : {Repr::simple, Repr::nested})
    for (std::uint64_t u = 0; u < 24; ++u)
      for (std::uint64_t v = 0; v < 24; ++v) {
        const Tower tu = unrank(u, 3), tv = unrank(v, 3);
        const SimpleElement p = product(repr, SimpleElement::basis(3, tu), SimpleElement::basis(3, tv));
        const std::uint64_t uv = rank(tower_product(tu, tv));
        for (std::uint64_t r = 0; r < 24; ++r)
          require(eval_at(p.coeff(r), 1) == (r == uv ? 1 : 0),
                  std::string(to_string(repr)) + " T" + tower_text(tu) + " T" + tower_text(tv) + " at q = 1");
      }
  return "576 basis pairs in H(A_3), both representations";
}

// ---- cost -----------------------------------------------------------------

std::string check_example_cost() {
  auto [h, g2] = random_dense_pair(2, 33, 0);
  SimpleElement g(1);
  for (std::uint64_t r = 0; r < 2; ++r) g.coeff(r) = g2.coeff(r);
  SimpleElement ps(2), pn(2);
  const std::uint64_t s = counted_product(Repr::simple, h, g, &ps);
  const std::uint64_t n = counted_product(Repr::nested, h, g, &pn);
  require(ps == pn, "representations disagree on the product");
  require(n == 27, "nested count " + std::to_string(n));
  require(s == 27, "simple count " + std::to_string(s));
  return "nested 27, simple 27";
}

std::string check_cost_bounds() {
  const auto t0 = std::chrono::steady_clock::now();
  BenchConfig config;
  config.m_max = 5;
  config.trials = 10;
  config.seed = 5;
  double worst = 0;
  for (const BenchRecord& r : run_bench(config)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "m = %d %s: %llu ops, bound %.1f", r.m, to_string(r.repr),
                  static_cast<unsigned long long>(r.max_ops), r.bound);
    require(r.ratio <= 1.0, buf);
    worst = std::max(worst, r.ratio);
  }
  require_time(t0, 120, "bound check through m = 5");

  std::mt19937_64 rng(6);
  auto dense_nested = [&rng](int m) {
    NestedElement h(m);
    for (PolyZ& z : h.mutable_leaves())
      z = PolyZ{static_cast<int>(rng() % 19) - 9, static_cast<int>(rng() % 19) - 9, static_cast<int>(rng() % 19) - 9};
    return h;
  };
  double worst_c = 0, worst_C = 0;
  for (int m = 1; m <= 5; ++m) {
    const double M = static_cast<double>(factorial(m + 1));
    const NestedElement h = dense_nested(m);
    for (int j = 1; j <= m; ++j)
      for (int l = 0; l <= j; ++l) {
        RingCtx ctx = RingCtx::counting();
        mult_by_coset(h, j, l, ctx);
        const double bound = 1.5 * l * M;
        require(static_cast<double>(ctx.total()) <= bound, "c(" + std::to_string(m) + "," + std::to_string(l) +
                                                              ") with j = " + std::to_string(j) + ": " +
                                                              std::to_string(ctx.total()) + " ops");
        if (l > 0) worst_c = std::max(worst_c, static_cast<double>(ctx.total()) / bound);
      }
    for (int l = 0; l <= m; ++l) {
      RingCtx ctx = RingCtx::counting();
      nested_multiply(h, dense_nested(l), ctx);
      const double bound = (1 + std::numbers::e) * static_cast<double>(factorial(l + 1)) * M;
      require(static_cast<double>(ctx.total()) <= bound,
              "C(" + std::to_string(m) + "," + std::to_string(l) + "): " + std::to_string(ctx.total()) + " ops");
      worst_C = std::max(worst_C, static_cast<double>(ctx.total()) / bound);
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "worst ratios: products %.3f, c(m,l) %.3f, C(m,l) %.3f", worst, worst_c, worst_C);
  return buf;
}

std::string check_crossover() {
  std::ostringstream detail;
  for (int m = 4; m <= 5; ++m) {
    auto [h, g] = random_dense_pair(m, 11, 0);
    const std::uint64_t s = counted_product(Repr::simple, h, g);
    const std::uint64_t n = counted_product(Repr::nested, h, g);
    require(n < s, "m = " + std::to_string(m) + ": nested " + std::to_string(n) + " >= simple " + std::to_string(s));
    detail << (m == 4 ? "" : "; ") << "m = " << m << ": nested " << n << " < simple " << s;
  }
  return detail.str();
}

// ---- cli ------------------------------------------------------------------

std::string check_bench_determinism() {
  BenchConfig config;
  config.m_max = 4;
  config.seed = 42;
  const std::string a = bench_csv(run_bench(config));
  const std::string b = bench_csv(run_bench(config));
  require(a == b, "two runs with seed 42 differ");
  return std::to_string(std::count(a.begin(), a.end(), '\n')) + " identical CSV lines";
}

bool selected(const CriterionInfo& c, const std::string& only) {
  return only.empty() || only == c.group || only == c.name || only == std::to_string(c.id);
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> list = {
      {1, "tower-roundtrip", "towers", "permutation -> tower -> permutation on Sym_n, n <= 7"},
      {2, "worked-example", "towers", "tower and inverse tower of (1,8,10,3)(2,4,6,7,5)"},
      {3, "product-homomorphism", "towers", "tower_product against composition in Sym_4 and Sym_8"},
      {4, "descent-law", "towers", "descent_set against the length test on Sym_5"},
      {5, "mu-soundness", "towers", "mu rewriting of a(m,k) a(j,l) for m <= 8"},
      {6, "hecke-relations", "hecke", "quadratic and braid relations, both representations"},
      {7, "repr-equivalence", "hecke", "simple and nested products agree"},
      {8, "q1-specialization", "hecke", "q = 1 recovers the group product"},
      {9, "example-cost", "cost", "H(A_2) x H(A_1) costs 27 operations"},
      {10, "cost-bounds", "cost", "worst-case operation counts within the bounds"},
      {11, "crossover", "cost", "nested cheaper than simple for m = 4, 5"},
      {12, "bench-determinism", "cli", "seeded bench CSV is reproducible"},
  };
  return list;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  bool any = false;
  for (const auto& c : criteria()) {
    if (!selected(c, options.only)) continue;
    any = true;
    CriterionResult r{c.id, c.name, c.group, false, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      switch (c.id) {
        case 1: r.detail = check_roundtrip(); break;
        case 2: r.detail = check_worked_example(); break;
        case 3: r.detail = check_product_homomorphism(); break;
        case 4: r.detail = check_descent_law(); break;
        case 5: r.detail = check_mu(options); break;
        case 6: r.detail = check_relations(); break;
        case 7: r.detail = check_equivalence(); break;
        case 8: r.detail = check_specialization(); break;
        case 9: r.detail = check_example_cost(); break;
        case 10: r.detail = check_cost_bounds(); break;
        case 11: r.detail = check_crossover(); break;
        case 12: r.detail = check_bench_determinism(); break;
      }
      r.passed = true;
    } catch (const Failure& f) {
      r.detail = f.what;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = seconds_since(t0);
    if (options.log) *options.log << format_result(r) << '\n' << std::flush;
    out.push_back(std::move(r));
  }
  if (!any) throw std::invalid_argument("no criterion or group named '" + options.only + "'");
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s %2d %-20s (%.2f s) ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds);
  return head + r.detail;
}

}  // namespace hecke::tools
