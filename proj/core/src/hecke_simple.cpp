#include "hecke/hecke_simple.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace hecke {

namespace {

void check_rank(int m) {
  if (m < 0 || m > 9) throw std::out_of_range("rank m = " + std::to_string(m) + " outside [0, 9]");
}

GeneratorTables build_tables(int m) {
  const std::uint64_t M = factorial(m + 1);
  GeneratorTables t;
  t.m = m;
  t.index.assign(static_cast<std::size_t>(m), std::vector<std::uint32_t>(M));
  t.right_descent.assign(static_cast<std::size_t>(m), std::vector<bool>(M));
  for (std::uint64_t r = 0; r < M; ++r) {
    const Tower w = unrank(r, m);
    const int len = tower_length(w);
    for (int i = 1; i <= m; ++i) {
      const Tower ws = tower_star_coset(w, i, 1);
      t.index[static_cast<std::size_t>(i - 1)][r] = static_cast<std::uint32_t>(rank(ws));
      t.right_descent[static_cast<std::size_t>(i - 1)][r] = tower_length(ws) < len;
    }
  }
  return t;
}

}  // namespace

SimpleElement::SimpleElement(int m) : m_(m) {
  check_rank(m);
  coeffs_.resize(factorial(m + 1));
}

SimpleElement::SimpleElement(int m, std::vector<PolyZ> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
  check_rank(m);
  if (coeffs_.size() != factorial(m + 1))
    throw std::invalid_argument("simple element of rank " + std::to_string(m) + " needs " +
                                std::to_string(factorial(m + 1)) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
}

SimpleElement SimpleElement::unit(int m) {
  SimpleElement e(m);
  e.coeffs_[0] = one_elem();
  return e;
}

SimpleElement SimpleElement::basis(int m, const Tower& w) {
  if (w.size() > m) throw std::invalid_argument("tower does not belong to W(A_" + std::to_string(m) + ")");
  SimpleElement e(m);
  e.coeffs_[rank(w)] = one_elem();
  return e;
}

const GeneratorTables& generator_tables(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GeneratorTables>> cache;
  check_rank(m);
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<GeneratorTables>(build_tables(m));
  return *slot;
}

SimpleElement simple_add(const SimpleElement& a, const SimpleElement& b, RingCtx& ctx) {
  if (a.m() != b.m())
    throw std::invalid_argument("rank mismatch: " + std::to_string(a.m()) + " vs " + std::to_string(b.m()));
  SimpleElement out = a;
  auto& c = out.mutable_coeffs();
  for (std::size_t r = 0; r < c.size(); ++r) ctx.add_into(c[r], b.coeff(r));
  return out;
}

SimpleElement simple_add(const SimpleElement& a, const SimpleElement& b) {
  RingCtx ctx;
  return simple_add(a, b, ctx);
}

SimpleElement star_generator(const SimpleElement& h, int i, RingCtx& ctx) {
  if (i < 1 || i > h.m())
    throw std::out_of_range("generator s_" + std::to_string(i) + " not in W(A_" + std::to_string(h.m()) + ")");
  const GeneratorTables& tables = generator_tables(h.m());
  const auto& index = tables.index[static_cast<std::size_t>(i - 1)];
  const auto& descent = tables.right_descent[static_cast<std::size_t>(i - 1)];
  std::vector<PolyZ> out(h.dimension());
  for (std::size_t r = 0; r < out.size(); ++r) {
    const PolyZ& z_ws = h.coeff(index[r]);
    if (!descent[r]) {
      out[r] = z_ws;
      ctx.mul_by_q(out[r]);
    } else {
      PolyZ t = h.coeff(r);
      ctx.mul_by_q_minus_one(t);
      ctx.add_into(t, z_ws);
      out[r] = std::move(t);
    }
  }
  return SimpleElement(h.m(), std::move(out));
}

SimpleElement star_basis(const SimpleElement& h, const Tower& v, RingCtx& ctx) {
  if (v.size() > h.m()) throw std::invalid_argument("tower does not belong to W(A_" + std::to_string(h.m()) + ")");
  SimpleElement out = h;
  for (int letter : tower_to_reduced_word(v).letters) out = star_generator(out, letter, ctx);
  return out;
}

SimpleElement simple_multiply(const SimpleElement& h, const SimpleElement& g, RingCtx& ctx,
                              SimpleMultiplyOptions opts) {
  if (g.m() > h.m())
    throw std::invalid_argument("rank mismatch: right factor rank " + std::to_string(g.m()) +
                                " exceeds left factor rank " + std::to_string(h.m()));
  const bool skip = opts.skip_zero_coefficients && !ctx.is_counting();
  std::optional<SimpleElement> acc;
  for (std::uint64_t v = 0; v < g.dimension(); ++v) {
    const PolyZ& b = g.coeff(v);
    if (skip && b.is_zero()) continue;
    SimpleElement term = star_basis(h, unrank(v, g.m()), ctx);
    for (auto& z : term.mutable_coeffs()) ctx.mul_into(z, b);
    if (!acc) {
      acc = std::move(term);
    } else {
      auto& c = acc->mutable_coeffs();
      for (std::size_t r = 0; r < c.size(); ++r) ctx.add_into(c[r], term.coeff(r));
    }
  }
  return acc ? std::move(*acc) : SimpleElement(h.m());
}

SimpleElement simple_multiply(const SimpleElement& h, const SimpleElement& g) {
  RingCtx ctx;
  return simple_multiply(h, g, ctx);
}

}  // namespace hecke
