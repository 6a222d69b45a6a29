#include "hecke/hecke_nested.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hecke {

namespace {

using Block = std::span<PolyZ>;
using ConstBlock = std::span<const PolyZ>;

void check_rank(int m) {
  if (m < 0 || m > 9) throw std::out_of_range("rank m = " + std::to_string(m) + " outside [0, 9]");
}

void check_coset(int m, int j, int l) {
  if (l < 0 || l > j || j > m || (j < 1 && l != 0))
    throw std::invalid_argument("T_{a(" + std::to_string(j) + "," + std::to_string(l) +
                                ")} needs 1 <= j <= " + std::to_string(m) + " and 0 <= l <= j");
}

void copy_block(ConstBlock from, Block to) { std::copy(from.begin(), from.end(), to.begin()); }

// out = h T_{a(j,l)} for h of rank m. out must not alias h.
void coset_mul(ConstBlock h, int m, int j, int l, Block out, RingCtx& ctx) {
  if (l == 0) {
    copy_block(h, out);
    return;
  }
  const std::size_t B = factorial(m);
  auto in_child = [&](int k) { return h.subspan(static_cast<std::size_t>(k) * B, B); };
  auto out_child = [&](int k) { return out.subspan(static_cast<std::size_t>(k) * B, B); };
  const int lo = m - j;

  // (a) and (d): children untouched by the cycle's support.
  for (int k = 0; k < lo; ++k) coset_mul(in_child(k), m - 1, j, l, out_child(k), ctx);
  for (int k = lo + l + 1; k <= m; ++k) coset_mul(in_child(k), m - 1, j - 1, l, out_child(k), ctx);

  // Partial products P_i = h_{lo+i} T_{a(j-1,i-1)}, i = 1..l.
  std::vector<PolyZ> partial(static_cast<std::size_t>(l) * B);
  auto part = [&](int i) { return Block(partial).subspan(static_cast<std::size_t>(i - 1) * B, B); };
  for (int i = 1; i <= l; ++i) coset_mul(in_child(lo + i), m - 1, j - 1, i - 1, part(i), ctx);

  // (b): h'_{lo+i-1} = q (P_i T_{a(j-i,l-i)}), since a(j-1,i-1) a(j-i,l-i) = a(j-1,l-1).
  for (int i = 1; i <= l; ++i) {
    Block dst = out_child(lo + i - 1);
    coset_mul(part(i), m - 1, j - i, l - i, dst, ctx);
    for (PolyZ& z : dst) ctx.mul_by_q(z);
  }

  // (c): h'_{lo+l} = h_lo + (q-1) (P_1 + ... + P_l).
  Block sum = out_child(lo + l);
  copy_block(part(1), sum);
  for (int i = 2; i <= l; ++i) {
    ConstBlock p = part(i);
    for (std::size_t x = 0; x < B; ++x) ctx.add_into(sum[x], p[x]);
  }
  ConstBlock base = in_child(lo);
  for (std::size_t x = 0; x < B; ++x) {
    ctx.mul_by_q_minus_one(sum[x]);
    ctx.add_into(sum[x], base[x]);
  }
}

// out = h g with rank(h) = m >= rank(g) = j >= 1, where hs = h T_{s_1}.
// Scalars commute with T_{s_1}, so every rank-1 block (g_0, g_1) of g is
// finished as g_0 h + g_1 hs and h T_{s_1} is formed once per product.
void multiply_blocks(ConstBlock h, ConstBlock hs, int m, ConstBlock g, int j, Block out, RingCtx& ctx) {
  if (j == 1) {
    PolyZ t;
    for (std::size_t x = 0; x < h.size(); ++x) {
      out[x] = h[x];
      ctx.mul_into(out[x], g[0]);
      t = hs[x];
      ctx.mul_into(t, g[1]);
      ctx.add_into(out[x], t);
    }
    return;
  }
  const std::size_t G = factorial(j);
  std::vector<PolyZ> hg(h.size());
  std::vector<PolyZ> term(h.size());
  for (int l = 0; l <= j; ++l) {
    multiply_blocks(h, hs, m, g.subspan(static_cast<std::size_t>(l) * G, G), j - 1, hg, ctx);
    if (l == 0) {
      std::move(hg.begin(), hg.end(), out.begin());
      continue;
    }
    coset_mul(hg, m, j, l, term, ctx);
    for (std::size_t x = 0; x < out.size(); ++x) ctx.add_into(out[x], term[x]);
  }
}

}  // namespace

NestedElement::NestedElement(int m) : m_(m) {
  check_rank(m);
  leaves_.resize(factorial(m + 1));
}

NestedElement::NestedElement(int m, std::vector<PolyZ> leaves) : m_(m), leaves_(std::move(leaves)) {
  check_rank(m);
  if (leaves_.size() != factorial(m + 1))
    throw std::invalid_argument("nested element of rank " + std::to_string(m) + " needs " +
                                std::to_string(factorial(m + 1)) + " leaves, got " + std::to_string(leaves_.size()));
}

NestedElement NestedElement::scalar(PolyZ z) { return NestedElement(0, {std::move(z)}); }

NestedElement NestedElement::unit(int m) {
  NestedElement e(m);
  e.leaves_[0] = one_elem();
  return e;
}

NestedElement NestedElement::basis(int m, const Tower& w) {
  if (w.size() > m) throw std::invalid_argument("tower does not belong to W(A_" + std::to_string(m) + ")");
  NestedElement e(m);
  e.leaves_[rank(w)] = one_elem();
  return e;
}

NestedElement NestedElement::from_children(const std::vector<NestedElement>& children) {
  if (children.size() < 2) throw std::invalid_argument("a nested element of rank m >= 1 has m + 1 >= 2 children");
  const int m = static_cast<int>(children.size()) - 1;
  std::vector<PolyZ> leaves;
  leaves.reserve(factorial(m + 1));
  for (const auto& c : children) {
    if (c.m() != m - 1)
      throw std::invalid_argument("child of rank " + std::to_string(c.m()) + " in an element of rank " +
                                  std::to_string(m));
    leaves.insert(leaves.end(), c.leaves_.begin(), c.leaves_.end());
  }
  return NestedElement(m, std::move(leaves));
}

NestedElement NestedElement::child(int k) const {
  if (m_ == 0 || k < 0 || k > m_) throw std::out_of_range("child index " + std::to_string(k) + " out of range");
  const std::size_t B = factorial(m_);
  auto first = leaves_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(k) * B);
  return NestedElement(m_ - 1, std::vector<PolyZ>(first, first + static_cast<std::ptrdiff_t>(B)));
}

const PolyZ& NestedElement::scalar_value() const {
  if (m_ != 0) throw std::logic_error("scalar_value() on an element of rank " + std::to_string(m_));
  return leaves_[0];
}

const PolyZ& NestedElement::coefficient(const Tower& w) const {
  if (w.size() > m_) throw std::invalid_argument("tower does not belong to W(A_" + std::to_string(m_) + ")");
  return leaves_[rank(w)];
}

NestedElement nested_add(const NestedElement& a, const NestedElement& b, RingCtx& ctx) {
  if (a.m() != b.m())
    throw std::invalid_argument("rank mismatch: " + std::to_string(a.m()) + " vs " + std::to_string(b.m()));
  NestedElement out = a;
  auto& leaves = out.mutable_leaves();
  for (std::size_t x = 0; x < leaves.size(); ++x) ctx.add_into(leaves[x], b.leaves()[x]);
  return out;
}

NestedElement nested_add(const NestedElement& a, const NestedElement& b) {
  RingCtx ctx;
  return nested_add(a, b, ctx);
}

NestedElement nested_scale(const NestedElement& h, const PolyZ& z, RingCtx& ctx) {
  NestedElement out = h;
  for (PolyZ& leaf : out.mutable_leaves()) ctx.mul_into(leaf, z);
  return out;
}

std::vector<CosetExpansionTerm> basis_times_coset(int m, int k, int j, int l) {
  if (mu_branch(m, j, k, l) != MuBranch::cancel) {
    const MuResult r = mu(m, j, k, l);
    return {{one_elem(), {r.j, r.l}, {m, r.k}}};
  }
  return {
      {q_minus_one(), {j - 1, j - m + k - 1}, {m, m - j + l}},
      {q_elem(), {j - 1, l - 1}, {m, k - 1}},
  };
}

NestedElement mult_by_coset(const NestedElement& h, int j, int l, RingCtx& ctx) {
  check_coset(h.m(), j, l);
  NestedElement out(h.m());
  coset_mul(h.leaves(), h.m(), j, l, out.mutable_leaves(), ctx);
  return out;
}

NestedElement nested_multiply(const NestedElement& h, const NestedElement& g, RingCtx& ctx) {
  if (g.m() > h.m())
    throw std::invalid_argument("rank mismatch: right factor rank " + std::to_string(g.m()) +
                                " exceeds left factor rank " + std::to_string(h.m()));
  if (g.m() == 0) return nested_scale(h, g.scalar_value(), ctx);
  NestedElement out(h.m());
  std::vector<PolyZ> hs(h.dimension());
  coset_mul(h.leaves(), h.m(), 1, 1, hs, ctx);
  multiply_blocks(h.leaves(), hs, h.m(), g.leaves(), g.m(), out.mutable_leaves(), ctx);
  return out;
}

NestedElement nested_multiply(const NestedElement& h, const NestedElement& g) {
  RingCtx ctx;
  return nested_multiply(h, g, ctx);
}

SimpleElement nested_to_simple(const NestedElement& h) {
  return SimpleElement(h.m(), std::vector<PolyZ>(h.leaves().begin(), h.leaves().end()));
}

NestedElement simple_to_nested(const SimpleElement& h) {
  return NestedElement(h.m(), std::vector<PolyZ>(h.coeffs().begin(), h.coeffs().end()));
}

std::vector<Integer> specialize(const NestedElement& h, const Integer& v) {
  std::vector<Integer> out;
  out.reserve(h.dimension());
  for (const PolyZ& leaf : h.leaves()) out.push_back(eval_at(leaf, v));
  return out;
}

}  // namespace hecke
