#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hecke/coeff_ring.hpp"
#include "hecke/hecke_simple.hpp"
#include "hecke/tower.hpp"

namespace hecke {

/// Element h = sum_{k=0}^{m} h_k T_{a(m,k)} of H(A_m) with every h_k in
/// H(A_{m-1}), recursively down to H(A_0) = Z.
///
/// The tree is dense and stored as one leaf buffer in child-major order:
/// child h_k occupies leaves [k m!, (k+1) m!), and so on inside each child.
/// The leaf reached by child indices (k_m, ..., k_1) therefore sits at
/// offset sum_j k_j j!, the rank of the tower (k_1, ..., k_m).
class NestedElement {
 public:
  /// Zero element of H(A_m).
  explicit NestedElement(int m);
  NestedElement(int m, std::vector<PolyZ> leaves);

  static NestedElement scalar(PolyZ z);
  static NestedElement unit(int m);
  static NestedElement basis(int m, const Tower& w);
  /// (h_0, ..., h_m), all of rank m - 1.
  static NestedElement from_children(const std::vector<NestedElement>& children);

  int m() const { return m_; }
  std::size_t dimension() const { return leaves_.size(); }
  /// Child count m + 1; zero for a scalar.
  int child_count() const { return m_ == 0 ? 0 : m_ + 1; }
  NestedElement child(int k) const;
  /// The H(A_0) value; only valid when m() == 0.
  const PolyZ& scalar_value() const;
  /// Leaf coefficient of T_w.
  const PolyZ& coefficient(const Tower& w) const;

  std::span<const PolyZ> leaves() const { return leaves_; }
  std::vector<PolyZ>& mutable_leaves() { return leaves_; }

  friend bool operator==(const NestedElement&, const NestedElement&) = default;

 private:
  int m_ = 0;
  std::vector<PolyZ> leaves_;
};

NestedElement nested_add(const NestedElement& a, const NestedElement& b, RingCtx& ctx);
NestedElement nested_add(const NestedElement& a, const NestedElement& b);

/// Multiplies every leaf by z; M counted muls.
NestedElement nested_scale(const NestedElement& h, const PolyZ& z, RingCtx& ctx);

/// One term coeff * T_left * T_right of a product T_{a(m,k)} T_{a(j,l)}
/// rewritten with left in W(A_{m-1}) and right in X_m.
struct CosetExpansionTerm {
  PolyZ coeff;
  CosetRep left;
  CosetRep right;
};

/// The one- or two-term rewriting of T_{a(m,k)} T_{a(j,l)}, 1 <= j <= m.
/// Ground truth for mult_by_coset in tests.
std::vector<CosetExpansionTerm> basis_times_coset(int m, int k, int j, int l);

/// h T_{a(j,l)} for 1 <= j <= rank(h) (or j = l = 0), 0 <= l <= j.
///
/// The partial products h_{m-j+i} T_{a(j-1,i-1)} built for the (m-j+l)-th
/// child are reused for the children m-j .. m-j+l-1, which keeps the cost
/// within 3/2 l M.
NestedElement mult_by_coset(const NestedElement& h, int j, int l, RingCtx& ctx);

/// h g for rank(g) <= rank(h), by recursion on the rank of g. The
/// product h T_{s_1} is computed once and shared by all rank-1 blocks of g.
NestedElement nested_multiply(const NestedElement& h, const NestedElement& g, RingCtx& ctx);
NestedElement nested_multiply(const NestedElement& h, const NestedElement& g);

SimpleElement nested_to_simple(const NestedElement& h);
NestedElement simple_to_nested(const SimpleElement& h);

/// Leaf values at q = v, indexed by tower rank.
std::vector<Integer> specialize(const NestedElement& h, const Integer& v);

}  // namespace hecke
