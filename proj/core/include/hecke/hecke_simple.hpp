#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hecke/coeff_ring.hpp"
#include "hecke/tower.hpp"

namespace hecke {

/// Element of H(A_m) as a dense coefficient list over the T-basis, entry r
/// holding the coefficient of T_w with rank(tower(w)) = r.
class SimpleElement {
 public:
  /// Zero element of H(A_m).
  explicit SimpleElement(int m);
  SimpleElement(int m, std::vector<PolyZ> coeffs);

  static SimpleElement unit(int m);
  static SimpleElement basis(int m, const Tower& w);

  int m() const { return m_; }
  /// M = (m+1)!.
  std::size_t dimension() const { return coeffs_.size(); }
  const PolyZ& coeff(std::uint64_t r) const { return coeffs_[r]; }
  PolyZ& coeff(std::uint64_t r) { return coeffs_[r]; }
  std::span<const PolyZ> coeffs() const { return coeffs_; }
  std::vector<PolyZ>& mutable_coeffs() { return coeffs_; }

  friend bool operator==(const SimpleElement&, const SimpleElement&) = default;

 private:
  int m_ = 0;
  std::vector<PolyZ> coeffs_;
};

/// Per-generator lookup used by right multiplication with T_{s_i}.
/// index[i-1][r] = rank(w s_i), right_descent[i-1][r] = l(w s_i) < l(w).
struct GeneratorTables {
  int m = 0;
  std::vector<std::vector<std::uint32_t>> index;
  std::vector<std::vector<bool>> right_descent;
};

/// Built once per rank and cached; safe to call from several threads.
const GeneratorTables& generator_tables(int m);

SimpleElement simple_add(const SimpleElement& a, const SimpleElement& b, RingCtx& ctx);
SimpleElement simple_add(const SimpleElement& a, const SimpleElement& b);

/// h T_{s_i}: z'_w = q z_{ws} when ws is longer, else z_{ws} + (q-1) z_w.
SimpleElement star_generator(const SimpleElement& h, int i, RingCtx& ctx);
/// h T_v by folding star_generator over the tower word of v.
SimpleElement star_basis(const SimpleElement& h, const Tower& v, RingCtx& ctx);

struct SimpleMultiplyOptions {
  /// Skip v with b_v = 0. Ignored while counting so counts stay worst-case.
  bool skip_zero_coefficients = false;
};

/// sum_v b_v (h T_v) over the basis of g's own algebra H(A_{g.m()}),
/// g.m() <= h.m(). Every b_v costs M scalar multiplications, even b_v = 1.
SimpleElement simple_multiply(const SimpleElement& h, const SimpleElement& g, RingCtx& ctx,
                              SimpleMultiplyOptions opts = {});
SimpleElement simple_multiply(const SimpleElement& h, const SimpleElement& g);

}  // namespace hecke
