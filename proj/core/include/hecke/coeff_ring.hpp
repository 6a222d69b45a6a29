#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using Integer = boost::multiprecision::cpp_int;

/// Dense polynomial in q with exact integer coefficients, ascending powers.
///
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero. Every constructor and mutator restores that form.
class PolyZ {
 public:
  PolyZ() = default;
  PolyZ(std::initializer_list<Integer> coeffs);
  explicit PolyZ(std::vector<Integer> coeffs);

  static PolyZ constant(const Integer& c);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Integer> coeffs() const { return coeffs_; }
  /// Coefficient of q^i; zero past the degree.
  Integer coefficient(std::size_t i) const;

  // Raw arithmetic. These are not counted; go through RingCtx for that.
  PolyZ& operator+=(const PolyZ& other);
  PolyZ& operator-=(const PolyZ& other);
  void multiply_by_q();
  void multiply_by_q_minus_one();

  friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
  friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
  friend bool operator==(const PolyZ&, const PolyZ&) = default;

  bool is_q() const;
  bool is_q_minus_one() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

PolyZ q_elem();
PolyZ one_elem();
PolyZ zero_elem();
PolyZ q_minus_one();

/// Horner evaluation at q = v. Never counted.
Integer eval_at(const PolyZ& a, const Integer& v);

/// Human-readable form such as "q^2 - 1".
std::string to_string(const PolyZ& a);

struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;

  std::uint64_t total() const { return adds + muls; }
  void reset() { adds = muls = 0; }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

/// Routes ring arithmetic and, when a counter is attached, tallies exactly
/// one add or one mul per call. Multiplying by q or q - 1 is one mul.
///
/// A counting context must stay on one thread; use one per thread and sum.
class RingCtx {
 public:
  RingCtx() = default;
  static RingCtx counting() {
    RingCtx ctx;
    ctx.counter_.emplace();
    return ctx;
  }

  bool is_counting() const { return counter_.has_value(); }
  const std::optional<OpCounter>& counter() const { return counter_; }
  /// Zeroes the tally; no-op for an uncounted context.
  void reset() {
    if (counter_) counter_->reset();
  }
  std::uint64_t total() const { return counter_ ? counter_->total() : 0; }

  PolyZ add(const PolyZ& a, const PolyZ& b);
  PolyZ mul(const PolyZ& a, const PolyZ& b);

  // In-place variants for hot loops; same accounting as add/mul.
  void add_into(PolyZ& acc, const PolyZ& b);
  void mul_into(PolyZ& acc, const PolyZ& b);
  void mul_by_q(PolyZ& acc);
  void mul_by_q_minus_one(PolyZ& acc);

 private:
  void tally_add() {
    if (counter_) ++counter_->adds;
  }
  void tally_mul() {
    if (counter_) ++counter_->muls;
  }

  std::optional<OpCounter> counter_;
};

PolyZ ring_add(RingCtx& ctx, const PolyZ& a, const PolyZ& b);
PolyZ ring_mul(RingCtx& ctx, const PolyZ& a, const PolyZ& b);

}  // namespace hecke
