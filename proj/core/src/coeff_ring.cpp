#include "hecke/coeff_ring.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

PolyZ::PolyZ(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { trim(); }

PolyZ::PolyZ(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyZ PolyZ::constant(const Integer& c) { return PolyZ({c}); }

Integer PolyZ::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

void PolyZ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyZ& PolyZ::operator+=(const PolyZ& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

void PolyZ::multiply_by_q() {
  if (!coeffs_.empty()) coeffs_.insert(coeffs_.begin(), Integer(0));
}

// (q - 1) p: coefficient i becomes p[i-1] - p[i].
void PolyZ::multiply_by_q_minus_one() {
  if (coeffs_.empty()) return;
  coeffs_.push_back(Integer(0));
  for (std::size_t i = coeffs_.size() - 1; i > 0; --i) coeffs_[i] = coeffs_[i - 1] - coeffs_[i];
  coeffs_[0] = -coeffs_[0];
  trim();
}

bool PolyZ::is_q() const { return coeffs_.size() == 2 && coeffs_[0] == 0 && coeffs_[1] == 1; }

bool PolyZ::is_q_minus_one() const {
  return coeffs_.size() == 2 && coeffs_[0] == -1 && coeffs_[1] == 1;
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_q()) {
    PolyZ r = a;
    r.multiply_by_q();
    return r;
  }
  if (b.is_q_minus_one()) {
    PolyZ r = a;
    r.multiply_by_q_minus_one();
    return r;
  }
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyZ(std::move(out));
}

PolyZ q_elem() { return PolyZ{0, 1}; }
PolyZ one_elem() { return PolyZ{1}; }
PolyZ zero_elem() { return {}; }
PolyZ q_minus_one() { return PolyZ{-1, 1}; }

Integer eval_at(const PolyZ& a, const Integer& v) {
  Integer acc = 0;
  auto c = a.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
  return acc;
}

std::string to_string(const PolyZ& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto c = a.coeffs();
  for (int i = a.degree(); i >= 0; --i) {
    const Integer& coeff = c[static_cast<std::size_t>(i)];
    if (coeff == 0) continue;
    Integer mag = abs(coeff);
    if (first) {
      if (coeff < 0) out << '-';
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag;
    if (i >= 1) out << 'q';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

PolyZ RingCtx::add(const PolyZ& a, const PolyZ& b) {
  tally_add();
  return a + b;
}

PolyZ RingCtx::mul(const PolyZ& a, const PolyZ& b) {
  tally_mul();
  return a * b;
}

void RingCtx::add_into(PolyZ& acc, const PolyZ& b) {
  tally_add();
  acc += b;
}

void RingCtx::mul_into(PolyZ& acc, const PolyZ& b) {
  tally_mul();
  if (b.is_q()) {
    acc.multiply_by_q();
  } else if (b.is_q_minus_one()) {
    acc.multiply_by_q_minus_one();
  } else {
    acc = acc * b;
  }
}

void RingCtx::mul_by_q(PolyZ& acc) {
  tally_mul();
  acc.multiply_by_q();
}

void RingCtx::mul_by_q_minus_one(PolyZ& acc) {
  tally_mul();
  acc.multiply_by_q_minus_one();
}

PolyZ ring_add(RingCtx& ctx, const PolyZ& a, const PolyZ& b) { return ctx.add(a, b); }

PolyZ ring_mul(RingCtx& ctx, const PolyZ& a, const PolyZ& b) { return ctx.mul(a, b); }

}  // namespace hecke
