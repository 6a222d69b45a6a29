#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hecke {

/// Normal form of an element of Sym_{m+1} along the chain
/// Sym_1 < Sym_2 < ... < Sym_{m+1}.
///
/// Digit a_j (1-based j) selects the coset representative a(j, a_j), so
/// w = a(1, a_1) a(2, a_2) ... a(m, a_m) and 0 <= a_j <= j. Trailing zeros
/// are trimmed, hence the identity is the empty tower and a tower of
/// Sym_{m+1} is also a tower of every larger symmetric group.
class Tower {
 public:
  Tower() = default;
  /// Throws std::invalid_argument naming the first out-of-range position.
  explicit Tower(std::vector<int> digits);

  std::span<const int> digits() const { return digits_; }
  /// Number of digits after trimming.
  int size() const { return static_cast<int>(digits_.size()); }
  bool is_identity() const { return digits_.empty(); }
  /// a_j for 1-based j; 0 for j = 0 and for j past the end.
  int digit(int j) const {
    return j >= 1 && j <= size() ? digits_[static_cast<std::size_t>(j - 1)] : 0;
  }

  friend bool operator==(const Tower&, const Tower&) = default;

 private:
  std::vector<int> digits_;
};

/// a(m, k) = s_m s_{m-1} ... s_{m-k+1}, the (k+1)-cycle (m-k+1, ..., m+1).
/// a(m, 0) is the identity; m = 0 is allowed only together with k = 0.
struct CosetRep {
  int m = 0;
  int k = 0;

  friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

void validate(const CosetRep& r);

/// One-line permutation of {1, ..., n}. Products compose left to right:
/// (p * q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  /// images[i-1] is the image of i. Throws unless a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Disjoint or not, the cycles are composed left to right.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  /// Image of a 1-based point; points beyond the degree are fixed.
  int operator()(int point) const {
    return point >= 1 && point <= degree() ? images_[static_cast<std::size_t>(point - 1)] : point;
  }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  /// Same permutation viewed in Sym_n, n >= degree().
  Permutation extended(int degree) const;
  /// Coxeter length in type A.
  std::int64_t inversion_count() const;
  /// Non-trivial cycles, each starting at its smallest point, sorted.
  std::vector<std::vector<int>> cycles() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct ReducedWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

/// a(m, k) a(j, l) = a(j', l') a(m, k').
struct MuResult {
  int j = 0;
  int k = 0;
  int l = 0;

  friend bool operator==(const MuResult&, const MuResult&) = default;
};

enum class MuBranch { pass, join, cancel, shift };

const char* to_string(MuBranch b);

Permutation coset_rep_to_permutation(const CosetRep& r, int degree);
Permutation tower_to_permutation(const Tower& t, int degree);
Tower tower_from_permutation(const Permutation& p);

int tower_length(const Tower& t);
ReducedWord tower_to_reduced_word(const Tower& t);
/// Generator indices i with l(s_i w) < l(w), ascending.
std::vector<int> descent_set(const Tower& t);

MuBranch mu_branch(int m, int j, int k, int l);
MuResult mu(int m, int j, int k, int l);

/// Tower of w a(j, l); t is padded with zeros when j exceeds its size.
Tower tower_star_coset(const Tower& t, int j, int l);
Tower tower_product(const Tower& t, const Tower& u);
Tower tower_inverse(const Tower& t);
/// Image of point i under w without building the permutation; 1 <= i <= len(t) + 1.
int image_of_point(const Tower& t, int i);

std::uint64_t factorial(int n);
/// Mixed-radix index sum_j a_j * j!, a bijection onto [0, (m+1)!).
std::uint64_t rank(const Tower& t);
Tower unrank(std::uint64_t r, int m);

}  // namespace hecke

template <>
struct std::hash<hecke::Tower> {
  std::size_t operator()(const hecke::Tower& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int d : t.digits()) h = (h ^ static_cast<std::size_t>(d)) * 0x100000001b3ull;
    return h;
  }
};
