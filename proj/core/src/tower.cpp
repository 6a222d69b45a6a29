#include "hecke/tower.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hecke {

namespace {

std::string position_message(int j, int d) {
  return "tower digit " + std::to_string(d) + " at position " + std::to_string(j) +
         " is outside [0, " + std::to_string(j) + "]";
}

// Image of y under the cycle (m-k+1, ..., m+1).
int apply_coset_rep(int m, int k, int y) {
  if (k == 0 || y < m - k + 1 || y > m + 1) return y;
  return y == m + 1 ? m - k + 1 : y + 1;
}

}  // namespace

Tower::Tower(std::vector<int> digits) : digits_(std::move(digits)) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    int j = static_cast<int>(i) + 1;
    if (digits_[i] < 0 || digits_[i] > j) throw std::invalid_argument(position_message(j, digits_[i]));
  }
  while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

void validate(const CosetRep& r) {
  if (r.m < 0 || r.k < 0 || r.k > r.m)
    throw std::invalid_argument("coset representative a(" + std::to_string(r.m) + "," +
                                std::to_string(r.k) + ") needs 0 <= k <= m");
}

const char* to_string(MuBranch b) {
  switch (b) {
    case MuBranch::pass: return "pass";
    case MuBranch::join: return "join";
    case MuBranch::cancel: return "cancel";
    case MuBranch::shift: return "shift";
  }
  return "?";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int y : images_) {
    if (y < 1 || y > n || seen[static_cast<std::size_t>(y)])
      throw std::invalid_argument("images do not form a permutation of {1.." + std::to_string(n) + "}");
    seen[static_cast<std::size_t>(y)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p.images_[static_cast<std::size_t>(i)] = i + 1;
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<int> img = identity(degree).images_;
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("repeated point in cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > degree)
        throw std::invalid_argument("cycle point " + std::to_string(from) + " outside {1.." +
                                    std::to_string(degree) + "}");
      img[static_cast<std::size_t>(from - 1)] = to;
    }
    result = result * Permutation(std::move(img));
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::extended(int n) const {
  if (n < degree()) throw std::invalid_argument("cannot shrink a permutation's degree");
  Permutation p = *this;
  for (int i = degree() + 1; i <= n; ++i) p.images_.push_back(i);
  return p;
}

std::int64_t Permutation::inversion_count() const {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  const int n = std::max(p.degree(), q.degree());
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = q(p(i));
  Permutation r;
  r.images_ = std::move(img);
  return r;
}

Permutation coset_rep_to_permutation(const CosetRep& r, int degree) {
  validate(r);
  if (degree < r.m + 1)
    throw std::invalid_argument("degree " + std::to_string(degree) + " too small for a(" +
                                std::to_string(r.m) + "," + std::to_string(r.k) + ")");
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 1; i <= degree; ++i) img[static_cast<std::size_t>(i - 1)] = apply_coset_rep(r.m, r.k, i);
  return Permutation(std::move(img));
}

Permutation tower_to_permutation(const Tower& t, int degree) {
  if (degree < t.size() + 1)
    throw std::invalid_argument("degree " + std::to_string(degree) + " too small for a tower of length " +
                                std::to_string(t.size()));
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 1; i <= degree; ++i) {
    int y = i;
    for (int j = 1; j <= t.size(); ++j) y = apply_coset_rep(j, t.digit(j), y);
    img[static_cast<std::size_t>(i - 1)] = y;
  }
  return Permutation(std::move(img));
}

Tower tower_from_permutation(const Permutation& p) {
  const int n = p.degree();
  std::vector<int> w(p.images().begin(), p.images().end());
  std::vector<int> digits(static_cast<std::size_t>(std::max(n - 1, 0)));
  // Peel w = u * a(m, a_m): u fixes m+1 and a(m, a_m) sends m+1 to m+1-a_m.
  for (int m = n - 1; m >= 1; --m) {
    const int k = m + 1 - w[static_cast<std::size_t>(m)];
    digits[static_cast<std::size_t>(m - 1)] = k;
    if (k == 0) continue;
    for (int& y : w) {
      if (y < m - k + 1 || y > m + 1) continue;
      y = (y == m - k + 1) ? m + 1 : y - 1;
    }
  }
  return Tower(std::move(digits));
}

int tower_length(const Tower& t) {
  int sum = 0;
  for (int d : t.digits()) sum += d;
  return sum;
}

ReducedWord tower_to_reduced_word(const Tower& t) {
  ReducedWord word;
  for (int j = 1; j <= t.size(); ++j)
    for (int i = 0; i < t.digit(j); ++i) word.letters.push_back(j - i);
  return word;
}

std::vector<int> descent_set(const Tower& t) {
  std::vector<int> out;
  for (int i = 1; i <= t.size(); ++i)
    if (t.digit(i) > t.digit(i - 1)) out.push_back(i);
  return out;
}

MuBranch mu_branch(int m, int j, int k, int l) {
  if (j < 1 || j > m || k < 0 || k > m || l < 0 || l > j)
    throw std::invalid_argument("mu(" + std::to_string(m) + "; " + std::to_string(j) + "," +
                                std::to_string(k) + "," + std::to_string(l) +
                                ") needs 1 <= j <= m, 0 <= k <= m, 0 <= l <= j");
  if (j < m - k) return MuBranch::pass;
  if (j == m - k) return MuBranch::join;
  if (j <= m - k + l) return MuBranch::cancel;
  return MuBranch::shift;
}

MuResult mu(int m, int j, int k, int l) {
  switch (mu_branch(m, j, k, l)) {
    case MuBranch::pass: return {j, k, l};
    case MuBranch::join: return {0, k + l, 0};
    case MuBranch::cancel: return {j - 1, k - 1, l - 1};
    case MuBranch::shift: return {j - 1, k, l};
  }
  return {};
}

Tower tower_star_coset(const Tower& t, int j, int l) {
  if (j < 0 || l < 0 || l > j)
    throw std::invalid_argument("a(" + std::to_string(j) + "," + std::to_string(l) + ") needs 0 <= l <= j");
  if (l == 0) return t;
  std::vector<int> d(t.digits().begin(), t.digits().end());
  if (static_cast<int>(d.size()) < j) d.resize(static_cast<std::size_t>(j), 0);
  for (int m = static_cast<int>(d.size()); l > 0; --m) {
    const MuResult r = mu(m, j, d[static_cast<std::size_t>(m - 1)], l);
    d[static_cast<std::size_t>(m - 1)] = r.k;
    j = r.j;
    l = r.l;
  }
  return Tower(std::move(d));
}

Tower tower_product(const Tower& t, const Tower& u) {
  Tower out = t;
  for (int j = 1; j <= u.size(); ++j)
    if (u.digit(j) != 0) out = tower_star_coset(out, j, u.digit(j));
  return out;
}

Tower tower_inverse(const Tower& t) {
  std::vector<int> cur(t.digits().begin(), t.digits().end());
  std::vector<int> result(cur.size(), 0);
  while (!cur.empty()) {
    const int m = static_cast<int>(cur.size());
    if (cur.back() == 0) {
      cur.pop_back();
      continue;
    }
    int k = 0;
    for (int i = m - 1; i >= 1; --i) {
      if (cur[static_cast<std::size_t>(i - 1)] == 0) {
        k = i;
        break;
      }
    }
    result[static_cast<std::size_t>(m - 1)] = m - k;
    // w' keeps x_1 .. x_{k-1} and has x'_i = a(i, a_{i+1} - 1) for i >= k.
    std::vector<int> next(cur.begin(), cur.begin() + std::max(k - 1, 0));
    for (int i = std::max(k, 1); i <= m - 1; ++i) next.push_back(cur[static_cast<std::size_t>(i)] - 1);
    cur = std::move(next);
  }
  return Tower(std::move(result));
}

int image_of_point(const Tower& t, int i) {
  if (i < 1 || i > t.size() + 1)
    throw std::out_of_range("point " + std::to_string(i) + " outside {1.." + std::to_string(t.size() + 1) + "}");
  for (int j = 1; j <= t.size(); ++j) i = apply_coset_rep(j, t.digit(j), i);
  return i;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial argument out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank(const Tower& t) {
  std::uint64_t r = 0;
  for (int j = 1; j <= t.size(); ++j) r += static_cast<std::uint64_t>(t.digit(j)) * factorial(j);
  return r;
}

Tower unrank(std::uint64_t r, int m) {
  if (m < 0 || m > 19) throw std::out_of_range("rank m out of range");
  if (r >= factorial(m + 1))
    throw std::out_of_range("rank " + std::to_string(r) + " not below (m+1)! = " + std::to_string(factorial(m + 1)));
  std::vector<int> d(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j)
    d[static_cast<std::size_t>(j - 1)] = static_cast<int>((r / factorial(j)) % static_cast<std::uint64_t>(j + 1));
  return Tower(std::move(d));
}

}  // namespace hecke
