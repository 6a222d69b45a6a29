#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hecke/coeff_ring.hpp"
#include "hecke/hecke_nested.hpp"
#include "hecke/hecke_simple.hpp"
#include "hecke/tower.hpp"

namespace hecke {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomials: ascending coefficient list, "[-1,1]" is q - 1.
std::string format_poly(const PolyZ& p);
PolyZ parse_poly(std::string_view text);

// Towers: "[1,2,1,3,1,3,0,1,7]"; the printer emits the trimmed form.
std::string format_tower(const Tower& t);
Tower parse_tower(std::string_view text);

/// Accepts one-line images "[2,3,1]" or cycles "(1,2,3)(4,5)". Cycle input
/// gets degree max(degree, largest point mentioned).
Permutation parse_permutation(std::string_view text, int degree = 0);
/// Cycle notation; "()" for the identity.
std::string format_cycles(const Permutation& p);
std::string format_images(const Permutation& p);

/// Column j has height a_j and lists j, j-1, ..., j-a_j+1 bottom-up, above
/// a rule and a row of column numbers. Empty cells print as '.'.
std::string render_tower_diagram(const Tower& t);
/// Reads the column heights back from render_tower_diagram output.
std::vector<int> diagram_column_heights(std::string_view diagram);

using HeckeElement = std::variant<SimpleElement, NestedElement>;

/// {"repr":"simple","m":3,"coeffs":[{"rank":r,"poly":[...]},...]} listing
/// nonzero entries in ascending rank.
std::string to_json(const SimpleElement& h);
/// {"repr":"nested","m":2,"tree":[[p00,p01],[p10,p11],[p20,p21]]}, child
/// h_0 first at every level; a rank-0 tree is a bare polynomial.
std::string to_json(const NestedElement& h);
/// Integers outside the 64-bit range are written as decimal strings and
/// accepted either way.
HeckeElement parse_hecke_json(std::string_view text);

SimpleElement as_simple(const HeckeElement& h);
NestedElement as_nested(const HeckeElement& h);

/// Sum of nonzero terms, e.g. "(q - 1) T[1] + q T[]".
std::string format_terms(const SimpleElement& h);

}  // namespace hecke
