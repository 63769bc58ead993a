#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hmlift/expr.hpp"
#include "hmlift/maps.hpp"

namespace hmlift {

struct Space {
  bool complex = false;
  std::size_t dim = 0;
};

// A map definition after parsing: local bindings are already inlined.
//
//   map NAME: (R|C)^m -> (R|C)^n {
//     r = sqrt(x1^2 + x2^2);     # local binding
//     NAME1 = ...;               # components NAME1..NAMEn
//     guard r - x3;              # must be > 0 wherever the map is evaluated
//   }
//
// Real maps use x1..xm; complex maps use z1..zm, zb1..zbm (= conj(zk)) and i.
struct MapSource {
  std::string name;
  Space domain;
  Space codomain;
  std::vector<Expr> components;
  std::vector<Expr> guards;
};

MapSource parse_map_source(std::string_view text);

using ParsedMap = std::variant<RealPolyMap, ComplexPolyMap, SmoothMap>;

// Polynomial sources lower to the exact representations; anything else on a
// real domain becomes a SmoothMap.
ParsedMap lower_map(const MapSource& source);
ParsedMap parse_map(std::string_view text);

// Closed-form view of any real map (used by the numeric pipeline).
SmoothMap to_smooth(const MapSource& source);
SmoothMap to_smooth(const RealPolyMap& phi, const std::string& name = "phi");

std::string to_source(const SmoothMap& phi);

// Parses one polynomial written with canonical variable names.
ComplexPoly parse_polynomial(std::string_view text, std::size_t domain_dim, Layout layout);

// Gaussian-rational literal such as "1-1*i", "-2/3", "i".
GaussianRational parse_gaussian(std::string_view text);

}  // namespace hmlift
