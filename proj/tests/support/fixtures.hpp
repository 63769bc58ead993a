#pragma once

#include <string_view>
#include <variant>

#include "hmlift/catalog.hpp"
#include "hmlift/parser.hpp"

namespace hmlift::test {

inline RealPolyMap real_map(std::string_view src) { return std::get<RealPolyMap>(parse_map(src)); }
inline ComplexPolyMap complex_map(std::string_view src) { return std::get<ComplexPolyMap>(parse_map(src)); }
inline SmoothMap smooth_map(std::string_view src) { return std::get<SmoothMap>(parse_map(src)); }

inline RealPolyMap catalog_real(std::string_view id) { return real_map(lookup(id).definition); }
inline ComplexPolyMap catalog_complex(std::string_view id) { return complex_map(lookup(id).definition); }
inline SmoothMap catalog_smooth(std::string_view id) { return smooth_map(lookup(id).definition); }

inline RealPoly rpoly(std::string_view text, std::size_t n) {
  return real_part(parse_polynomial(text, n, Layout::Real));
}
inline ComplexPoly cpoly(std::string_view text, std::size_t m) {
  return parse_polynomial(text, m, Layout::Complex);
}

}  // namespace hmlift::test
