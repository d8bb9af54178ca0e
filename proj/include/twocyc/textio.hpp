#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twocyc/multipoly.hpp"
#include "twocyc/quadext.hpp"
#include "twocyc/ring.hpp"

namespace twocyc {

// Text form of a polynomial: sum of terms "c * a2^e2 * a3^e3" with exact
// rational coefficients "p/q". print/parse round-trip exactly.
std::string to_string(const MultiPoly& p);
MultiPoly parse_poly(const std::string& text, const RingPtr& ring);

std::string to_string(const QuadExt& x);
QuadExt parse_quadext(const std::string& text);

// Generator list with a header recording the ring and the monomial order:
//   ring a2 a3 a4
//   order grevlex
//   <one generator per line>
struct BasisFile {
  RingPtr ring;
  std::vector<MultiPoly> generators;
};
void write_basis(std::ostream& os, const RingPtr& ring,
                 const std::vector<MultiPoly>& gens);
BasisFile read_basis(std::istream& is);

}  // namespace twocyc
