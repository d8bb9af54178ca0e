#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace twocyc {

// Exact arithmetic scalars. mpq_class keeps values reduced with a positive
// denominator, which is exactly the canonical form we need everywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

long double to_long_double(const Int& z);
long double to_long_double(const Rat& q);

// Exact dyadic rational equal to the given value. Rejects non-finite input.
Rat rat_from_long_double(long double v);

std::size_t hash_combine(std::size_t seed, std::size_t v);
std::size_t hash_value(const Rat& q);

}  // namespace twocyc
