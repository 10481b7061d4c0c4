#ifndef BDM_NUMERIC_HPP
#define BDM_NUMERIC_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace bdm {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Parses "p/q" or "p"; throws std::invalid_argument on malformed input
// or zero denominator.
Rat parse_rat(const std::string& s);

// Serializes in lowest terms, "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

inline RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace bdm

#endif
