#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ptreg {

// All arithmetic in this library is exact. Int/Rat are the only number types
// that ever touch a result; doubles appear solely in timing output.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p" or "p/q" in base 10 (q > 0 after canonicalization).
// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Emits "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string rat_to_string(const Rat& x);

// ceil(a/b) for b > 0 and a of any sign.
long long ceil_div(long long a, long long b);

// gcd of all entries (nonnegative); 0 for the zero vector.
Int content(const std::vector<Int>& v);

// Divide by content and flip signs so the first nonzero entry is positive.
// The zero vector is left unchanged.
void normalize_primitive(std::vector<Int>& v);

// Clear denominators and reduce to the canonical primitive integer vector.
std::vector<Int> to_primitive_ints(const std::vector<Rat>& v);

// Deterministic 64-bit generator used by every seeded component.
// std::uniform_int_distribution is implementation-defined, so we do not use it.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);  // n > 0
  long long in_range(long long lo, long long hi);  // inclusive
 private:
  std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0);

// Word-size primes > 2^30 for the modular rank prefilter. modulus_at(0) is the
// process-wide default; higher indices are used when a prime turns out to be
// unlucky for a particular matrix.
std::uint32_t modulus_at(std::size_t i);
std::uint32_t random_modulus(SplitMix64& rng);

// The prefilter can only skip or reorder exact work, never change a verdict.
bool modp_prefilter_enabled();
void set_modp_prefilter(bool on);

}  // namespace ptreg
