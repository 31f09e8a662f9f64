#include "ptreg/rational.hpp"

#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>

namespace ptreg {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int num(s, 10);
      return Rat(num);
    }
    Int num(s.substr(0, slash), 10);
    Int den(s.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
}

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

long long ceil_div(long long a, long long b) {
  if (b <= 0) throw std::invalid_argument("ceil_div requires b > 0");
  if (a >= 0) return (a + b - 1) / b;
  return -((-a) / b);
}

Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void normalize_primitive(std::vector<Int>& v) {
  Int g = content(v);
  if (g == 0) return;
  int lead = 0;
  for (const Int& x : v) {
    if (x != 0) {
      lead = sgn(x);
      break;
    }
  }
  if (lead < 0) mpz_neg(g.get_mpz_t(), g.get_mpz_t());
  if (g == 1) return;
  for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<Int> to_primitive_ints(const std::vector<Rat>& v) {
  Int lcm = 1;
  for (const Rat& x : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Int> out;
  out.reserve(v.size());
  Int t;
  for (const Rat& x : v) {
    mpz_divexact(t.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    out.push_back(t * x.get_num());
  }
  normalize_primitive(out);
  return out;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return next() % n; }

long long SplitMix64::in_range(long long lo, long long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(below(span));
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  SplitMix64 rng(a ^ (b * 0x9E3779B97F4A7C15ULL) ^ (c + 0xD1B54A32D192ED03ULL));
  rng.next();
  return rng.next();
}

namespace {

std::vector<std::uint32_t> build_moduli(std::size_t upto) {
  static std::mutex mu;
  static std::vector<std::uint32_t> primes;
  std::lock_guard<std::mutex> lock(mu);
  if (primes.size() <= upto) {
    Int p = primes.empty() ? Int(1) << 30 : Int(primes.back());
    while (primes.size() <= upto) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      primes.push_back(static_cast<std::uint32_t>(p.get_ui()));
    }
  }
  return primes;
}

std::atomic<bool> g_prefilter{true};

}  // namespace

std::uint32_t modulus_at(std::size_t i) { return build_moduli(i)[i]; }

std::uint32_t random_modulus(SplitMix64& rng) {
  // nextprime above a random odd base in (2^30, 2^31).
  Int base = (Int(1) << 30) + Int(static_cast<unsigned long>(rng.below(1u << 30)));
  Int p;
  mpz_nextprime(p.get_mpz_t(), base.get_mpz_t());
  return static_cast<std::uint32_t>(p.get_ui());
}

bool modp_prefilter_enabled() { return g_prefilter.load(); }
void set_modp_prefilter(bool on) { g_prefilter.store(on); }

}  // namespace ptreg
