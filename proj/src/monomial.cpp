#include "ptreg/monomial.hpp"

#include <limits>
#include <stdexcept>

namespace ptreg {

std::size_t monomial_count(std::size_t n, unsigned k) {
  // C(n+k, min(n, k)) with overflow guard; desk-scale sizes only.
  unsigned long long num = 1;
  const unsigned long long top = n + k;
  const unsigned long long bot = std::min<unsigned long long>(n, k);
  for (unsigned long long i = 1; i <= bot; ++i) {
    if (num > std::numeric_limits<unsigned long long>::max() / (top - bot + i))
      throw std::overflow_error("monomial space too large");
    num = num * (top - bot + i) / i;
    if (num > 100'000'000ULL) throw std::overflow_error("monomial space too large");
  }
  return static_cast<std::size_t>(num);
}

void for_each_exponent(std::size_t n, unsigned k,
                       const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> e(n + 1, 0);
  e[0] = k;
  while (true) {
    fn(e);
    // lex-descending successor: decrement the rightmost nonzero among
    // e_0..e_{n-1}, dump everything to its right into the next slot.
    std::size_t j = n;
    while (j > 0 && e[j - 1] == 0) --j;
    if (j == 0) break;  // all weight on x_n: last monomial
    --j;
    unsigned tail = e[n] + 1;
    e[n] = 0;
    for (std::size_t i = j + 1; i < n; ++i) {
      tail += e[i];
      e[i] = 0;
    }
    e[j] -= 1;
    e[j + 1] = tail;
  }
}

std::vector<Int> monomial_values(const ProjPoint& p, unsigned k) {
  const std::size_t n = p.ambient_dim();
  // power table coords[i]^e for e <= k
  std::vector<std::vector<Int>> pw(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    pw[i].resize(k + 1);
    pw[i][0] = 1;
    for (unsigned e = 1; e <= k; ++e) pw[i][e] = pw[i][e - 1] * p.coords[i];
  }
  std::vector<Int> out;
  out.reserve(monomial_count(n, k));
  Int acc;
  for_each_exponent(n, k, [&](const std::vector<unsigned>& e) {
    acc = 1;
    for (std::size_t i = 0; i <= n; ++i)
      if (e[i] != 0) acc *= pw[i][e[i]];
    out.push_back(acc);
  });
  return out;
}

}  // namespace ptreg
