#include "iomdin/hj_string.hpp"

namespace iomdin {

namespace {

Int floor_mod(Int a, Int m) {
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m for gcd(a, m) = 1, m >= 1.
Int mod_inverse(Int a, Int m) {
  if (m == 1) return 0;
  Int old_r = floor_mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return floor_mod(old_s, m);
}

Int ceil_div(Int a, Int b) { return a / b + ((a % b != 0 && (a > 0) == (b > 0)) ? 1 : 0); }

}  // namespace

void check_spec(const StringSpec& s) {
  if (s.alpha < 1 || s.beta < 1 || s.modulus < 1) {
    throw DomainError("string parameters must be positive: Str(" + std::to_string(s.alpha) +
                      "," + std::to_string(s.beta) + ";" + std::to_string(s.modulus) + ")");
  }
  if (s.a < 0 || s.b < 0 || s.c < 0 || (s.a == 0 && s.b == 0 && s.c == 0)) {
    throw DomainError("string function exponents must be nonnegative and not all zero");
  }
  if (gcd(s.alpha, s.beta, s.modulus) != 1) {
    throw DomainError("gcd(alpha, beta, M) != 1 in Str(" + std::to_string(s.alpha) + "," +
                      std::to_string(s.beta) + ";" + std::to_string(s.modulus) + ")");
  }
}

Int multiplicity_at(const StringSpec& s, const LatticePoint& p) {
  const __int128 x = p.first, y = p.second;
  const __int128 linear = static_cast<__int128>(s.alpha) * x + static_cast<__int128>(s.beta) * y;
  const __int128 m = s.a * x + s.b * y + s.c * (linear / s.modulus);
  return static_cast<Int>(m);
}

HJChain compute_string(const StringSpec& s) {
  check_spec(s);
  const Int M = s.modulus;
  const Int g = gcd(M, s.alpha);
  const Int p = M / g;
  // Lowest point above the x-axis: y = g, α x ≡ -β g (mod M).
  const Int x1 = floor_mod(-(s.beta % p) * mod_inverse((s.alpha / g) % p, p), p);

  HJChain chain;
  chain.boundary.push_back({p, 0});
  LatticePoint prev{p, 0};
  LatticePoint cur{x1, g};
  while (cur.first != 0) {
    const Int b = ceil_div(prev.first, cur.first);
    chain.vertices.push_back({multiplicity_at(s, cur), -b});
    chain.boundary.push_back(cur);
    const LatticePoint next{b * cur.first - prev.first, b * cur.second - prev.second};
    prev = cur;
    cur = next;
  }
  chain.boundary.push_back(cur);
  chain.end_alpha_multiplicity = multiplicity_at(s, chain.boundary.front());
  chain.end_beta_multiplicity = multiplicity_at(s, chain.boundary.back());
  return chain;
}

}  // namespace iomdin
