#include "iomdin/hj_string.hpp"

namespace iomdin {

namespace {

__int128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<__int128>(a.first - o.first) * (b.second - o.second) -
         static_cast<__int128>(a.second - o.second) * (b.first - o.first);
}

}  // namespace

HJChain hull_oracle(const StringSpec& s) {
  check_spec(s);
  const Int M = s.modulus;
  const Int p = M / gcd(M, s.alpha);
  const Int q = M / gcd(M, s.beta);
  auto member = [&](Int x, Int y) { return (s.alpha * x + s.beta * y) % M == 0; };

  // Lowest nonzero lattice point in each column x = 0..p.
  std::vector<LatticePoint> pts;
  for (Int x = 0; x <= p; ++x) {
    for (Int y = (x == 0 ? 1 : 0); y <= q; ++y) {
      if (member(x, y)) {
        pts.push_back({x, y});
        break;
      }
    }
  }
  // Lower hull from (0, q) to (p, 0), keeping points on the boundary edges.
  std::vector<LatticePoint> hull;
  for (const LatticePoint& pt : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) < 0) {
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  if (hull.front() != LatticePoint{0, q} || hull.back() != LatticePoint{p, 0}) {
    throw std::logic_error("hull_oracle: hull does not end on the axes");
  }

  HJChain chain;
  chain.boundary.assign(hull.rbegin(), hull.rend());
  for (size_t i = 1; i + 1 < chain.boundary.size(); ++i) {
    const LatticePoint& a = chain.boundary[i - 1];
    const LatticePoint& n = chain.boundary[i];
    const LatticePoint& c = chain.boundary[i + 1];
    // a + c = b n; read b off a nonzero coordinate of n.
    const Int b = n.first != 0 ? (a.first + c.first) / n.first : (a.second + c.second) / n.second;
    if (a.first + c.first != b * n.first || a.second + c.second != b * n.second) {
      throw std::logic_error("hull_oracle: boundary points are not consecutive");
    }
    chain.vertices.push_back({multiplicity_at(s, n), -b});
  }
  chain.end_alpha_multiplicity = multiplicity_at(s, chain.boundary.front());
  chain.end_beta_multiplicity = multiplicity_at(s, chain.boundary.back());
  return chain;
}

}  // namespace iomdin
