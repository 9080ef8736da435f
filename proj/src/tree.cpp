#include "h2sl2/tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace h2sl2 {

namespace {

using Rmat = std::array<Rat, 4>;  // row-major (m0 m1; m2 m3)

Rmat mul(const Rmat& a, const Rmat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Rat det(const Rmat& m) { return m[0] * m[3] - m[1] * m[2]; }

Rmat inv(const Rmat& m) {
  Rat d = det(m);
  if (d == 0) throw std::domain_error("singular matrix");
  return {m[3] / d, -m[1] / d, -m[2] / d, m[0] / d};
}

Rat ppow(const Int& p, long e) {
  Rat r = 1;
  Rat pr(p);
  for (long i = 0; i < e; ++i) r *= pr;
  for (long i = 0; i > e; --i) r /= pr;
  return r;
}

// Representative of r mod p^b * Z_(p): 0, or n*p^v with v = v_p(r) < b and
// n the integer residue of the unit part mod p^(b-v), in [1, p^(b-v)).
Rat reduce_offdiag(const Rat& r, long b, const Int& p) {
  if (r == 0) return 0;
  long v = valuation(r, p);
  if (v >= b) return 0;
  Rat unit = r / ppow(p, v);
  Int mod;
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(),
             static_cast<unsigned long>(b - v));
  Int num = unit.get_num(), den = unit.get_den();
  Int deninv;
  mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  Int n = num * deninv % mod;
  if (n < 0) n += mod;
  return Rat(n) * ppow(p, v);
}

long val_or_max(const Rat& r, const Int& p) {
  return r == 0 ? std::numeric_limits<long>::max() : valuation(r, p);
}

struct Smith {
  Rmat U;  // in GL2(Z_(p)); input = U * diag(unit*p^e1, unit*p^e2) * colops
  long e1, e2;  // e1 <= e2
};

Smith smith2(const Rmat& m, const Int& p) {
  Rmat A = m;
  Rmat E = {1, 0, 0, 1};
  // pivot: entry of minimal valuation
  long best = std::numeric_limits<long>::max();
  int bi = 0;
  for (int i = 0; i < 4; ++i) {
    long v = val_or_max(A[i], p);
    if (v < best) best = v, bi = i;
  }
  if (bi >= 2) {  // swap rows; track E so that m = E * A throughout
    std::swap(A[0], A[2]);
    std::swap(A[1], A[3]);
    E = {0, 1, 1, 0};
    bi -= 2;
  }
  if (bi == 1) {  // swap columns (free)
    std::swap(A[0], A[1]);
    std::swap(A[2], A[3]);
  }
  if (A[2] != 0) {  // clear (2,1): A <- L A, E <- E L^{-1}
    Rat f = A[2] / A[0];
    A[2] = 0;
    A[3] -= f * A[1];
    E = mul(E, Rmat{1, 0, f, 1});
  }
  if (A[1] != 0) {  // clear (1,2): column op, free
    A[1] = 0;
  }
  long e1 = valuation(A[0], p), e2 = valuation(A[3], p);
  if (e1 > e2) {
    std::swap(e1, e2);
    E = mul(E, Rmat{0, 1, 1, 0});
  }
  return {E, e1, e2};
}

LatticeClass standard_odd(const Int& p) { return vertex_of(Mat2(), true, p); }

OrientedEdge make_edge(const LatticeClass& u, const LatticeClass& v) {
  if (u.parity() == v.parity()) throw std::logic_error("edge needs mixed parity");
  return u.parity() == 0 ? OrientedEdge{u, v} : OrientedEdge{v, u};
}

}  // namespace

std::array<Rat, 4> LatticeClass::basis() const {
  return {Rat(1), Rat(0), offdiag, ppow(prime, det_val)};
}

bool LatticeClass::operator<(const LatticeClass& o) const {
  if (prime != o.prime) return prime < o.prime;
  if (det_val != o.det_val) return det_val < o.det_val;
  return cmp(offdiag, o.offdiag) < 0;
}

LatticeClass lattice_class_of(const std::array<Rat, 4>& m, const Int& p) {
  if (!is_prime(p)) throw std::domain_error("lattice class at non-prime");
  Rmat A = m;
  if (det(A) == 0) throw std::domain_error("singular lattice basis");
  // pivot on the top-row entry of minimal valuation
  if (A[0] == 0 || (A[1] != 0 && valuation(A[1], p) < valuation(A[0], p))) {
    std::swap(A[0], A[1]);
    std::swap(A[2], A[3]);
  }
  // clear top-right with an integral column operation
  if (A[1] != 0) {
    Rat f = A[1] / A[0];
    A[1] = 0;
    A[3] -= f * A[2];
  }
  // scale columns by units so the diagonal is a pure power of p
  long a = valuation(A[0], p);
  Rat t = ppow(p, a) / A[0];
  A[0] *= t;
  A[2] *= t;
  long b = valuation(A[3], p);
  A[3] = ppow(p, b);
  // homothety-normalize the pivot to 1
  LatticeClass out;
  out.prime = p;
  out.det_val = b - a;
  out.offdiag = reduce_offdiag(A[2] / ppow(p, a), out.det_val, p);
  return out;
}

LatticeClass vertex_of(const Mat2& g, bool odd, const Int& p) {
  Rmat m = {g.a, g.b, g.c, g.d};
  if (odd) {
    Rat pr(p);
    m[1] *= pr;
    m[3] *= pr;
  }
  return lattice_class_of(m, p);
}

long distance(const LatticeClass& v1, const LatticeClass& v2) {
  if (v1.prime != v2.prime) throw std::invalid_argument("prime mismatch");
  Rmat c = mul(inv(v1.basis()), v2.basis());
  long minval = std::numeric_limits<long>::max();
  for (const Rat& e : c) minval = std::min(minval, val_or_max(e, v1.prime));
  long dv = valuation(det(c), v1.prime);
  return std::labs(dv - 2 * minval);
}

std::vector<LatticeClass> geodesic_vertices(const LatticeClass& v1,
                                            const LatticeClass& v2) {
  if (v1.prime != v2.prime) throw std::invalid_argument("prime mismatch");
  const Int& p = v1.prime;
  Rmat b1 = v1.basis();
  Smith s = smith2(mul(inv(b1), v2.basis()), p);
  Rmat f = mul(b1, s.U);
  std::vector<LatticeClass> path;
  for (long j = 0; j <= s.e2 - s.e1; ++j)
    path.push_back(lattice_class_of(
        {f[0], f[1] * ppow(p, j), f[2], f[3] * ppow(p, j)}, p));
  if (!(path.front() == v1) || !(path.back() == v2))
    throw std::logic_error("geodesic endpoints mismatch");
  return path;
}

std::vector<OrientedEdge> geodesic(const LatticeClass& v1,
                                   const LatticeClass& v2) {
  std::vector<LatticeClass> path = geodesic_vertices(v1, v2);
  std::vector<OrientedEdge> out;
  for (size_t i = 0; i + 1 < path.size(); ++i)
    out.push_back(make_edge(path[i], path[i + 1]));
  return out;
}

std::map<OrientedEdge, long long> alpha_preimage(
    const std::map<LatticeClass, long long>& chain,
    [[maybe_unused]] const Int& p, const LatticeClass& basepoint) {
  long long balance = 0;
  for (const auto& [v, n] : chain) balance += v.parity() == 0 ? -n : n;
  if (balance != 0)
    throw std::invalid_argument("0-chain is not in the image of alpha");
  std::map<OrientedEdge, long long> out;
  for (const auto& [v, n] : chain) {
    if (v == basepoint) continue;
    std::vector<LatticeClass> path = geodesic_vertices(v, basepoint);
    long long sign = 1;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      OrientedEdge e = make_edge(path[i], path[i + 1]);
      auto it = out.find(e);
      if (it == out.end()) {
        out.emplace(e, sign * n);
      } else if ((it->second += sign * n) == 0) {
        out.erase(it);
      }
      sign = -sign;
    }
  }
  return out;
}

std::map<OrientedEdge, long long> alpha_preimage(
    const std::map<LatticeClass, long long>& chain, const Int& p) {
  return alpha_preimage(chain, p, standard_odd(p));
}

Mat2 coset_section(const OrientedEdge& e) {
  const Int& p = e.head.prime;
  if (e.head.parity() != 0 || e.tail.parity() != 1)
    throw std::invalid_argument("edge orientation must be even -> odd");
  Rmat bh = e.head.basis();
  Smith s = smith2(mul(inv(bh), e.tail.basis()), p);
  if (s.e2 - s.e1 != 1) throw std::invalid_argument("vertices not adjacent");
  Rmat f = mul(bh, s.U);
  long v = valuation(det(f), p);
  if (v % 2 != 0) throw std::logic_error("adapted basis has odd determinant valuation");
  Rat scale = ppow(p, -v / 2);
  for (Rat& x : f) x *= scale;
  Rat u = det(f);  // unit at p
  f[1] /= u;
  f[3] /= u;
  Mat2 g(f[0], f[1], f[2], f[3]);
  if (!(vertex_of(g, false, p) == e.head) || !(vertex_of(g, true, p) == e.tail))
    throw std::logic_error("coset section does not realize the edge");
  return g;
}

OrientedEdge edge_of(const Mat2& g, const Int& p) {
  return {vertex_of(g, false, p), vertex_of(g, true, p)};
}

ResidueUnit delta(const MatChain& z, const Int& p) {
  if (z.degree != 2) throw std::invalid_argument("delta needs a degree-2 chain");
  if (!z.is_cycle()) throw std::invalid_argument("delta needs a cycle");
  if (!is_prime(p)) throw std::invalid_argument("delta needs a prime");

  LatticeClass v0 = standard_odd(p);
  // d2 of the lift z (x) (1 . odd basepoint): per term n[X|Y],
  // n([X](x)Y.v0 - [XY](x)v0 + [Y](x)v0), grouped by bar generator.
  std::map<Mat2, std::map<LatticeClass, long long>> lifted;
  auto add = [&](const Mat2& g, const LatticeClass& v, long long n) {
    auto& m = lifted[g];
    auto it = m.find(v);
    if (it == m.end()) {
      if (n != 0) m.emplace(v, n);
    } else if ((it->second += n) == 0) {
      m.erase(it);
    }
  };
  for (const auto& [t, n] : z.terms) {
    const Mat2 &X = t[0], &Y = t[1];
    add(X, vertex_of(Y, true, p), n);
    add(X * Y, v0, -n);
    add(Y, v0, n);
  }

  ResidueUnit value(p, 1);
  for (const auto& [g, chain] : lifted) {
    if (chain.empty()) continue;
    for (const auto& [e, n] : alpha_preimage(chain, p, v0)) {
      Mat2 r = coset_section(e);
      Mat2 gr = g * r;
      Mat2 gamma = coset_section(edge_of(gr, p)).inverse() * gr;
      if (!in_gamma0(gamma, p))
        throw std::logic_error("transported element left Gamma0");
      value = value * residue_unit(gamma.a, p).pow(n);
    }
  }
  return value;
}

}  // namespace h2sl2
