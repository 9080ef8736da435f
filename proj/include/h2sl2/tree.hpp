#pragma once

#include "h2sl2/cycles.hpp"

#include <array>
#include <map>

namespace h2sl2 {

// Homothety class of a Z_(p)-lattice in Q^2, in canonical triangular form
// (1, 0; offdiag, p^det_val): offdiag is 0 or n*p^v with v < det_val and
// n an integer prime to p in [1, p^(det_val - v)), unique per class.
// parity = det_val mod 2 distinguishes the two vertex orbits of the tree.
struct LatticeClass {
  Int prime;
  long det_val = 0;
  Rat offdiag = 0;

  int parity() const { return static_cast<int>(((det_val % 2) + 2) % 2); }
  std::array<Rat, 4> basis() const;

  bool operator==(const LatticeClass& o) const = default;
  bool operator<(const LatticeClass& o) const;
};

// Canonical class of the lattice spanned by the columns of a nonsingular
// rational matrix (row-major a,b,c,d).
LatticeClass lattice_class_of(const std::array<Rat, 4>& m, const Int& p);

// g * (Z_(p)^2) (even) or g * (Z_(p) + p Z_(p)) (odd).
LatticeClass vertex_of(const Mat2& g, bool odd, const Int& p);

struct OrientedEdge {
  LatticeClass head;  // even
  LatticeClass tail;  // odd

  bool operator==(const OrientedEdge& o) const = default;
  bool operator<(const OrientedEdge& o) const {
    return head < o.head || (head == o.head && tail < o.tail);
  }
};

long distance(const LatticeClass& v1, const LatticeClass& v2);

// Unique reduced path v1 = u_0, ..., u_d = v2.
std::vector<LatticeClass> geodesic_vertices(const LatticeClass& v1,
                                            const LatticeClass& v2);
// Its edges, each oriented even -> odd.
std::vector<OrientedEdge> geodesic(const LatticeClass& v1,
                                   const LatticeClass& v2);

// Unique 1-chain E with alpha(E) = chain, where alpha(edge) = head + tail.
// Precondition (checked): the even and odd augmentations agree.
std::map<OrientedEdge, long long> alpha_preimage(
    const std::map<LatticeClass, long long>& chain, const Int& p);
std::map<OrientedEdge, long long> alpha_preimage(
    const std::map<LatticeClass, long long>& chain, const Int& p,
    const LatticeClass& basepoint);

// Deterministic g in SL2(Q) with vertex_of(g,even) = head and
// vertex_of(g,odd) = tail; maps the standard edge to I.
Mat2 coset_section(const OrientedEdge& e);

OrientedEdge edge_of(const Mat2& g, const Int& p);

// Chain-level Mayer-Vietoris connecting map on a degree-2 cycle, landing in
// F_p^x. Sign convention calibrated so that
// delta([D(p)|D(u)] - [D(u)|D(p)], p) = u^2.
ResidueUnit delta(const MatChain& z, const Int& p);

}  // namespace h2sl2
