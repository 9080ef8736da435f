#pragma once

#include "h2sl2/rational.hpp"

namespace h2sl2 {

// Exact 2x2 matrix over Q with determinant 1, row-major (a b; c d).
struct Mat2 {
  Rat a, b, c, d;

  Mat2() : a(1), d(1) {}
  Mat2(Rat a_, Rat b_, Rat c_, Rat d_);

  bool operator==(const Mat2& o) const = default;
  bool operator<(const Mat2& o) const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
};

Mat2 E12(const Rat& x);
Mat2 E21(const Rat& x);
Mat2 D(const Rat& u);        // diag(u, 1/u), u != 0
Mat2 Wmat();                 // (0 1; -1 0)
Mat2 G(const Rat& a);        // (0 -1; 1 a+1/a), a != 0
Mat2 H(const Rat& a);        // E21(a)
Mat2 R(const Rat& a);        // (a -1; 0 1/a), a != 0
Mat2 Htilde(const Rat& a);   // (1/(1-a) a/(1-a); a/(1+a) 1/(1+a)), a != 0, a^2 != 1

// a*X := M(a)^{-1} X M(a) with M(a) = diag(a, 1); a != 0.
Mat2 star_action(const Rat& a, const Mat2& X);

// Subgroup membership at a prime p (p-local conditions on entries).
bool in_sl2_local(const Mat2& X, const Int& p);   // all v_p >= 0
bool in_gamma0(const Mat2& X, const Int& p);      // local and v_p(c) >= 1
bool in_H_ptilde(const Mat2& X, const Int& p);    // stabilizer of Z_(p) + ptilde
bool in_sl2_zm(const Mat2& X, const SIntegerRing& ring);

}  // namespace h2sl2
