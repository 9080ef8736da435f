#include "h2sl2/mat2.hpp"

namespace h2sl2 {

Mat2::Mat2(Rat a_, Rat b_, Rat c_, Rat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a * d - b * c != 1) throw std::domain_error("matrix determinant is not 1");
}

bool Mat2::operator<(const Mat2& o) const {
  int s = cmp(a, o.a);
  if (s) return s < 0;
  s = cmp(b, o.b);
  if (s) return s < 0;
  s = cmp(c, o.c);
  if (s) return s < 0;
  return cmp(d, o.d) < 0;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2(a * o.a + b * o.c, a * o.b + b * o.d,
              c * o.a + d * o.c, c * o.b + d * o.d);
}

Mat2 Mat2::inverse() const { return Mat2(d, -b, -c, a); }

Mat2 E12(const Rat& x) { return Mat2(1, x, 0, 1); }
Mat2 E21(const Rat& x) { return Mat2(1, 0, x, 1); }

Mat2 D(const Rat& u) {
  if (u == 0) throw std::domain_error("D(0)");
  return Mat2(u, 0, 0, 1 / u);
}

Mat2 Wmat() { return Mat2(0, 1, -1, 0); }

Mat2 G(const Rat& a) {
  if (a == 0) throw std::domain_error("G(0)");
  return Mat2(0, -1, 1, a + 1 / a);
}

Mat2 H(const Rat& a) { return E21(a); }

Mat2 R(const Rat& a) {
  if (a == 0) throw std::domain_error("R(0)");
  return Mat2(a, -1, 0, 1 / a);
}

Mat2 Htilde(const Rat& a) {
  if (a == 0 || a == 1 || a == -1) throw std::domain_error("Htilde needs a^2 != 0, 1");
  return Mat2(1 / (1 - a), a / (1 - a), a / (1 + a), 1 / (1 + a));
}

Mat2 star_action(const Rat& a, const Mat2& X) {
  if (a == 0) throw std::domain_error("star_action by 0");
  return Mat2(X.a, X.b / a, X.c * a, X.d);
}

static bool nonneg_val(const Rat& x, const Int& p, long bound) {
  return x == 0 || valuation(x, p) >= bound;
}

bool in_sl2_local(const Mat2& X, const Int& p) {
  return nonneg_val(X.a, p, 0) && nonneg_val(X.b, p, 0) &&
         nonneg_val(X.c, p, 0) && nonneg_val(X.d, p, 0);
}

bool in_gamma0(const Mat2& X, const Int& p) {
  return in_sl2_local(X, p) && nonneg_val(X.c, p, 1);
}

bool in_H_ptilde(const Mat2& X, const Int& p) {
  // Stabilizer of the lattice Z_(p) + ptilde: a,d integral, c in p, b in p^{-1}.
  return nonneg_val(X.a, p, 0) && nonneg_val(X.d, p, 0) &&
         nonneg_val(X.c, p, 1) && nonneg_val(X.b, p, -1);
}

bool in_sl2_zm(const Mat2& X, const SIntegerRing& ring) {
  for (const Rat* x : {&X.a, &X.b, &X.c, &X.d}) {
    if (*x == 0) continue;
    Int den = x->get_den();
    for (const Int& p : ring.primes) {
      Int rest;
      mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      den = rest;
    }
    if (den != 1) return false;
  }
  return true;
}

}  // namespace h2sl2
