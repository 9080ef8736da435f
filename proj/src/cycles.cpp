#include "h2sl2/cycles.hpp"

namespace h2sl2 {

static void require_lambda(const Rat& lambda) {
  if (lambda == 0 || lambda == 1 || lambda == -1)
    throw std::domain_error("lambda must avoid {0, 1, -1}");
}

MatChain theta(const Rat& a) {
  Mat2 winv = Wmat().inverse();
  MatChain z(2);
  z.add_term({H(a), G(a)}, 1);
  z.add_term({R(a), H(a)}, -1);
  z.add_term({winv, Wmat() * G(a)}, 1);
  return z;
}

MatChain theta_tilde(const Rat& a) {
  Mat2 winv = Wmat().inverse();
  MatChain z(2);
  z.add_term({Htilde(a), G(a)}, 1);
  z.add_term({D(a), Htilde(a)}, -1);
  z.add_term({winv, Wmat() * G(a)}, 1);
  return z;
}

MatChain psi(const Rat& x, const Rat& lambda) {
  require_lambda(lambda);
  Rat xp = x / (lambda * lambda - 1);
  MatChain z(2);
  z.add_term({E12(x), E12(xp) * D(lambda)}, 1);
  z.add_term({D(lambda), E12(xp)}, -1);
  z.add_term({E12(xp), D(lambda)}, 1);
  return z;
}

MatChain psi_multi(const Rat& x, const std::vector<std::pair<Rat, Rat>>& Lambda) {
  Rat rel = 0;
  for (const auto& [l, b] : Lambda) {
    require_lambda(l);
    if (b == 0) throw std::domain_error("psi_multi: b_i must be nonzero");
    rel += b * (l * l - 1);
  }
  if (rel != 1) throw std::domain_error("psi_multi: sum b_i(lambda_i^2-1) != 1");

  MatChain z(2);
  std::vector<Rat> y;
  for (const auto& [l, b] : Lambda) {
    y.push_back(x * b * (l * l - 1));
    z += psi(y.back(), l);
  }
  Rat s = y[0];
  for (size_t k = 1; k < y.size(); ++k) {
    z.add_term({E12(s), E12(y[k])}, -1);
    s += y[k];
  }
  return z;
}

static void collect_bigF(const Rat& a, const Rat& b, const Rat& lambda,
                         MatChain* out, size_t* raw_count) {
  if (a == 0 || b == 0) throw std::domain_error("bigF needs a, b nonzero");
  require_lambda(lambda);
  Rat ab = a * b;
  Rat xc = (a + 1 / b - 1) / ab;
  if (xc == 0) throw std::domain_error("bigF: a + 1/b = 1 would need Psi_0");

  MatChain z(2);
  Mat2 RaRb = R(a) * R(b);
  z.add_term({R(a), R(b)}, 1);
  z.add_term({RaRb, RaRb.inverse() * R(ab)}, 1);
  z += theta(a);
  z += theta(b);
  z -= theta(ab);
  z -= theta(Rat(1));
  z += psi(ab + 1 / ab, lambda);
  z -= psi(a + 1 / a, lambda);
  z -= psi(b + 1 / b, lambda);
  z += psi(rat(2), lambda);
  z -= psi(rat(-1), lambda);
  z -= psi(xc, lambda);
  if (out) *out = z;
  if (raw_count) *raw_count = 2 + 4 * 3 + 6 * 3;
}

MatChain bigF(const Rat& a, const Rat& b, const Rat& lambda) {
  MatChain z;
  collect_bigF(a, b, lambda, &z, nullptr);
  return z;
}

size_t bigF_raw_term_count(const Rat& a, const Rat& b, const Rat& lambda) {
  size_t n = 0;
  collect_bigF(a, b, lambda, nullptr, &n);
  return n;
}

MatChain bigF_tilde(const Rat& a, const Rat& b, const Rat& lambda) {
  if (a == 0 || b == 0) throw std::domain_error("bigF_tilde needs a, b nonzero");
  Rat ab = a * b;
  for (const Rat& t : {a, b, ab})
    if (t == 1 || t == -1) throw std::domain_error("bigF_tilde needs a, b, ab != +-1");
  require_lambda(lambda);

  MatChain z(2);
  z.add_term({D(a), D(b)}, 1);
  z += theta_tilde(a);
  z += theta_tilde(b);
  z -= theta_tilde(ab);
  z -= theta(Rat(1));
  z += psi(ab + 1 / ab, lambda);
  z -= psi(a + 1 / a, lambda);
  z -= psi(b + 1 / b, lambda);
  z += psi(rat(2), lambda);
  z -= psi(rat(-1), lambda);
  return z;
}

}  // namespace h2sl2
