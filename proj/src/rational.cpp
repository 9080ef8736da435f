#include "h2sl2/rational.hpp"

#include <algorithm>
#include <numeric>

namespace h2sl2 {

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

static long valuation_int(const Int& n, const Int& p) {
  Int rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rat& r, const Int& p) {
  if (r == 0) throw std::domain_error("valuation of zero");
  if (!is_prime(p)) throw std::domain_error("valuation at non-prime");
  return valuation_int(r.get_num(), p) - valuation_int(r.get_den(), p);
}

ResidueUnit::ResidueUnit(Int p, Int v) : prime(std::move(p)), value(std::move(v)) {
  if (!is_prime(prime)) throw std::domain_error("residue modulus not prime");
  value %= prime;
  if (value < 0) value += prime;
  if (value == 0) throw std::domain_error("residue not a unit");
}

ResidueUnit ResidueUnit::operator*(const ResidueUnit& o) const {
  if (prime != o.prime) throw std::domain_error("residue prime mismatch");
  return ResidueUnit(prime, value * o.value % prime);
}

ResidueUnit ResidueUnit::inverse() const {
  Int inv;
  if (!mpz_invert(inv.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t()))
    throw std::domain_error("residue not invertible");
  return ResidueUnit(prime, inv);
}

ResidueUnit ResidueUnit::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Int r;
  mpz_powm_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e),
              prime.get_mpz_t());
  return ResidueUnit(prime, r);
}

ResidueUnit residue_unit(const Rat& r, const Int& p) {
  if (valuation(r, p) != 0) throw std::domain_error("residue of non-unit");
  Int dinv;
  Int den = r.get_den() % p;
  mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  return ResidueUnit(p, r.get_num() % p * dinv % p);
}

Int multiplicative_order(const ResidueUnit& u) {
  Int k = 1;
  ResidueUnit acc = u;
  while (!acc.is_one()) {
    acc = acc * u;
    ++k;
  }
  return k;
}

SIntegerRing::SIntegerRing(const Int& m_) : m(m_) {
  if (m <= 0) throw std::domain_error("S-integer ring needs positive m");
  Int rest = m;
  for (Int p = 2; rest > 1; ++p) {
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
    if (p * p > rest && rest > 1) {
      primes.push_back(rest);
      break;
    }
  }
  std::sort(primes.begin(), primes.end());
}

bool is_unit_in(const Rat& r, const SIntegerRing& ring) {
  if (r == 0) return false;
  Int n = abs(r.get_num()) * r.get_den();
  for (const Int& p : ring.primes) {
    Int rest;
    mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    n = rest;
  }
  return n == 1;
}

std::optional<Rat> find_su_primitive_root(const Int& q, const SIntegerRing& ring,
                                          int max_exponent) {
  if (std::find(ring.primes.begin(), ring.primes.end(), q) == ring.primes.end())
    throw std::domain_error("q is not a prime of the ring");

  std::vector<Int> others;
  for (const Int& p : ring.primes)
    if (p != q) others.push_back(p);

  // Adjustment factor: (q-free part of m)^k with k = lcm of (q_j - 1).
  Int mi = 1;
  for (const Int& p : others) mi *= p;
  Int k = 1;
  for (const Int& p : ring.primes) {
    Int pm1 = p - 1;
    mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), pm1.get_mpz_t());
  }
  Int adjust;
  mpz_pow_ui(adjust.get_mpz_t(), mi.get_mpz_t(), k.get_ui());

  auto is_primitive = [&](const Int& u) {
    Int r = u % q;
    if (r == 0) return false;
    return multiplicative_order(ResidueUnit(q, r)) == q - 1;
  };
  auto condition2 = [&](const Int& u) {
    for (const Int& p : others) {
      long e = valuation_int(u, p);
      if (!ResidueUnit(p, q % p).pow(e).is_one()) return false;
    }
    return true;
  };

  std::optional<Int> best;
  auto offer = [&](const Int& u) {
    if (is_primitive(u) && condition2(u) && (!best || u < *best)) best = u;
  };

  std::vector<int> e(others.size(), 0);
  while (true) {
    Int u = 1;
    for (size_t i = 0; i < others.size(); ++i) {
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), others[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      u *= pw;
    }
    offer(u);
    if (!condition2(u)) offer(u * adjust);
    size_t i = 0;
    for (; i < e.size(); ++i) {
      if (++e[i] <= max_exponent) break;
      e[i] = 0;
    }
    if (i == e.size()) break;
  }
  if (q == 2 && !best) best = 1;  // F_2^x is trivial; 1 generates it
  if (!best) return std::nullopt;
  return Rat(*best);
}

}  // namespace h2sl2
