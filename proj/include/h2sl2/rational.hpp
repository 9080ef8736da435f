#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace h2sl2 {

// Exact rationals. mpq_class is always stored canonically: reduced to lowest
// terms, denominator > 0, so structural equality is value equality.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// Parses "num" or "num/den" with decimal-string integers.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

bool is_prime(const Int& p);

// v_p(r) for nonzero r: multiplicity of p in the numerator minus the
// multiplicity in the denominator. Rejects r = 0 and composite p.
long valuation(const Rat& r, const Int& p);

struct ResidueUnit {
  Int prime;
  Int value;  // in [1, prime-1]

  ResidueUnit(Int p, Int v);
  ResidueUnit operator*(const ResidueUnit& o) const;
  ResidueUnit inverse() const;
  ResidueUnit pow(long e) const;
  bool operator==(const ResidueUnit& o) const = default;
  bool is_one() const { return value == 1; }
};

// r mod p for v_p(r) = 0: numerator * denominator^{-1} (mod p).
ResidueUnit residue_unit(const Rat& r, const Int& p);

// Least k >= 1 with u^k = 1; divides p-1.
Int multiplicative_order(const ResidueUnit& u);

struct SIntegerRing {
  Int m;
  std::vector<Int> primes;  // sorted distinct prime factors of m

  explicit SIntegerRing(const Int& m);
};

// True iff r != 0 and every prime in the factorization of r divides m.
bool is_unit_in(const Rat& r, const SIntegerRing& ring);

// Searches for a positive S-unit u = prod q_j^{e_j} (q_j ring primes, q
// excluded) that is a primitive root mod q and satisfies
// q^{v_{q_j}(u)} == 1 (mod q_j) at every other ring prime q_j.
// Bounded-exhaustive over exponent vectors in [0, max_exponent]; candidates
// failing the congruence condition are retried multiplied by (m/q-part)^k,
// k = lcm of (q_j - 1). Smallest integer value wins. nullopt = NotFound.
std::optional<Rat> find_su_primitive_root(const Int& q, const SIntegerRing& ring,
                                          int max_exponent = 12);

}  // namespace h2sl2
