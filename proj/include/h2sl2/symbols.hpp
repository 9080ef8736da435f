#pragma once

#include "h2sl2/rational.hpp"

#include <array>
#include <map>

namespace h2sl2 {

// Complete invariant for K_2(2,Q): the sign character sigma plus the tame
// symbol at every finite prime (trivial entries dropped). Written additively;
// sigma adds, tame components multiply.
struct SymbolInvariant {
  Int sigma = 0;
  std::map<Int, Int> tame;  // prime -> value in [2, p-1]

  bool operator==(const SymbolInvariant& o) const = default;
  bool is_zero() const { return sigma == 0 && tame.empty(); }

  SymbolInvariant& operator+=(const SymbolInvariant& o);
  SymbolInvariant operator+(const SymbolInvariant& o) const {
    SymbolInvariant r = *this;
    r += o;
    return r;
  }
  SymbolInvariant operator-() const;
  SymbolInvariant operator-(const SymbolInvariant& o) const { return *this + (-o); }
  SymbolInvariant operator*(long long k) const;

  // nullopt = infinite order (sigma != 0); otherwise lcm of the
  // multiplicative orders of the tame entries (1 for the zero invariant).
  std::optional<Int> order() const;
};

// Invariant of the Steinberg symbol c(a,b): sigma = [a<0 and b<0], tame at p
// = (-1)^{v(a)v(b)} a^{-v(b)} b^{v(a)} mod p over the prime support of a, b.
SymbolInvariant invariant_of_symbol(const Rat& a, const Rat& b);

// a * c(u,v) = c(u, 1/a)^{-1} c(u, v/a) (square-class action).
SymbolInvariant star_on_symbol(const Rat& a, const Rat& u, const Rat& v);

// Residual invariant (LHS - RHS) of Matsumoto relation 1..5; contract: zero.
SymbolInvariant matsumoto_residual(int relation, const Rat& u, const Rat& v,
                                   const Rat& w = Rat(1));

// Residuals of c(u,v^2w)=c(u,v^2)c(u,w), c(u,v^2)=c(u,v)c(v,u)^{-1},
// c(u,v^2)=c(u^2,v); contract: all zero.
std::array<SymbolInvariant, 3> square_identities(const Rat& u, const Rat& v,
                                                 const Rat& w);

struct SymbolFactor {
  Rat x;   // v_p(x) = 1
  Rat u;   // v_p(u) = 0
  int exponent;
};

// Rewrites c(a,b) as a product of valuation-shaped generators c(x,u) at p,
// following the recursive generation argument; exact in K_2(2,Q).
std::vector<SymbolFactor> decompose(const Rat& a, const Rat& b, const Int& p);

// True iff the tame support is contained in the ring's primes.
bool is_in_Ktilde(const SymbolInvariant& inv, const SIntegerRing& ring);

}  // namespace h2sl2
