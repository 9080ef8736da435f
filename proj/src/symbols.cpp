#include "h2sl2/symbols.hpp"

#include <algorithm>

namespace h2sl2 {

SymbolInvariant& SymbolInvariant::operator+=(const SymbolInvariant& o) {
  sigma += o.sigma;
  for (const auto& [p, v] : o.tame) {
    auto it = tame.find(p);
    if (it == tame.end()) {
      tame.emplace(p, v);
    } else {
      it->second = it->second * v % p;
      if (it->second == 1) tame.erase(it);
    }
  }
  return *this;
}

SymbolInvariant SymbolInvariant::operator-() const {
  SymbolInvariant r;
  r.sigma = -sigma;
  for (const auto& [p, v] : tame) {
    Int inv;
    mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    r.tame.emplace(p, inv);
  }
  return r;
}

SymbolInvariant SymbolInvariant::operator*(long long k) const {
  SymbolInvariant r;
  if (k == 0) return r;
  SymbolInvariant base = k > 0 ? *this : -*this;
  for (long long i = 0, n = k > 0 ? k : -k; i < n; ++i) r += base;
  return r;
}

std::optional<Int> SymbolInvariant::order() const {
  if (sigma != 0) return std::nullopt;
  Int k = 1;
  for (const auto& [p, v] : tame) {
    Int o = multiplicative_order(ResidueUnit(p, v));
    mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), o.get_mpz_t());
  }
  return k;
}

static void prime_support(const Rat& r, std::vector<Int>* out) {
  for (Int n : {Int(abs(r.get_num())), Int(r.get_den())}) {
    for (Int p = 2; n > 1; p += (p == 2 ? 1 : 2)) {
      if (p * p > n) {
        out->push_back(n);
        break;
      }
      if (n % p == 0) {
        out->push_back(p);
        do n /= p; while (n % p == 0);
      }
    }
  }
}

SymbolInvariant invariant_of_symbol(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw std::domain_error("symbol argument is zero");
  SymbolInvariant inv;
  if (a < 0 && b < 0) inv.sigma = 1;

  std::vector<Int> support;
  prime_support(a, &support);
  prime_support(b, &support);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  for (const Int& p : support) {
    long m = valuation(a, p), n = valuation(b, p);
    Rat pr(p);
    Rat au = a, bu = b;
    for (long i = 0; i < m; ++i) au /= pr;
    for (long i = 0; i > m; --i) au *= pr;
    for (long i = 0; i < n; ++i) bu /= pr;
    for (long i = 0; i > n; --i) bu *= pr;
    ResidueUnit t = residue_unit(au, p).pow(-n) * residue_unit(bu, p).pow(m);
    if ((static_cast<long long>(m) * n) % 2 != 0) t = t * ResidueUnit(p, p - 1);
    if (!t.is_one()) inv.tame.emplace(p, t.value);
  }
  return inv;
}

SymbolInvariant star_on_symbol(const Rat& a, const Rat& u, const Rat& v) {
  if (a == 0) throw std::domain_error("star by zero");
  return -invariant_of_symbol(u, 1 / a) + invariant_of_symbol(u, v / a);
}

SymbolInvariant matsumoto_residual(int relation, const Rat& u, const Rat& v,
                                   const Rat& w) {
  switch (relation) {
    case 1:  // c(u,v) = 0 if u = 1 or v = 1
      if (u != 1 && v != 1) throw std::domain_error("relation 1 needs u=1 or v=1");
      return invariant_of_symbol(u, v);
    case 2:  // c(u,v) = c(v^{-1}, u)
      return invariant_of_symbol(u, v) - invariant_of_symbol(1 / v, u);
    case 3:  // c(u,vw) + c(v,w) = c(uv,w) + c(u,v)
      return invariant_of_symbol(u, v * w) + invariant_of_symbol(v, w) -
             invariant_of_symbol(u * v, w) - invariant_of_symbol(u, v);
    case 4:  // c(u,v) = c(u, -uv)
      return invariant_of_symbol(u, v) - invariant_of_symbol(u, -u * v);
    case 5:  // c(u,v) = c(u, (1-u)v), u != 1
      if (u == 1) throw std::domain_error("relation 5 needs 1-u nonzero");
      return invariant_of_symbol(u, v) - invariant_of_symbol(u, (1 - u) * v);
    default:
      throw std::invalid_argument("relation must be 1..5");
  }
}

std::array<SymbolInvariant, 3> square_identities(const Rat& u, const Rat& v,
                                                 const Rat& w) {
  Rat v2 = v * v;
  return {invariant_of_symbol(u, v2 * w) - invariant_of_symbol(u, v2) -
              invariant_of_symbol(u, w),
          invariant_of_symbol(u, v2) - invariant_of_symbol(u, v) +
              invariant_of_symbol(v, u),
          invariant_of_symbol(u, v2) - invariant_of_symbol(u * u, v)};
}

namespace {

struct Decomposer {
  Rat pi;
  Int p;
  std::vector<SymbolFactor> out;

  long v(const Rat& r) const { return valuation(r, p); }

  // c(a,b) with both valuations >= 0.
  void reduce_nonneg(Rat a, Rat b, int e) {
    long va = v(a), vb = v(b);
    if (va == 0 && vb == 0) {
      // c(a,b) = c(pi,ab)^{-1} c(pi a, b) c(pi, a)  [relation (3)]
      out.push_back({pi, a * b, -e});
      out.push_back({pi * a, b, e});
      out.push_back({pi, a, e});
      return;
    }
    if (va > 0 && vb > 0) {
      if (vb <= va) {
        // c(a,b) = c(-a/b, b) via (2),(4),(2)
        reduce_nonneg(-a / b, b, e);
      } else {
        // c(a,b) = c(a, -b/a) via (4)
        reduce_nonneg(a, -b / a, e);
      }
      return;
    }
    if (va == 0) {
      // c(a,b) = c(b, 1/a) puts the positive valuation first
      reduce_nonneg(b, 1 / a, e);
      return;
    }
    // va > 0, vb == 0
    if (va == 1) {
      out.push_back({a, b, e});
      return;
    }
    // a = a' pi: c(a,b) = c(a', pi b) c(pi, b) c(a', pi)^{-1}  [relation (3)]
    Rat ap = a / pi;
    reduce_nonneg(ap, pi * b, e);
    out.push_back({pi, b, e});
    reduce_nonneg(ap, pi, -e);
  }

  void reduce(Rat a, Rat b, int e) {
    long va = v(a), vb = v(b);
    if (va < 0 && vb < 0) {
      reduce(1 / a, 1 / b, e);  // c(a,b) = c(1/a, 1/b)
    } else if (vb < 0) {
      reduce(1 / b, a, e);      // c(a,b) = c(1/b, a)
    } else if (va < 0) {
      reduce(b, 1 / a, e);      // c(a,b) = c(b, 1/a)
    } else {
      reduce_nonneg(a, b, e);
    }
  }
};

}  // namespace

std::vector<SymbolFactor> decompose(const Rat& a, const Rat& b, const Int& p) {
  if (a == 0 || b == 0) throw std::domain_error("symbol argument is zero");
  if (!is_prime(p)) throw std::domain_error("decompose at non-prime");
  Decomposer d{Rat(p), p, {}};
  d.reduce(a, b, 1);
  return std::move(d.out);
}

bool is_in_Ktilde(const SymbolInvariant& inv, const SIntegerRing& ring) {
  for (const auto& [p, v] : inv.tame) {
    (void)v;
    if (std::find(ring.primes.begin(), ring.primes.end(), p) == ring.primes.end())
      return false;
  }
  return true;
}

}  // namespace h2sl2
