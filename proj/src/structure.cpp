#include "h2sl2/structure.hpp"

#include <algorithm>
#include <sstream>

namespace h2sl2 {

StructureDescriptor structure(const Int& m) {
  if (m <= 0 || m % 6 != 0)
    throw std::domain_error(
        "structure theorem requires 6 | m (hypothesis of the rank-1 "
        "S-integer computation)");
  SIntegerRing ring(m);
  StructureDescriptor d;
  d.m = m;
  d.factors.push_back({"Z", std::nullopt});
  for (const Int& q : ring.primes) {
    if (q == 2) continue;  // F_2^x is trivial
    std::ostringstream label;
    label << "Z/" << (q - 1);
    d.factors.push_back({label.str(), Int(q - 1)});
  }
  return d;
}

static std::string symbol_name(const Rat& a, const Rat& b) {
  return "C(" + rat_to_string(a) + "," + rat_to_string(b) + ")";
}

static GeneratorCertificate make_certificate(const Rat& a, const Rat& b,
                                             const Rat& lambda,
                                             const SIntegerRing& ring) {
  GeneratorCertificate cert;
  cert.name = symbol_name(a, b);
  cert.symbol_a = a;
  cert.symbol_b = b;
  cert.lambda = lambda;
  cert.cycle = bigF(a, b, lambda);
  SymbolInvariant inv = invariant_of_symbol(a, b);
  cert.sigma = inv.sigma;
  cert.certified_order = inv.order();
  for (const Int& p : ring.primes)
    cert.tame_values.emplace(p, delta(cert.cycle, p).value);
  return cert;
}

GeneratorsResult generators(const Int& m, const Rat& lambda) {
  if (m <= 0 || m % 6 != 0)
    throw std::domain_error("generators requires 6 | m");
  SIntegerRing ring(m);
  if (!is_unit_in(lambda, ring) || !is_unit_in(lambda * lambda - 1, ring))
    throw std::domain_error(
        "lambda and lambda^2 - 1 must be units of Z[1/m]");

  GeneratorsResult res;
  res.certificates.push_back(make_certificate(-1, -1, lambda, ring));
  for (const Int& q : ring.primes) {
    if (q == 2) continue;
    std::optional<Rat> u = find_su_primitive_root(q, ring);
    if (!u) {
      std::ostringstream os;
      os << "no S-unit primitive root found for q = " << q
         << " within the search bound";
      res.warnings.push_back(os.str());
      continue;
    }
    res.certificates.push_back(make_certificate(*u, Rat(q), lambda, ring));
  }
  return res;
}

CertifyReport certify(const GeneratorCertificate& cert, const Int& m) {
  CertifyReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };
  if (m <= 0 || m % 6 != 0) {
    fail("6 does not divide m");
    return rep;
  }
  SIntegerRing ring(m);

  if (!cert.cycle.is_cycle()) fail("chain is not a cycle");

  SymbolInvariant inv = invariant_of_symbol(cert.symbol_a, cert.symbol_b);
  if (inv.sigma != cert.sigma) fail("sigma mismatch");
  if (inv.order() != cert.certified_order) fail("order mismatch");
  if (!is_in_Ktilde(inv, ring))
    fail("symbol invariant has tame support outside the primes of m");

  for (const Int& p : ring.primes) {
    Int expected = 1;
    if (auto it = inv.tame.find(p); it != inv.tame.end()) expected = it->second;
    Int computed = cert.cycle.is_cycle() ? delta(cert.cycle, p).value : Int(0);
    if (computed != expected) {
      std::ostringstream os;
      os << "delta at " << p << " = " << computed
         << " disagrees with the tame symbol " << expected;
      fail(os.str());
    }
    auto it = cert.tame_values.find(p);
    if (it == cert.tame_values.end() || it->second != computed) {
      std::ostringstream os;
      os << "stored tame value at " << p << " does not match delta";
      fail(os.str());
    }
  }

  // Torsion generators C(u,q): u must be a primitive root mod q and satisfy
  // q^{v_p(u)} = 1 (mod p) at every other prime p of m, which pins the
  // invariant's order to exactly q - 1.
  bool torsion_shape = cert.symbol_b.get_den() == 1 &&
                       is_prime(Int(cert.symbol_b.get_num())) &&
                       cert.symbol_b > 2;
  if (torsion_shape) {
    Int q(cert.symbol_b.get_num());
    const Rat& u = cert.symbol_a;
    if (std::find(ring.primes.begin(), ring.primes.end(), q) ==
        ring.primes.end()) {
      fail("q is not a prime of m");
    } else if (!is_unit_in(u, ring) || valuation(u, q) != 0) {
      fail("u is not a q-unit of Z[1/m]");
    } else {
      if (multiplicative_order(residue_unit(u, q)) != q - 1)
        fail("u is not a primitive root mod q");
      for (const Int& p : ring.primes) {
        if (p == q) continue;
        if (!ResidueUnit(p, q % p).pow(valuation(u, p)).is_one()) {
          std::ostringstream os;
          os << "q^{v_" << p << "(u)} != 1 (mod " << p << ")";
          fail(os.str());
        }
      }
      if (cert.certified_order && *cert.certified_order != q - 1)
        fail("certified order is not q - 1");
    }
  }
  return rep;
}

std::vector<MoritaEntry> morita_table() {
  std::vector<MoritaEntry> t;
  t.push_back({{},
               true,
               true,
               "family: S = the first n successive primes; K_2(2) statement "
               "for all n, universal-central-extension statement for n >= 2 "
               "(needs 6 | m)"});
  t.push_back({{2, 5}, true, false,
               "in the K_2(2) list only; 6 does not divide 10, so the "
               "structure theorem does not apply"});
  const std::vector<std::vector<Int>> both = {
      {2, 3, 7},  {2, 3, 11}, {2, 3, 5, 11}, {2, 3, 13},
      {2, 3, 7, 13}, {2, 3, 17}, {2, 3, 5, 19}};
  for (const auto& s : both)
    t.push_back({s, true, true, "UCE certified by Morita + this work"});
  return t;
}

}  // namespace h2sl2
