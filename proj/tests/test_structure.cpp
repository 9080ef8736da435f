#include "h2sl2/io.hpp"
#include "h2sl2/structure.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <algorithm>

using namespace h2sl2;

namespace {

const GeneratorCertificate* find_cert(const GeneratorsResult& r,
                                      const std::string& name) {
  for (const auto& c : r.certificates)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("structure descriptors") {
  StructureDescriptor s6 = structure(6);
  REQUIRE(s6.factors.size() == 2);
  CHECK(s6.factors[0].label == "Z");
  CHECK(!s6.factors[0].order.has_value());
  CHECK(s6.factors[1].order == Int(2));

  StructureDescriptor s30 = structure(30);
  REQUIRE(s30.factors.size() == 3);
  CHECK(s30.factors[1].order == Int(2));
  CHECK(s30.factors[2].order == Int(4));

  StructureDescriptor s42 = structure(42);
  REQUIRE(s42.factors.size() == 3);
  CHECK(s42.factors[2].order == Int(6));

  CHECK_THROWS(structure(10));
  CHECK_THROWS(structure(4));
  CHECK_THROWS(structure(3));
}

TEST_CASE("generators for the basic rings") {
  GeneratorsResult r6 = generators(6);
  REQUIRE(r6.certificates.size() == 2);
  CHECK(r6.warnings.empty());
  const auto* z = find_cert(r6, "C(-1,-1)");
  REQUIRE(z != nullptr);
  CHECK(z->sigma == 1);
  CHECK(!z->certified_order.has_value());
  const auto* t3 = find_cert(r6, "C(2,3)");
  REQUIRE(t3 != nullptr);
  CHECK(t3->certified_order == Int(2));
  CHECK(t3->tame_values.at(3) == 2);

  GeneratorsResult r30 = generators(30);
  REQUIRE(r30.certificates.size() == 3);
  const auto* t5 = find_cert(r30, "C(2,5)");
  REQUIRE(t5 != nullptr);
  CHECK(t5->certified_order == Int(4));

  // 2 is not a primitive root mod 7; the search lands on 3
  GeneratorsResult r42 = generators(42);
  REQUIRE(r42.certificates.size() == 3);
  CHECK(find_cert(r42, "C(2,7)") == nullptr);
  const auto* t7 = find_cert(r42, "C(3,7)");
  REQUIRE(t7 != nullptr);
  CHECK(t7->certified_order == Int(6));
}

TEST_CASE("generator lambda validation") {
  CHECK_THROWS(generators(6, rat(5)));     // 5 not a unit of Z[1/6]
  CHECK_THROWS(generators(6, rat(9)));     // 9^2 - 1 = 80 has a factor of 5
  CHECK_NOTHROW(generators(30, rat(5)));
  CHECK_THROWS(generators(6, rat(1)));
  CHECK_THROWS(generators(6, rat(-1)));
}

TEST_CASE("all emitted certificates certify") {
  for (long m : {6L, 30L, 42L}) {
    GeneratorsResult r = generators(m);
    for (const auto& c : r.certificates) {
      CertifyReport rep = certify(c, m);
      CHECK(rep.ok);
      CHECK(rep.failures.empty());
    }
  }
}

TEST_CASE("certify rejects tampered certificates") {
  GeneratorsResult r = generators(6);
  GeneratorCertificate bad = *find_cert(r, "C(2,3)");
  bad.tame_values[3] = 1;
  CertifyReport rep = certify(bad, 6);
  CHECK(!rep.ok);
  CHECK(!rep.failures.empty());

  // C(2,7) over Z[1/42]: 2 is a unit but not a primitive root mod 7
  GeneratorCertificate c27 = *find_cert(generators(42), "C(3,7)");
  c27.name = "C(2,7)";
  c27.symbol_a = rat(2);
  c27.cycle = bigF(rat(2), rat(7), c27.lambda);
  SymbolInvariant inv = invariant_of_symbol(rat(2), rat(7));
  c27.sigma = inv.sigma;
  c27.tame_values.clear();
  for (const Int& p : SIntegerRing(42).primes) {
    auto it = inv.tame.find(p);
    c27.tame_values[p] = (it == inv.tame.end()) ? 1 : it->second;
  }
  c27.certified_order = inv.order();
  CertifyReport rep27 = certify(c27, 42);
  CHECK(!rep27.ok);
  bool mentions_order_or_root = false;
  for (const auto& f : rep27.failures)
    if (f.find("primitive") != std::string::npos ||
        f.find("order") != std::string::npos)
      mentions_order_or_root = true;
  CHECK(mentions_order_or_root);
}

namespace {

bool squarefree(long n) {
  for (long d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("orders multiply out across squarefree rings") {
  std::vector<long> ms;
  for (long m = 6; m <= 2310; m += 6)
    if (squarefree(m)) ms.push_back(m);
  for (long m : ms) {
    StructureDescriptor s = structure(m);
    GeneratorsResult r = generators(m);
    // The unit search can be provably empty for some (q, S): e.g. m = 102,
    // q = 17, where the congruence condition confines candidates to
    // <2, 9> mod 17, a subgroup of the squares. Each such factor must be
    // reported as a warning, never papered over with a bad certificate.
    REQUIRE(r.certificates.size() + r.warnings.size() == s.factors.size());
    Int torsion_expected = 1, torsion_got = 1;
    for (const auto& f : s.factors)
      if (f.order) torsion_expected *= *f.order;
    for (const auto& c : r.certificates) {
      CHECK(certify(c, m).ok);
      if (c.certified_order) torsion_got *= *c.certified_order;
    }
    if (r.warnings.empty()) CHECK(torsion_got == torsion_expected);
  }
}

TEST_CASE("some rings provably have no S-unit primitive root") {
  // m = 102: u must be 2^a 9^c mod 17 and 2 = 6^2 is a square mod 17, so
  // every candidate is a square; the search must report NotFound.
  GeneratorsResult r = generators(102);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("q = 17") != std::string::npos);
  CHECK(r.certificates.size() == 2);  // C(-1,-1) and C(2,3) still certify
  for (const auto& c : r.certificates) CHECK(certify(c, 102).ok);
}

TEST_CASE("cross-reference table contents") {
  auto table = morita_table();
  int family_markers = 0, both = 0;
  bool has_k2_only_25 = false;
  for (const auto& e : table) {
    if (e.primes.empty()) {
      ++family_markers;
      CHECK(e.in_k2_list);
      continue;
    }
    if (e.primes == std::vector<Int>{2, 5}) {
      has_k2_only_25 = true;
      CHECK(e.in_k2_list);
      CHECK(!e.in_uce_list);
    }
    if (e.in_k2_list && e.in_uce_list) ++both;
  }
  CHECK(family_markers == 1);
  CHECK(has_k2_only_25);
  CHECK(both == 7);
  for (const auto& e : table)
    if (e.in_uce_list && !e.primes.empty()) {
      CHECK(std::find(e.primes.begin(), e.primes.end(), Int(2)) !=
            e.primes.end());
      CHECK(std::find(e.primes.begin(), e.primes.end(), Int(3)) !=
            e.primes.end());
    }
}

TEST_CASE("serialization is deterministic") {
  GeneratorsResult a = generators(30);
  GeneratorsResult b = generators(30);
  REQUIRE(a.certificates.size() == b.certificates.size());
  for (size_t i = 0; i < a.certificates.size(); ++i) {
    CHECK(to_json(a.certificates[i], true).dump() ==
          to_json(b.certificates[i], true).dump());
  }
  CHECK(to_json(structure(30)).dump() == to_json(structure(30)).dump());
}

TEST_CASE("certificate JSON shape") {
  GeneratorsResult r = generators(6);
  json j = to_json(*find_cert(r, "C(2,3)"), true);
  CHECK(j["name"] == "C(2,3)");
  CHECK(j["symbol"][0] == "2");
  CHECK(j["symbol"][1] == "3");
  CHECK(j["order"] == "2");
  CHECK(j["certified"] == true);
  CHECK(j["cycle"]["degree"] == 2);
  CHECK(j["tame"]["3"] == "2");

  json jz = to_json(*find_cert(r, "C(-1,-1)"), true);
  CHECK(jz["order"] == "inf");
  CHECK(jz["sigma"] == 1);
}
