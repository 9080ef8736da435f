#pragma once

#include "h2sl2/cycles.hpp"
#include "h2sl2/symbols.hpp"
#include "h2sl2/tree.hpp"

namespace h2sl2 {

struct StructureFactor {
  std::string label;          // "Z" or "Z/(q-1)"
  std::optional<Int> order;   // nullopt = infinite
};

struct StructureDescriptor {
  Int m;
  std::vector<StructureFactor> factors;
};

// H_2(SL_2(Z[1/m])) = Z (+) sum over odd primes q | m of Z/(q-1).
// Requires 6 | m.
StructureDescriptor structure(const Int& m);

struct GeneratorCertificate {
  std::string name;           // e.g. "C(-1,-1)", "C(2,3)"
  MatChain cycle;
  Rat symbol_a, symbol_b;     // the claimed Steinberg symbol
  Rat lambda;
  std::map<Int, Int> tame_values;  // prime of m -> delta(cycle, p), in [1, p-1]
  Int sigma = 0;
  std::optional<Int> certified_order;  // nullopt = infinite
};

struct GeneratorsResult {
  std::vector<GeneratorCertificate> certificates;
  std::vector<std::string> warnings;  // e.g. unit-search NotFound reports
};

// One certificate per structure factor: bigF(-1,-1,lambda) for the Z factor
// and bigF(u_q, q, lambda) per odd q | m, u_q from find_su_primitive_root.
// lambda and lambda^2 - 1 must be units of Z[1/m].
GeneratorsResult generators(const Int& m, const Rat& lambda = Rat(3));

struct CertifyReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Recomputes everything the certificate claims: cycle property, delta at
// every prime of m against the symbol's tame data, sigma, order, primitive
// root + unit congruence conditions for torsion generators, and membership
// of the invariant in the m-supported subgroup.
CertifyReport certify(const GeneratorCertificate& cert, const Int& m);

struct MoritaEntry {
  std::vector<Int> primes;  // empty = the first-n-primes family marker
  bool in_k2_list;          // K_2(2) = full symbol group for this S
  bool in_uce_list;         // Steinberg extension is the universal one
  std::string note;
};

// Static cross-reference data; not recomputed.
std::vector<MoritaEntry> morita_table();

}  // namespace h2sl2
