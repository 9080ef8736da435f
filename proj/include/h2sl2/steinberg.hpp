#pragma once

#include "h2sl2/cycles.hpp"
#include "h2sl2/symbols.hpp"

#include <variant>

namespace h2sl2 {

enum class LKind { X12, X21, W, H, Sym };

// One letter of St_2(Q): x12(t), x21(t), w12(u), h12(u)^{+-1}, c(u,v)^{+-1}.
struct Letter {
  LKind kind;
  Rat t;        // X12/X21/W payload, H payload, Sym first argument
  Rat v = 0;    // Sym second argument
  int exp = 1;  // +-1 for H and Sym; +1 otherwise

  static Letter x12(Rat a) { return {LKind::X12, std::move(a)}; }
  static Letter x21(Rat a) { return {LKind::X21, std::move(a)}; }
  static Letter w(Rat u);
  static Letter h(Rat u, int e = 1);
  static Letter sym(Rat u, Rat v, int e = 1);

  bool operator==(const Letter& o) const = default;
};

using Word = std::vector<Letter>;

Mat2 phi_letter(const Letter& l);
Mat2 phi(const Word& w);

Word word_inverse(const Word& w);

// Text round-trip: `x12(3/2) w12(-1) h12(5) c(2,3)^-1`.
std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s);

// Bruhat section: phi(section_s(X)) = X, no Symbol letters.
Word section_s(const Mat2& X);

// f_s(X,Y) = s(X) s(Y) s(XY)^{-1}; phi of the result is the identity.
Word cocycle_f(const Mat2& X, const Mat2& Y);

// The spec'd rule catalogue (each application preserves phi).
enum class RuleId { R1, R2, R3, R4, R5, R6, R7, R8, R9 };
std::optional<Word> apply_rule(const Word& w, RuleId rule, size_t pos);

struct SymbolTerm {
  Rat u, v;
  int exponent;
};

struct SimplifyResult {
  bool timed_out = false;
  std::vector<SymbolTerm> symbols;  // valid only if !timed_out
  long long steps = 0;
};

// Reduces a word with phi(w) = I to a product of central symbols by budgeted
// best-first search over exact rewrite steps. Timeout is a value.
SimplifyResult simplify(const Word& w, long long budget = 100000);

SymbolInvariant invariant_of_symbols(const std::vector<SymbolTerm>& syms);

// Sum over terms n[X|Y] of n * invariant(simplify(f_s(X,Y))).
std::optional<SymbolInvariant> evaluate_cycle(const MatChain& z,
                                              long long budget = 100000);

}  // namespace h2sl2
