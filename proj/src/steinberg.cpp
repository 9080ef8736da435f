#include "h2sl2/steinberg.hpp"

#include <queue>
#include <set>
#include <sstream>

namespace h2sl2 {

Letter Letter::w(Rat u) {
  if (u == 0) throw std::domain_error("w12 payload must be nonzero");
  return {LKind::W, std::move(u)};
}

Letter Letter::h(Rat u, int e) {
  if (u == 0) throw std::domain_error("h12 payload must be nonzero");
  if (e != 1 && e != -1) throw std::domain_error("h12 exponent must be +-1");
  return {LKind::H, std::move(u), 0, e};
}

Letter Letter::sym(Rat u, Rat v, int e) {
  if (u == 0 || v == 0) throw std::domain_error("symbol payload must be nonzero");
  if (e != 1 && e != -1) throw std::domain_error("symbol exponent must be +-1");
  return {LKind::Sym, std::move(u), std::move(v), e};
}

Mat2 phi_letter(const Letter& l) {
  switch (l.kind) {
    case LKind::X12: return E12(l.t);
    case LKind::X21: return E21(l.t);
    case LKind::W:   return Mat2(0, l.t, -1 / l.t, 0);
    case LKind::H:   return l.exp == 1 ? D(l.t) : D(1 / l.t);
    case LKind::Sym: return Mat2();
  }
  throw std::logic_error("unknown letter kind");
}

Mat2 phi(const Word& w) {
  Mat2 m;
  for (const Letter& l : w) m = m * phi_letter(l);
  return m;
}

Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Letter l = *it;
    switch (l.kind) {
      case LKind::X12:
      case LKind::X21:
      case LKind::W:   l.t = -l.t; break;
      case LKind::H:
      case LKind::Sym: l.exp = -l.exp; break;
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w) {
    if (!first) os << ' ';
    first = false;
    switch (l.kind) {
      case LKind::X12: os << "x12(" << rat_to_string(l.t) << ')'; break;
      case LKind::X21: os << "x21(" << rat_to_string(l.t) << ')'; break;
      case LKind::W:   os << "w12(" << rat_to_string(l.t) << ')'; break;
      case LKind::H:
        os << "h12(" << rat_to_string(l.t) << ')';
        if (l.exp == -1) os << "^-1";
        break;
      case LKind::Sym:
        os << "c(" << rat_to_string(l.t) << ',' << rat_to_string(l.v) << ')';
        if (l.exp == -1) os << "^-1";
        break;
    }
  }
  return os.str();
}

Word word_from_string(const std::string& s) {
  Word out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    size_t lp = tok.find('(');
    size_t rp = tok.rfind(')');
    if (lp == std::string::npos || rp == std::string::npos || rp < lp)
      throw std::invalid_argument("malformed letter: " + tok);
    std::string name = tok.substr(0, lp);
    std::string args = tok.substr(lp + 1, rp - lp - 1);
    std::string tail = tok.substr(rp + 1);
    int exp = 1;
    if (!tail.empty()) {
      if (tail == "^-1") exp = -1;
      else if (tail == "^1" || tail == "^+1") exp = 1;
      else throw std::invalid_argument("malformed exponent: " + tok);
    }
    if (name == "c") {
      size_t comma = args.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("symbol needs two arguments: " + tok);
      out.push_back(Letter::sym(rat_from_string(args.substr(0, comma)),
                                rat_from_string(args.substr(comma + 1)), exp));
    } else {
      Rat t = rat_from_string(args);
      if (name == "x12") out.push_back(Letter::x12(exp == 1 ? t : Rat(-t)));
      else if (name == "x21") out.push_back(Letter::x21(exp == 1 ? t : Rat(-t)));
      else if (name == "w12") out.push_back(Letter::w(exp == 1 ? t : Rat(-t)));
      else if (name == "h12") out.push_back(Letter::h(t, exp));
      else throw std::invalid_argument("unknown letter: " + tok);
    }
  }
  return out;
}

Word section_s(const Mat2& X) {
  Word w;
  if (X.c == 0) {
    // X = (a, b; 0, 1/a) = E12(ab) D(a)
    if (X.a * X.b != 0) w.push_back(Letter::x12(X.a * X.b));
    if (X.a != 1) w.push_back(Letter::h(X.a));
  } else {
    if (X.a != 0) w.push_back(Letter::x12(X.a / X.c));
    w.push_back(Letter::w(-1 / X.c));
    if (X.d != 0) w.push_back(Letter::x12(X.d / X.c));
  }
  return w;
}

Word cocycle_f(const Mat2& X, const Mat2& Y) {
  Word w = section_s(X);
  Word sy = section_s(Y);
  w.insert(w.end(), sy.begin(), sy.end());
  Word inv = word_inverse(section_s(X * Y));
  w.insert(w.end(), inv.begin(), inv.end());
  return w;
}

namespace {

Rat sq(const Rat& u) { return u * u; }

#ifdef H2SL2_CHECKED_REWRITES
void check_phi(const Word& before, const Word& after, const char* what) {
  if (!(phi(before) == phi(after)))
    throw std::logic_error(std::string("rewrite changed phi: ") + what);
}
#define PHI_GUARD(before, after, what) check_phi(before, after, what)
#else
#define PHI_GUARD(before, after, what) ((void)0)
#endif

// Deterministic, phi-preserving normalization: strips central symbols into
// the accumulator, drops trivial letters, merges adjacent x- and h-letters,
// pushes h- then w-letters to the right end, and contracts w-pairs to
// h-letters. Terminates: each step decreases (#w, w-to-x right distance,
// h right distance, length) lexicographically.
void normalize(Word* w, std::vector<SymbolTerm>* syms) {
#ifdef H2SL2_CHECKED_REWRITES
  Mat2 expect = phi(*w);
#endif
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < w->size(); ++i) {
      Letter& l = (*w)[i];
      if (l.kind == LKind::Sym) {
        syms->push_back({l.t, l.v, l.exp});
        w->erase(w->begin() + i);
        changed = true;
        break;
      }
      if ((l.kind == LKind::X12 || l.kind == LKind::X21) && l.t == 0) {
        w->erase(w->begin() + i);
        changed = true;
        break;
      }
      if (l.kind == LKind::H && l.t == 1) {
        w->erase(w->begin() + i);
        changed = true;
        break;
      }
      if (l.kind == LKind::H && l.exp == -1) {
        // h(u)^{-1} = c(u,1/u)^{-1} h(1/u)
        syms->push_back({l.t, 1 / l.t, -1});
        l = Letter::h(1 / l.t);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (size_t i = 0; i + 1 < w->size(); ++i) {
      Letter& A = (*w)[i];
      Letter& B = (*w)[i + 1];
      if (A.kind == B.kind && (A.kind == LKind::X12 || A.kind == LKind::X21)) {
        A.t += B.t;
        w->erase(w->begin() + i + 1);
        changed = true;
        break;
      }
      if (A.kind == LKind::H && B.kind == LKind::H) {
        // h(u)h(v) = c(u,v) h(uv)
        syms->push_back({A.t, B.t, 1});
        Rat uv = A.t * B.t;
        w->erase(w->begin() + i + 1);
        if (uv == 1) w->erase(w->begin() + i);
        else (*w)[i] = Letter::h(uv);
        changed = true;
        break;
      }
      if (A.kind == LKind::H &&
          (B.kind == LKind::X12 || B.kind == LKind::X21 || B.kind == LKind::W)) {
        Rat u2 = sq(A.t);
        Letter moved = B;
        if (B.kind == LKind::X12) moved.t = (A.exp == 1 ? Rat(u2 * B.t) : Rat(B.t / u2));
        if (B.kind == LKind::X21) moved.t = (A.exp == 1 ? Rat(B.t / u2) : Rat(u2 * B.t));
        if (B.kind == LKind::W)   moved.t = (A.exp == 1 ? Rat(u2 * B.t) : Rat(B.t / u2));
        Letter h = A;
        (*w)[i] = moved;
        (*w)[i + 1] = h;
        changed = true;
        break;
      }
      if (A.kind == LKind::W && B.kind == LKind::W) {
        // w(u)w(v) = h(u) h(-v)^{-1}
        Letter hu = Letter::h(A.t);
        Letter hv = Letter::h(-B.t, -1);
        A = hu;
        B = hv;
        changed = true;
        break;
      }
      if (A.kind == LKind::W &&
          (B.kind == LKind::X12 || B.kind == LKind::X21)) {
        Rat u2 = sq(A.t);
        Letter moved = B.kind == LKind::X12 ? Letter::x21(-B.t / u2)
                                            : Letter::x12(-u2 * B.t);
        Letter wl = A;
        (*w)[i] = moved;
        (*w)[i + 1] = wl;
        changed = true;
        break;
      }
    }
  }
#ifdef H2SL2_CHECKED_REWRITES
  if (!(phi(*w) == expect)) throw std::logic_error("normalize changed phi");
#endif
}

}  // namespace

std::optional<Word> apply_rule(const Word& w, RuleId rule, size_t pos) {
  if (pos >= w.size()) return std::nullopt;
  auto kind = [&](size_t i) { return w[i].kind; };
  auto have = [&](size_t n) { return pos + n <= w.size(); };
  Word out = w;
  switch (rule) {
    case RuleId::R1: {  // x(s) x(t) -> x(s+t), same side
      if (!have(2) || kind(pos) != kind(pos + 1) ||
          (kind(pos) != LKind::X12 && kind(pos) != LKind::X21))
        return std::nullopt;
      out[pos].t += out[pos + 1].t;
      out.erase(out.begin() + pos + 1);
      break;
    }
    case RuleId::R2:
    case RuleId::R3:
    case RuleId::R4: {
      if (rule == RuleId::R2) {  // w(u) x(t) w(-u) -> flipped x
        if (!have(3) || kind(pos) != LKind::W || kind(pos + 2) != LKind::W ||
            w[pos].t != -w[pos + 2].t ||
            (kind(pos + 1) != LKind::X12 && kind(pos + 1) != LKind::X21))
          return std::nullopt;
        Rat u2 = sq(w[pos].t);
        Letter flipped = kind(pos + 1) == LKind::X12
                             ? Letter::x21(-w[pos + 1].t / u2)
                             : Letter::x12(-u2 * w[pos + 1].t);
        out.erase(out.begin() + pos, out.begin() + pos + 3);
        out.insert(out.begin() + pos, flipped);
        break;
      }
      // R3: w(u) x12(t) -> x21(-t/u^2) w(u); R4: w(u) x21(t) -> x12(-u^2 t) w(u)
      LKind want = rule == RuleId::R3 ? LKind::X12 : LKind::X21;
      if (!have(2) || kind(pos) != LKind::W || kind(pos + 1) != want)
        return std::nullopt;
      Rat u2 = sq(w[pos].t);
      Letter flipped = want == LKind::X12 ? Letter::x21(-w[pos + 1].t / u2)
                                          : Letter::x12(-u2 * w[pos + 1].t);
      out[pos + 1] = out[pos];
      out[pos] = flipped;
      break;
    }
    case RuleId::R5: {
      // Sandwich h(u)^e x(t) h(u)^{-e} -> scaled x; or push h(u)^e x(t) ->
      // scaled x, h(u)^e.
      if (!have(2) || kind(pos) != LKind::H ||
          (kind(pos + 1) != LKind::X12 && kind(pos + 1) != LKind::X21))
        return std::nullopt;
      Rat u2 = sq(w[pos].t);
      bool up = (kind(pos + 1) == LKind::X12) == (w[pos].exp == 1);
      Letter scaled = w[pos + 1];
      scaled.t = up ? Rat(u2 * scaled.t) : Rat(scaled.t / u2);
      if (have(3) && kind(pos + 2) == LKind::H && w[pos + 2].t == w[pos].t &&
          w[pos + 2].exp == -w[pos].exp) {
        out.erase(out.begin() + pos, out.begin() + pos + 3);
        out.insert(out.begin() + pos, scaled);
      } else {
        out[pos + 1] = out[pos];
        out[pos] = scaled;
      }
      break;
    }
    case RuleId::R6: {  // cancel adjacent inverse pair
      if (!have(2)) return std::nullopt;
      const Letter &A = w[pos], &B = w[pos + 1];
      bool cancels =
          (A.kind == B.kind &&
           ((A.kind == LKind::X12 || A.kind == LKind::X21 || A.kind == LKind::W)
                ? A.t == -B.t
                : A.t == B.t && A.v == B.v && A.exp == -B.exp));
      if (!cancels) return std::nullopt;
      out.erase(out.begin() + pos, out.begin() + pos + 2);
      break;
    }
    case RuleId::R7: {
      if (have(2) && kind(pos) == LKind::H && kind(pos + 1) == LKind::H &&
          w[pos].exp == 1 && w[pos + 1].exp == 1) {
        // h(u) h(v) -> c(u,v) h(uv)
        Rat u = w[pos].t, v = w[pos + 1].t;
        out.erase(out.begin() + pos, out.begin() + pos + 2);
        if (u * v != 1) out.insert(out.begin() + pos, Letter::h(u * v));
        out.insert(out.begin() + pos, Letter::sym(u, v, 1));
        break;
      }
      if (have(2) && kind(pos) == LKind::W && kind(pos + 1) == LKind::W) {
        // w(u) w(v) = h(u) h(-v)^{-1}
        Rat u = w[pos].t, v = w[pos + 1].t;
        out[pos] = Letter::h(u);
        out[pos + 1] = Letter::h(-v, -1);
        break;
      }
      if (kind(pos) == LKind::H && w[pos].exp == 1) {
        // h(u) -> w(u) w(-1)
        Rat u = w[pos].t;
        out[pos] = Letter::w(u);
        out.insert(out.begin() + pos + 1, Letter::w(-1));
        break;
      }
      return std::nullopt;
    }
    case RuleId::R8: {  // commute a central symbol past its neighbor
      if (!have(2) || (kind(pos) != LKind::Sym && kind(pos + 1) != LKind::Sym))
        return std::nullopt;
      std::swap(out[pos], out[pos + 1]);
      break;
    }
    case RuleId::R9: {  // w(u) -> x12(u) x21(-1/u) x12(u)
      if (kind(pos) != LKind::W) return std::nullopt;
      Rat u = w[pos].t;
      out[pos] = Letter::x12(u);
      out.insert(out.begin() + pos + 1, Letter::x21(-1 / u));
      out.insert(out.begin() + pos + 2, Letter::x12(u));
      break;
    }
  }
  if (!(phi(out) == phi(w))) throw std::logic_error("apply_rule changed phi");
  return out;
}

SimplifyResult simplify(const Word& w, long long budget) {
  if (!phi(w).is_identity())
    throw std::domain_error("simplify requires phi(word) = I");

  struct Node {
    Word word;
    std::vector<SymbolTerm> syms;
  };
  auto cmp = [](const std::pair<std::pair<size_t, long long>, size_t>& a,
                const std::pair<std::pair<size_t, long long>, size_t>& b) {
    return a.first > b.first;
  };
  std::vector<Node> nodes;
  // (word length, insertion order) -> node index; min-heap on the pair.
  std::priority_queue<std::pair<std::pair<size_t, long long>, size_t>,
                      std::vector<std::pair<std::pair<size_t, long long>, size_t>>,
                      decltype(cmp)>
      queue(cmp);
  std::set<std::string> seen;
  SimplifyResult res;

  auto push = [&](Word word, std::vector<SymbolTerm> syms) -> bool {
    normalize(&word, &syms);
    if (word.empty()) {
      res.symbols = std::move(syms);
      return true;
    }
    std::string key = word_to_string(word);
    if (!seen.insert(std::move(key)).second) return false;
    nodes.push_back({std::move(word), std::move(syms)});
    queue.push({{nodes.back().word.size(), static_cast<long long>(nodes.size())},
                nodes.size() - 1});
    return false;
  };

  if (push(w, {})) return res;

  while (!queue.empty()) {
    size_t idx = queue.top().second;
    queue.pop();
    Word cur = nodes[idx].word;
    std::vector<SymbolTerm> syms = nodes[idx].syms;

    for (size_t i = 0; i < cur.size(); ++i) {
      if (res.steps++ >= budget) {
        res.timed_out = true;
        return res;
      }
      std::vector<Word> children;
      const Letter& l = cur[i];
      if (l.kind == LKind::X21) {
        // x21(t) = x12(1/t) w(-1/t) x12(1/t)
        Word c = cur;
        c[i] = Letter::x12(1 / l.t);
        c.insert(c.begin() + i + 1, Letter::x12(1 / l.t));
        c.insert(c.begin() + i + 1, Letter::w(-1 / l.t));
        children.push_back(std::move(c));
      } else if (l.kind == LKind::X12) {
        // x12(t) = x21(1/t) w(t) x21(1/t)
        Word c = cur;
        c[i] = Letter::x21(1 / l.t);
        c.insert(c.begin() + i + 1, Letter::x21(1 / l.t));
        c.insert(c.begin() + i + 1, Letter::w(l.t));
        children.push_back(std::move(c));
      } else if (l.kind == LKind::W) {
        Word c1 = cur;
        c1[i] = Letter::x12(l.t);
        c1.insert(c1.begin() + i + 1, Letter::x12(l.t));
        c1.insert(c1.begin() + i + 1, Letter::x21(-1 / l.t));
        children.push_back(std::move(c1));
        Word c2 = cur;
        c2[i] = Letter::x21(-1 / l.t);
        c2.insert(c2.begin() + i + 1, Letter::x21(-1 / l.t));
        c2.insert(c2.begin() + i + 1, Letter::x12(l.t));
        children.push_back(std::move(c2));
      }
      for (Word& child : children) {
        PHI_GUARD(cur, child, "branch expansion");
        if (push(std::move(child), syms)) return res;
      }
    }
  }
  // Exhausted the reachable state space without emptying the word; report as
  // a timeout (no wrong answers).
  res.timed_out = true;
  return res;
}

SymbolInvariant invariant_of_symbols(const std::vector<SymbolTerm>& syms) {
  SymbolInvariant inv;
  for (const SymbolTerm& s : syms)
    inv += invariant_of_symbol(s.u, s.v) * s.exponent;
  return inv;
}

std::optional<SymbolInvariant> evaluate_cycle(const MatChain& z,
                                              long long budget) {
  if (z.degree != 2) throw std::invalid_argument("evaluate_cycle needs degree 2");
  if (!z.is_cycle()) throw std::invalid_argument("evaluate_cycle needs a cycle");
  SymbolInvariant total;
  for (const auto& [t, n] : z.terms) {
    SimplifyResult r = simplify(cocycle_f(t[0], t[1]), budget);
    if (r.timed_out) return std::nullopt;
    total += invariant_of_symbols(r.symbols) * n;
  }
  return total;
}

}  // namespace h2sl2
