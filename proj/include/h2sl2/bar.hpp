#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace h2sl2 {

// Chain in the reduced bar complex of a group G (decidable equality + strict
// order required). Tuples are stored in display order [g_n|...|g_1], i.e.
// tuple[0] = g_n. Zero coefficients are never stored.
template <class G>
struct BarChain {
  using Tuple = std::vector<G>;

  int degree = 0;
  std::map<Tuple, long long> terms;

  BarChain() = default;
  explicit BarChain(int deg) : degree(deg) {}

  static BarChain generator(Tuple t, long long coeff = 1) {
    BarChain z(static_cast<int>(t.size()));
    if (coeff != 0) z.terms.emplace(std::move(t), coeff);
    return z;
  }

  void add_term(const Tuple& t, long long coeff) {
    if (static_cast<int>(t.size()) != degree)
      throw std::invalid_argument("tuple length != chain degree");
    auto it = terms.find(t);
    if (it == terms.end()) {
      if (coeff != 0) terms.emplace(t, coeff);
    } else if ((it->second += coeff) == 0) {
      terms.erase(it);
    }
  }

  BarChain& operator+=(const BarChain& o) {
    if (degree != o.degree) throw std::invalid_argument("degree mismatch");
    for (const auto& [t, c] : o.terms) add_term(t, c);
    return *this;
  }
  BarChain& operator-=(const BarChain& o) { return *this += o * -1; }
  BarChain operator+(const BarChain& o) const { BarChain r = *this; r += o; return r; }
  BarChain operator-(const BarChain& o) const { BarChain r = *this; r -= o; return r; }
  BarChain operator*(long long k) const {
    BarChain r(degree);
    if (k != 0)
      for (const auto& [t, c] : terms) r.terms.emplace(t, c * k);
    return r;
  }

  bool empty() const { return terms.empty(); }
  size_t term_count() const { return terms.size(); }

  // Reduced bar differential (right bar resolution with the module
  // coordinate trivialized): the i-th interior face merges g_{i+1}g_i with
  // sign (-1)^i, i counted from the right; dropping g_1 carries +1 and
  // dropping g_n carries (-1)^n. d_1 == 0.
  BarChain boundary() const {
    if (degree < 1) throw std::domain_error("boundary needs degree >= 1");
    BarChain out(degree - 1);
    if (degree == 1) return out;
    const int n = degree;
    for (const auto& [t, c] : terms) {
      Tuple drop_right(t.begin(), t.end() - 1);
      out.add_term(drop_right, c);
      for (int i = 1; i <= n - 1; ++i) {
        // g_i is t[n-i], g_{i+1} is t[n-i-1]
        Tuple merged;
        merged.reserve(n - 1);
        for (int j = 0; j < n - i - 1; ++j) merged.push_back(t[j]);
        merged.push_back(t[n - i - 1] * t[n - i]);
        for (int j = n - i + 1; j < n; ++j) merged.push_back(t[j]);
        out.add_term(merged, (i % 2 == 0) ? c : -c);
      }
      Tuple drop_left(t.begin() + 1, t.end());
      out.add_term(drop_left, (n % 2 == 0) ? c : -c);
    }
    return out;
  }

  bool is_cycle() const { return boundary().empty(); }
};

}  // namespace h2sl2
