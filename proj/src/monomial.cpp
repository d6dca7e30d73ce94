#include "hepticheck/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hepticheck {

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  if (e.size() != other.e.size())
    throw std::invalid_argument("divides: variable count mismatch");
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (e.size() != other.e.size())
    throw std::invalid_argument("mul: variable count mismatch");
  Monomial m = *this;
  for (size_t i = 0; i < e.size(); ++i) m.e[i] += other.e[i];
  return m;
}

Monomial Monomial::swap_down(int i, int j) const {
  if (i >= j || e[j] <= 0) throw std::invalid_argument("swap_down: bad move");
  Monomial m = *this;
  --m.e[j];
  ++m.e[i];
  return m;
}

Monomial Monomial::extended(int num_vars) const {
  if (num_vars < static_cast<int>(e.size()))
    throw std::invalid_argument("extended: shrinking variable set");
  Monomial m = *this;
  m.e.resize(num_vars, 0);
  return m;
}

std::string Monomial::str() const {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (a.e.size() != b.e.size())
    throw std::invalid_argument("compare: variable count mismatch");
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  if (ord == MonomialOrder::GrevLex) {
    // a > b iff the last nonzero entry of a-b is negative
    for (int i = static_cast<int>(a.e.size()) - 1; i >= 0; --i) {
      int d = a.e[i] - b.e[i];
      if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
  }
  for (size_t i = 0; i < a.e.size(); ++i) {
    int d = a.e[i] - b.e[i];
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

static bool canonical_less(const Monomial& a, const Monomial& b) {
  int d = a.degree(), e = b.degree();
  if (d != e) return d < e;
  return compare(a, b, MonomialOrder::GrevLex) > 0;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  Monomial mm = m.num_vars() == num_vars ? m : m.extended(num_vars);
  for (const Monomial& g : gens)
    if (g.divides(mm)) return true;
  return false;
}

int MonomialIdeal::max_gen_degree() const {
  int d = 0;
  for (const Monomial& g : gens) d = std::max(d, g.degree());
  return d;
}

MonomialIdeal MonomialIdeal::extended(int nv) const {
  MonomialIdeal J;
  J.num_vars = nv;
  for (const Monomial& g : gens) J.gens.push_back(g.extended(nv));
  return J;
}

std::string MonomialIdeal::str() const {
  std::string s = "(";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].str();
  }
  return s + ")";
}

MonomialIdeal minimalize(int num_vars, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.num_vars() != num_vars)
      throw std::invalid_argument("minimalize: variable count mismatch");
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> keep;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& h : keep)
      if (h.divides(g)) { redundant = true; break; }
    if (!redundant) keep.push_back(g);
  }
  return MonomialIdeal{num_vars, std::move(keep)};
}

bool is_borel_fixed(const MonomialIdeal& I) {
  for (const Monomial& g : I.gens) {
    for (int j = 0; j < I.num_vars; ++j) {
      if (g.e[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        if (!I.contains(g.swap_down(i, j))) return false;
      }
    }
  }
  return true;
}

bool is_borel_fixed_bruteforce(const MonomialIdeal& I, int up_to_degree) {
  bool ok = true;
  for (int m = 1; m <= up_to_degree && ok; ++m) {
    for_each_monomial(I.num_vars, m, [&](const Monomial& mono) {
      if (!ok || !I.contains(mono)) return;
      for (int j = 0; j < I.num_vars && ok; ++j) {
        if (mono.e[j] == 0) continue;
        for (int i = 0; i < j; ++i)
          if (!I.contains(mono.swap_down(i, j))) { ok = false; break; }
      }
    });
  }
  return ok;
}

bool is_saturated(const MonomialIdeal& I) {
  int last = I.num_vars - 1;
  for (const Monomial& g : I.gens)
    if (g.e[last] > 0) return false;
  return true;
}

void for_each_monomial(int num_vars, int m,
                       const std::function<void(const Monomial&)>& fn) {
  if (num_vars <= 0) {
    if (m == 0) fn(Monomial{{}});
    return;
  }
  Monomial cur(std::vector<int>(num_vars, 0));
  std::function<void(int, int)> rec = [&](int var, int rem) {
    if (var == num_vars - 1) {
      cur.e[var] = rem;
      fn(cur);
      cur.e[var] = 0;
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur.e[var] = k;
      rec(var + 1, rem - k);
    }
    cur.e[var] = 0;
  };
  rec(0, m);
}

std::vector<Monomial> monomials_of_degree(int num_vars, int m,
                                          MonomialOrder ord) {
  std::vector<Monomial> out;
  for_each_monomial(num_vars, m, [&](const Monomial& mono) { out.push_back(mono); });
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return compare(a, b, ord) > 0;
  });
  return out;
}

long hilbert_count(const MonomialIdeal& I, int m, Side side) {
  if (m < 0) throw std::invalid_argument("hilbert_count: negative degree");
  long in_ideal = 0, total = 0;
  for_each_monomial(I.num_vars, m, [&](const Monomial& mono) {
    ++total;
    if (I.contains(mono)) ++in_ideal;
  });
  return side == Side::Ideal ? in_ideal : total - in_ideal;
}

int regularity_saturated_borel(const MonomialIdeal& I) {
  if (I.is_zero())
    throw std::invalid_argument("regularity: zero ideal");
  if (!is_borel_fixed(I))
    throw std::invalid_argument("regularity: ideal is not Borel-fixed");
  if (!is_saturated(I))
    throw std::invalid_argument("regularity: ideal is not saturated");
  return I.max_gen_degree();
}

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace hepticheck
