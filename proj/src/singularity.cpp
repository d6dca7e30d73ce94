#include "hepticheck/singularity.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hepticheck/monomial.hpp"

namespace hepticheck {

std::vector<Integer> Branch::dense_coord(int c, int T) const {
  std::vector<Integer> out(T, 0);
  for (const auto& [e, a] : coords.at(c))
    if (e < T) out[e] += a;
  return out;
}

bool Branch::coord_is_zero(int c) const {
  for (const auto& [e, a] : coords.at(c))
    if (a != 0) return false;
  return true;
}

int BranchParam::embedding_dim() const {
  return branches.empty() ? 0 : branches.front().embedding_dim();
}

void BranchParam::validate() const {
  if (branches.empty()) throw std::invalid_argument("no branches");
  int r = embedding_dim();
  if (r < 1) throw std::invalid_argument("branch with no coordinates");
  for (const auto& b : branches) {
    if (b.embedding_dim() != r)
      throw std::invalid_argument("branches have mixed embedding dimensions");
    bool nonzero = false;
    for (const auto& series : b.coords) {
      for (const auto& [e, a] : series) {
        if (e < 1) throw std::invalid_argument("coordinate series needs positive exponents");
        if (a != 0) nonzero = true;
      }
    }
    if (!nonzero) throw std::invalid_argument("zero branch");
  }
}

namespace {

// incremental exact row-echelon basis over Q
struct EchelonBasis {
  std::map<int, std::vector<Rational>> rows; // pivot column -> normalized row

  int dim() const { return static_cast<int>(rows.size()); }

  // returns true if v added a new dimension
  bool insert(std::vector<Rational> v) {
    for (;;) {
      int piv = -1;
      for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) { piv = i; break; }
      if (piv < 0) return false;
      auto it = rows.find(piv);
      if (it == rows.end()) {
        Rational lead = v[piv];
        for (auto& x : v) x /= lead;
        rows.emplace(piv, std::move(v));
        return true;
      }
      Rational c = v[piv];
      const auto& r = it->second;
      for (size_t i = piv; i < v.size(); ++i) v[i] -= c * r[i];
    }
  }
};

using Series = std::vector<Rational>; // one truncated series per branch, concatenated

Series mul_elements(const Series& a, const Series& b, int l, int T) {
  Series out(static_cast<size_t>(l) * T, 0);
  for (int br = 0; br < l; ++br) {
    size_t off = static_cast<size_t>(br) * T;
    for (int i = 0; i < T; ++i) {
      if (a[off + i] == 0) continue;
      for (int j = 0; j + i < T; ++j) {
        if (b[off + j] == 0) continue;
        out[off + i + j] += a[off + i] * b[off + j];
      }
    }
  }
  return out;
}

int delta_once(const BranchParam& p, int T) {
  int l = p.num_branches();
  int r = p.embedding_dim();
  std::vector<Series> gens;
  for (int c = 0; c < r; ++c) {
    Series g(static_cast<size_t>(l) * T, 0);
    for (int br = 0; br < l; ++br) {
      auto d = p.branches[br].dense_coord(c, T);
      for (int i = 0; i < T; ++i) g[static_cast<size_t>(br) * T + i] = Rational(d[i]);
    }
    gens.push_back(std::move(g));
  }
  Series one(static_cast<size_t>(l) * T, 0);
  for (int br = 0; br < l; ++br) one[static_cast<size_t>(br) * T] = 1;

  EchelonBasis basis;
  std::vector<Series> worklist;
  basis.insert(one);
  worklist.push_back(one);
  for (const auto& g : gens)
    if (basis.insert(g)) worklist.push_back(g);

  while (!worklist.empty()) {
    std::vector<Series> next;
    for (const auto& w : worklist) {
      for (const auto& g : gens) {
        Series prod = mul_elements(w, g, l, T);
        if (basis.insert(prod)) next.push_back(std::move(prod));
      }
    }
    worklist = std::move(next);
  }
  return l * T - basis.dim();
}

} // namespace

int delta_invariant(const BranchParam& p, int T) {
  p.validate();
  if (T < 4) throw std::invalid_argument("truncation order too small");
  int d1 = delta_once(p, T);
  int d2 = delta_once(p, T + 2);
  if (d1 != d2)
    throw std::runtime_error("delta invariant not stable at truncation order " +
                             std::to_string(T) + "; raise it");
  return d1;
}

int semigroup_delta(const std::vector<int>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("empty generator list");
  for (int e : exponents)
    if (e < 1) throw std::invalid_argument("generators must be positive");
  int g = 0;
  for (int e : exponents) g = std::gcd(g, e);
  if (g != 1) throw std::invalid_argument("generators must have gcd 1");
  int mn = *std::min_element(exponents.begin(), exponents.end());
  int limit = 2 * mn;
  for (;;) {
    std::vector<char> hit(limit + 1, 0);
    hit[0] = 1;
    for (int v = 1; v <= limit; ++v)
      for (int e : exponents)
        if (v >= e && hit[v - e]) { hit[v] = 1; break; }
    bool tail_full = true;
    for (int v = limit - mn + 1; v <= limit; ++v)
      if (!hit[v]) { tail_full = false; break; }
    if (tail_full) {
      int gaps = 0;
      for (int v = 1; v <= limit; ++v)
        if (!hit[v]) ++gaps;
      return gaps;
    }
    limit *= 2;
  }
}

namespace {

// truncated series of every monomial of degree <= D in the coordinates of b
std::vector<std::pair<std::vector<int>, std::vector<Rational>>>
eval_monomials(const Branch& b, int D, int TT) {
  int r = b.embedding_dim();
  std::map<std::vector<int>, std::vector<Rational>> memo;
  std::vector<Rational> one(TT, 0);
  one[0] = 1;
  memo[std::vector<int>(r, 0)] = one;
  std::vector<std::pair<std::vector<int>, std::vector<Rational>>> out;
  for (int d = 0; d <= D; ++d) {
    for_each_monomial(r, d, [&](const Monomial& m) {
      if (d == 0) {
        out.emplace_back(m.e, one);
        return;
      }
      int c = 0;
      while (m.e[c] == 0) ++c;
      auto prev = m.e;
      prev[c] -= 1;
      const auto& base = memo.at(prev);
      auto coord = b.dense_coord(c, TT);
      std::vector<Rational> prod(TT, 0);
      for (int i = 0; i < TT; ++i) {
        if (base[i] == 0) continue;
        for (int j = 0; j + i < TT; ++j)
          if (coord[j] != 0) prod[i + j] += base[i] * Rational(coord[j]);
      }
      memo[m.e] = prod;
      out.emplace_back(m.e, std::move(prod));
    });
  }
  return out;
}

int pair_intersection_once(const Branch& b1, const Branch& b2, int D, int TT) {
  // polynomials of degree <= D vanishing on b2 (to order TT)
  auto cols2 = eval_monomials(b2, D, TT);
  ExactMatrix M(TT, static_cast<int>(cols2.size()));
  for (int j = 0; j < static_cast<int>(cols2.size()); ++j)
    for (int i = 0; i < TT; ++i) M.at(i, j) = cols2[j].second[i];
  auto ker = kernel_basis(M, ModularConfig::make(1));
  if (ker.empty())
    throw std::runtime_error(
        "no truncated equations found for the second branch; raise the polynomial degree");

  // coordinate ring of b1 inside C[[t]]/t^TT
  int r = b1.embedding_dim();
  std::vector<std::vector<Rational>> gens;
  for (int c = 0; c < r; ++c) {
    auto d = b1.dense_coord(c, TT);
    std::vector<Rational> g(TT, 0);
    for (int i = 0; i < TT; ++i) g[i] = Rational(d[i]);
    gens.push_back(std::move(g));
  }
  auto mul = [TT](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(TT, 0);
    for (int i = 0; i < TT; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j + i < TT; ++j)
        if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
  };
  auto closure = [&](std::vector<std::vector<Rational>> seed, bool with_one) {
    EchelonBasis basis;
    std::vector<std::vector<Rational>> work;
    if (with_one) {
      std::vector<Rational> one(TT, 0);
      one[0] = 1;
      basis.insert(one);
      work.push_back(one);
    }
    for (auto& s : seed)
      if (basis.insert(s)) work.push_back(std::move(s));
    while (!work.empty()) {
      std::vector<std::vector<Rational>> next;
      for (const auto& w : work)
        for (const auto& g : gens) {
          auto p = mul(w, g);
          if (basis.insert(p)) next.push_back(std::move(p));
        }
      work = std::move(next);
    }
    return basis.dim();
  };

  int dim_ring = closure(gens, true);

  // pullbacks of the vanishing polynomials via b1 seed the ideal
  auto cols1 = eval_monomials(b1, D, TT);
  std::vector<std::vector<Rational>> pullbacks;
  for (const auto& h : ker) {
    std::vector<Rational> v(TT, 0);
    for (size_t j = 0; j < h.size(); ++j) {
      if (h[j] == 0) continue;
      Rational c(h[j]);
      for (int i = 0; i < TT; ++i) v[i] += c * cols1[j].second[i];
    }
    pullbacks.push_back(std::move(v));
  }
  int dim_ideal = closure(std::move(pullbacks), false);
  return dim_ring - dim_ideal;
}

} // namespace

int pair_intersection_multiplicity(const Branch& b1, const Branch& b2,
                                   int max_poly_degree, int T) {
  if (b2.embedding_dim() != b1.embedding_dim())
    throw std::invalid_argument("branches have mixed embedding dimensions");
  int maxexp = 1;
  for (const Branch* b : {&b1, &b2})
    for (const auto& series : b->coords)
      for (const auto& [e, a] : series)
        if (a != 0) maxexp = std::max(maxexp, e);
  T = std::max(T, max_poly_degree * maxexp + 8);
  int e1 = pair_intersection_once(b1, b2, max_poly_degree, T);
  int e2 = pair_intersection_once(b1, b2, max_poly_degree, T + 2);
  if (e1 != e2)
    throw std::runtime_error("intersection multiplicity not stable; raise the truncation order");
  return e1;
}

std::vector<AuditLine> catalog_audit(const std::vector<SingularityRecord>& catalog, int T) {
  std::vector<AuditLine> out;
  for (const auto& rec : catalog) {
    AuditLine line;
    line.name = rec.name;
    line.expected = rec.expected_delta;
    line.computed = delta_invariant(rec.param, T);
    line.match = (line.computed == rec.expected_delta);
    // cross-check monomial unibranch records against the semigroup oracle
    if (rec.param.num_branches() == 1) {
      const auto& b = rec.param.branches.front();
      std::vector<int> exps;
      bool monomial = true;
      for (const auto& series : b.coords) {
        int terms = 0, exp = 0;
        for (const auto& [e, a] : series)
          if (a != 0) { ++terms; exp = e; if (a != 1) monomial = false; }
        if (terms > 1) monomial = false;
        if (terms == 1) exps.push_back(exp);
      }
      int g = 0;
      for (int e : exps) g = std::gcd(g, e);
      if (monomial && !exps.empty() && g == 1)
        line.semigroup_check = semigroup_delta(exps);
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<SingularityRecord> parse_catalog_file(std::istream& in) {
  std::vector<SingularityRecord> out;
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string tag;
    if (!(line >> tag)) continue;
    if (tag == "record") {
      SingularityRecord rec;
      if (!(line >> rec.name >> rec.expected_delta >> rec.declared_branches))
        throw std::runtime_error("malformed record line: " + raw);
      out.push_back(std::move(rec));
    } else if (tag == "branch") {
      if (out.empty()) throw std::runtime_error("branch line before any record");
      std::string rest;
      std::getline(line, rest);
      Branch b;
      std::istringstream parts(rest);
      std::string coord;
      while (std::getline(parts, coord, '|')) {
        std::vector<std::pair<int, Integer>> series;
        std::istringstream cs(coord);
        std::string term;
        while (std::getline(cs, term, ',')) {
          // trim whitespace
          auto first = term.find_first_not_of(" \t");
          if (first == std::string::npos) continue;
          auto last = term.find_last_not_of(" \t");
          term = term.substr(first, last - first + 1);
          if (term == "0") continue;
          auto colon = term.find(':');
          if (colon == std::string::npos)
            throw std::runtime_error("malformed series term: " + term);
          int e = std::stoi(term.substr(0, colon));
          Integer a(term.substr(colon + 1));
          series.emplace_back(e, a);
        }
        b.coords.push_back(std::move(series));
      }
      out.back().param.branches.push_back(std::move(b));
    } else {
      throw std::runtime_error("unknown catalog directive: " + tag);
    }
  }
  for (const auto& rec : out) {
    rec.param.validate();
    if (rec.param.num_branches() != rec.declared_branches)
      throw std::runtime_error("record " + rec.name + " declares " +
                               std::to_string(rec.declared_branches) +
                               " branches but lists " +
                               std::to_string(rec.param.num_branches()));
  }
  return out;
}

// --- ramification arithmetic ------------------------------------------------

void RamificationType::validate() const {
  if (r.empty()) throw std::invalid_argument("empty ramification type");
  if (r.front() < 1) throw std::invalid_argument("orders must be >= 1");
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i] < r[i - 1]) throw std::invalid_argument("orders must be weakly increasing");
}

long ramification_codim(const RamificationType& rt) {
  rt.validate();
  long s = 0;
  for (size_t i = 0; i < rt.r.size(); ++i) s += rt.r[i] - static_cast<long>(i + 1);
  return s;
}

long ramification_codim_alt(const RamificationType& rt) {
  rt.validate();
  long s = 0;
  for (int v : rt.r) s += v;
  long n = rt.n();
  return s - n * (n - 1) / 2;
}

namespace {

Integer det_int(const std::vector<std::vector<Integer>>& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  // fraction-free elimination on a rational copy
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != c) { std::swap(a[piv], a[c]); det = -det; }
    det *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      Rational f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  det.canonicalize();
  return det.get_num();
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) { fn(idx); return; }
    for (int v = start; v <= n - (k - pos); ++v) {
      idx[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
}

} // namespace

RankConditionResult linearized_rank_conditions(const RamificationType& rt) {
  rt.validate();
  int n = rt.n();
  int L = rt.r.back() - 1; // coefficient columns t^1 .. t^{r_n - 1}
  // variables alpha_l^{(k)}, flattened index k*L + (l-1)
  int nvars = n * std::max(L, 1);
  std::vector<std::vector<Rational>> forms;
  bool violation = false;

  for (int i = 1; i <= n; ++i) {
    int cols_avail = rt.r[i - 1] - 1;
    if (cols_avail < i) continue; // no i x i minors in range
    for_each_subset(n, i, [&](const std::vector<int>& rows) {
      for_each_subset(cols_avail, i, [&](const std::vector<int>& cols) {
        // submatrix entries of M0: [column exponent == r_row]
        auto m0 = [&](int a, int b) -> Integer {
          return (cols[b] + 1 == rt.r[rows[a]]) ? 1 : 0;
        };
        std::vector<std::vector<Integer>> sub(i, std::vector<Integer>(i));
        for (int a = 0; a < i; ++a)
          for (int b = 0; b < i; ++b) sub[a][b] = m0(a, b);
        if (det_int(sub) != 0) {
          violation = true;
          return;
        }
        // first-order term: sum of cofactor(a,b) * alpha_{cols[b]+1}^{(rows[a])}
        std::vector<Rational> form(nvars, 0);
        bool nonzero = false;
        for (int a = 0; a < i; ++a) {
          for (int b = 0; b < i; ++b) {
            std::vector<std::vector<Integer>> minor;
            for (int x = 0; x < i; ++x) {
              if (x == a) continue;
              std::vector<Integer> row;
              for (int y = 0; y < i; ++y) {
                if (y == b) continue;
                row.push_back(sub[x][y]);
              }
              minor.push_back(std::move(row));
            }
            Integer cof = det_int(minor);
            if ((a + b) % 2 != 0) cof = -cof;
            if (cof != 0) {
              form[rows[a] * L + cols[b]] += Rational(cof);
              nonzero = true;
            }
          }
        }
        if (nonzero) forms.push_back(std::move(form));
      });
    });
  }

  RankConditionResult res;
  res.model_violation = violation;
  if (forms.empty()) {
    res.independent_conditions = 0;
    return res;
  }
  ExactMatrix M(static_cast<int>(forms.size()), nvars);
  for (int i = 0; i < static_cast<int>(forms.size()); ++i)
    for (int j = 0; j < nvars; ++j) M.at(i, j) = forms[i][j];
  res.independent_conditions = rank_exact(M);
  return res;
}

QuadruplePointCodim quadruple_point_codim(int rank, int points, int target_dim,
                                          int point_moduli) {
  QuadruplePointCodim q;
  q.fixed = static_cast<long>(rank) * points;
  q.varied = q.fixed - point_moduli - target_dim;
  return q;
}

long lemma_verdict(long g) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  return std::min(3 * g, 9L);
}

} // namespace hepticheck
