#include "hepticheck/curve.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hepticheck {

bool BiForm::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
}

BiForm mul(const BiForm& a, const BiForm& b) {
  BiForm r = BiForm::zero(a.degree + b.degree);
  for (int i = 0; i <= a.degree; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j <= b.degree; ++j)
      if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

void SyzygySpec::validate() const {
  if (rows.empty()) throw std::invalid_argument("SyzygySpec: no rows");
  for (const SyzygyRow& row : rows)
    for (const BiForm& g : row.g)
      if (g.degree != row.degree ||
          static_cast<int>(g.c.size()) != row.degree + 1)
        throw std::invalid_argument("SyzygySpec: degree mismatch within a row");
}

std::map<std::string, SyzygySpec> parse_syzygy_file(std::istream& in) {
  std::map<std::string, SyzygySpec> out;
  std::string line, current;
  int expect_g = 0;
  int row_degree = 0;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "variant") {
      if (!(ls >> current)) throw std::runtime_error("syzygy file: variant without name");
      out[current] = SyzygySpec{};
      expect_g = 0;
    } else if (tok == "row") {
      if (current.empty() || expect_g != 0)
        throw std::runtime_error("syzygy file: misplaced row");
      if (!(ls >> row_degree)) throw std::runtime_error("syzygy file: row without degree");
      out[current].rows.push_back(SyzygyRow{row_degree, {}});
      expect_g = 5;
    } else if (tok == "g") {
      if (expect_g == 0) throw std::runtime_error("syzygy file: misplaced g line");
      BiForm f = BiForm::zero(row_degree);
      for (int j = 0; j <= row_degree; ++j) {
        std::string v;
        if (!(ls >> v)) throw std::runtime_error("syzygy file: short g line");
        f.c[j] = Integer(v);
      }
      out[current].rows.back().g[5 - expect_g] = std::move(f);
      --expect_g;
    } else {
      throw std::runtime_error("syzygy file: unknown directive " + tok);
    }
  }
  for (auto& [name, spec] : out) spec.validate();
  return out;
}

ParamCurve parse_curve_file(std::istream& in) {
  ParamCurve c;
  int i = 0;
  std::string line;
  while (std::getline(in, line) && i < 5) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<Integer> vals;
    std::string v;
    while (ls >> v) vals.emplace_back(v);
    if (vals.empty()) continue;
    if (vals.size() != 17) throw std::runtime_error("curve file: expected 17 integers per line");
    c.f[i] = BiForm{16, std::move(vals)};
    ++i;
  }
  if (i != 5) throw std::runtime_error("curve file: expected 5 forms");
  return c;
}

ExactMatrix assemble_system(const SyzygySpec& s) {
  s.validate();
  int total_rows = 0;
  for (const SyzygyRow& row : s.rows) total_rows += 16 + row.degree + 1;
  ExactMatrix M(total_rows, 85);
  int base = 0;
  for (const SyzygyRow& row : s.rows) {
    int e = row.degree;
    for (int i = 0; i < 5; ++i) {
      for (int jp = 0; jp <= e; ++jp) {
        if (row.g[i].c[jp] == 0) continue;
        Rational coef(row.g[i].c[jp]);
        for (int j = 0; j <= 16; ++j)
          M.at(base + jp + j, 17 * i + j) += coef;
      }
    }
    base += 16 + e + 1;
  }
  return M;
}

BiForm syzygy_residual(const SyzygyRow& row, const ParamCurve& c) {
  BiForm acc = BiForm::zero(row.degree + 16);
  for (int i = 0; i < 5; ++i) {
    BiForm p = mul(row.g[i], c.f[i]);
    for (size_t j = 0; j < acc.c.size(); ++j) acc.c[j] += p.c[j];
  }
  return acc;
}

CurveSolution solve_curve(const SyzygySpec& s, const ModularConfig& cfg) {
  ExactMatrix M = assemble_system(s);
  int rk = rank(M, cfg);
  auto basis = kernel_basis(M, cfg);
  if (basis.size() != 1)
    throw std::runtime_error("solve_curve: non-generic syzygies (kernel dimension " +
                             std::to_string(basis.size()) + ")");
  ParamCurve curve;
  for (int i = 0; i < 5; ++i) {
    curve.f[i] = BiForm::zero(16);
    for (int j = 0; j <= 16; ++j) curve.f[i].c[j] = basis[0][17 * i + j];
  }
  for (const SyzygyRow& row : s.rows)
    if (!syzygy_residual(row, curve).is_zero())
      throw std::logic_error("solve_curve: nonzero residual");
  return {curve, rk, static_cast<int>(basis.size())};
}

MatchReport match_printed(const ParamCurve& solved, const ParamCurve& printed) {
  MatchReport rep;
  // the scale maximizing agreement: the most frequent printed/solved ratio
  std::map<Rational, int> ratios;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j <= 16; ++j)
      if (printed.f[i].c[j] != 0 && solved.f[i].c[j] != 0) {
        Rational q = Rational(printed.f[i].c[j]) / Rational(solved.f[i].c[j]);
        q.canonicalize();
        ++ratios[q];
      }
  int best = -1;
  for (const auto& [q, n] : ratios)
    if (n > best) {
      best = n;
      rep.scale = q;
    }
  if (rep.scale == 0) rep.scale = 1;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j <= 16; ++j) {
      Rational got = Rational(solved.f[i].c[j]) * rep.scale;
      if (got == Rational(printed.f[i].c[j]))
        ++rep.matches;
      else
        rep.diffs.push_back({i, j, printed.f[i].c[j], got});
    }
  return rep;
}

// --- substitution slices ---------------------------------------------------

namespace {

std::array<std::vector<std::uint64_t>, 5> forms_mod(const ParamCurve& c,
                                                    std::uint64_t p) {
  std::array<std::vector<std::uint64_t>, 5> f;
  mpz_class pz(static_cast<unsigned long>(p));
  for (int i = 0; i < 5; ++i) {
    f[i].resize(17);
    for (int j = 0; j <= 16; ++j) {
      mpz_class r = c.f[i].c[j] % pz;
      if (r < 0) r += pz;
      f[i][j] = r.get_ui();
    }
  }
  return f;
}

std::vector<std::uint64_t> poly_mul_mod(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b,
                                        std::uint64_t p) {
  std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] = (r[i + j] + fp::mul(a[i], b[j], p)) % p;
    }
  }
  return r;
}

/// Substitution matrix mod p at degree m: rows are (t,u)-coefficients,
/// columns are the degree-m monomials in descending revlex order.
ModMatrix substitution_matrix_mod(const ParamCurve& c, int m, std::uint64_t p,
                                  const std::vector<Monomial>& mons) {
  auto f = forms_mod(c, p);
  std::map<std::vector<int>, std::vector<std::uint64_t>> prev;
  prev[std::vector<int>(5, 0)] = {1};
  for (int d = 1; d <= m; ++d) {
    std::map<std::vector<int>, std::vector<std::uint64_t>> cur;
    for (const Monomial& mono : monomials_of_degree(5, d, MonomialOrder::GrevLex)) {
      int v = 0;
      while (mono.e[v] == 0) ++v;
      std::vector<int> rest = mono.e;
      --rest[v];
      cur[mono.e] = poly_mul_mod(prev.at(rest), f[v], p);
    }
    prev = std::move(cur);
  }
  ModMatrix M(16 * m + 1, static_cast<int>(mons.size()), p);
  for (int col = 0; col < static_cast<int>(mons.size()); ++col) {
    const auto& poly = prev.at(mons[col].e);
    for (int r = 0; r <= 16 * m; ++r) M.at(r, col) = poly[r];
  }
  return M;
}

ExactMatrix substitution_matrix_exact(const ParamCurve& c, int m,
                                      const std::vector<Monomial>& mons) {
  std::map<std::vector<int>, BiForm> prev;
  prev[std::vector<int>(5, 0)] = BiForm{0, {Integer(1)}};
  for (int d = 1; d <= m; ++d) {
    std::map<std::vector<int>, BiForm> cur;
    for (const Monomial& mono : monomials_of_degree(5, d, MonomialOrder::GrevLex)) {
      int v = 0;
      while (mono.e[v] == 0) ++v;
      std::vector<int> rest = mono.e;
      --rest[v];
      cur[mono.e] = mul(prev.at(rest), c.f[v]);
    }
    prev = std::move(cur);
  }
  ExactMatrix M(16 * m + 1, static_cast<int>(mons.size()));
  for (int col = 0; col < static_cast<int>(mons.size()); ++col) {
    const BiForm& poly = prev.at(mons[col].e);
    for (int r = 0; r <= 16 * m; ++r) M.at(r, col) = Rational(poly.c[r]);
  }
  return M;
}

/// Leading (pivot) monomial indices of the degree-m kernel mod p, with the
/// pivot search descending in the monomial order used to build `mons`.
std::optional<std::vector<int>> kernel_pivots_mod(const ParamCurve& c, int m,
                                                  std::uint64_t p,
                                                  const std::vector<Monomial>& mons) {
  ModMatrix M = substitution_matrix_mod(c, m, p, mons);
  auto kb = M.kernel_basis();
  if (kb.empty()) return std::vector<int>{};
  ModMatrix K(static_cast<int>(kb.size()), static_cast<int>(mons.size()), p);
  for (int r = 0; r < K.rows(); ++r)
    for (int col = 0; col < K.cols(); ++col) K.at(r, col) = kb[r][col];
  std::vector<int> order(mons.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  return K.pivot_columns(order);
}

std::vector<int> kernel_pivots_exact(const ParamCurve& c, int m,
                                     const std::vector<Monomial>& mons) {
  ExactMatrix M = substitution_matrix_exact(c, m, mons);
  ModularConfig cfg = ModularConfig::make(0);
  auto kb = kernel_basis(M, cfg);
  if (kb.empty()) return {};
  ExactMatrix K(static_cast<int>(kb.size()), static_cast<int>(mons.size()));
  for (int r = 0; r < K.rows(); ++r)
    for (int col = 0; col < K.cols(); ++col) K.at(r, col) = Rational(kb[r][col]);
  std::vector<int> order(mons.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  return row_reduce_ordered(K, order, cfg).pivot_cols;
}

} // namespace

int ideal_slice_dim_exact(const ParamCurve& c, int m) {
  auto mons = monomials_of_degree(5, m, MonomialOrder::GrevLex);
  ExactMatrix M = substitution_matrix_exact(c, m, mons);
  return static_cast<int>(mons.size()) - rank_exact(M);
}

SliceResult ideal_slice(const ParamCurve& c, int m, const ModularConfig& cfg) {
  if (m < 1) throw std::invalid_argument("ideal_slice: m >= 1 required");
  if (cfg.force_exact) return {m, ideal_slice_dim_exact(c, m), true};
  auto mons = monomials_of_degree(5, m, MonomialOrder::GrevLex);
  std::vector<int> dims;
  for (std::uint64_t p : cfg.primes) {
    ModMatrix M = substitution_matrix_mod(c, m, p, mons);
    dims.push_back(static_cast<int>(mons.size()) - M.rank());
  }
  bool agree = std::all_of(dims.begin(), dims.end(),
                           [&](int d) { return d == dims[0]; });
  if (agree) return {m, dims[0], false};
  return {m, ideal_slice_dim_exact(c, m), true};
}

MonomialIdeal initial_ideal(const ParamCurve& c, int up_to, MonomialOrder ord,
                            const ModularConfig& cfg) {
  if (up_to < 1) throw std::invalid_argument("initial_ideal: up_to >= 1");
  std::vector<Monomial> gens;
  MonomialIdeal sofar{5, {}};
  for (int m = 1; m <= up_to; ++m) {
    auto mons = monomials_of_degree(5, m, ord);
    std::vector<int> pivots;
    if (cfg.force_exact) {
      pivots = kernel_pivots_exact(c, m, mons);
    } else {
      std::optional<std::vector<int>> agreed;
      bool consistent = true;
      for (std::uint64_t p : cfg.primes) {
        auto piv = kernel_pivots_mod(c, m, p, mons);
        if (!agreed) agreed = piv;
        else if (*agreed != *piv) { consistent = false; break; }
      }
      pivots = consistent ? *agreed : kernel_pivots_exact(c, m, mons);
    }
    std::vector<Monomial> lms;
    for (int idx : pivots) lms.push_back(mons[idx]);
    // sanity: multiples of lower-degree generators must reappear as leads
    for (const Monomial& lm : mons)
      if (sofar.contains(lm) &&
          std::find(lms.begin(), lms.end(), lm) == lms.end())
        throw std::logic_error("initial_ideal: lead set lost a known multiple");
    for (const Monomial& lm : lms)
      if (!sofar.contains(lm)) gens.push_back(lm);
    sofar = minimalize(5, gens);
  }
  return sofar;
}

ParamCurve change_coordinates(const ParamCurve& c,
                              const std::vector<std::vector<int>>& A) {
  ParamCurve out;
  for (int i = 0; i < 5; ++i) {
    out.f[i] = BiForm::zero(16);
    for (int j = 0; j < 5; ++j) {
      if (A[i][j] == 0) continue;
      for (int r = 0; r <= 16; ++r) out.f[i].c[r] += Integer(A[i][j]) * c.f[j].c[r];
    }
  }
  return out;
}

IZeroVerdict conclude_i_zero(const ParamCurve& c, const MonomialIdeal& I,
                             const ModularConfig& cfg) {
  IZeroVerdict v;
  v.ideal = I;
  v.borel_fixed = is_borel_fixed(I);
  v.saturated = is_saturated(I);
  std::mt19937_64 rng(cfg.seed ^ 0xc0ffee);
  std::uniform_int_distribution<int> entry(-5, 5);
  ParamCurve cur = c;
  while (!(v.borel_fixed && v.saturated) && v.coordinate_retries < 3) {
    // random invertible integer coordinate change, then recompute
    std::vector<std::vector<int>> A;
    for (;;) {
      A.assign(5, std::vector<int>(5));
      ExactMatrix M(5, 5);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          A[i][j] = entry(rng);
          M.at(i, j) = A[i][j];
        }
      if (rank_exact(M) == 5) break;
    }
    cur = change_coordinates(c, A);
    v.ideal = initial_ideal(cur, I.max_gen_degree() + 1, MonomialOrder::GrevLex, cfg);
    v.borel_fixed = is_borel_fixed(v.ideal);
    v.saturated = is_saturated(v.ideal);
    ++v.coordinate_retries;
  }
  if (!(v.borel_fixed && v.saturated)) {
    v.status = IZeroVerdict::Status::Inconclusive;
    return v;
  }
  v.regularity = v.ideal.max_gen_degree();
  v.status = v.regularity <= 8 ? IZeroVerdict::Status::IZero
                               : IZeroVerdict::Status::Withheld;
  return v;
}

MonomialIdeal printed_initial_ideal() {
  auto M = [](int a, int b, int c, int d) { return Monomial{{a, b, c, d, 0}}; };
  std::vector<Monomial> gens = {
      M(0, 4, 0, 0), M(1, 3, 0, 0), M(2, 2, 0, 0), M(3, 1, 0, 0), M(4, 0, 0, 0),
      M(3, 0, 2, 0), M(2, 1, 2, 0), M(1, 2, 2, 0), M(0, 3, 2, 0),
      M(0, 3, 0, 2), M(1, 2, 0, 2), M(2, 1, 0, 2), M(3, 0, 0, 2),
      M(0, 0, 4, 1), M(0, 1, 3, 1), M(1, 0, 3, 1),
      M(0, 2, 2, 1), M(1, 1, 2, 1), M(2, 0, 2, 1),
      M(0, 3, 1, 1), M(1, 2, 1, 1), M(2, 1, 1, 1), M(3, 0, 1, 1),
      M(0, 0, 5, 0), M(0, 1, 4, 0), M(1, 0, 4, 0),
      M(0, 2, 3, 0), M(1, 1, 3, 0), M(2, 0, 3, 0)};
  return minimalize(5, std::move(gens));
}

} // namespace hepticheck
