#include "hepticheck/bounds.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hepticheck/monomial.hpp"

namespace hepticheck {

int SplittingType::degree() const {
  return std::accumulate(a.begin(), a.end(), 0);
}

void SplittingType::validate() const {
  if (a.size() < 2)
    throw std::invalid_argument("SplittingType: need at least two parts");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1)
      throw std::invalid_argument("SplittingType: parts must be positive");
    if (i > 0 && a[i] > a[i - 1])
      throw std::invalid_argument("SplittingType: not weakly decreasing");
  }
}

long AmbientConfig::N() const {
  return binomial(hypersurface_degree + 5, 5) - 1;
}

long castelnuovo_bound(int d, int n) {
  if (n < 2 || d < n)
    throw std::invalid_argument("castelnuovo_bound: need n >= 2 and d >= n");
  long m = (d - 1) / (n - 1);
  long eps = (d - 1) - m * (n - 1);
  return binomial(m, 2) * (n - 1) + m * eps;
}

long stratum_codim(const SplittingType& s) {
  long c = 0;
  int n = s.parts();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || s.a[i] < s.a[j]) continue;
      long gap = s.a[i] - s.a[j] - 1;
      if (gap > 0) c += gap;
    }
  return c;
}

bool glp_regular(const SplittingType& s, int bound) {
  s.validate();
  return s.a[0] + s.a[1] <= bound;
}

std::vector<ObstructedStratum> enumerate_obstructed_strata(int d, int n,
                                                           int threshold) {
  if (n < 2 || d < n)
    throw std::invalid_argument("enumerate_obstructed_strata: need d >= n >= 2");
  std::vector<ObstructedStratum> out;
  std::vector<int> parts(n);
  // weakly decreasing positive tuples summing to d
  std::function<void(int, int, int)> rec = [&](int idx, int rem, int maxv) {
    if (idx == n - 1) {
      if (rem >= 1 && rem <= maxv) {
        parts[idx] = rem;
        if (parts[0] + parts[1] >= threshold) {
          SplittingType t{parts};
          out.push_back({t, stratum_codim(t)});
        }
      }
      return;
    }
    int remaining_slots = n - idx - 1;
    for (int v = std::min(maxv, rem - remaining_slots); v >= 1; --v) {
      parts[idx] = v;
      rec(idx + 1, rem - v, v);
    }
  };
  rec(0, d, d);
  std::stable_sort(out.begin(), out.end(),
                   [](const ObstructedStratum& x, const ObstructedStratum& y) {
                     return x.codim < y.codim;
                   });
  return out;
}

IncidenceDimension incidence_dimension(const AmbientConfig& cfg,
                                       const CurveClass& c) {
  long dim = cfg.N() + 1 - c.d + c.g + c.i;
  return {dim, c.g + c.i <= c.d - 2};
}

long required_estimate(int n, long codim) {
  switch (n) {
    case 5: return 14 + codim;
    case 4: return 28 + codim;
    case 3: return 42;
    default:
      throw std::invalid_argument("required_estimate: n must be 3, 4 or 5");
  }
}

} // namespace hepticheck
