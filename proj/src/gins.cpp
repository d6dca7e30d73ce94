#include "hepticheck/gins.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hepticheck {

int LambdaSequence::degree() const {
  return std::accumulate(lambda.begin(), lambda.end(), 0);
}

void LambdaSequence::validate(int degree, int regularity) const {
  int kk = k();
  if (kk < 2) throw std::invalid_argument("LambdaSequence: k >= 2 required");
  if (kk > regularity)
    throw std::invalid_argument("LambdaSequence: k exceeds regularity");
  for (int j = 0; j < kk; ++j) {
    if (lambda[j] < 1)
      throw std::invalid_argument("LambdaSequence: lambda_j must be positive");
    if (j + lambda[j] > regularity)
      throw std::invalid_argument("LambdaSequence: j + lambda_j exceeds regularity");
    if (j + 1 < kk) {
      if (lambda[j + 1] > lambda[j] - 1)
        throw std::invalid_argument("LambdaSequence: Borel constraint violated");
      if (lambda[j + 1] < lambda[j] - 2)
        throw std::invalid_argument("LambdaSequence: Gruson-Peskine bound violated");
    }
  }
  if (this->degree() != degree)
    throw std::invalid_argument("LambdaSequence: degree mismatch");
}

MonomialIdeal to_ideal(const LambdaSequence& s) {
  s.validate();
  int k = s.k();
  std::vector<Monomial> gens;
  gens.push_back(Monomial{{k, 0, 0}});
  for (int j = 0; j < k; ++j) gens.push_back(Monomial{{j, s.lambda[j], 0}});
  return minimalize(3, std::move(gens));
}

GLambdaResult g_lambda(const LambdaSequence& s, int m, int degree) {
  s.validate(degree);
  int k = s.k();
  if (m < 9)
    throw std::invalid_argument("g_lambda: m below the regularity of the cone");
  long tail = binomial(m + 3 - k, 3);
  for (int j = 0; j < k; ++j) tail += binomial(m + 2 - (j + s.lambda[j]), 2);

  // Direct route: the cone ideal is the same generator set in 4 variables.
  MonomialIdeal cone = to_ideal(s).extended(4);
  long h0 = hilbert_count(cone, m, Side::Ideal);
  if (h0 != tail)
    throw std::logic_error("g_lambda: closed form disagrees with direct count");

  long value = static_cast<long>(degree) * m + 1 - binomial(m + 3, 3) + tail;
  return {value, h0, tail};
}

std::vector<GinReport> enumerate_sequences(int degree) {
  std::vector<GinReport> out;
  const int reg = 9;
  std::vector<int> lambda;
  std::function<void(int)> rec = [&](int rem) {
    int j = static_cast<int>(lambda.size());
    if (rem == 0) {
      if (j < 2) return;
      LambdaSequence s{lambda};
      try {
        s.validate(degree, reg);
      } catch (const std::invalid_argument&) {
        return;
      }
      GLambdaResult g = g_lambda(s, reg, degree);
      out.push_back({s, to_ideal(s), g.value, g.h0_direct});
      return;
    }
    if (j >= reg) return;
    int hi = j == 0 ? std::min(rem, reg) : lambda.back() - 1;
    int lo = j == 0 ? 1 : std::max(1, lambda.back() - 2);
    hi = std::min(hi, reg - j);
    for (int v = hi; v >= lo; --v) {
      if (v > rem) continue;
      lambda.push_back(v);
      rec(rem - v);
      lambda.pop_back();
    }
  };
  rec(degree);
  std::stable_sort(out.begin(), out.end(), [](const GinReport& a, const GinReport& b) {
    if (a.g_lambda != b.g_lambda) return a.g_lambda > b.g_lambda;
    if (a.sequence.k() != b.sequence.k()) return a.sequence.k() < b.sequence.k();
    return a.sequence.lambda < b.sequence.lambda;
  });
  return out;
}

} // namespace hepticheck
