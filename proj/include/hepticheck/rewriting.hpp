#ifndef HEPTICHECK_REWRITING_HPP
#define HEPTICHECK_REWRITING_HPP

#include <map>
#include <vector>

#include "hepticheck/monomial.hpp"

namespace hepticheck {

/// Table-1 C-rewriting rules on minimal generators in x0, x1, x2.
/// Rule 1 applies only to pure powers x0^e; rule 2 only to x0^e x1^f, f >= 1.
enum class RewriteRule { PurePower = 1, Mixed = 2 };

struct RewriteStep {
  RewriteRule rule;
  Monomial target;
  int degree; // degree of the rewritten monomial
};

/// Generator tree: the current minimal generating set plus the rewrite log.
struct GeneratorTree {
  int num_vars = 3;
  MonomialIdeal leaves;
  std::vector<RewriteStep> applied;

  static GeneratorTree from_ideal(const MonomialIdeal& I);
};

bool rule_applicable(const Monomial& m, RewriteRule r);

/// Replaces the target generator by its children and minimalizes:
/// rule 1: x0^e -> {x0^{e+1}, x0^e x1, x0^e x2};
/// rule 2: x0^e x1^f -> {x0^e x1^{f+1}, x0^e x1^f x2}.
GeneratorTree apply_rule(const GeneratorTree& t, const Monomial& target,
                         RewriteRule r);

/// start_bound minus the number of logged rewritings whose target degree is
/// below degree_cap.
long bound_after(const GeneratorTree& t, long start_bound, int degree_cap = 7);

/// Caps on the ideal-side Hilbert counts of the curve ideal in P^3
/// (counted in 4 variables). Defaults encode the Bezout constraints:
/// no quadric; at most one cubic; quartics at most the multiples of a cubic
/// when one is present, else at most one quartic.
struct BezoutConstraints {
  std::map<int, long> max_h0_fixed; // degree -> cap
  bool quartic_conditional = true;  // degree-4 cap depends on cubic presence

  static BezoutConstraints defaults();

  long cap(int degree, const MonomialIdeal& leaves3) const;
  bool satisfied(const MonomialIdeal& leaves3) const;
  int max_constrained_degree() const;
};

struct RewriteSearchResult {
  enum class Status { Found, AlreadySatisfied, Inconclusive };
  Status status = Status::Inconclusive;
  int min_rewritings = -1; // count of sub-degree_cap rewritings
  std::vector<RewriteStep> witness;
  long states_explored = 0;
};

/// Breadth-first search over rewriting sequences for the minimum number of
/// sub-degree_cap rewritings until all Hilbert-count caps hold.
/// Deterministic under the canonical ordering of moves.
RewriteSearchResult min_forced_rewritings(const MonomialIdeal& start,
                                          const BezoutConstraints& c,
                                          int degree_cap = 7,
                                          int max_depth = 16);

} // namespace hepticheck

#endif
