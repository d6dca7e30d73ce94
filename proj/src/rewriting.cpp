#include "hepticheck/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace hepticheck {

GeneratorTree GeneratorTree::from_ideal(const MonomialIdeal& I) {
  if (I.num_vars != 3)
    throw std::invalid_argument("GeneratorTree: expects three variables");
  return GeneratorTree{3, I, {}};
}

bool rule_applicable(const Monomial& m, RewriteRule r) {
  if (m.num_vars() != 3) return false;
  if (m.e[2] != 0) return false; // rules are stated for x0/x1 monomials only
  if (r == RewriteRule::PurePower) return m.e[0] >= 1 && m.e[1] == 0;
  return m.e[1] >= 1;
}

GeneratorTree apply_rule(const GeneratorTree& t, const Monomial& target,
                         RewriteRule r) {
  const auto& gens = t.leaves.gens;
  if (std::find(gens.begin(), gens.end(), target) == gens.end())
    throw std::invalid_argument("apply_rule: target is not a current leaf");
  if (!rule_applicable(target, r))
    throw std::invalid_argument("apply_rule: rule does not match target shape");

  std::vector<Monomial> next;
  for (const Monomial& g : gens)
    if (!(g == target)) next.push_back(g);
  Monomial x0{{1, 0, 0}}, x1{{0, 1, 0}}, x2{{0, 0, 1}};
  if (r == RewriteRule::PurePower) {
    next.push_back(target * x0);
    next.push_back(target * x1);
    next.push_back(target * x2);
  } else {
    next.push_back(target * x1);
    next.push_back(target * x2);
  }
  GeneratorTree out;
  out.num_vars = t.num_vars;
  out.leaves = minimalize(3, std::move(next));
  out.applied = t.applied;
  out.applied.push_back({r, target, target.degree()});
  return out;
}

long bound_after(const GeneratorTree& t, long start_bound, int degree_cap) {
  long drops = 0;
  for (const RewriteStep& s : t.applied)
    if (s.degree < degree_cap) ++drops;
  return start_bound - drops;
}

BezoutConstraints BezoutConstraints::defaults() {
  BezoutConstraints c;
  c.max_h0_fixed[2] = 0;
  c.max_h0_fixed[3] = 1;
  c.quartic_conditional = true;
  return c;
}

long BezoutConstraints::cap(int degree, const MonomialIdeal& leaves3) const {
  auto it = max_h0_fixed.find(degree);
  if (it != max_h0_fixed.end()) return it->second;
  if (degree == 4 && quartic_conditional) {
    long cubics = hilbert_count(leaves3.extended(4), 3, Side::Ideal);
    if (cubics >= 1) {
      // multiples of a single cubic, counted, not hard-coded
      MonomialIdeal one_cubic = minimalize(4, {Monomial{{3, 0, 0, 0}}});
      return hilbert_count(one_cubic, 4, Side::Ideal);
    }
    return 1;
  }
  return -1; // unconstrained
}

bool BezoutConstraints::satisfied(const MonomialIdeal& leaves3) const {
  MonomialIdeal lifted = leaves3.extended(4);
  for (int d = 2; d <= max_constrained_degree(); ++d) {
    long c = cap(d, leaves3);
    if (c < 0) continue;
    if (hilbert_count(lifted, d, Side::Ideal) > c) return false;
  }
  return true;
}

int BezoutConstraints::max_constrained_degree() const {
  int m = quartic_conditional ? 4 : 0;
  for (const auto& [d, _] : max_h0_fixed) m = std::max(m, d);
  return m;
}

RewriteSearchResult min_forced_rewritings(const MonomialIdeal& start,
                                          const BezoutConstraints& c,
                                          int degree_cap, int max_depth) {
  GeneratorTree root = GeneratorTree::from_ideal(start);
  RewriteSearchResult res;
  if (c.satisfied(start)) {
    res.status = RewriteSearchResult::Status::AlreadySatisfied;
    res.min_rewritings = 0;
    res.states_explored = 1;
    return res;
  }

  // Rewriting a generator of degree D only changes Hilbert counts at
  // degrees >= D, so moves above the constrained range are never useful.
  const int move_cap = c.max_constrained_degree();

  auto key_of = [](const MonomialIdeal& I) { return I.str(); };
  std::set<std::string> visited{key_of(start)};
  std::deque<GeneratorTree> frontier{root};
  long states = 1;

  while (!frontier.empty()) {
    GeneratorTree cur = frontier.front();
    frontier.pop_front();
    if (static_cast<int>(cur.applied.size()) >= max_depth) continue;
    for (const Monomial& g : cur.leaves.gens) {
      if (g.degree() > move_cap) continue;
      for (RewriteRule r : {RewriteRule::PurePower, RewriteRule::Mixed}) {
        if (!rule_applicable(g, r)) continue;
        GeneratorTree next = apply_rule(cur, g, r);
        std::string key = key_of(next.leaves);
        if (!visited.insert(key).second) continue;
        ++states;
        if (c.satisfied(next.leaves)) {
          long sub = 0;
          for (const RewriteStep& s : next.applied)
            if (s.degree < degree_cap) ++sub;
          res.status = RewriteSearchResult::Status::Found;
          res.min_rewritings = static_cast<int>(sub);
          res.witness = next.applied;
          res.states_explored = states;
          return res;
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  res.states_explored = states;
  return res; // inconclusive: search exhausted within depth
}

} // namespace hepticheck
