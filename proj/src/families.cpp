#include "skeleton/families.hpp"

#include <stdexcept>

#include "skeleton/tableau.hpp"

namespace skel {

namespace {

MultiPoly skeleton_impl(const Partition& lambda, int only_length, int grading) {
  if (lambda.empty()) return MultiPoly::constant(1);
  const int arity = only_length > 0 ? only_length : max_descent_length(lambda);
  MultiPoly g(arity);
  for (const Tableau& t : standard_tableaux(lambda)) {
    const Composition des = descent_composition(t);
    if (only_length > 0 && des.length() != only_length) continue;
    Monomial m = x_monomial(des.parts());
    if (grading == 1) m.q = depth(des);
    if (grading == 2) m.p = depth(des);
    g.add_term(std::move(m), 1);
  }
  return g;
}

}  // namespace

MultiPoly skeleton_poly(const Partition& lambda) { return skeleton_impl(lambda, 0, 0); }

MultiPoly skeleton_poly_i(const Partition& lambda, int i) {
  if (lambda.empty() || i < lambda.length() || i > max_descent_length(lambda)) return MultiPoly(std::max(i, 0));
  return skeleton_impl(lambda, i, 0);
}

MultiPoly deep_skeleton(const Partition& lambda) { return skeleton_impl(lambda, 0, 1); }

MultiPoly deep_skeleton_p(const Partition& lambda) { return skeleton_impl(lambda, 0, 2); }

MultiPoly inner_crystal_poly(const Partition& lambda) { return skeleton_poly_i(lambda, lambda.length()); }

MultiPoly schur_poly(const Partition& lambda, int k, bool deep) {
  if (k < 0) throw std::invalid_argument("schur_poly: negative variable count");
  MultiPoly g(k);
  for (const Tableau& t : semistandard_tableaux(lambda, k)) {
    Monomial m = x_monomial(lambda.empty() ? std::vector<int>{} : weight(t, k).parts());
    if (deep && !lambda.empty()) m.q = depth(descent_composition(t));
    g.add_term(std::move(m), 1);
  }
  return g;
}

MultiPoly qsym_M(const Composition& b, int k) {
  if (!b.is_strong()) throw std::invalid_argument("qsym_M: composition must be strong");
  if (k < 0) throw std::invalid_argument("qsym_M: negative variable count");
  MultiPoly g(k);
  const int l = b.length();
  if (l > k) return g;
  // Choose the positions i_1 < ... < i_l that receive the parts of b.
  std::vector<int> pos(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) pos[static_cast<std::size_t>(j)] = j;
  while (true) {
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    for (int j = 0; j < l; ++j) e[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])] = b[j];
    g.add_term(x_monomial(std::move(e)), 1);
    int j = l - 1;
    while (j >= 0 && pos[static_cast<std::size_t>(j)] == k - l + j) --j;
    if (j < 0) break;
    ++pos[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < l; ++t) pos[static_cast<std::size_t>(t)] = pos[static_cast<std::size_t>(t) - 1] + 1;
  }
  return g;
}

MultiPoly qsym_F(const Composition& a, int k) {
  MultiPoly g(k);
  for (const Composition& b : refinements(a)) g += qsym_M(b, k);
  return g;
}

UniPoly fake_degree(const Partition& lambda) {
  UniPoly g;
  for (const Tableau& t : standard_tableaux(lambda)) g.add_term(lambda.empty() ? 0 : stats(t).maj, 1);
  return g;
}

UniPoly fake_degree_by_depth(const Partition& lambda) {
  UniPoly g;
  for (const Tableau& t : standard_tableaux(lambda)) g.add_term(lambda.empty() ? 0 : depth(descent_composition(t)), 1);
  return g;
}

UniPoly q_factorial(int n) {
  UniPoly g = UniPoly::monomial(0);
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> ones(static_cast<std::size_t>(i), 1);
    g = g * UniPoly(std::move(ones));
  }
  return g;
}

MultiPoly bifactorial(int n) {
  MultiPoly g;
  for (const Partition& lambda : partitions_of(n)) {
    const UniPoly f = fake_degree(lambda);
    for (int a = 0; a <= f.degree(); ++a) {
      for (int b = 0; b <= f.degree(); ++b) {
        Monomial m;
        m.p = a;
        m.q = b;
        g.add_term(std::move(m), f.coefficient(a) * f.coefficient(b));
      }
    }
  }
  return g;
}

}  // namespace skel
