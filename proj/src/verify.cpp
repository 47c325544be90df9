#include "skeleton/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "skeleton/crystal.hpp"
#include "skeleton/families.hpp"
#include "skeleton/io.hpp"
#include "skeleton/rsk.hpp"
#include "skeleton/tableau.hpp"

namespace skel::verify {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

class Scope {
 public:
  Scope(std::string name, std::string params) : start_(Clock::now()) {
    r_.name = std::move(name);
    r_.parameters = std::move(params);
  }

  void fail(json witness) {
    if (!r_.passed) return;
    r_.passed = false;
    r_.witness = std::move(witness);
  }
  bool ok() const { return r_.passed; }
  json& details() { return r_.details; }

  CheckResult finish() {
    r_.elapsed = Clock::now() - start_;
    return std::move(r_);
  }

 private:
  CheckResult r_;
  Clock::time_point start_;
};

std::string n_param(int n) { return "n=" + std::to_string(n); }
std::string lambda_param(const Partition& lambda) { return "lambda=" + lambda.to_string(); }

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return to_string(v);
}

// First monomial, in canonical term order, where lhs and rhs disagree.
std::optional<json> poly_mismatch(const MultiPoly& lhs, const MultiPoly& rhs) {
  const MultiPoly diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  const Monomial& m = diff.terms().begin()->first;
  return json{{"monomial", io::to_json(m)}, {"lhs", integer_json(lhs.coefficient(m))}, {"rhs", integer_json(rhs.coefficient(m))}};
}

std::optional<json> unipoly_mismatch(const UniPoly& lhs, const UniPoly& rhs) {
  const int top = std::max(lhs.degree(), rhs.degree());
  for (int k = 0; k <= top; ++k) {
    if (lhs.coefficient(k) != rhs.coefficient(k)) {
      return json{{"degree", k}, {"lhs", integer_json(lhs.coefficient(k))}, {"rhs", integer_json(rhs.coefficient(k))}};
    }
  }
  return std::nullopt;
}

// Descent composition read straight off the one-line word: i is a descent
// when w_i > w_{i+1}. Independent of insertion.
Composition word_descents(const Word& w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
  }
  return set_to_comp(IndexSet(static_cast<int>(w.size()), std::move(d)));
}

Composition trimmed(const std::vector<int>& e) {
  std::vector<int> v = e;
  while (!v.empty() && v.back() == 0) v.pop_back();
  return Composition(std::move(v));
}

MultiPoly x_to_y(const MultiPoly& g) {
  MultiPoly out(0, g.x_arity());
  for (const auto& [m, c] : g.terms()) {
    Monomial key;
    key.y = m.x;
    key.p = m.p;
    key.q = m.q;
    out.add_term(std::move(key), c);
  }
  return out;
}

Monomial xy_monomial(const Composition& x, const Composition& y) {
  Monomial m;
  m.x = x.parts();
  m.y = y.parts();
  return m;
}

json perm_list(const std::vector<Permutation>& ws) {
  json out = json::array();
  for (const Permutation& w : ws) out.push_back(w.to_string());
  return out;
}

Partition hook(int n, int k) {
  std::vector<int> parts{n - k + 1};
  parts.insert(parts.end(), static_cast<std::size_t>(k - 1), 1);
  return Partition(std::move(parts));
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int rational_rank(std::vector<std::vector<boost::multiprecision::cpp_rational>> m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    const auto& prow = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const auto factor = m[r][c] / prow[c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * prow[k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

CheckResult check_skeleton_R(int n, bool graded) {
  Scope s(graded ? "skeleton-r-graded" : "skeleton-r", n_param(n));
  MultiPoly lhs(n);
  for (const Partition& lambda : partitions_of(n)) lhs += graded ? deep_skeleton_p(lambda) : skeleton_poly(lambda);
  MultiPoly rhs(n);
  int involutions = 0;
  for (const Permutation& w : permutations_of(n)) {
    if (!w.is_involution()) continue;
    ++involutions;
    const Composition des = word_descents(w.word());
    Monomial m = x_monomial(des.parts());
    if (graded) m.p = depth(des);
    rhs.add_term(std::move(m), 1);
  }
  if (auto bad = poly_mismatch(lhs, rhs)) s.fail(*bad);
  s.details()["involutions"] = involutions;
  return s.finish();
}

CheckResult check_skeleton_RS(int n, bool graded) {
  Scope s(graded ? "skeleton-rs-graded" : "skeleton-rs", n_param(n));
  MultiPoly lhs(n, n);
  for (const Partition& lambda : partitions_of(n)) {
    if (graded) {
      lhs += deep_skeleton_p(lambda) * x_to_y(deep_skeleton(lambda));
    } else {
      lhs += skeleton_poly(lambda) * x_to_y(skeleton_poly(lambda));
    }
  }
  MultiPoly rhs(n, n);
  std::map<std::pair<Composition, Composition>, std::vector<Permutation>> fibres;
  for (const Permutation& w : permutations_of(n)) {
    const Composition dy = word_descents(w.word());
    const Composition dx = word_descents(w.inverse().word());
    Monomial m = xy_monomial(dx, dy);
    if (graded) {
      m.p = depth(dx);
      m.q = depth(dy);
    }
    rhs.add_term(std::move(m), 1);
    fibres[{dx, dy}].push_back(w);
  }
  if (auto bad = poly_mismatch(lhs, rhs)) s.fail(*bad);
  if (!graded) {
    s.details()["support_size"] = lhs.term_count();
    json collisions = json::array();
    int groups = 0;
    for (const auto& [key, ws] : fibres) {
      if (ws.size() < 2) continue;
      ++groups;
      if (n <= 5) collisions.push_back(perm_list(ws));
    }
    s.details()["collision_groups"] = groups;
    if (n <= 5) s.details()["collisions"] = collisions;
  }
  return s.finish();
}

CheckResult check_skeleton_RSK(int n, int k, bool graded) {
  Scope s(graded ? "skeleton-rsk-graded" : "skeleton-rsk", n_param(n) + ",k=" + std::to_string(k));
  MultiPoly lhs(k, n);
  for (const Partition& lambda : partitions_of(n)) {
    lhs += schur_poly(lambda, k) * x_to_y(graded ? deep_skeleton(lambda) : skeleton_poly(lambda));
  }
  std::map<Composition, MultiPoly> fundamentals;
  MultiPoly rhs(k, n);
  for (const Permutation& w : permutations_of(n)) {
    const Composition dy = word_descents(w.word());
    const Composition dx = word_descents(w.inverse().word());
    auto it = fundamentals.find(dx);
    if (it == fundamentals.end()) it = fundamentals.emplace(dx, qsym_F(dx, k)).first;
    Monomial m;
    m.y = dy.parts();
    if (graded) m.q = depth(dy);
    rhs += it->second * MultiPoly::monomial(m);
  }
  if (auto bad = poly_mismatch(lhs, rhs)) s.fail(*bad);
  return s.finish();
}

CheckResult check_counting(int n, int i, int j) {
  Scope s("counting", n_param(n) + ",i=" + std::to_string(i) + ",j=" + std::to_string(j));
  Integer lhs_i = 0, lhs_ij = 0, sum_f = 0, sum_f2 = 0;
  for (const Partition& lambda : partitions_of(n)) {
    const MultiPoly sk = skeleton_poly(lambda);
    const Integer a = sk.specialize_x(i).evaluate_ones();
    const Integer b = sk.specialize_x(j).evaluate_ones();
    const Integer f = sk.evaluate_ones();
    lhs_i += a;
    lhs_ij += a * b;
    sum_f += f;
    sum_f2 += f * f;
  }
  Integer rhs_i = 0, rhs_ij = 0, involutions = 0, factorial = 0;
  std::vector<Permutation> counted;
  for (const Permutation& w : permutations_of(n)) {
    ++factorial;
    const int ly = word_descents(w.word()).length();
    const int lx = word_descents(w.inverse().word()).length();
    if (lx <= i && ly <= j) ++rhs_ij;
    if (!w.is_involution()) continue;
    ++involutions;
    if (ly <= i) {
      ++rhs_i;
      counted.push_back(w);
    }
  }
  auto compare = [&s](const char* what, const Integer& lhs, const Integer& rhs) {
    if (lhs != rhs) s.fail(json{{"identity", what}, {"lhs", integer_json(lhs)}, {"rhs", integer_json(rhs)}});
  };
  compare("involutions with l(des) <= i", lhs_i, rhs_i);
  compare("pairs with l(des w^-1) <= i and l(des w) <= j", lhs_ij, rhs_ij);
  compare("sum of f_lambda", sum_f, involutions);
  compare("sum of f_lambda^2", sum_f2, factorial);
  s.details()["count_i"] = integer_json(lhs_i);
  s.details()["count_ij"] = integer_json(lhs_ij);
  if (n <= 6) s.details()["involutions"] = perm_list(counted);
  return s.finish();
}

CheckResult check_hook_sum(int n) {
  Scope s("hook-sum", n_param(n));
  MultiPoly lhs(n);
  for (int k = 1; k <= n; ++k) {
    const Partition h = hook(n, k);
    const MultiPoly sk = skeleton_poly(h);
    lhs += sk;
    MultiPoly expected(n);
    for (const Composition& a : compositions_of(n)) {
      if (a.length() == k) expected.add_term(x_monomial(a.parts()), 1);
    }
    if (auto bad = poly_mismatch(sk, expected)) {
      (*bad)["hook"] = h.to_string();
      s.fail(*bad);
    }
  }
  MultiPoly rhs(n);
  for (const Composition& a : compositions_of(n)) rhs.add_term(x_monomial(a.parts()), 1);
  if (auto bad = poly_mismatch(lhs, rhs)) s.fail(*bad);
  return s.finish();
}

CheckResult check_mahonian(int n) {
  Scope s("mahonian", n_param(n));
  UniPoly maj, dep, chg, inv, maj_direct;
  for (const Permutation& w : permutations_of(n)) {
    const PermutationStats st = perm_stats(w);
    maj.add_term(st.maj, 1);
    dep.add_term(st.depth, 1);
    chg.add_term(st.charge, 1);
    inv.add_term(st.inversions, 1);
    maj_direct.add_term(maj_of_set(comp_to_set(word_descents(w.word()))), 1);
  }
  const UniPoly target = q_factorial(n);
  const std::pair<const char*, const UniPoly*> stats[] = {
      {"maj", &maj}, {"depth", &dep}, {"charge", &chg}, {"inversions", &inv}, {"maj of one-line descents", &maj_direct}};
  for (const auto& [what, dist] : stats) {
    if (auto bad = unipoly_mismatch(*dist, target)) {
      (*bad)["statistic"] = what;
      s.fail(*bad);
    }
  }
  return s.finish();
}

CheckResult check_bks(const Partition& lambda) {
  Scope s("bks", lambda_param(lambda));
  const int n = lambda.size();
  const UniPoly f = fake_degree(lambda);
  if (auto bad = unipoly_mismatch(f, fake_degree_by_depth(lambda))) {
    (*bad)["identity"] = "maj and depth generating functions";
    s.fail(*bad);
  }
  const int lo = depth(lambda);
  const int hi = static_cast<int>(binomial(n, 2)) - depth(lambda.conjugate());
  if (f.low_degree() != lo || f.degree() != hi || f.coefficient(lo) != 1 || f.coefficient(hi) != 1) {
    s.fail(json{{"identity", "endpoints"}, {"low", f.low_degree()}, {"high", f.degree()}, {"expected_low", lo}, {"expected_high", hi}});
  }
  const InternalZeros z = internal_zeros(f);
  const bool regular = is_regular(lambda);
  if (regular) {
    if (z.count() != 0) s.fail(json{{"identity", "regular shape has no internal zero"}, {"zeros", z.positions}});
  } else {
    for (int k = 0; k <= static_cast<int>(binomial(n, 2)); ++k) {
      const bool predicted = k < lo || k == lo + 1 || k == hi - 1 || k > hi;
      if ((f.coefficient(k) == 0) != predicted) {
        s.fail(json{{"identity", "irregular zero pattern"}, {"degree", k}, {"coefficient", integer_json(f.coefficient(k))}});
        break;
      }
    }
    if (z.count() < 1 || z.count() > 2) s.fail(json{{"identity", "one or two internal zeros"}, {"zeros", z.positions}});
    if ((z.count() == 1) != (lambda == Partition{2, 2})) {
      s.fail(json{{"identity", "exactly one internal zero only for (2,2)"}, {"zeros", z.positions}});
    }
  }
  s.details()["regular"] = regular;
  s.details()["internal_zeros"] = z.positions;
  return s.finish();
}

CheckResult check_schur_family(const Partition& lambda) {
  Scope s("schur-family", lambda_param(lambda));
  const MultiPoly sk = skeleton_poly(lambda);
  const Composition top = lambda.as_composition();
  const Composition bottom = lambda_bar(lambda);
  std::vector<Composition> support;
  for (const auto& [m, c] : sk.terms()) support.push_back(trimmed(m.x));
  std::sort(support.begin(), support.end());

  for (const Composition& a : support) {
    if (!dominance_leq(bottom, a) || !dominance_leq(a, top)) {
      s.fail(json{{"identity", "support inside [lambda-bar, lambda]"}, {"alpha", io::to_json(a)}});
      break;
    }
  }
  const Integer f_top = sk.coefficient(x_monomial(top.parts()));
  const Integer f_bottom = sk.coefficient(x_monomial(bottom.parts()));
  if (f_top != 1 || f_bottom != 1) {
    s.fail(json{{"identity", "endpoint coefficients"}, {"lambda", integer_json(f_top)}, {"lambda_bar", integer_json(f_bottom)}});
  }
  // lambda-bar by formula against the dominance-minimum of the support and
  // against the anti-supersemistandard tableau.
  const Tableau qbar = anti_supersemistandard_tableau(lambda);
  if (descent_composition(qbar) != bottom || !is_quasi_yamanouchi(qbar)) {
    s.fail(json{{"identity", "anti-supersemistandard descent"}, {"tableau", qbar.to_string()}});
  }
  std::vector<Composition> minima;
  for (const Composition& a : support) {
    const bool least = std::all_of(support.begin(), support.end(), [&a](const Composition& b) { return dominance_leq(a, b); });
    if (least) minima.push_back(a);
  }
  if (minima.size() != 1 || minima.front() != bottom) {
    s.fail(json{{"identity", "lambda-bar is the least element of the support"}});
  }

  // Connectivity of the support in the Hasse diagram of Comp(n).
  std::map<Composition, std::vector<Composition>> adj;
  for (const auto& [a, b] : dominance_covers(lambda.size())) {
    if (std::binary_search(support.begin(), support.end(), a) && std::binary_search(support.begin(), support.end(), b)) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  std::set<Composition> seen{support.front()};
  std::queue<Composition> todo;
  todo.push(support.front());
  while (!todo.empty()) {
    Composition a = todo.front();
    todo.pop();
    for (const Composition& b : adj[a]) {
      if (seen.insert(b).second) todo.push(b);
    }
  }
  const bool connected = seen.size() == support.size();
  if (!is_regular(lambda) && connected) s.fail(json{{"identity", "irregular support is disconnected"}});
  s.details()["support_size"] = support.size();
  s.details()["connected"] = connected;
  s.details()["regular"] = is_regular(lambda);
  return s.finish();
}

CheckResult check_reversal(const Partition& lambda) {
  Scope s("reversal", lambda_param(lambda));
  const int l = lambda.length();
  const int m = max_descent_length(lambda);
  for (int i = l - 1; i <= m + 1; ++i) {
    const MultiPoly g = skeleton_poly_i(lambda, i);
    const bool inside = i >= l && i <= m;
    if (g.is_zero() == inside) {
      s.fail(json{{"identity", "Sk_{lambda,i} nonzero exactly for l <= i <= m"}, {"i", i}});
      continue;
    }
    if (auto bad = poly_mismatch(g.reverse_x(), g)) {
      (*bad)["i"] = i;
      s.fail(*bad);
    }
  }
  const MultiPoly sk = skeleton_poly(lambda);
  for (const auto& [mono, c] : sk.terms()) {
    const Composition a = trimmed(mono.x);
    if (quasi_kostka(lambda, a) != quasi_kostka(lambda, a.reversed())) {
      s.fail(json{{"identity", "f_{lambda alpha} = f_{lambda alpha*}"}, {"alpha", io::to_json(a)}});
      break;
    }
  }
  return s.finish();
}

CheckResult check_inner_crystal(const Partition& lambda) {
  Scope s("inner-crystal", lambda_param(lambda));
  const int l = lambda.length();
  std::vector<Tableau> inner;
  for (const Tableau& t : standard_tableaux(lambda)) {
    if (descent_composition(t).length() == l) inner.push_back(t);
  }
  const std::vector<Tableau> bounded = semistandard_tableaux(lambda, l);
  if (inner.size() != bounded.size()) {
    s.fail(json{{"identity", "|A(lambda)| = |SSYT(lambda, <= l)|"}, {"inner", inner.size()}, {"ssyt", bounded.size()}});
  }
  std::vector<Tableau> image;
  for (const Tableau& t : inner) image.push_back(destandardize(t));
  std::sort(image.begin(), image.end());
  if (image != bounded) s.fail(json{{"identity", "destandardization is a bijection onto SSYT(lambda, <= l)"}});

  std::vector<Tableau> from_graph = inner_crystal(build_crystal(lambda, l));
  std::sort(from_graph.begin(), from_graph.end());
  if (from_graph != inner) s.fail(json{{"identity", "inner crystal representatives"}});

  if (auto bad = poly_mismatch(inner_crystal_poly(lambda), schur_poly(lambda, l))) {
    (*bad)["identity"] = "A_lambda = s_lambda(x_1..x_l)";
    s.fail(*bad);
  }
  s.details()["size"] = inner.size();
  return s.finish();
}

CheckResult check_quasi_crystals(const Partition& lambda) {
  Scope s("quasi-crystal", lambda_param(lambda));
  const int n = lambda.size();
  const CrystalGraph g = build_crystal(lambda, n);
  const auto classes = quasi_crystal_decomposition(g);
  if (static_cast<long long>(classes.size()) != static_cast<long long>(standard_tableaux(lambda).size())) {
    s.fail(json{{"identity", "one class per standard tableau"}, {"classes", classes.size()}});
  }
  for (const QuasiCrystal& q : classes) {
    MultiPoly gen(n);
    for (const Tableau& t : q.members) gen.add_term(x_monomial(weight(t, n).parts()), 1);
    if (auto bad = poly_mismatch(gen, qsym_F(q.descent, n))) {
      (*bad)["class"] = q.representative.to_string();
      s.fail(*bad);
    }
    if (!is_connected_class(g, q)) s.fail(json{{"identity", "class is connected"}, {"class", q.representative.to_string()}});
  }
  s.details()["vertices"] = g.vertices.size();
  s.details()["classes"] = classes.size();
  return s.finish();
}

CheckResult check_anti_isomorphism(const Partition& lambda) {
  Scope s("anti-isomorphism", lambda_param(lambda));
  const int n = lambda.size();
  const CrystalGraph g = build_crystal(lambda, n);
  std::vector<int> star(g.vertices.size(), -1);
  for (std::size_t v = 0; v < g.vertices.size() && s.ok(); ++v) {
    const Tableau& t = g.vertices[v];
    const Tableau e = evacuation(t);
    star[v] = g.index_of(e);
    if (star[v] < 0 || evacuation(e) != t) {
      s.fail(json{{"identity", "evacuation is an involution on B_n(lambda)"}, {"tableau", t.to_string()}});
      break;
    }
    const Composition d = descent_composition(t);
    if (descent_composition(e) != d.reversed()) {
      s.fail(json{{"identity", "des(T*) = (des T)*"}, {"tableau", t.to_string()}});
    }
    if (depth(d) != stats(e).maj) s.fail(json{{"identity", "dep(T) = maj(T*)"}, {"tableau", t.to_string()}});
    if (t.is_standard() && !e.is_standard()) s.fail(json{{"identity", "restricts to ST(lambda)"}, {"tableau", t.to_string()}});
  }
  if (s.ok()) {
    for (const CrystalEdge& edge : g.edges) {
      const auto back = f_op(g.vertices[static_cast<std::size_t>(star[static_cast<std::size_t>(edge.to)])], n - edge.color);
      if (!back || g.index_of(*back) != star[static_cast<std::size_t>(edge.from)]) {
        s.fail(json{{"identity", "T -i-> U implies U* -(n-i)-> T*"},
                    {"from", g.vertices[static_cast<std::size_t>(edge.from)].to_string()},
                    {"color", edge.color},
                    {"to", g.vertices[static_cast<std::size_t>(edge.to)].to_string()}});
        break;
      }
    }
  }
  s.details()["vertices"] = g.vertices.size();
  s.details()["edges"] = g.edges.size();
  return s.finish();
}

CheckResult check_composition_poset(int n) {
  Scope s("comp-order", n_param(n));
  const auto comps = compositions_of(n);
  const auto covers = dominance_covers(n);
  std::map<Composition, std::vector<Composition>> lower, upper;
  for (const auto& [a, b] : covers) {
    lower[a].push_back(b);
    upper[b].push_back(a);
    if (depth(b) != depth(a) + 1) {
      s.fail(json{{"identity", "covers raise depth by one"}, {"upper", io::to_json(a)}, {"lower", io::to_json(b)}});
    }
  }
  const Composition top{n};
  const Composition bottom(std::vector<int>(static_cast<std::size_t>(n), 1));
  const int max_depth = static_cast<int>(binomial(n, 2));
  for (const Composition& a : comps) {
    auto expected = raising_covers(a);
    std::sort(expected.begin(), expected.end());
    auto found = lower[a];
    std::sort(found.begin(), found.end());
    if (expected != found) s.fail(json{{"identity", "lower covers are the raising operations"}, {"alpha", io::to_json(a)}});
    const int d = depth(a);
    if ((d == 0) != (a == top) || (d == max_depth) != (a == bottom)) {
      s.fail(json{{"identity", "extreme depths only at (n) and (1^n)"}, {"alpha", io::to_json(a)}});
    }
    if (!dominance_leq(a, top) || !dominance_leq(bottom, a)) {
      s.fail(json{{"identity", "(1^n) <= alpha <= (n)"}, {"alpha", io::to_json(a)}});
    }
    if (a != top && upper[a].empty()) s.fail(json{{"identity", "every non-maximum has an upper cover"}, {"alpha", io::to_json(a)}});
  }
  s.details()["elements"] = comps.size();
  s.details()["covers"] = covers.size();
  return s.finish();
}

CheckResult check_superboolean_poset(int n) {
  Scope s("superboolean", n_param(n));
  const auto sets = subsets_of(n);
  std::set<std::pair<IndexSet, IndexSet>> covers;
  std::map<IndexSet, int> lower_count;
  for (const IndexSet& a : sets) {
    for (const IndexSet& b : superboolean_covers(a)) {
      covers.insert({a, b});
      ++lower_count[b];
      if (maj_of_set(b) != maj_of_set(a) + 1) {
        s.fail(json{{"identity", "covers raise maj by one"}, {"lower", a.to_string()}, {"upper", b.to_string()}});
      }
    }
  }
  const int max_maj = static_cast<int>(binomial(n, 2));
  for (const IndexSet& a : sets) {
    const int m = maj_of_set(a);
    const bool is_empty = a.members().empty();
    const bool is_full = static_cast<int>(a.members().size()) == std::max(n - 1, 0);
    if ((m == 0) != is_empty || (m == max_maj) != is_full) {
      s.fail(json{{"identity", "extreme maj only at the empty and full sets"}, {"set", a.to_string()}});
    }
    if (!is_empty && lower_count[a] == 0) s.fail(json{{"identity", "every non-minimum has a lower cover"}, {"set", a.to_string()}});
    if (!is_full && superboolean_covers(a).empty()) {
      s.fail(json{{"identity", "every non-maximum has an upper cover"}, {"set", a.to_string()}});
    }
    if (comp_to_set(set_to_comp(a)) != a) s.fail(json{{"identity", "A(alpha(A)) = A"}, {"set", a.to_string()}});
  }
  for (const Composition& a : compositions_of(n)) {
    if (set_to_comp(comp_to_set(a)) != a) s.fail(json{{"identity", "alpha(A(alpha)) = alpha"}, {"alpha", io::to_json(a)}});
    if (maj_of_set(comp_to_set(a.reversed())) != depth(a)) {
      s.fail(json{{"identity", "maj A(alpha*) = dep alpha"}, {"alpha", io::to_json(a)}});
    }
  }
  // alpha -> A(alpha*) carries the dominance Hasse diagram onto this one.
  std::set<std::pair<IndexSet, IndexSet>> image;
  for (const auto& [a, b] : dominance_covers(n)) image.insert({comp_to_set(a.reversed()), comp_to_set(b.reversed())});
  if (image != covers) s.fail(json{{"identity", "alpha -> A(alpha*) is an isomorphism of Hasse diagrams"}});
  s.details()["elements"] = sets.size();
  s.details()["covers"] = covers.size();
  return s.finish();
}

CheckResult check_charge_depth(int n) {
  Scope s("charge-depth", n_param(n));
  for (const Permutation& w : permutations_of(n)) {
    const int lhs = charge(w);
    const int rhs = perm_stats(w.inverse()).depth;
    if (lhs != rhs) {
      s.fail(json{{"permutation", w.to_string()}, {"charge", lhs}, {"depth_of_inverse", rhs}});
      break;
    }
  }
  const Permutation example({5, 7, 8, 4, 1, 3, 6, 2});
  const IndexSet expected(8, {2, 3, 4, 6});
  if (charge(example) != 17 || left_descents(example) != expected || perm_stats(example.inverse()).depth != 17) {
    s.fail(json{{"permutation", example.to_string()}, {"charge", charge(example)}, {"left_descents", left_descents(example).to_string()}});
  }
  return s.finish();
}

CheckResult check_s6_inversion_count() {
  Scope s("s6-inversions", "n=6,k=4");
  const int n = 6, k = 4;
  long long direct = 0;
  for (const Permutation& w : permutations_of(n)) direct += inversions(w) == k ? 1 : 0;
  const Integer from_factorial = q_factorial(n).coefficient(k);

  std::vector<Composition> depth_k;
  for (const Composition& a : compositions_of(n)) {
    if (depth(a) == k) depth_k.push_back(a);
  }
  Integer weighted = 0;
  json shapes = json::array();
  for (const Partition& lambda : partitions_of(n)) {
    long long admitting = 0;
    for (const Composition& a : depth_k) admitting += quasi_kostka(lambda, a);
    if (admitting == 0) continue;
    const auto f = static_cast<long long>(standard_tableaux(lambda).size());
    weighted += Integer(admitting) * f;
    shapes.push_back(json{{"lambda", lambda.to_string()}, {"f", f}, {"multiplicity", admitting}});
  }
  const std::vector<Composition> expected_comps{Composition{2, 4}, Composition{3, 2, 1}};
  if (depth_k != expected_comps) s.fail(json{{"identity", "compositions of 6 with depth 4 are 24 and 321"}});
  if (direct != 49 || from_factorial != 49 || weighted != 49) {
    s.fail(json{{"direct", direct}, {"q_factorial", integer_json(from_factorial)}, {"shape_sum", integer_json(weighted)}});
  }
  s.details()["count"] = direct;
  s.details()["shapes"] = shapes;
  return s.finish();
}

CheckResult check_bifactorial(int n) {
  Scope s("bifactorial", n_param(n));
  const MultiPoly g = bifactorial(n);
  MultiPoly rhs;
  for (const Permutation& w : permutations_of(n)) {
    Monomial m;
    m.p = charge(w);
    m.q = perm_stats(w).depth;
    rhs.add_term(std::move(m), 1);
  }
  if (auto bad = poly_mismatch(g, rhs)) {
    (*bad)["identity"] = "sum over partitions = sum over S_n of p^c(w) q^dep(w)";
    s.fail(*bad);
  }
  if (auto bad = unipoly_mismatch(as_q_poly(g.set_p_one()), q_factorial(n))) {
    (*bad)["identity"] = "p = 1 gives [n]_q!";
    s.fail(*bad);
  }
  if (n == 4) {
    const UniPoly expected(std::vector<Integer>{0, 1, 1, 2, 1, 1});
    if (auto bad = unipoly_mismatch(coefficient_of_q(g, 3), expected)) {
      (*bad)["identity"] = "[q^3][4]_{p,q}!";
      s.fail(*bad);
    }
  }
  json zeros = json::object();
  const int top = static_cast<int>(binomial(n, 2));
  for (int k = 0; k <= top; ++k) {
    const InternalZeros z = internal_zeros(coefficient_of_q(g, k));
    if (z.count() == 0) continue;
    zeros[std::to_string(k)] = z.positions;
    if (is_prime(n)) s.fail(json{{"identity", "prime n has no internal zero"}, {"k", k}, {"zeros", z.positions}});
  }
  s.details()["internal_zeros"] = zeros;
  return s.finish();
}

CheckResult check_linear_independence(int n) {
  Scope s("linear-independence", n_param(n));
  const auto parts = partitions_of(n);
  const auto comps = compositions_of(n);
  std::vector<std::vector<boost::multiprecision::cpp_rational>> matrix;
  for (const Partition& lambda : parts) {
    const MultiPoly sk = skeleton_poly(lambda);
    std::vector<boost::multiprecision::cpp_rational> row;
    for (const Composition& a : comps) {
      const Integer c = sk.coefficient(x_monomial(a.parts()));
      row.emplace_back(c);
      if (c != 0 && !dominance_leq(a, lambda.as_composition())) {
        s.fail(json{{"identity", "triangularity"}, {"lambda", lambda.to_string()}, {"alpha", io::to_json(a)}});
      }
    }
    if (sk.coefficient(x_monomial(lambda.parts())) != 1) s.fail(json{{"identity", "f_{lambda lambda} = 1"}, {"lambda", lambda.to_string()}});
    matrix.push_back(std::move(row));
  }
  const int rank = rational_rank(matrix);
  if (rank != static_cast<int>(parts.size())) s.fail(json{{"identity", "full row rank"}, {"rank", rank}, {"partitions", parts.size()}});
  s.details()["rank"] = rank;
  return s.finish();
}

namespace {

using Runner = std::function<CheckResult(const SuiteBounds&)>;

CheckResult fold(const std::string& name, const std::string& params, const std::vector<std::function<CheckResult()>>& instances) {
  const auto start = Clock::now();
  CheckResult total;
  total.name = name;
  total.parameters = params;
  int count = 0;
  for (const auto& run : instances) {
    CheckResult r = run();
    ++count;
    total.details = r.details;
    if (!r.passed && total.passed) {
      total.passed = false;
      json w = r.witness.value_or(json::object());
      w["instance"] = r.name + "(" + r.parameters + ")";
      total.witness = std::move(w);
    }
  }
  total.details["instances"] = count;
  total.elapsed = Clock::now() - start;
  return total;
}

using Instances = std::vector<std::function<CheckResult()>>;

Instances over_n(int lo, int hi, const std::function<CheckResult(int)>& f) {
  Instances out;
  for (int n = lo; n <= hi; ++n) out.push_back([f, n] { return f(n); });
  return out;
}

Instances over_shapes(int hi, const std::function<CheckResult(const Partition&)>& f) {
  Instances out;
  for (int n = 1; n <= hi; ++n) {
    for (const Partition& lambda : partitions_of(n)) out.push_back([f, lambda] { return f(lambda); });
  }
  return out;
}

std::string upto(int n) { return "n<=" + std::to_string(n); }

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"skeleton-r",
       [](const SuiteBounds& b) {
         Instances in = over_n(1, b.poly_n, [](int n) { return check_skeleton_R(n, false); });
         for (auto& f : over_n(1, b.poly_n, [](int n) { return check_skeleton_R(n, true); })) in.push_back(f);
         return fold("skeleton-r", upto(b.poly_n), in);
       }},
      {"skeleton-rs",
       [](const SuiteBounds& b) {
         Instances in = over_n(1, b.poly_n, [](int n) { return check_skeleton_RS(n, true); });
         for (auto& f : over_n(1, b.poly_n, [](int n) { return check_skeleton_RS(n, false); })) in.push_back(f);
         return fold("skeleton-rs", upto(b.poly_n), in);
       }},
      {"skeleton-rsk",
       [](const SuiteBounds& b) {
         Instances in = over_n(1, b.poly_n, [](int n) { return check_skeleton_RSK(n, n, false); });
         for (auto& f : over_n(1, b.poly_n, [](int n) { return check_skeleton_RSK(n, n, true); })) in.push_back(f);
         return fold("skeleton-rsk", upto(b.poly_n), in);
       }},
      {"counting",
       [](const SuiteBounds& b) {
         Instances in;
         for (int n = 1; n <= b.scalar_n; ++n) {
           for (int i = 1; i <= n; ++i) {
             for (int j = 1; j <= n; ++j) in.push_back([n, i, j] { return check_counting(n, i, j); });
           }
         }
         return fold("counting", upto(b.scalar_n), in);
       }},
      {"hook-sum", [](const SuiteBounds& b) { return fold("hook-sum", upto(b.scalar_n), over_n(1, b.scalar_n, check_hook_sum)); }},
      {"mahonian", [](const SuiteBounds& b) { return fold("mahonian", upto(b.scalar_n), over_n(1, b.scalar_n, check_mahonian)); }},
      {"bks", [](const SuiteBounds& b) { return fold("bks", upto(b.scalar_n), over_shapes(b.scalar_n, check_bks)); }},
      {"schur-family",
       [](const SuiteBounds& b) { return fold("schur-family", upto(b.scalar_n), over_shapes(b.scalar_n, check_schur_family)); }},
      {"charge-depth",
       [](const SuiteBounds& b) { return fold("charge-depth", upto(b.scalar_n), over_n(1, b.scalar_n, check_charge_depth)); }},
      {"s6-inversions", [](const SuiteBounds&) { return check_s6_inversion_count(); }},
      {"bifactorial",
       [](const SuiteBounds& b) { return fold("bifactorial", upto(b.scalar_n), over_n(1, b.scalar_n, check_bifactorial)); }},
      {"linear-independence",
       [](const SuiteBounds& b) {
         return fold("linear-independence", upto(b.poly_n), over_n(1, b.poly_n, check_linear_independence));
       }},
      {"reversal", [](const SuiteBounds& b) { return fold("reversal", upto(b.poly_n), over_shapes(b.poly_n, check_reversal)); }},
      {"inner-crystal",
       [](const SuiteBounds& b) { return fold("inner-crystal", upto(b.poly_n), over_shapes(b.poly_n, check_inner_crystal)); }},
      {"quasi-crystal",
       [](const SuiteBounds& b) { return fold("quasi-crystal", upto(b.poly_n), over_shapes(b.poly_n, check_quasi_crystals)); }},
      {"anti-isomorphism",
       [](const SuiteBounds& b) {
         return fold("anti-isomorphism", upto(b.poly_n), over_shapes(b.poly_n, check_anti_isomorphism));
       }},
      {"comp-order",
       [](const SuiteBounds& b) { return fold("comp-order", upto(b.scalar_n), over_n(1, b.scalar_n, check_composition_poset)); }},
      {"superboolean",
       [](const SuiteBounds& b) {
         return fold("superboolean", upto(b.scalar_n), over_n(1, b.scalar_n, check_superboolean_poset));
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

CheckResult run_check(const std::string& name, const SuiteBounds& bounds) {
  for (const auto& [key, run] : registry()) {
    if (key == name) return run(bounds);
  }
  throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckResult> run_suite(const std::vector<std::string>& names, const SuiteBounds& bounds, int threads) {
  std::vector<std::string> selected;
  for (const std::string& name : names) {
    if (name == "all") {
      selected.insert(selected.end(), check_names().begin(), check_names().end());
    } else if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
      throw std::invalid_argument("unknown check: " + name);
    } else {
      selected.push_back(name);
    }
  }
  std::vector<CheckResult> results(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        results[i] = run_check(selected[i], bounds);
      } catch (const std::exception& e) {
        results[i].name = selected[i];
        results[i].passed = false;
        results[i].witness = json{{"error", e.what()}};
      }
    }
  };
  const int count = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(selected.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

json to_json(const CheckResult& r, bool with_timing) {
  json j{{"name", r.name}, {"parameters", r.parameters}, {"passed", r.passed}};
  if (r.witness) j["witness"] = *r.witness;
  if (!r.details.empty()) j["details"] = r.details;
  if (with_timing) j["elapsed_seconds"] = r.elapsed.count();
  return j;
}

}  // namespace skel::verify
