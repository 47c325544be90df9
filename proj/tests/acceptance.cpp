// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skeleton/combinatorics.hpp"
#include "skeleton/crystal.hpp"
#include "skeleton/families.hpp"
#include "skeleton/io.hpp"
#include "skeleton/rsk.hpp"
#include "skeleton/tableau.hpp"
#include "skeleton/verify.hpp"

using namespace skel;

namespace {

// Collects the first reason a criterion fails.
struct Probe {
  std::string reason;
  bool expect(bool ok, const std::string& what) {
    if (!ok && reason.empty()) reason = what;
    return ok;
  }
  void require(const verify::CheckResult& r) {
    expect(r.passed, r.name + " " + r.parameters + (r.witness ? " " + r.witness->dump() : ""));
  }
  bool ok() const { return reason.empty(); }
};

std::vector<std::string> golden_lines(const std::string& name) {
  std::ifstream in(std::string(SKELETON_GOLDEN_DIR) + "/" + name);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t pos = s.find(sep); pos != std::string::npos; pos = s.find(sep, start)) {
    out.push_back(trim(s.substr(start, pos - start)));
    start = pos + sep.size();
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

MultiPoly x(std::vector<int> e) { return MultiPoly::monomial(x_monomial(std::move(e))); }

MultiPoly deep_x(std::vector<int> e, int q) {
  Monomial m = x_monomial(std::move(e));
  m.q = q;
  return MultiPoly::monomial(m);
}

void criterion_1(Probe& p) {
  const Partition lambda{3, 3, 2};
  const Composition alpha{1, 2, 2, 2, 1};
  p.expect(quasi_kostka(lambda, alpha) == 3, "f_{332,12221} != 3");
  std::set<std::string> got;
  for (const Tableau& t : standard_tableaux(lambda)) {
    if (descent_composition(t) == alpha) got.insert(t.to_string());
  }
  p.expect(got == std::set<std::string>{"137/258/46", "135/267/48", "135/247/68"}, "listed tableaux differ");
}

void criterion_2(Probe& p) {
  const Partition lambda{3, 2};
  p.expect(skeleton_poly(lambda) == x({3, 2}) + x({2, 3}) + x({2, 2, 1}) + x({1, 3, 1}) + x({1, 2, 2}), "Sk_32 differs");
  p.expect(skeleton_poly(lambda).term_count() == 5, "Sk_32 does not have five terms");
  const MultiPoly deep = deep_x({3, 2}, 2) + deep_x({2, 3}, 3) + deep_x({2, 2, 1}, 4) + deep_x({1, 3, 1}, 5) + deep_x({1, 2, 2}, 6);
  p.expect(deep_skeleton(lambda) == deep, "deep Sk_32 differs");
}

void criterion_3(Probe& p) {
  const auto lines = golden_lines("skeleton_table4.txt");
  p.expect(lines.size() == 11, "table golden does not have eleven rows");
  std::size_t shapes = 0;
  for (int n = 1; n <= 4; ++n) shapes += partitions_of(n).size();
  p.expect(shapes == 11, "eleven shapes expected for 1 <= |lambda| <= 4");
  for (const std::string& line : lines) {
    const auto fields = split(line, "|");
    if (!p.expect(fields.size() == 3, "malformed row: " + line)) return;
    const Partition lambda = io::parse_partition(fields[0]);
    const auto expected_qy = split(fields[1], ",");
    std::vector<std::string> qy;
    MultiPoly by_weight(max_descent_length(lambda));
    for (const Tableau& t : quasi_yamanouchi_tableaux(lambda)) {
      qy.push_back(t.to_string());
      by_weight.add_term(x_monomial(weight(t).parts()), 1);
    }
    p.expect(qy == expected_qy, "QY tableaux differ for " + fields[0]);
    p.expect(by_weight == skeleton_poly(lambda), "QY weights do not sum to Sk for " + fields[0]);
    p.expect(io::render_poly(skeleton_poly(lambda)) == fields[2], "Sk differs for " + fields[0]);
  }
}

void criterion_4(Probe& p) {
  const Tableau t{{1, 1, 1, 2}, {3, 4}, {4}};
  p.expect(row_word(t) == Word{4, 3, 4, 1, 1, 1, 2}, "row word differs");
  const Word star{6, 7, 7, 7, 4, 5, 4};
  p.expect(rsk(star).insertion == Tableau({{4, 4, 7, 7}, {5, 7}, {6}}), "P(w*) differs");
  const Tableau e = evacuation(t);
  p.expect(e == Tableau({{4, 4, 7, 7}, {5, 7}, {6}}), "evacuation differs");
  p.expect(descent_composition(t) == Composition({4, 1, 2}), "des T differs");
  p.expect(descent_composition(e) == Composition({2, 1, 4}), "des T* differs");
  for (const Partition& lambda : partitions_of(4)) {
    const CrystalGraph g = build_crystal(lambda, 4);
    for (const Tableau& v : g.vertices) {
      const Tableau w = evacuation(v);
      p.expect(g.index_of(w) >= 0 && evacuation(w) == v, "not an involution at " + v.to_string());
    }
  }
}

void criterion_5(Probe& p) {
  const verify::SuiteBounds b{5, 5};
  for (const char* name : {"skeleton-r", "skeleton-rs", "skeleton-rsk"}) {
    const auto r = verify::run_check(name, b);
    p.require(r);
    p.expect(r.details.value("instances", 0) == 10, std::string(name) + " did not run graded and plain instances");
  }
}

void criterion_6(Probe& p) {
  for (int n = 1; n <= 8; ++n) p.require(verify::check_mahonian(n));
}

void criterion_7(Probe& p) {
  const Permutation w({5, 7, 8, 4, 1, 3, 6, 2});
  p.expect(charge(w) == 17, "c(57841362) != 17");
  for (const Permutation& v : permutations_of(7)) {
    if (!p.expect(charge(v) == perm_stats(v.inverse()).depth, "c(w) != dep(w^-1) at " + v.to_string())) break;
  }
  p.require(verify::check_charge_depth(7));
}

void criterion_8(Probe& p) {
  const std::map<std::string, std::string> expected{
      {"4", "1"}, {"31", "q + q^2 + q^3"}, {"22", "q^2 + q^4"}, {"211", "q^3 + q^4 + q^5"}, {"1111", "q^6"}};
  for (const Partition& lambda : partitions_of(4)) {
    p.expect(io::render_unipoly(fake_degree(lambda)) == expected.at(lambda.to_string()), "f_" + lambda.to_string() + " differs");
  }
  for (int n = 1; n <= 8; ++n) {
    const int top = static_cast<int>(binomial(n, 2));
    for (const Partition& lambda : partitions_of(n)) {
      p.require(verify::check_bks(lambda));
      const UniPoly f = fake_degree(lambda);
      const int lo = depth(lambda), hi = top - depth(lambda.conjugate());
      p.expect(f.low_degree() == lo && f.coefficient(lo) == 1, "low endpoint of f_" + lambda.to_string());
      p.expect(f.degree() == hi && f.coefficient(hi) == 1, "high endpoint of f_" + lambda.to_string());
    }
  }
}

void criterion_9(Probe& p) {
  const UniPoly c3 = coefficient_of_q(bifactorial(4), 3);
  p.expect(io::render_unipoly(c3, 'p') == "p + p^2 + 2*p^3 + p^4 + p^5", "[q^3][4]_{p,q}! differs");
  int inv3 = 0;
  for (const Permutation& w : permutations_of(4)) inv3 += inversions(w) == 3;
  p.expect(c3.evaluate_one() == 6 && inv3 == 6, "p = 1 does not count 6 permutations with 3 inversions");
  const auto s6 = verify::check_s6_inversion_count();
  p.require(s6);
  p.expect(s6.details.value("count", 0) == 49, "S_6 count is not 49");
  for (int n : {2, 3, 5, 7}) {
    const MultiPoly g = bifactorial(n);
    for (int k = 0; k <= binomial(n, 2); ++k) {
      p.expect(internal_zeros(coefficient_of_q(g, k)).count() == 0, "internal zero for prime n = " + std::to_string(n));
    }
    p.require(verify::check_bifactorial(n));
  }
}

void criterion_10(Probe& p) {
  const auto r = verify::check_counting(4, 2, 2);
  p.require(r);
  p.expect(r.details["count_i"] == 5, "count for n=4, i=2 is not 5");
  p.expect(r.details["involutions"] == nlohmann::json{"1234", "1243", "1324", "2134", "3412"}, "listed involutions differ");
  for (int n = 1; n <= 7; ++n) {
    Integer sum_f = 0, sum_f2 = 0, factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    for (const Partition& lambda : partitions_of(n)) {
      const Integer f = static_cast<long long>(standard_tableaux(lambda).size());
      sum_f += f;
      sum_f2 += f * f;
    }
    long long involutions = 0;
    for (const Permutation& w : permutations_of(n)) involutions += w.is_involution();
    p.expect(sum_f2 == factorial, "sum f^2 != n! at n = " + std::to_string(n));
    p.expect(sum_f == involutions, "sum f != #involutions at n = " + std::to_string(n));
    p.require(verify::check_counting(n, 1, n));
  }
}

void criterion_11(Probe& p) {
  for (int n = 1; n <= 7; ++n) p.require(verify::check_hook_sum(n));
  for (int n = 1; n <= 6; ++n) {
    const auto r = verify::check_linear_independence(n);
    p.require(r);
    p.expect(r.details["rank"] == partitions_of(n).size(), "rank deficit at n = " + std::to_string(n));
  }
}

void criterion_12(Probe& p) {
  const auto r = verify::check_skeleton_RS(4);
  p.require(r);
  p.expect(r.details["support_size"] == 22, "support size is not 22");
  std::set<std::set<std::string>> groups;
  for (const auto& g : r.details["collisions"]) groups.insert(g.get<std::set<std::string>>());
  p.expect(groups == std::set<std::set<std::string>>{{"1324", "3412"}, {"2143", "4231"}}, "colliding pairs differ");
}

void criterion_13(Probe& p) {
  const CrystalGraph g = build_crystal(Partition({3, 2}), 3);
  p.expect(g.vertices.size() == 15, "B_3(32) does not have 15 vertices");
  std::map<std::string, std::string> class_of;
  std::map<std::string, std::set<std::string>> classes;
  for (const QuasiCrystal& q : quasi_crystal_decomposition(g)) {
    for (const Tableau& t : q.members) {
      class_of[t.to_string()] = q.descent.to_string();
      classes[q.descent.to_string()].insert(t.to_string());
    }
  }
  std::map<std::string, std::set<std::string>> golden_classes;
  std::set<std::string> golden_edges, golden_links;
  for (const std::string& line : golden_lines("crystal_32_b3.txt")) {
    std::istringstream ss(line);
    std::string kind, a, b, c;
    ss >> kind;
    if (kind == "class") {
      ss >> a;
      while (ss >> b) golden_classes[a].insert(b);
    } else if (kind == "edge") {
      ss >> a >> b >> c;
      golden_edges.insert(a + " " + b + " " + c);
    } else if (kind == "link") {
      ss >> a >> b;
      golden_links.insert(std::min(a, b) + " " + std::max(a, b));
    }
  }
  p.expect(classes == golden_classes, "quasi-crystal classes differ");
  std::set<std::string> edges, links;
  for (const CrystalEdge& e : g.edges) {
    const std::string a = g.vertices[static_cast<std::size_t>(e.from)].to_string();
    const std::string b = g.vertices[static_cast<std::size_t>(e.to)].to_string();
    if (class_of[a] == class_of[b]) {
      edges.insert(a + " " + std::to_string(e.color) + " " + b);
    } else {
      links.insert(std::min(a, b) + " " + std::max(a, b));
    }
  }
  p.expect(edges == golden_edges, "colored edges differ");
  p.expect(links == golden_links, "inter-class links differ");
  p.expect(g.edges.size() == 18, "B_3(32) does not have 18 edges");
  for (const Partition& lambda : partitions_of(5)) {
    p.require(verify::check_quasi_crystals(lambda));
    p.require(verify::check_anti_isomorphism(lambda));
  }
  for (const Partition& lambda : partitions_of(6)) {
    p.require(verify::check_inner_crystal(lambda));
    const auto inner = inner_crystal(build_crystal(lambda, lambda.length()));
    p.expect(inner.size() == semistandard_tableaux(lambda, lambda.length()).size(), "inner crystal size for " + lambda.to_string());
    p.expect(inner_crystal_poly(lambda) == schur_poly(lambda, lambda.length()), "A_lambda for " + lambda.to_string());
  }
}

void criterion_14(Probe& p) {
  for (int n = 1; n <= 7; ++n) {
    p.require(verify::check_composition_poset(n));
    p.require(verify::check_superboolean_poset(n));
    std::vector<Composition> comps = compositions_of(n);
    const auto [lo, hi] = std::minmax_element(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return depth(a) < depth(b); });
    p.expect(*lo == Composition({n}), "(n) is not the unique top");
    p.expect(*hi == Composition(std::vector<int>(static_cast<std::size_t>(n), 1)), "(1^n) is not the bottom");
  }
  for (int n = 1; n <= 8; ++n) {
    for (const IndexSet& s : subsets_of(n)) p.expect(comp_to_set(set_to_comp(s)) == s, "set round trip at " + s.to_string());
    for (const Composition& a : compositions_of(n)) p.expect(set_to_comp(comp_to_set(a)) == a, "composition round trip at " + a.to_string());
  }
  auto joined = [](const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
  };
  p.expect(io::composition_poset_text(4) == joined(golden_lines("comp_poset4.txt")), "Comp(4) Hasse diagram differs");
  p.expect(io::superboolean_poset_text(4) == joined(golden_lines("superboolean4.txt")), "superboolean Hasse diagram differs");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Probe&)>>> criteria = {
      {"quasi-Kostka f_{332,12221} = 3", criterion_1},
      {"Sk_32 and its deep version", criterion_2},
      {"skeleton table for |lambda| <= 4", criterion_3},
      {"evacuation example and involution for lambda of 4", criterion_4},
      {"R, RS, RSK identities and graded forms for n <= 5", criterion_5},
      {"Mahonian equidistribution for n <= 8", criterion_6},
      {"charge example and c(w) = dep(w^-1) on S_7", criterion_7},
      {"fake degrees of size 4 and BKS dichotomy for n <= 8", criterion_8},
      {"bifactorial coefficients, S_6 count, prime n", criterion_9},
      {"involution and n! counts", criterion_10},
      {"hook sum and linear independence", criterion_11},
      {"skeleton-algebra support at n = 4", criterion_12},
      {"crystal structure", criterion_13},
      {"order theory", criterion_14},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Probe p;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(p);
    } catch (const std::exception& e) {
      p.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (p.ok() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    if (!p.ok()) std::cout << " (" << p.reason << ")";
    std::cout << " [" << secs << "s]\n";
    failures += p.ok() ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
