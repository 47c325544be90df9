#include "skeleton/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "skeleton/families.hpp"

namespace skel::io {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<int> effective(const std::vector<int>& e) {
  std::vector<int> v = e;
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// "x^221" when every exponent is a single digit, else "x1^2*x2^2*x3".
std::string render_family(char name, const std::vector<int>& exps) {
  const std::vector<int> e = effective(exps);
  if (e.empty()) return "";
  const bool compact = std::all_of(e.begin(), e.end(), [](int v) { return v < 10; });
  std::ostringstream os;
  if (compact) {
    os << name << '^';
    for (int v : e) os << v;
    return os.str();
  }
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << name << (i + 1);
    if (e[i] != 1) os << '^' << e[i];
  }
  return os.str();
}

std::string render_power(char name, int k) {
  if (k == 0) return "";
  if (k == 1) return std::string(1, name);
  return std::string(1, name) + "^" + std::to_string(k);
}

std::string latex_family(char name, const std::vector<int>& exps) {
  std::ostringstream os;
  const std::vector<int> e = effective(exps);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    os << name << "_{" << (i + 1) << '}';
    if (e[i] != 1) os << "^{" << e[i] << '}';
  }
  return os.str();
}

std::string latex_poly(const MultiPoly& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : g.display_order()) {
    std::string body = latex_family('x', m.x) + latex_family('y', m.y);
    if (m.q) body = (m.q == 1 ? std::string("q") : "q^{" + std::to_string(m.q) + "}") + body;
    if (m.p) body = (m.p == 1 ? std::string("p") : "p^{" + std::to_string(m.p) + "}") + body;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << '-';
    first = false;
    if (body.empty() || mag != 1) os << to_string(mag);
    os << body;
  }
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos) return s;
  return "\"" + s + "\"";
}

std::string latex_tableau(const Tableau& t) {
  std::ostringstream os;
  os << "\\ytableaushort{";
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0) os << ',';
    for (int v : t.rows()[r]) {
      if (v < 10) {
        os << v;
      } else {
        os << '{' << v << '}';
      }
    }
  }
  os << '}';
  return os.str();
}

std::string dot_id(const std::string& s) { return "\"" + s + "\""; }

json coefficient_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
    return c.convert_to<long long>();
  }
  return to_string(c);
}

}  // namespace

std::vector<int> parse_int_sequence(std::string_view text) {
  std::string s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(std::string_view(s).substr(1, s.size() - 2));
  std::vector<int> out;
  if (s.empty()) return out;
  const bool separated = s.find_first_of(", ") != std::string::npos;
  if (!separated) {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("malformed integer sequence: " + std::string(text));
      out.push_back(ch - '0');
    }
    return out;
  }
  std::string token;
  std::istringstream is(s);
  auto flush = [&](const std::string& tok) {
    const std::string t = trim(tok);
    if (t.empty()) throw std::invalid_argument("malformed integer sequence: " + std::string(text));
    for (char ch : t) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("malformed integer sequence: " + std::string(text));
    }
    if (t.size() > 9) throw std::invalid_argument("integer too large: " + t);
    out.push_back(std::stoi(t));
  };
  if (s.find(',') != std::string::npos) {
    while (std::getline(is, token, ',')) flush(token);
    if (s.back() == ',') throw std::invalid_argument("malformed integer sequence: " + std::string(text));
  } else {
    while (is >> token) flush(token);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts = parse_int_sequence(text);
  if (parts.size() == 1 && parts[0] == 0) parts.clear();
  return Partition(std::move(parts));
}

Composition parse_composition(std::string_view text) { return Composition(parse_int_sequence(text)); }

Word parse_word(std::string_view text) {
  Word w = parse_int_sequence(text);
  if (w.empty()) throw std::invalid_argument("empty word");
  for (int v : w) {
    if (v < 1) throw std::invalid_argument("word letters must be positive");
  }
  return w;
}

std::string render_monomial(const Monomial& m) {
  std::vector<std::string> factors;
  for (std::string f : {render_power('p', m.p), render_power('q', m.q), render_family('x', m.x), render_family('y', m.y)}) {
    if (!f.empty()) factors.push_back(std::move(f));
  }
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
  return out;
}

std::string render_poly(const MultiPoly& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : g.display_order()) {
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << '-';
    first = false;
    const std::string body = render_monomial(m);
    if (body == "1") {
      os << to_string(mag);
    } else if (mag == 1) {
      os << body;
    } else {
      os << to_string(mag) << '*' << body;
    }
  }
  return os.str();
}

std::string render_unipoly(const UniPoly& g, char variable) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= g.degree(); ++k) {
    const Integer c = g.coefficient(k);
    if (c == 0) continue;
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << '-';
    first = false;
    const std::string body = render_power(variable, k);
    if (body.empty()) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << body;
    } else {
      os << to_string(mag) << '*' << body;
    }
  }
  return os.str();
}

std::string render_tableau(const Tableau& t) {
  if (t.empty()) return "()\n";
  const int width = static_cast<int>(std::to_string(t.max_entry()).size());
  std::ostringstream os;
  for (const Row& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << ' ';
      const std::string v = std::to_string(row[c]);
      os << std::string(static_cast<std::size_t>(width) - v.size(), ' ') << v;
    }
    os << '\n';
  }
  return os.str();
}

json to_json(const Composition& c) { return c.parts(); }
json to_json(const Partition& p) { return p.parts(); }

json to_json(const Tableau& t) {
  json rows = json::array();
  for (const Row& r : t.rows()) rows.push_back(r);
  return rows;
}

json to_json(const Monomial& m) {
  json j{{"exponents", m.x}};
  if (!m.y.empty()) j["y-exponents"] = m.y;
  j["p-exp"] = m.p;
  j["q-exp"] = m.q;
  return j;
}

json to_json(const MultiPoly& g) {
  json out = json::array();
  for (const auto& [m, c] : g.display_order()) {
    json term = to_json(m);
    if (g.y_arity() > 0 && !term.contains("y-exponents")) term["y-exponents"] = m.y;
    term["coefficient"] = coefficient_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

json to_json(const UniPoly& g) {
  json out = json::array();
  for (const Integer& c : g.coefficients()) out.push_back(coefficient_json(c));
  return out;
}

json to_json(const CrystalGraph& g) {
  const auto classes = quasi_crystal_decomposition(g);
  std::map<int, int> class_of;
  json cls = json::array();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    json members = json::array();
    for (const Tableau& t : classes[k].members) {
      const int id = g.index_of(t);
      class_of[id] = static_cast<int>(k);
      members.push_back(id);
    }
    cls.push_back(json{{"representative", to_json(classes[k].representative)},
                       {"descent", to_json(classes[k].descent)},
                       {"members", members}});
  }
  json vertices = json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const Tableau& t = g.vertices[v];
    vertices.push_back(json{{"id", v},
                            {"tableau", to_json(t)},
                            {"descent", to_json(descent_composition(t))},
                            {"weight", to_json(weight(t, g.bound))},
                            {"class", class_of[static_cast<int>(v)]}});
  }
  json edges = json::array();
  for (const CrystalEdge& e : g.edges) edges.push_back(json{{"from", e.from}, {"color", e.color}, {"to", e.to}});
  return json{{"lambda", to_json(g.lambda)}, {"bound", g.bound}, {"vertices", vertices}, {"edges", edges}, {"classes", cls}};
}

Tableau tableau_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("tableau JSON must be an array of rows");
  std::vector<Row> rows;
  for (const json& r : j) rows.push_back(r.get<Row>());
  return Tableau(std::move(rows));
}

MultiPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  int x_arity = 0, y_arity = 0;
  for (const json& term : j) {
    x_arity = std::max(x_arity, static_cast<int>(term.at("exponents").size()));
    if (term.contains("y-exponents")) y_arity = std::max(y_arity, static_cast<int>(term.at("y-exponents").size()));
  }
  MultiPoly g(x_arity, y_arity);
  for (const json& term : j) {
    Monomial m;
    m.x = term.at("exponents").get<std::vector<int>>();
    if (term.contains("y-exponents")) m.y = term.at("y-exponents").get<std::vector<int>>();
    m.p = term.value("p-exp", 0);
    m.q = term.value("q-exp", 0);
    const json& c = term.at("coefficient");
    g.add_term(std::move(m), c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long long>()));
  }
  return g;
}

std::string crystal_to_dot(const CrystalGraph& g, bool inner_only) {
  static const char* const kPalette[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta"};
  const auto classes = quasi_crystal_decomposition(g);
  std::map<int, int> class_of;
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  label=" << dot_id("B_" + std::to_string(g.bound) + "(" + g.lambda.to_string() + ")") << ";\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  int cluster = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const QuasiCrystal& q = classes[k];
    if (inner_only && q.descent.length() != g.lambda.length()) continue;
    os << "  subgraph cluster_" << cluster++ << " {\n";
    os << "    label=" << dot_id("des " + q.descent.to_string()) << ";\n";
    for (const Tableau& t : q.members) {
      class_of[g.index_of(t)] = static_cast<int>(k);
      os << "    " << dot_id(t.to_string()) << ";\n";
    }
    os << "  }\n";
  }
  for (const CrystalEdge& e : g.edges) {
    auto a = class_of.find(e.from);
    auto b = class_of.find(e.to);
    if (a == class_of.end() || b == class_of.end()) continue;
    os << "  " << dot_id(g.vertices[static_cast<std::size_t>(e.from)].to_string()) << " -> "
       << dot_id(g.vertices[static_cast<std::size_t>(e.to)].to_string()) << " [label=\"" << e.color
       << "\", color=" << kPalette[static_cast<std::size_t>(e.color) % std::size(kPalette)];
    if (a->second != b->second) os << ", style=dotted";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string skeleton_table_latex(int max_n) {
  std::ostringstream os;
  os << "\\begin{tabular}{lll}\\hline\n";
  os << "$\\lambda$ & $\\mathrm{QY}(\\lambda)$ & $\\mathrm{Sk}_\\lambda(x)$ \\\\\\hline\n";
  for (int n = 0; n <= max_n; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      if (lambda.empty()) {
        os << "$\\emptyset$ & $\\emptyset$ & $1$ \\\\\\hline\n";
        continue;
      }
      os << "$(" << lambda.to_string() << ")$ & $";
      bool first = true;
      for (const Tableau& t : quasi_yamanouchi_tableaux(lambda)) {
        if (!first) os << "\\;";
        first = false;
        os << latex_tableau(t);
      }
      os << "$ & $" << latex_poly(skeleton_poly(lambda)) << "$ \\\\\\hline\n";
    }
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::string skeleton_table_text(int max_n) {
  std::ostringstream os;
  for (int n = 0; n <= max_n; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      if (lambda.empty()) {
        os << "() | () | 1\n";
        continue;
      }
      os << lambda.to_string() << " | ";
      bool first = true;
      for (const Tableau& t : quasi_yamanouchi_tableaux(lambda)) {
        if (!first) os << ", ";
        first = false;
        os << t.to_string();
      }
      os << " | " << render_poly(skeleton_poly(lambda)) << '\n';
    }
  }
  return os.str();
}

std::string skeleton_coefficients_csv(const std::vector<Partition>& partitions) {
  std::ostringstream os;
  os << "lambda,alpha,f_lambda_alpha\n";
  for (const Partition& lambda : partitions) {
    for (const auto& [m, c] : skeleton_poly(lambda).display_order()) {
      os << csv_field(lambda.to_string()) << ',' << csv_field(Composition(effective(m.x)).to_string()) << ',' << to_string(c) << '\n';
    }
  }
  return os.str();
}

namespace {

std::vector<std::pair<Composition, Composition>> graded_composition_covers(int n) {
  auto covers = dominance_covers(n);
  std::stable_sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
    if (depth(a.first) != depth(b.first)) return depth(a.first) < depth(b.first);
    return a < b;
  });
  return covers;
}

std::vector<std::pair<IndexSet, IndexSet>> graded_superboolean_covers(int n) {
  std::vector<std::pair<IndexSet, IndexSet>> covers;
  for (const IndexSet& a : subsets_of(n)) {
    for (const IndexSet& b : superboolean_covers(a)) covers.emplace_back(a, b);
  }
  std::sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
    if (maj_of_set(a.first) != maj_of_set(b.first)) return maj_of_set(a.first) < maj_of_set(b.first);
    return a < b;
  });
  return covers;
}

template <typename Node, typename Covers, typename Label, typename Rank>
std::string poset_dot(const std::string& name, const std::vector<Node>& nodes, const Covers& covers, Label label, Rank rank) {
  std::map<int, std::vector<std::string>> by_rank;
  for (const Node& v : nodes) by_rank[rank(v)].push_back(label(v));
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  rankdir=TB;\n  node [shape=plaintext];\n";
  for (auto& [r, labels] : by_rank) {
    std::sort(labels.begin(), labels.end());
    os << "  { rank=same;";
    for (const auto& l : labels) os << ' ' << dot_id(l) << ';';
    os << " }\n";
  }
  for (const auto& [a, b] : covers) os << "  " << dot_id(label(a)) << " -- " << dot_id(label(b)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string composition_poset_text(int n) {
  std::ostringstream os;
  for (const auto& [a, b] : graded_composition_covers(n)) os << a.to_string() << " -- " << b.to_string() << '\n';
  return os.str();
}

std::string composition_poset_dot(int n) {
  return poset_dot(
      "composition_poset", compositions_of(n), graded_composition_covers(n), [](const Composition& c) { return c.to_string(); },
      [](const Composition& c) { return depth(c); });
}

std::string superboolean_poset_text(int n) {
  std::ostringstream os;
  for (const auto& [a, b] : graded_superboolean_covers(n)) os << a.to_string() << " -- " << b.to_string() << '\n';
  return os.str();
}

std::string superboolean_poset_dot(int n) {
  return poset_dot(
      "superboolean_poset", subsets_of(n), graded_superboolean_covers(n), [](const IndexSet& s) { return s.to_string(); },
      [](const IndexSet& s) { return maj_of_set(s); });
}

}  // namespace skel::io
