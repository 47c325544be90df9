// skeleton: compute, enumerate, verify and export skeleton polynomials and
// the tableau/crystal combinatorics around them.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skeleton/combinatorics.hpp"
#include "skeleton/crystal.hpp"
#include "skeleton/families.hpp"
#include "skeleton/io.hpp"
#include "skeleton/rsk.hpp"
#include "skeleton/tableau.hpp"
#include "skeleton/verify.hpp"

namespace {

using nlohmann::json;
using namespace skel;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<int> env_max_n() {
  const char* raw = std::getenv("SKELETON_MAX_N");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used != std::string(raw).size() || v < 1) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("SKELETON_MAX_N must be a positive integer, got '") + raw + "'");
  }
}

std::string stats_line(const Tableau& t) {
  const TableauStats s = stats(t);
  std::ostringstream os;
  os << t.to_string() << "  des " << descent_composition(t).to_string() << "  maj " << s.maj << "  dep " << s.depth << "  wt "
     << s.weight.to_string();
  return os.str();
}

json tableau_record(const Tableau& t) {
  const TableauStats s = stats(t);
  return json{{"tableau", io::to_json(t)},
              {"descent", io::to_json(descent_composition(t))},
              {"maj", s.maj},
              {"depth", s.depth},
              {"weight", io::to_json(s.weight)}};
}

// ---- skeleton

struct SkeletonArgs {
  std::string lambda;
  bool deep = false;
  int i = 0;
  bool eval_ones = false;
  std::string format = "text";
};

int cmd_skeleton(const SkeletonArgs& a) {
  const Partition lambda = io::parse_partition(a.lambda);
  MultiPoly g;
  if (a.i > 0) {
    g = skeleton_poly_i(lambda, a.i);
    if (a.deep) g = g.grade_x();
  } else {
    g = a.deep ? deep_skeleton(lambda) : skeleton_poly(lambda);
  }
  if (a.eval_ones) {
    const Integer v = g.set_q_one().evaluate_ones();
    if (a.format == "json") {
      std::cout << json{{"lambda", io::to_json(lambda)}, {"value", to_string(v)}}.dump(2) << '\n';
    } else {
      std::cout << to_string(v) << '\n';
    }
    return 0;
  }
  if (a.format == "json") {
    std::cout << json{{"lambda", io::to_json(lambda)}, {"arity", g.x_arity()}, {"terms", io::to_json(g)}}.dump(2) << '\n';
  } else {
    std::cout << io::render_poly(g) << '\n';
  }
  return 0;
}

// ---- tableaux

struct TableauxArgs {
  std::string lambda;
  bool syt = false;
  int ssyt = 0;
  bool qy = false;
  std::string weight;
  std::string des;
  std::string format = "text";
};

int cmd_tableaux(const TableauxArgs& a) {
  const Partition lambda = io::parse_partition(a.lambda);
  const int modes = (a.syt && a.des.empty() ? 1 : 0) + (a.ssyt > 0 ? 1 : 0) + (a.qy ? 1 : 0) + (!a.weight.empty() ? 1 : 0) +
                    (!a.des.empty() ? 1 : 0);
  if (modes > 1) throw UsageError("choose one of --syt, --ssyt, --qy, --weight, --des");
  EnumerationRequest req;
  if (a.ssyt > 0) {
    req = {EnumerationMode::kSemistandard, a.ssyt, {}};
  } else if (a.qy) {
    req = {EnumerationMode::kQuasiYamanouchi, 0, {}};
  } else if (!a.weight.empty()) {
    req = {EnumerationMode::kWeight, 0, io::parse_composition(a.weight)};
  } else if (!a.des.empty()) {
    req = {EnumerationMode::kDescent, 0, io::parse_composition(a.des)};
  }
  const auto list = enumerate(lambda, req);
  if (a.format == "json") {
    json out = json::array();
    for (const Tableau& t : list) out.push_back(tableau_record(t));
    std::cout << json{{"lambda", io::to_json(lambda)}, {"count", list.size()}, {"tableaux", out}}.dump(2) << '\n';
    return 0;
  }
  std::cout << list.size() << (list.size() == 1 ? " tableau" : " tableaux") << '\n';
  for (const Tableau& t : list) std::cout << stats_line(t) << '\n';
  return 0;
}

// ---- rsk

int cmd_rsk(const std::string& text, const std::string& format) {
  const Word w = io::parse_word(text);
  const bool perm = is_permutation(w);
  const RskPair pq = rsk(w);
  const Composition des_p = descent_composition(pq.insertion);
  const Composition des_q = descent_composition(pq.recording);
  const int maj = maj_of_set(comp_to_set(des_q));
  const int dep = depth(des_q);
  if (format == "json") {
    json j{{"mode", perm ? "permutation" : "word"},
           {"P", io::to_json(pq.insertion)},
           {"Q", io::to_json(pq.recording)},
           {"des_P", io::to_json(des_p)},
           {"des_Q", io::to_json(des_q)},
           {"maj", maj},
           {"depth", dep}};
    if (perm) {
      const Permutation p(w);
      j["charge"] = charge(p);
      j["inversions"] = inversions(p);
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "mode " << (perm ? "permutation" : "word") << '\n';
  std::cout << "P\n" << io::render_tableau(pq.insertion);
  std::cout << "Q\n" << io::render_tableau(pq.recording);
  std::cout << "des P " << des_p.to_string() << '\n';
  std::cout << "des Q " << des_q.to_string() << '\n';
  std::cout << "maj " << maj << '\n';
  std::cout << "depth " << dep << '\n';
  if (perm) {
    const Permutation p(w);
    std::cout << "charge " << charge(p) << '\n';
    std::cout << "inversions " << inversions(p) << '\n';
  }
  return 0;
}

// ---- crystal

struct CrystalArgs {
  std::string lambda;
  int bound = 0;
  bool dot = false;
  bool json_out = false;
  bool inner = false;
};

int cmd_crystal(const CrystalArgs& a) {
  const Partition lambda = io::parse_partition(a.lambda);
  if (lambda.empty()) throw UsageError("crystal needs a nonempty partition");
  if (a.bound < lambda.length()) {
    throw UsageError("bound " + std::to_string(a.bound) + " is below the length " + std::to_string(lambda.length()) + " of the partition");
  }
  const CrystalGraph g = build_crystal(lambda, a.bound);
  if (a.dot) {
    std::cout << io::crystal_to_dot(g, a.inner);
    return 0;
  }
  if (a.json_out) {
    json j = io::to_json(g);
    if (a.inner) {
      json inner = json::array();
      for (const Tableau& t : inner_crystal(g)) inner.push_back(io::to_json(t));
      j["inner"] = inner;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  const auto classes = quasi_crystal_decomposition(g);
  std::cout << "B_" << a.bound << "(" << lambda.to_string() << "): " << g.vertices.size() << " vertices, " << g.edges.size()
            << " edges, " << classes.size() << " quasi-crystals\n";
  for (const QuasiCrystal& q : classes) {
    if (a.inner && q.descent.length() != lambda.length()) continue;
    std::cout << "des " << q.descent.to_string() << " [" << q.representative.to_string() << "]:";
    for (const Tableau& t : q.members) std::cout << ' ' << t.to_string();
    std::cout << '\n';
  }
  for (const CrystalEdge& e : g.edges) {
    std::cout << g.vertices[static_cast<std::size_t>(e.from)].to_string() << " -" << e.color << "-> "
              << g.vertices[static_cast<std::size_t>(e.to)].to_string() << '\n';
  }
  return 0;
}

// ---- verify

struct VerifyArgs {
  std::vector<std::string> names;
  int max_n = 0;
  bool report_support = false;
  std::string format = "text";
  int threads = 1;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a) {
  verify::SuiteBounds bounds;
  std::optional<int> bound = a.max_n > 0 ? std::optional<int>(a.max_n) : env_max_n();
  if (bound) bounds.poly_n = bounds.scalar_n = *bound;
  const std::vector<std::string> names = a.names.empty() ? std::vector<std::string>{"all"} : a.names;
  for (const std::string& n : names) {
    if (n != "all" && std::find(verify::check_names().begin(), verify::check_names().end(), n) == verify::check_names().end()) {
      throw UsageError("unknown check '" + n + "'");
    }
  }
  const auto results = verify::run_suite(names, bounds, a.threads);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (a.format == "json") {
    json out = json::array();
    for (const auto& r : results) out.push_back(verify::to_json(r, a.timing));
    std::cout << json{{"passed", all}, {"results", out}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.parameters << ")";
      if (a.timing) std::cout << " " << r.elapsed.count() << "s";
      std::cout << '\n';
      if (r.witness) std::cout << "  witness: " << r.witness->dump() << '\n';
      if (a.report_support && r.details.contains("support_size")) {
        std::cout << "  support size: " << r.details["support_size"].get<long long>() << '\n';
        if (r.details.contains("collisions")) std::cout << "  collisions: " << r.details["collisions"].dump() << '\n';
      }
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all ? 0 : 1;
}

// ---- fake-degree

int cmd_fake_degree(const std::string& lambda_text, int n, const std::string& format) {
  std::vector<Partition> shapes;
  if (n > 0) {
    shapes = partitions_of(n);
  } else {
    if (lambda_text.empty()) throw UsageError("give a partition or --n");
    shapes.push_back(io::parse_partition(lambda_text));
  }
  json out = json::array();
  for (const Partition& lambda : shapes) {
    const UniPoly f = fake_degree(lambda);
    const InternalZeros z = internal_zeros(f);
    if (format == "json") {
      out.push_back(json{{"lambda", io::to_json(lambda)},
                         {"coefficients", io::to_json(f)},
                         {"regular", is_regular(lambda)},
                         {"internal_zeros", z.positions}});
      continue;
    }
    std::cout << "f_" << lambda.to_string() << "(q) = " << io::render_unipoly(f, 'q');
    if (z.count() > 0) {
      std::cout << "  internal zeros:";
      for (int k : z.positions) std::cout << ' ' << k;
    }
    std::cout << '\n';
  }
  if (format == "json") std::cout << out.dump(2) << '\n';
  return 0;
}

// ---- bifactorial

int cmd_bifactorial(int n, int k, const std::string& format) {
  if (n < 0) throw UsageError("n must be nonnegative");
  const MultiPoly g = bifactorial(n);
  const int top = static_cast<int>(binomial(n, 2));
  auto unimodal = [](const UniPoly& f) {
    int k = f.low_degree();
    if (k < 0) return true;
    while (k < f.degree() && f.coefficient(k) <= f.coefficient(k + 1)) ++k;
    while (k < f.degree() && f.coefficient(k) >= f.coefficient(k + 1)) ++k;
    return k == f.degree();
  };
  json out = json::array();
  for (int j = 0; j <= top; ++j) {
    if (k >= 0 && j != k) continue;
    const UniPoly c = coefficient_of_q(g, j);
    const InternalZeros z = internal_zeros(c);
    if (format == "json") {
      out.push_back(json{{"k", j}, {"coefficients", io::to_json(c)}, {"internal_zeros", z.positions}, {"unimodal", unimodal(c)}});
      continue;
    }
    std::cout << "[q^" << j << "] = " << io::render_unipoly(c, 'p') << (unimodal(c) ? "" : "  (not unimodal)");
    if (z.count() > 0) {
      std::cout << "  internal zeros:";
      for (int p : z.positions) std::cout << ' ' << p;
    }
    std::cout << '\n';
  }
  if (format == "json") std::cout << json{{"n", n}, {"coefficients_of_q", out}}.dump(2) << '\n';
  return 0;
}

// ---- table

int cmd_table(int max_n, const std::string& format) {
  if (max_n <= 0) max_n = env_max_n().value_or(4);
  if (format == "latex") {
    std::cout << io::skeleton_table_latex(max_n);
  } else if (format == "csv") {
    std::vector<Partition> shapes;
    for (int n = 1; n <= max_n; ++n) {
      for (const Partition& p : partitions_of(n)) shapes.push_back(p);
    }
    std::cout << io::skeleton_coefficients_csv(shapes);
  } else {
    std::cout << io::skeleton_table_text(max_n);
  }
  return 0;
}

// ---- poset

int cmd_poset(const std::string& kind, int n, bool dot) {
  if (n < 1) throw UsageError("n must be positive");
  if (kind == "comp") {
    std::cout << (dot ? io::composition_poset_dot(n) : io::composition_poset_text(n));
  } else if (kind == "subsets") {
    std::cout << (dot ? io::superboolean_poset_dot(n) : io::superboolean_poset_text(n));
  } else {
    throw UsageError("poset kind must be 'comp' or 'subsets'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skeleton polynomials, quasi-Yamanouchi tableaux and their crystals"};
  app.require_subcommand(1);
  int status = 0;

  SkeletonArgs sk;
  auto* c_sk = app.add_subcommand("skeleton", "Print Sk_lambda, its depth-graded form or one descent-length slice");
  c_sk->add_option("lambda", sk.lambda, "Partition, e.g. 3,2 or 32")->required();
  c_sk->add_flag("--deep", sk.deep, "Weight each x^alpha by q^dep(alpha)");
  c_sk->add_option("--i", sk.i, "Keep only descent length i");
  c_sk->add_flag("--eval-ones", sk.eval_ones, "Evaluate at x = 1 (gives f_lambda)");
  c_sk->add_option("--format", sk.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  c_sk->callback([&] { status = cmd_skeleton(sk); });

  TableauxArgs tb;
  auto* c_tb = app.add_subcommand("tableaux", "List tableaux of a shape with des, maj, depth and weight");
  c_tb->add_option("lambda", tb.lambda, "Partition")->required();
  c_tb->add_flag("--syt", tb.syt, "Standard tableaux (default)");
  c_tb->add_option("--ssyt", tb.ssyt, "Semistandard tableaux with entries <= N");
  c_tb->add_flag("--qy", tb.qy, "Quasi-Yamanouchi tableaux");
  c_tb->add_option("--weight", tb.weight, "Semistandard tableaux of this weight");
  c_tb->add_option("--des", tb.des, "Standard tableaux with this descent composition");
  c_tb->add_option("--format", tb.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  c_tb->callback([&] { status = cmd_tableaux(tb); });

  std::string rsk_word, rsk_format = "text";
  auto* c_rsk = app.add_subcommand("rsk", "Schensted insertion of a permutation or word");
  c_rsk->add_option("word", rsk_word, "One-line word, e.g. 2143 or 10,2,3")->required();
  c_rsk->add_option("--format", rsk_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  c_rsk->callback([&] { status = cmd_rsk(rsk_word, rsk_format); });

  CrystalArgs cr;
  auto* c_cr = app.add_subcommand("crystal", "Bounded crystal B_N(lambda) with its quasi-crystal classes");
  c_cr->add_option("lambda", cr.lambda, "Partition")->required();
  c_cr->add_option("N", cr.bound, "Largest entry")->required();
  auto* dot_flag = c_cr->add_flag("--dot", cr.dot, "Graphviz output");
  c_cr->add_flag("--json", cr.json_out, "JSON output")->excludes(dot_flag);
  c_cr->add_flag("--inner", cr.inner, "Restrict to the inner crystal");
  c_cr->callback([&] { status = cmd_crystal(cr); });

  VerifyArgs vf;
  auto* c_vf = app.add_subcommand("verify", "Run identity checks; exit status 1 if any fails");
  c_vf->add_option("checks", vf.names, "Check names or 'all'");
  c_vf->add_option("--max-n", vf.max_n, "Enumeration bound for every check")->check(CLI::PositiveNumber);
  c_vf->add_flag("--report-support", vf.report_support, "Print monomial support sizes and collisions");
  c_vf->add_option("--format", vf.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  c_vf->add_option("--threads", vf.threads, "Worker threads")->check(CLI::PositiveNumber);
  c_vf->add_flag("--timing", vf.timing, "Include elapsed times");
  c_vf->callback([&] { status = cmd_verify(vf); });
  auto* c_list = app.add_subcommand("checks", "List check names");
  c_list->callback([&] {
    for (const auto& n : verify::check_names()) std::cout << n << '\n';
  });

  std::string fd_lambda, fd_format = "text";
  int fd_n = 0;
  auto* c_fd = app.add_subcommand("fake-degree", "Fake degree polynomial f_lambda(q) and its internal zeros");
  c_fd->add_option("lambda", fd_lambda, "Partition");
  c_fd->add_option("--n", fd_n, "Every partition of n instead");
  c_fd->add_option("--format", fd_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  c_fd->callback([&] { status = cmd_fake_degree(fd_lambda, fd_n, fd_format); });

  int bf_n = 0, bf_k = -1;
  std::string bf_format = "text";
  auto* c_bf = app.add_subcommand("bifactorial", "Coefficients [q^k][n]_{p,q}! as polynomials in p");
  c_bf->add_option("n", bf_n, "Size")->required();
  c_bf->add_option("--k", bf_k, "Only this power of q");
  c_bf->add_option("--format", bf_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  c_bf->callback([&] { status = cmd_bifactorial(bf_n, bf_k, bf_format); });

  int tb_max = 0;
  std::string tb_format = "text";
  auto* c_tab = app.add_subcommand("table", "Table of Sk_lambda with its quasi-Yamanouchi tableaux");
  c_tab->add_option("--max-n", tb_max, "Largest |lambda| (default 4)")->check(CLI::PositiveNumber);
  c_tab->add_option("--format", tb_format, "text, latex or csv")->check(CLI::IsMember({"text", "latex", "csv"}));
  c_tab->callback([&] { status = cmd_table(tb_max, tb_format); });

  std::string ps_kind;
  int ps_n = 0;
  bool ps_dot = false;
  auto* c_ps = app.add_subcommand("poset", "Hasse diagram of Comp(n) or of the superboolean order on 2^[n-1]");
  c_ps->add_option("kind", ps_kind, "comp or subsets")->required();
  c_ps->add_option("n", ps_n, "Size")->required();
  c_ps->add_flag("--dot", ps_dot, "Graphviz output");
  c_ps->callback([&] { status = cmd_poset(ps_kind, ps_n, ps_dot); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
