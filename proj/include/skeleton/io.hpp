#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "skeleton/combinatorics.hpp"
#include "skeleton/crystal.hpp"
#include "skeleton/poly.hpp"
#include "skeleton/rsk.hpp"
#include "skeleton/tableau.hpp"

namespace skel::io {

using nlohmann::json;

// Parsing. Integer sequences are comma-separated ("3,2,1"); a bare digit
// string ("321") is read one digit per part.
std::vector<int> parse_int_sequence(std::string_view text);
Partition parse_partition(std::string_view text);
Composition parse_composition(std::string_view text);
Word parse_word(std::string_view text);

// Text rendering.
std::string render_monomial(const Monomial& m);
std::string render_poly(const MultiPoly& g);
std::string render_unipoly(const UniPoly& g, char variable = 'q');
/// Aligned grid, one row per line.
std::string render_tableau(const Tableau& t);

// JSON. Polynomials are arrays of
//   {"exponents": [...], "y-exponents": [...], "p-exp": a, "q-exp": b, "coefficient": c}
// with "y-exponents" present only when the polynomial has y variables.
// Coefficients are JSON integers, or decimal strings beyond 64 bits.
json to_json(const Composition& c);
json to_json(const Partition& p);
json to_json(const Tableau& t);
json to_json(const Monomial& m);
json to_json(const MultiPoly& g);
json to_json(const UniPoly& g);
json to_json(const CrystalGraph& g);

Tableau tableau_from_json(const json& j);
MultiPoly poly_from_json(const json& j);

// Exports.
/// Graphviz DOT with one cluster per quasi-crystal; `inner_only` keeps the
/// classes of minimal descent length.
std::string crystal_to_dot(const CrystalGraph& g, bool inner_only = false);
/// LaTeX tabular of lambda, QY(lambda) and Sk_lambda for |lambda| <= max_n.
std::string skeleton_table_latex(int max_n);
/// Plain-text form of the same table: "lambda | QY tableaux | Sk_lambda".
std::string skeleton_table_text(int max_n);
/// CSV with columns lambda,alpha,f_lambda_alpha for every lambda of size n.
std::string skeleton_coefficients_csv(const std::vector<Partition>& partitions);

/// Hasse diagram of compositions of n under dominance, graded by depth:
/// one "alpha -- beta" line per cover (beta one deeper than alpha), sorted by
/// the depth of alpha, then lexicographically.
std::string composition_poset_text(int n);
std::string composition_poset_dot(int n);
/// Hasse diagram of subsets of [n-1] under the superboolean order, one
/// "A -- B" line per cover A < B, sorted by maj A.
std::string superboolean_poset_text(int n);
std::string superboolean_poset_dot(int n);

}  // namespace skel::io
