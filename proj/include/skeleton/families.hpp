#pragma once

#include "skeleton/combinatorics.hpp"
#include "skeleton/poly.hpp"

namespace skel {

/// Sk_lambda(x) = sum over ST(lambda) of x^{des T}, in m(lambda) variables.
/// Sk of the empty partition is 1.
MultiPoly skeleton_poly(const Partition& lambda);

/// Descent-length-i part of Sk_lambda, in i variables; zero outside
/// l(lambda) <= i <= m(lambda).
MultiPoly skeleton_poly_i(const Partition& lambda, int i);

/// Sk_lambda(x, q): each x^alpha weighted by q^{dep alpha}.
MultiPoly deep_skeleton(const Partition& lambda);

/// Same as deep_skeleton but the grading variable is p.
MultiPoly deep_skeleton_p(const Partition& lambda);

/// Inner crystal polynomial A_lambda = Sk_{lambda, l(lambda)}.
MultiPoly inner_crystal_poly(const Partition& lambda);

/// s_lambda(x_1..x_k) as a sum over SSYT(lambda, <= k) of x^{weight}.
/// With `deep`, each term also carries q^{dep T}.
MultiPoly schur_poly(const Partition& lambda, int k, bool deep = false);

/// Monomial quasi-symmetric M_b(x_1..x_k).
MultiPoly qsym_M(const Composition& b, int k);
/// Fundamental quasi-symmetric F_a(x_1..x_k) = sum of M_b over ref(a).
MultiPoly qsym_F(const Composition& a, int k);

/// f_lambda(q) = sum over ST(lambda) of q^{maj T}.
UniPoly fake_degree(const Partition& lambda);
/// sum over ST(lambda) of q^{dep T}; equal to fake_degree.
UniPoly fake_degree_by_depth(const Partition& lambda);

/// [n]_q! = prod_{i=1}^n (1 + q + ... + q^{i-1}).
UniPoly q_factorial(int n);

/// [n]_{p,q}! = sum over partitions of n of f_lambda(p) f_lambda(q), as an
/// x-free polynomial in p and q.
MultiPoly bifactorial(int n);

}  // namespace skel
