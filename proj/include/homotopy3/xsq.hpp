#pragma once

#include <optional>

#include "homotopy3/xmod.hpp"

namespace h3 {

// Crossed square
//
//        lambda
//     L -------> M
//     |          |
//  lambda_p      mu        h : M x N -> L
//     |          |
//     N -------> P
//         nu
//
// with P acting on L, M, N.  N acts on L and M through nu, M acts on L and N
// through mu.
struct CrossedSquare {
    FinGroupPtr L, M, N, P;
    Hom lambda;    // L -> M
    Hom lambda_p;  // L -> N
    Hom mu;        // M -> P
    Hom nu;        // N -> P
    GroupAction act_l, act_m, act_n;   // P acting
    std::vector<std::vector<int>> h;   // [|M|][|N|] -> L

    int act_on_l(int p, int l) const { return act_l.act(p, l); }
    int n_on_m(int n, int m) const { return act_m.act(nu(n), m); }
    int n_on_l(int n, int l) const { return act_l.act(nu(n), l); }
    int m_on_l(int m, int l) const { return act_l.act(mu(m), l); }
    int m_on_n(int m, int n) const { return act_n.act(mu(m), n); }
};

// Exhaustive verification of the eight axioms (axiom 2 in the form
// lambda h(m,n) = m (^{nu(n)} m)^-1).
CrossedSquare make_crossed_square(CrossedSquare data);
CrossedSquare inclusion_crossed_square(FinGroupPtr g, const Subgroup& m,
                                       const Subgroup& n);
// Swap the two normal directions: (L, N, M, P) with h'(n,m) = h(m,n)^-1.
CrossedSquare transpose_square(const CrossedSquare& sq);

struct Cat2Group {
    FinGroupPtr G;
    Hom s1, t1, s2, t2;
};

Cat2Group make_cat2(FinGroupPtr g, Hom s1, Hom t1, Hom s2, Hom t2);
Cat2Group cat2_from_square(const CrossedSquare& sq);
CrossedSquare square_from_cat2(const Cat2Group& c);

struct XSqIso {
    Hom f_l, f_m, f_n, f_p;
};

std::optional<XSqIso> find_xsq_iso(const CrossedSquare& a,
                                   const CrossedSquare& b, int iso_bound = 512);
std::optional<Hom> find_cat2_iso(const Cat2Group& a, const Cat2Group& b,
                                 int iso_bound = 512);

// ---------------------------------------------------------------------------
// Crossed n-cubes.  Subsets A of {1..n} are bitmasks; mu[A][i] is stored only
// for i in A (axiom 1 makes the others identities); h[A][B] maps into the
// group at A|B, and ^a b means h(a,b) b whenever A is a subset of B.
// ---------------------------------------------------------------------------

struct CrossedNCube {
    int n = 0;
    std::vector<FinGroupPtr> groups;                 // 2^n entries
    std::vector<std::vector<std::optional<Hom>>> mu; // mu[A][i], i in A
    std::vector<std::vector<std::vector<std::vector<int>>>> h;  // h[A][B]

    int mu_apply(int mask, int i, int a) const {
        return (mask >> i) & 1 ? mu[mask][i]->map[a] : a;
    }
    // ^a x for a in groups[A], x in groups[C] with A subset of C.
    int act(int a_mask, int a, int c_mask, int x) const {
        return groups[c_mask]->mul(h[a_mask][c_mask][a][x], x);
    }
};

CrossedNCube make_crossed_ncube(CrossedNCube data);
CrossedNCube ncube_from_xmod(const CrossedModule& cm);
CrossedNCube ncube_from_square(const CrossedSquare& sq);
CrossedNCube inclusion_ncube(FinGroupPtr g, const std::vector<Subgroup>& ns);

// ---------------------------------------------------------------------------
// Squared complexes: a crossed square with an abelian chain-complex tail
// attached at L.
// ---------------------------------------------------------------------------

struct SquaredComplex {
    CrossedSquare square;
    std::vector<FinGroupPtr> tail;         // C3, C4, ...
    std::vector<Hom> boundary;             // boundary[0]: C3 -> L, then C_{k+1} -> C_k
    std::vector<GroupAction> tail_action;  // P on each C_k
};

SquaredComplex make_squared_complex(SquaredComplex data);

}  // namespace h3
