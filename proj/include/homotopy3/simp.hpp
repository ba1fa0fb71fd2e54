#pragma once

#include <optional>

#include "homotopy3/xmod.hpp"
#include "homotopy3/xsq.hpp"

namespace h3 {

// Truncated simplicial group: levels 0..depth with face maps d^n_i
// (face[n][i], 1 <= n <= depth) and degeneracies s^n_i (degen[n][i],
// 0 <= n < depth).
struct SimplicialGroup {
    int depth = 0;
    std::vector<GroupPtr> levels;
    std::vector<std::vector<Hom>> face;
    std::vector<std::vector<Hom>> degen;

    const Hom& d(int n, int i) const { return face[n][i]; }
    const Hom& s(int n, int i) const { return degen[n][i]; }
};

// Verifies every simplicial identity expressible within the window; throws
// IdentityViolation with the relation and a witness element.
SimplicialGroup make_simplicial(int depth, std::vector<GroupPtr> levels,
                                std::vector<std::vector<Hom>> face,
                                std::vector<std::vector<Hom>> degen);
SimplicialGroup constant_simplicial(GroupPtr g, int depth);

// Moore complex NG_n = /\_{i<n} Ker d_i with boundary induced by the last
// face; carriers are materialized subgroups of the levels.
struct NormalComplex {
    std::vector<Embedded> groups;   // 0..depth
    std::vector<Hom> boundary;      // boundary[n]: NG_n -> NG_{n-1}, n >= 1
    int length() const;             // largest n with NG_n nontrivial
};

NormalComplex moore(const SimplicialGroup& g, const Config& cfg = {});

// /\_{i<n} Ker d_i at level n, materialized (the whole level for n = 0).
Embedded moore_level(const SimplicialGroup& g, int n, const Config& cfg = {});

struct HomotopyGroup {
    FinGroupPtr group;
    std::optional<std::vector<int>> invariants;  // when abelian
    int order() const { return group->order(); }
};

HomotopyGroup homotopy_group(const SimplicialGroup& g, int n,
                             const Config& cfg = {});

// Nerve of the internal groupoid of a cat1-group, truncated at `depth`.
// Level q is the group of composable q-chains inside G^q; |level q| equals
// |Ker s|^q |Im s|.
SimplicialGroup nerve_cat1(const Cat1Group& c, int depth,
                           const Config& cfg = {});

// Shift away level 0: Dec(G)_n = G_{n+1} with d_i and s_i renumbered up.
SimplicialGroup decalage(const SimplicialGroup& g);
// The levelwise kernel of d_0 : Dec(G) -> G, again a simplicial group.
SimplicialGroup decalage_zero_kernel(const SimplicialGroup& g,
                                     const Config& cfg = {});

// The crossed module NG_1/d(NG_2) -> G_0 with the s_0-conjugation action.
CrossedModule m_functor_1(const SimplicialGroup& g, const Config& cfg = {});
// The crossed square (NG_2/d(NG_3); Ker d_0^1; Ker d_1^1; G_1) with
// h(x, y) = [s_1 x, s_1 y s_0 y^-1] modulo the boundary image.
CrossedSquare m_functor_2(const SimplicialGroup& g, const Config& cfg = {});

// Chain-complex view of a normal complex, for truncation and homology.
struct ChainComplex {
    std::vector<FinGroupPtr> groups;
    std::vector<Hom> boundary;  // boundary[n]: groups[n] -> groups[n-1], n >= 1
};

ChainComplex chain_complex(const NormalComplex& nc);
// t_{n]}: keep below n, quotient at n, zero above.
ChainComplex truncate_complex(const ChainComplex& c, int n,
                              const Config& cfg = {});
// H_n = Ker d_n / Im d_{n+1}; the image is trivial at the top level.
HomotopyGroup complex_homology(const ChainComplex& c, int n,
                               const Config& cfg = {});

}  // namespace h3
