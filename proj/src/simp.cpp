#include "homotopy3/simp.hpp"

#include <algorithm>

#include "homotopy3/chains.hpp"

namespace h3 {

namespace {

void check_equal_maps(const Group& level, const std::string& relation,
                      int level_no, const std::function<int(int)>& lhs,
                      const std::function<int(int)>& rhs) {
    for (int x = 0; x < level.order(); ++x)
        if (lhs(x) != rhs(x))
            throw Error(Errc::IdentityViolation,
                        relation + " fails at level " +
                            std::to_string(level_no) + ", element " +
                            level.label(x),
                        relation, {level.label(x)});
}

std::string dd_name(int i, int j) {
    return "d" + std::to_string(i) + " d" + std::to_string(j) + " = d" +
           std::to_string(j - 1) + " d" + std::to_string(i);
}

}  // namespace

SimplicialGroup make_simplicial(int depth, std::vector<GroupPtr> levels,
                                std::vector<std::vector<Hom>> face,
                                std::vector<std::vector<Hom>> degen) {
    if (depth < 0 || static_cast<int>(levels.size()) != depth + 1)
        throw Error(Errc::BadInput, "level list does not match depth");
    if (static_cast<int>(face.size()) < depth + 1) face.resize(depth + 1);
    if (static_cast<int>(degen.size()) < depth + 1) degen.resize(depth + 1);

    for (int n = 1; n <= depth; ++n) {
        if (static_cast<int>(face[n].size()) != n + 1)
            throw Error(Errc::BadInput,
                        "level " + std::to_string(n) + " needs " +
                            std::to_string(n + 1) + " face maps");
        for (int i = 0; i <= n; ++i)
            if (face[n][i].src != levels[n] || face[n][i].dst != levels[n - 1])
                throw Error(Errc::BadInput, "face map has wrong shape");
    }
    for (int n = 0; n < depth; ++n) {
        if (static_cast<int>(degen[n].size()) != n + 1)
            throw Error(Errc::BadInput,
                        "level " + std::to_string(n) + " needs " +
                            std::to_string(n + 1) + " degeneracy maps");
        for (int i = 0; i <= n; ++i)
            if (degen[n][i].src != levels[n] || degen[n][i].dst != levels[n + 1])
                throw Error(Errc::BadInput, "degeneracy map has wrong shape");
    }

    SimplicialGroup g{depth, std::move(levels), std::move(face),
                      std::move(degen)};

    // d_i d_j = d_{j-1} d_i  (i < j)
    for (int n = 2; n <= depth; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                check_equal_maps(
                    *g.levels[n], dd_name(i, j), n,
                    [&](int x) { return g.d(n - 1, i)(g.d(n, j)(x)); },
                    [&](int x) { return g.d(n - 1, j - 1)(g.d(n, i)(x)); });
    // s_i s_j = s_{j+1} s_i  (i <= j)
    for (int n = 0; n + 2 <= depth; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                check_equal_maps(
                    *g.levels[n],
                    "s" + std::to_string(i) + " s" + std::to_string(j) +
                        " = s" + std::to_string(j + 1) + " s" +
                        std::to_string(i),
                    n, [&](int x) { return g.s(n + 1, i)(g.s(n, j)(x)); },
                    [&](int x) { return g.s(n + 1, j + 1)(g.s(n, i)(x)); });
    // mixed d_i s_j relations
    for (int n = 0; n < depth; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                if (i == j || i == j + 1) {
                    check_equal_maps(
                        *g.levels[n],
                        "d" + std::to_string(i) + " s" + std::to_string(j) +
                            " = id",
                        n, [&](int x) { return g.d(n + 1, i)(g.s(n, j)(x)); },
                        [&](int x) { return x; });
                } else if (i < j) {
                    check_equal_maps(
                        *g.levels[n],
                        "d" + std::to_string(i) + " s" + std::to_string(j) +
                            " = s" + std::to_string(j - 1) + " d" +
                            std::to_string(i),
                        n, [&](int x) { return g.d(n + 1, i)(g.s(n, j)(x)); },
                        [&](int x) { return g.s(n - 1, j - 1)(g.d(n, i)(x)); });
                } else {  // i > j + 1
                    check_equal_maps(
                        *g.levels[n],
                        "d" + std::to_string(i) + " s" + std::to_string(j) +
                            " = s" + std::to_string(j) + " d" +
                            std::to_string(i - 1),
                        n, [&](int x) { return g.d(n + 1, i)(g.s(n, j)(x)); },
                        [&](int x) { return g.s(n - 1, j)(g.d(n, i - 1)(x)); });
                }
            }
    return g;
}

SimplicialGroup constant_simplicial(GroupPtr g, int depth) {
    std::vector<GroupPtr> levels(depth + 1, g);
    std::vector<std::vector<Hom>> face(depth + 1), degen(depth + 1);
    for (int n = 1; n <= depth; ++n)
        face[n].assign(n + 1, identity_hom(g));
    for (int n = 0; n < depth; ++n)
        degen[n].assign(n + 1, identity_hom(g));
    return make_simplicial(depth, std::move(levels), std::move(face),
                           std::move(degen));
}

// ---------------------------------------------------------------------------
// Moore complex and homotopy groups
// ---------------------------------------------------------------------------

namespace {

// /\_{i < bound} Ker d_i at level n (whole level when bound = 0).
Subgroup face_kernel_intersection(const SimplicialGroup& g, int n, int bound) {
    std::vector<int> elems;
    for (int x = 0; x < g.levels[n]->order(); ++x) {
        bool in = true;
        for (int i = 0; i < bound && in; ++i) in = g.d(n, i)(x) == 0;
        if (in) elems.push_back(x);
    }
    return Subgroup{g.levels[n], std::move(elems)};
}

Hom restricted_hom(const Embedded& from, const Embedded& to, const Hom& big,
                   const char* what) {
    std::vector<int> map(from.group->order());
    for (int i = 0; i < from.group->order(); ++i) {
        int idx = to.index_of_parent(big(from.inclusion.map[i]));
        if (idx < 0)
            throw Error(Errc::BadInput,
                        std::string(what) + " does not restrict as expected");
        map[i] = idx;
    }
    return make_hom(from.group, to.group, std::move(map));
}

}  // namespace

Embedded moore_level(const SimplicialGroup& g, int n, const Config& cfg) {
    return materialize(face_kernel_intersection(g, n, n), cfg);
}

int NormalComplex::length() const {
    int len = 0;
    for (size_t n = 1; n < groups.size(); ++n)
        if (groups[n].group->order() > 1) len = static_cast<int>(n);
    return len;
}

NormalComplex moore(const SimplicialGroup& g, const Config& cfg) {
    NormalComplex nc;
    for (int n = 0; n <= g.depth; ++n)
        nc.groups.push_back(
            materialize(face_kernel_intersection(g, n, n), cfg));
    nc.boundary.resize(g.depth + 1, Hom{});
    for (int n = 1; n <= g.depth; ++n)
        nc.boundary[n] = restricted_hom(nc.groups[n], nc.groups[n - 1],
                                        g.d(n, n), "Moore boundary");
    // dd = 1 inside the window, and Im d normal.
    for (int n = 1; n + 1 <= g.depth; ++n)
        for (int x = 0; x < nc.groups[n + 1].group->order(); ++x)
            if (nc.boundary[n](nc.boundary[n + 1](x)) != 0)
                throw Error(Errc::BadInput, "Moore boundary fails dd = 1");
    for (int n = 1; n <= g.depth; ++n) {
        if (normality_witness(image(nc.boundary[n])).has_value())
            throw Error(Errc::BadInput,
                        "Moore boundary image is not normal at level " +
                            std::to_string(n - 1));
    }
    return nc;
}

HomotopyGroup homotopy_group(const SimplicialGroup& g, int n,
                             const Config& cfg) {
    if (n < 0 || n + 1 > g.depth)
        throw Error(Errc::DepthTooShallow,
                    "homotopy group pi_" + std::to_string(n) +
                        " needs depth at least " + std::to_string(n + 1));
    Subgroup cycles = face_kernel_intersection(g, n, n + 1);
    Embedded z = materialize(cycles, cfg);

    Subgroup top = face_kernel_intersection(g, n + 1, n + 1);
    std::vector<int> bnd;
    for (int x : top.elements) {
        int idx = z.index_of_parent(g.d(n + 1, n + 1)(x));
        if (idx < 0)
            throw Error(Errc::BadInput, "boundary image leaves the cycle group");
        bnd.push_back(idx);
    }
    std::sort(bnd.begin(), bnd.end());
    bnd.erase(std::unique(bnd.begin(), bnd.end()), bnd.end());
    Subgroup boundaries{z.group, std::move(bnd)};

    Quotient q = quotient(z.group, boundaries, cfg);
    HomotopyGroup result{q.group, std::nullopt};
    if (q.group->is_abelian()) result.invariants = abelian_invariants(*q.group);
    return result;
}

// ---------------------------------------------------------------------------
// Nerve, decalage
// ---------------------------------------------------------------------------

SimplicialGroup nerve_cat1(const Cat1Group& c, int depth, const Config& cfg) {
    ChainTower tower = build_chain_tower(c.G, c.s, c.t, depth, cfg, false);
    return make_simplicial(depth, tower.levels, tower.face, tower.degen);
}

SimplicialGroup decalage(const SimplicialGroup& g) {
    if (g.depth < 1)
        throw Error(Errc::DepthTooShallow, "decalage needs depth >= 1");
    std::vector<GroupPtr> levels(g.levels.begin() + 1, g.levels.end());
    std::vector<std::vector<Hom>> face(g.depth), degen(g.depth);
    for (int n = 1; n < g.depth; ++n)
        face[n].assign(g.face[n + 1].begin() + 1, g.face[n + 1].end());
    for (int n = 0; n < g.depth - 1; ++n)
        degen[n].assign(g.degen[n + 1].begin() + 1, g.degen[n + 1].end());
    return make_simplicial(g.depth - 1, std::move(levels), std::move(face),
                           std::move(degen));
}

SimplicialGroup decalage_zero_kernel(const SimplicialGroup& g,
                                     const Config& cfg) {
    if (g.depth < 1)
        throw Error(Errc::DepthTooShallow, "decalage kernel needs depth >= 1");
    const int depth = g.depth - 1;
    std::vector<Embedded> carriers;
    for (int n = 0; n <= depth; ++n)
        carriers.push_back(materialize(kernel(g.d(n + 1, 0)), cfg));
    std::vector<GroupPtr> levels;
    for (const auto& c : carriers) levels.push_back(c.group);
    std::vector<std::vector<Hom>> face(depth + 1), degen(depth + 1);
    for (int n = 1; n <= depth; ++n)
        for (int i = 0; i <= n; ++i)
            face[n].push_back(restricted_hom(carriers[n], carriers[n - 1],
                                             g.d(n + 1, i + 1),
                                             "kernel face"));
    for (int n = 0; n < depth; ++n)
        for (int i = 0; i <= n; ++i)
            degen[n].push_back(restricted_hom(carriers[n], carriers[n + 1],
                                              g.s(n + 1, i + 1),
                                              "kernel degeneracy"));
    return make_simplicial(depth, std::move(levels), std::move(face),
                           std::move(degen));
}

// ---------------------------------------------------------------------------
// The crossed module / crossed square of a simplicial group
// ---------------------------------------------------------------------------

namespace {

struct QuotientOfKernel {
    Embedded carrier;       // the kernel intersection, materialized
    Quotient quot;          // carrier / boundary image
    // Class of a parent-level element (must lie in the carrier).
    int cls(int parent_idx) const {
        int c = carrier.index_of_parent(parent_idx);
        if (c < 0)
            throw Error(Errc::BadInput, "element outside the Moore carrier");
        return quot.projection(c);
    }
};

// (/\_{i<n} Ker d_i) / d_{n+1}(/\_{i<n+1} Ker d_i) at level n.
QuotientOfKernel moore_quotient(const SimplicialGroup& g, int n,
                                const Config& cfg) {
    Embedded carrier = materialize(face_kernel_intersection(g, n, n), cfg);
    Subgroup top = face_kernel_intersection(g, n + 1, n + 1);
    std::vector<int> bnd;
    for (int x : top.elements) {
        int idx = carrier.index_of_parent(g.d(n + 1, n + 1)(x));
        if (idx < 0)
            throw Error(Errc::BadInput, "boundary image leaves the kernel");
        bnd.push_back(idx);
    }
    std::sort(bnd.begin(), bnd.end());
    bnd.erase(std::unique(bnd.begin(), bnd.end()), bnd.end());
    Quotient q = quotient(carrier.group, Subgroup{carrier.group, bnd}, cfg);
    return QuotientOfKernel{std::move(carrier), std::move(q)};
}

// Quotient-valued map from a carrier: checks representative independence.
std::vector<int> induced_map(const QuotientOfKernel& src,
                             const std::function<int(int)>& on_parent) {
    const int classes = src.quot.group->order();
    std::vector<int> out(classes, -1);
    for (int c = 0; c < src.carrier.group->order(); ++c) {
        int value = on_parent(src.carrier.inclusion.map[c]);
        int cls = src.quot.projection(c);
        if (out[cls] < 0)
            out[cls] = value;
        else if (out[cls] != value)
            throw Error(Errc::BadInput,
                        "map is not constant on boundary cosets");
    }
    return out;
}

}  // namespace

CrossedModule m_functor_1(const SimplicialGroup& g, const Config& cfg) {
    if (g.depth < 2)
        throw Error(Errc::DepthTooShallow, "M(G,1) needs depth >= 2");
    QuotientOfKernel m = moore_quotient(g, 1, cfg);
    Embedded p0 = materialize(full_subgroup(g.levels[0]), cfg);

    std::vector<int> bmap = induced_map(m, [&](int parent) {
        int idx = p0.index_of_parent(g.d(1, 1)(parent));
        if (idx < 0) throw Error(Errc::BadInput, "boundary leaves level 0");
        return idx;
    });
    Hom boundary = make_hom(m.quot.group, p0.group, std::move(bmap));

    const auto& level1 = *g.levels[1];
    std::vector<std::vector<int>> act(p0.group->order());
    for (int p = 0; p < p0.group->order(); ++p) {
        int lift = g.s(0, 0)(p0.inclusion.map[p]);
        act[p] = induced_map(m, [&](int parent) {
            return m.cls(level1.conj(lift, parent));
        });
    }
    return make_crossed_module(m.quot.group, p0.group, std::move(boundary),
                               make_action(p0.group, m.quot.group,
                                           std::move(act)));
}

CrossedSquare m_functor_2(const SimplicialGroup& g, const Config& cfg) {
    if (g.depth < 3)
        throw Error(Errc::DepthTooShallow, "M(G,2) needs depth >= 3");
    QuotientOfKernel l = moore_quotient(g, 2, cfg);
    Embedded m = materialize(kernel(g.d(1, 0)), cfg);
    Embedded n = materialize(kernel(g.d(1, 1)), cfg);
    Embedded p = materialize(full_subgroup(g.levels[1]), cfg);
    const auto& level1 = *g.levels[1];
    const auto& level2 = *g.levels[2];

    auto into = [&](const Embedded& dst, int parent, const char* what) {
        int idx = dst.index_of_parent(parent);
        if (idx < 0)
            throw Error(Errc::BadInput,
                        std::string(what) + " misses its target corner");
        return idx;
    };

    CrossedSquare d;
    d.L = l.quot.group;
    d.M = m.group;
    d.N = n.group;
    d.P = p.group;
    d.lambda = make_hom(d.L, d.M, induced_map(l, [&](int parent) {
                            return into(m, g.d(2, 2)(parent), "lambda");
                        }));
    d.lambda_p = make_hom(d.L, d.N, induced_map(l, [&](int parent) {
                              return into(n, g.d(2, 2)(parent), "lambda'");
                          }));
    d.mu = restricted_hom(m, p, identity_hom(g.levels[1]), "mu");
    d.nu = restricted_hom(n, p, identity_hom(g.levels[1]), "nu");

    std::vector<std::vector<int>> act_l(p.group->order());
    std::vector<std::vector<int>> act_m(p.group->order(),
                                        std::vector<int>(m.group->order()));
    std::vector<std::vector<int>> act_n(p.group->order(),
                                        std::vector<int>(n.group->order()));
    for (int a = 0; a < p.group->order(); ++a) {
        int g1 = p.inclusion.map[a];
        int lift = g.s(1, 1)(g1);
        act_l[a] = induced_map(l, [&](int parent) {
            return l.cls(level2.conj(lift, parent));
        });
        for (int x = 0; x < m.group->order(); ++x)
            act_m[a][x] = into(m, level1.conj(g1, m.inclusion.map[x]), "act_m");
        for (int x = 0; x < n.group->order(); ++x)
            act_n[a][x] = into(n, level1.conj(g1, n.inclusion.map[x]), "act_n");
    }
    d.act_l = make_action(p.group, d.L, std::move(act_l));
    d.act_m = make_action(p.group, d.M, std::move(act_m));
    d.act_n = make_action(p.group, d.N, std::move(act_n));

    // h(x, y) = [s_1 x, s_1 y s_0 y^-1] modulo the boundary image.
    d.h.assign(m.group->order(), std::vector<int>(n.group->order()));
    for (int x = 0; x < m.group->order(); ++x)
        for (int y = 0; y < n.group->order(); ++y) {
            int sx = g.s(1, 1)(m.inclusion.map[x]);
            int ylift = n.inclusion.map[y];
            int sy = level2.mul(g.s(1, 1)(ylift),
                                level2.inverse(g.s(1, 0)(ylift)));
            d.h[x][y] = l.cls(level2.commutator(sx, sy));
        }
    return make_crossed_square(std::move(d));
}

// ---------------------------------------------------------------------------
// Chain complexes
// ---------------------------------------------------------------------------

ChainComplex chain_complex(const NormalComplex& nc) {
    ChainComplex c;
    for (const auto& e : nc.groups) c.groups.push_back(e.group);
    c.boundary.resize(nc.groups.size(), Hom{});
    for (size_t n = 1; n < nc.groups.size(); ++n) c.boundary[n] = nc.boundary[n];
    return c;
}

ChainComplex truncate_complex(const ChainComplex& c, int n, const Config& cfg) {
    const int top = static_cast<int>(c.groups.size()) - 1;
    if (n < 0 || n > top)
        throw Error(Errc::BadInput, "truncation level outside the window");
    ChainComplex t;
    for (int i = 0; i < n; ++i) t.groups.push_back(c.groups[i]);
    Quotient q = n + 1 <= top
                     ? quotient(c.groups[n], image(c.boundary[n + 1]), cfg)
                     : quotient(c.groups[n], trivial_subgroup(c.groups[n]), cfg);
    t.groups.push_back(q.group);
    t.boundary.resize(n + 1, Hom{});
    for (int i = 1; i < n; ++i) t.boundary[i] = c.boundary[i];
    if (n >= 1) {
        // induced by the old boundary on representatives
        std::vector<int> map(q.group->order());
        for (int cls = 0; cls < q.group->order(); ++cls)
            map[cls] = c.boundary[n](q.reps[cls]);
        for (int x = 0; x < c.groups[n]->order(); ++x)
            if (c.boundary[n](x) != map[q.projection(x)])
                throw Error(Errc::BadInput,
                            "truncated boundary is not constant on cosets");
        t.boundary[n] = make_hom(q.group, c.groups[n - 1], std::move(map));
    }
    return t;
}

HomotopyGroup complex_homology(const ChainComplex& c, int n, const Config& cfg) {
    const int top = static_cast<int>(c.groups.size()) - 1;
    if (n < 0 || n > top)
        throw Error(Errc::DepthTooShallow, "homology level outside the window");
    Subgroup cycles =
        n == 0 ? full_subgroup(c.groups[0]) : kernel(c.boundary[n]);
    Embedded z = materialize(cycles, cfg);
    std::vector<int> bnd{0};
    if (n + 1 <= top)
        for (int x = 0; x < c.groups[n + 1]->order(); ++x) {
            int idx = z.index_of_parent(c.boundary[n + 1](x));
            if (idx < 0)
                throw Error(Errc::BadInput, "image leaves the cycle subgroup");
            bnd.push_back(idx);
        }
    std::sort(bnd.begin(), bnd.end());
    bnd.erase(std::unique(bnd.begin(), bnd.end()), bnd.end());
    Quotient q = quotient(z.group, Subgroup{z.group, std::move(bnd)}, cfg);
    HomotopyGroup result{q.group, std::nullopt};
    if (q.group->is_abelian()) result.invariants = abelian_invariants(*q.group);
    return result;
}

}  // namespace h3
