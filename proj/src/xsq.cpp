#include "homotopy3/xsq.hpp"

#include <functional>
#include <sstream>

namespace h3 {

namespace {

using ActFn = std::function<int(int, int)>;

void check_crossed(const Group& m, const Group& p, const std::vector<int>& bd,
                   const ActFn& act, const std::string& tag) {
    for (int a = 0; a < p.order(); ++a)
        for (int x = 0; x < m.order(); ++x)
            if (bd[act(a, x)] != p.conj(a, bd[x]))
                throw Error(Errc::AxiomViolation,
                            "C1 fails for " + tag + " at (" + p.label(a) +
                                ", " + m.label(x) + ")",
                            "square.1(" + tag + ")", {p.label(a), m.label(x)});
    for (int x = 0; x < m.order(); ++x)
        for (int y = 0; y < m.order(); ++y)
            if (act(bd[x], y) != m.conj(x, y))
                throw Error(Errc::AxiomViolation,
                            "Peiffer identity fails for " + tag + " at (" +
                                m.label(x) + ", " + m.label(y) + ")",
                            "square.1(" + tag + ")", {m.label(x), m.label(y)});
}

std::string mask_str(int mask) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; mask >> i; ++i)
        if ((mask >> i) & 1) {
            if (!first) os << ",";
            os << (i + 1);
            first = false;
        }
    os << "}";
    return os.str();
}

}  // namespace

CrossedSquare make_crossed_square(CrossedSquare d) {
    const auto &L = *d.L, &M = *d.M, &N = *d.N, &P = *d.P;
    if (d.lambda.src != d.L || d.lambda.dst != d.M || d.lambda_p.src != d.L ||
        d.lambda_p.dst != d.N || d.mu.src != d.M || d.mu.dst != d.P ||
        d.nu.src != d.N || d.nu.dst != d.P)
        throw Error(Errc::BadInput, "crossed square homomorphisms have wrong shape");
    if (d.act_l.actor != d.P || d.act_l.target != d.L ||
        d.act_m.actor != d.P || d.act_m.target != d.M ||
        d.act_n.actor != d.P || d.act_n.target != d.N)
        throw Error(Errc::BadInput, "crossed square actions have wrong shape");
    if (static_cast<int>(d.h.size()) != M.order())
        throw Error(Errc::BadInput, "h table has wrong M dimension");
    for (const auto& row : d.h) {
        if (static_cast<int>(row.size()) != N.order())
            throw Error(Errc::BadInput, "h table has wrong N dimension");
        for (int v : row)
            if (v < 0 || v >= L.order())
                throw Error(Errc::BadInput, "h table entry out of range");
    }

    // The square commutes: mu lambda = nu lambda_p.
    for (int l = 0; l < L.order(); ++l)
        if (d.mu(d.lambda(l)) != d.nu(d.lambda_p(l)))
            throw Error(Errc::AxiomViolation,
                        "square does not commute at " + L.label(l),
                        "square.commute", {L.label(l)});

    // Axiom 1: five crossed modules ...
    check_crossed(M, P, d.mu.map, [&](int p, int m) { return d.act_m.act(p, m); },
                  "mu");
    check_crossed(N, P, d.nu.map, [&](int p, int n) { return d.act_n.act(p, n); },
                  "nu");
    std::vector<int> kappa(L.order());
    for (int l = 0; l < L.order(); ++l) kappa[l] = d.mu(d.lambda(l));
    check_crossed(L, P, kappa, [&](int p, int l) { return d.act_l.act(p, l); },
                  "kappa");
    check_crossed(L, M, d.lambda.map,
                  [&](int m, int l) { return d.m_on_l(m, l); }, "lambda");
    check_crossed(L, N, d.lambda_p.map,
                  [&](int n, int l) { return d.n_on_l(n, l); }, "lambda'");
    // ... and the evident maps are morphisms: lambda, lambda' P-equivariant.
    for (int p = 0; p < P.order(); ++p)
        for (int l = 0; l < L.order(); ++l) {
            if (d.lambda(d.act_l.act(p, l)) != d.act_m.act(p, d.lambda(l)))
                throw Error(Errc::AxiomViolation,
                            "lambda is not P-equivariant at (" + P.label(p) +
                                ", " + L.label(l) + ")",
                            "square.1(lambda-equivariance)",
                            {P.label(p), L.label(l)});
            if (d.lambda_p(d.act_l.act(p, l)) != d.act_n.act(p, d.lambda_p(l)))
                throw Error(Errc::AxiomViolation,
                            "lambda' is not P-equivariant at (" + P.label(p) +
                                ", " + L.label(l) + ")",
                            "square.1(lambda'-equivariance)",
                            {P.label(p), L.label(l)});
        }

    // Axiom 2: lambda h(m,n) = m (^{nu(n)} m)^-1.
    for (int m = 0; m < M.order(); ++m)
        for (int n = 0; n < N.order(); ++n)
            if (d.lambda(d.h[m][n]) !=
                M.mul(m, M.inverse(d.n_on_m(n, m))))
                throw Error(Errc::AxiomViolation,
                            "axiom 2 fails at (" + M.label(m) + ", " +
                                N.label(n) + ")",
                            "square.2", {M.label(m), N.label(n)});
    // Axiom 3: lambda' h(m,n) = (^{mu(m)} n) n^-1.
    for (int m = 0; m < M.order(); ++m)
        for (int n = 0; n < N.order(); ++n)
            if (d.lambda_p(d.h[m][n]) !=
                N.mul(d.m_on_n(m, n), N.inverse(n)))
                throw Error(Errc::AxiomViolation,
                            "axiom 3 fails at (" + M.label(m) + ", " +
                                N.label(n) + ")",
                            "square.3", {M.label(m), N.label(n)});
    // Axiom 4: h(lambda l, n) = l (^n l)^-1.
    for (int l = 0; l < L.order(); ++l)
        for (int n = 0; n < N.order(); ++n)
            if (d.h[d.lambda(l)][n] !=
                L.mul(l, L.inverse(d.n_on_l(n, l))))
                throw Error(Errc::AxiomViolation,
                            "axiom 4 fails at (" + L.label(l) + ", " +
                                N.label(n) + ")",
                            "square.4", {L.label(l), N.label(n)});
    // Axiom 5: h(m, lambda' l) = (^m l) l^-1.
    for (int m = 0; m < M.order(); ++m)
        for (int l = 0; l < L.order(); ++l)
            if (d.h[m][d.lambda_p(l)] !=
                L.mul(d.m_on_l(m, l), L.inverse(l)))
                throw Error(Errc::AxiomViolation,
                            "axiom 5 fails at (" + M.label(m) + ", " +
                                L.label(l) + ")",
                            "square.5", {M.label(m), L.label(l)});
    // Axiom 6: h(m m1, n) = ^m h(m1, n) h(m, n).
    for (int m = 0; m < M.order(); ++m)
        for (int m1 = 0; m1 < M.order(); ++m1)
            for (int n = 0; n < N.order(); ++n)
                if (d.h[M.mul(m, m1)][n] !=
                    L.mul(d.m_on_l(m, d.h[m1][n]), d.h[m][n]))
                    throw Error(Errc::AxiomViolation,
                                "axiom 6 fails at (" + M.label(m) + ", " +
                                    M.label(m1) + ", " + N.label(n) + ")",
                                "square.6",
                                {M.label(m), M.label(m1), N.label(n)});
    // Axiom 7: h(m, n n1) = h(m, n) ^n h(m, n1).
    for (int m = 0; m < M.order(); ++m)
        for (int n = 0; n < N.order(); ++n)
            for (int n1 = 0; n1 < N.order(); ++n1)
                if (d.h[m][N.mul(n, n1)] !=
                    L.mul(d.h[m][n], d.n_on_l(n, d.h[m][n1])))
                    throw Error(Errc::AxiomViolation,
                                "axiom 7 fails at (" + M.label(m) + ", " +
                                    N.label(n) + ", " + N.label(n1) + ")",
                                "square.7",
                                {M.label(m), N.label(n), N.label(n1)});
    // Axiom 8: h(^p m, ^p n) = ^p h(m, n).
    for (int p = 0; p < P.order(); ++p)
        for (int m = 0; m < M.order(); ++m)
            for (int n = 0; n < N.order(); ++n)
                if (d.h[d.act_m.act(p, m)][d.act_n.act(p, n)] !=
                    d.act_l.act(p, d.h[m][n]))
                    throw Error(Errc::AxiomViolation,
                                "axiom 8 fails at (" + P.label(p) + ", " +
                                    M.label(m) + ", " + N.label(n) + ")",
                                "square.8",
                                {P.label(p), M.label(m), N.label(n)});
    return d;
}

CrossedSquare inclusion_crossed_square(FinGroupPtr g, const Subgroup& m,
                                       const Subgroup& n) {
    require_normal(m);
    require_normal(n);
    Subgroup inter = intersect(m, n);
    Embedded cl = materialize(inter);
    Embedded cm = materialize(m);
    Embedded cn = materialize(n);

    auto restrict_to = [&](const Embedded& from, const Embedded& to) {
        std::vector<int> map(from.group->order());
        for (int i = 0; i < from.group->order(); ++i) {
            int idx = to.index_of_parent(from.inclusion.map[i]);
            if (idx < 0)
                throw Error(Errc::BadInput, "inclusion escapes subgroup");
            map[i] = idx;
        }
        return make_hom(from.group, to.group, std::move(map));
    };

    CrossedSquare d;
    d.L = cl.group;
    d.M = cm.group;
    d.N = cn.group;
    d.P = g;
    d.lambda = restrict_to(cl, cm);
    d.lambda_p = restrict_to(cl, cn);
    d.mu = cm.inclusion;
    d.nu = cn.inclusion;
    d.act_l = conjugation_action(g, inter, cl);
    d.act_m = conjugation_action(g, m, cm);
    d.act_n = conjugation_action(g, n, cn);
    d.h.assign(cm.group->order(), std::vector<int>(cn.group->order()));
    for (int a = 0; a < cm.group->order(); ++a)
        for (int b = 0; b < cn.group->order(); ++b) {
            int comm = g->commutator(cm.inclusion.map[a], cn.inclusion.map[b]);
            int idx = cl.index_of_parent(comm);
            if (idx < 0)
                throw Error(Errc::AxiomViolation,
                            "commutator escapes the intersection at (" +
                                g->label(cm.inclusion.map[a]) + ", " +
                                g->label(cn.inclusion.map[b]) + ")",
                            "square.h-range");
            d.h[a][b] = idx;
        }
    return make_crossed_square(std::move(d));
}

CrossedSquare transpose_square(const CrossedSquare& sq) {
    CrossedSquare d;
    d.L = sq.L;
    d.M = sq.N;
    d.N = sq.M;
    d.P = sq.P;
    d.lambda = sq.lambda_p;
    d.lambda_p = sq.lambda;
    d.mu = sq.nu;
    d.nu = sq.mu;
    d.act_l = sq.act_l;
    d.act_m = sq.act_n;
    d.act_n = sq.act_m;
    d.h.assign(sq.N->order(), std::vector<int>(sq.M->order()));
    for (int n = 0; n < sq.N->order(); ++n)
        for (int m = 0; m < sq.M->order(); ++m)
            d.h[n][m] = sq.L->inverse(sq.h[m][n]);
    return make_crossed_square(std::move(d));
}

// ---------------------------------------------------------------------------
// cat2-groups
// ---------------------------------------------------------------------------

Cat2Group make_cat2(FinGroupPtr g, Hom s1, Hom t1, Hom s2, Hom t2) {
    make_cat1(g, s1, t1);
    make_cat1(g, s2, t2);
    auto commute = [&](const Hom& a, const Hom& b, const std::string& name) {
        for (int x = 0; x < g->order(); ++x)
            if (a.map[b.map[x]] != b.map[a.map[x]])
                throw Error(Errc::AxiomViolation,
                            name + " fails at " + g->label(x),
                            "cat2." + name, {g->label(x)});
    };
    commute(s1, s2, "s1s2=s2s1");
    commute(t1, t2, "t1t2=t2t1");
    commute(s1, t2, "s1t2=t2s1");
    commute(s2, t1, "s2t1=t1s2");
    return Cat2Group{std::move(g), std::move(s1), std::move(t1), std::move(s2),
                     std::move(t2)};
}

Cat2Group cat2_from_square(const CrossedSquare& sq) {
    const auto &L = *sq.L, &M = *sq.M, &N = *sq.N, &P = *sq.P;

    // L x| N via nu, M x| P directly.
    std::vector<std::vector<int>> a_ln(N.order(), std::vector<int>(L.order()));
    for (int n = 0; n < N.order(); ++n)
        for (int l = 0; l < L.order(); ++l) a_ln[n][l] = sq.n_on_l(n, l);
    Semidirect ln = semidirect(sq.L, sq.N, make_action(sq.N, sq.L, a_ln));
    Semidirect mp = semidirect(sq.M, sq.P, sq.act_m);

    // ^{(m,p)}(l,n) = (^{mu(m) p} l . h(m, ^p n), ^p n)
    std::vector<std::vector<int>> big_act(
        mp.group->order(), std::vector<int>(ln.group->order()));
    for (int mi = 0; mi < M.order(); ++mi)
        for (int pi = 0; pi < P.order(); ++pi) {
            int mp_idx = mp.pair_index(mi, pi);
            int mup = P.mul(sq.mu(mi), pi);
            for (int li = 0; li < L.order(); ++li)
                for (int ni = 0; ni < N.order(); ++ni) {
                    int pn = sq.act_n.act(pi, ni);
                    int l2 = L.mul(sq.act_l.act(mup, li), sq.h[mi][pn]);
                    big_act[mp_idx][ln.pair_index(li, ni)] =
                        ln.pair_index(l2, pn);
                }
        }
    Semidirect big = semidirect(
        ln.group, mp.group, make_action(mp.group, ln.group, std::move(big_act)));

    const int order = big.group->order();
    std::vector<int> s1(order), t1(order), s2(order), t2(order);
    for (int idx = 0; idx < order; ++idx) {
        auto [ln_i, mp_i] = big.unpair(idx);
        auto [l, n] = ln.unpair(ln_i);
        auto [m, p] = mp.unpair(mp_i);
        s1[idx] = big.pair_index(0, mp_i);
        // t1 multiplies the boundary (lambda l, nu n) into (m, p) within M x| P.
        int bd_m = M.mul(sq.lambda(l), sq.n_on_m(n, m));
        int bd_p = P.mul(sq.nu(n), p);
        t1[idx] = big.pair_index(0, mp.pair_index(bd_m, bd_p));
        s2[idx] = big.pair_index(ln.pair_index(0, n), mp.pair_index(0, p));
        t2[idx] = big.pair_index(ln.pair_index(0, N.mul(sq.lambda_p(l), n)),
                                 mp.pair_index(0, P.mul(sq.mu(m), p)));
    }
    return make_cat2(big.group, make_hom(big.group, big.group, std::move(s1)),
                     make_hom(big.group, big.group, std::move(t1)),
                     make_hom(big.group, big.group, std::move(s2)),
                     make_hom(big.group, big.group, std::move(t2)));
}

CrossedSquare square_from_cat2(const Cat2Group& c) {
    Subgroup ker1 = kernel(c.s1);
    Subgroup ker2 = kernel(c.s2);
    Subgroup im1 = image(c.s1);
    Subgroup im2 = image(c.s2);

    Embedded cl = materialize(intersect(ker1, ker2));
    Embedded cm = materialize(intersect(im1, ker2));
    Embedded cn = materialize(intersect(ker1, im2));
    Embedded cp = materialize(intersect(im1, im2));

    auto restrict_hom = [&](const Hom& f, const Embedded& from,
                            const Embedded& to, const char* tag) {
        std::vector<int> map(from.group->order());
        for (int i = 0; i < from.group->order(); ++i) {
            int idx = to.index_of_parent(f.map[from.inclusion.map[i]]);
            if (idx < 0)
                throw Error(Errc::AxiomViolation,
                            std::string("structure map escapes its corner (") +
                                tag + ")",
                            tag);
            map[i] = idx;
        }
        return make_hom(from.group, to.group, std::move(map));
    };
    auto conj_action = [&](const Embedded& target) {
        std::vector<std::vector<int>> table(
            cp.group->order(), std::vector<int>(target.group->order()));
        for (int a = 0; a < cp.group->order(); ++a)
            for (int x = 0; x < target.group->order(); ++x) {
                int conj = c.G->conj(cp.inclusion.map[a],
                                     target.inclusion.map[x]);
                int idx = target.index_of_parent(conj);
                if (idx < 0)
                    throw Error(Errc::AxiomViolation,
                                "conjugation by the base corner escapes",
                                "cat2.action");
                table[a][x] = idx;
            }
        return make_action(cp.group, target.group, std::move(table));
    };

    CrossedSquare d;
    d.L = cl.group;
    d.M = cm.group;
    d.N = cn.group;
    d.P = cp.group;
    d.lambda = restrict_hom(c.t1, cl, cm, "cat2.lambda");
    d.lambda_p = restrict_hom(c.t2, cl, cn, "cat2.lambda'");
    d.mu = restrict_hom(c.t2, cm, cp, "cat2.mu");
    d.nu = restrict_hom(c.t1, cn, cp, "cat2.nu");
    d.act_l = conj_action(cl);
    d.act_m = conj_action(cm);
    d.act_n = conj_action(cn);
    d.h.assign(cm.group->order(), std::vector<int>(cn.group->order()));
    for (int a = 0; a < cm.group->order(); ++a)
        for (int b = 0; b < cn.group->order(); ++b) {
            int comm = c.G->commutator(cm.inclusion.map[a],
                                       cn.inclusion.map[b]);
            int idx = cl.index_of_parent(comm);
            if (idx < 0)
                throw Error(Errc::AxiomViolation,
                            "commutator escapes Ker s1 and Ker s2",
                            "cat2.h-range");
            d.h[a][b] = idx;
        }
    return make_crossed_square(std::move(d));
}

std::optional<XSqIso> find_xsq_iso(const CrossedSquare& a,
                                   const CrossedSquare& b, int iso_bound) {
    if (a.L->order() != b.L->order() || a.M->order() != b.M->order() ||
        a.N->order() != b.N->order() || a.P->order() != b.P->order())
        return std::nullopt;
    std::optional<XSqIso> found;

    auto action_pairs = [&](const GroupAction& aa, const GroupAction& bb,
                            const Hom& f_p, IsoSearchOptions& opts) {
        for (int p = 0; p < a.P->order(); ++p) {
            int q = f_p(p);
            opts.unary.emplace_back([&aa, p](int x) { return aa.act(p, x); },
                                    [&bb, q](int y) { return bb.act(q, y); });
        }
    };

    IsoSearchOptions p_opts;
    p_opts.max_order = iso_bound;
    enumerate_isos(a.P, b.P, p_opts, [&](const Hom& f_p) {
        IsoSearchOptions m_opts;
        m_opts.max_order = iso_bound;
        m_opts.accept = [&](int x, int y) { return b.mu(y) == f_p(a.mu(x)); };
        action_pairs(a.act_m, b.act_m, f_p, m_opts);
        enumerate_isos(a.M, b.M, m_opts, [&](const Hom& f_m) {
            IsoSearchOptions n_opts;
            n_opts.max_order = iso_bound;
            n_opts.accept = [&](int x, int y) {
                return b.nu(y) == f_p(a.nu(x));
            };
            action_pairs(a.act_n, b.act_n, f_p, n_opts);
            enumerate_isos(a.N, b.N, n_opts, [&](const Hom& f_n) {
                IsoSearchOptions l_opts;
                l_opts.max_order = iso_bound;
                l_opts.accept = [&](int x, int y) {
                    return b.lambda(y) == f_m(a.lambda(x)) &&
                           b.lambda_p(y) == f_n(a.lambda_p(x));
                };
                action_pairs(a.act_l, b.act_l, f_p, l_opts);
                enumerate_isos(a.L, b.L, l_opts, [&](const Hom& f_l) {
                    for (int m = 0; m < a.M->order(); ++m)
                        for (int n = 0; n < a.N->order(); ++n)
                            if (b.h[f_m(m)][f_n(n)] != f_l(a.h[m][n]))
                                return true;  // keep searching
                    found = XSqIso{f_l, f_m, f_n, f_p};
                    return false;
                });
                return !found;
            });
            return !found;
        });
        return !found;
    });
    return found;
}

std::optional<Hom> find_cat2_iso(const Cat2Group& a, const Cat2Group& b,
                                 int iso_bound) {
    IsoSearchOptions opts;
    opts.max_order = iso_bound;
    for (auto [fa, fb] : {std::make_pair(&a.s1, &b.s1),
                          std::make_pair(&a.t1, &b.t1),
                          std::make_pair(&a.s2, &b.s2),
                          std::make_pair(&a.t2, &b.t2)})
        opts.unary.emplace_back([fa](int x) { return fa->map[x]; },
                                [fb](int y) { return fb->map[y]; });
    return find_iso(a.G, b.G, opts);
}

// ---------------------------------------------------------------------------
// Crossed n-cubes
// ---------------------------------------------------------------------------

CrossedNCube make_crossed_ncube(CrossedNCube d) {
    const int size = 1 << d.n;
    if (static_cast<int>(d.groups.size()) != size ||
        static_cast<int>(d.mu.size()) != size ||
        static_cast<int>(d.h.size()) != size)
        throw Error(Errc::BadInput, "crossed n-cube index structure incomplete");

    auto fail = [&](int axiom, int a_mask, int b_mask,
                    std::vector<std::string> wit) {
        throw Error(Errc::AxiomViolation,
                    "n-cube axiom " + std::to_string(axiom) + " fails at A=" +
                        mask_str(a_mask) + ", B=" + mask_str(b_mask),
                    "ncube." + std::to_string(axiom), std::move(wit));
    };

    // Axiom 1 is structural: mu[A][i] exists exactly when i is in A.
    for (int a = 0; a < size; ++a) {
        if (static_cast<int>(d.mu[a].size()) != d.n)
            throw Error(Errc::BadInput, "mu table has wrong arity");
        for (int i = 0; i < d.n; ++i) {
            bool in = (a >> i) & 1;
            if (in != d.mu[a][i].has_value())
                throw Error(Errc::BadInput,
                            "mu must be given exactly for i in A (A=" +
                                mask_str(a) + ", i=" + std::to_string(i + 1) +
                                ")");
            if (in && (d.mu[a][i]->src != d.groups[a] ||
                       d.mu[a][i]->dst != d.groups[a & ~(1 << i)]))
                throw Error(Errc::BadInput, "mu map has wrong shape");
        }
        if (static_cast<int>(d.h[a].size()) != size)
            throw Error(Errc::BadInput, "h table index structure incomplete");
        for (int b = 0; b < size; ++b) {
            const auto& t = d.h[a][b];
            if (static_cast<int>(t.size()) != d.groups[a]->order())
                throw Error(Errc::BadInput, "h table has wrong shape");
            for (const auto& row : t) {
                if (static_cast<int>(row.size()) != d.groups[b]->order())
                    throw Error(Errc::BadInput, "h table has wrong shape");
                for (int v : row)
                    if (v < 0 || v >= d.groups[a | b]->order())
                        throw Error(Errc::BadInput, "h entry out of range");
            }
        }
    }

    // Axiom 2: mu_i mu_j = mu_j mu_i.
    for (int a = 0; a < size; ++a)
        for (int i = 0; i < d.n; ++i)
            for (int j = i + 1; j < d.n; ++j) {
                if (!((a >> i) & 1) || !((a >> j) & 1)) continue;
                for (int x = 0; x < d.groups[a]->order(); ++x) {
                    int ij = d.mu_apply(a & ~(1 << i), j, d.mu_apply(a, i, x));
                    int ji = d.mu_apply(a & ~(1 << j), i, d.mu_apply(a, j, x));
                    if (ij != ji)
                        fail(2, a, a, {d.groups[a]->label(x)});
                }
            }

    // Axiom 6: h(a,b) = h(b,a)^-1, and axiom 7: h(a,1) = h(1,b) = 1.
    for (int am = 0; am < size; ++am)
        for (int bm = 0; bm < size; ++bm) {
            const auto& gu = *d.groups[am | bm];
            for (int x = 0; x < d.groups[am]->order(); ++x)
                for (int y = 0; y < d.groups[bm]->order(); ++y) {
                    if (d.h[am][bm][x][y] != gu.inverse(d.h[bm][am][y][x]))
                        fail(6, am, bm,
                             {d.groups[am]->label(x), d.groups[bm]->label(y)});
                    if ((x == 0 || y == 0) && d.h[am][bm][x][y] != 0)
                        fail(7, am, bm,
                             {d.groups[am]->label(x), d.groups[bm]->label(y)});
                }
        }

    // Axiom 3: mu_i h(a,b) = h(mu_i a, mu_i b).
    for (int am = 0; am < size; ++am)
        for (int bm = 0; bm < size; ++bm)
            for (int i = 0; i < d.n; ++i) {
                if (!(((am | bm) >> i) & 1)) continue;
                int am2 = am & ~(1 << i), bm2 = bm & ~(1 << i);
                for (int x = 0; x < d.groups[am]->order(); ++x)
                    for (int y = 0; y < d.groups[bm]->order(); ++y) {
                        int lhs = d.mu_apply(am | bm, i, d.h[am][bm][x][y]);
                        int rhs = d.h[am2][bm2][d.mu_apply(am, i, x)]
                                     [d.mu_apply(bm, i, y)];
                        if (lhs != rhs)
                            fail(3, am, bm,
                                 {d.groups[am]->label(x),
                                  d.groups[bm]->label(y),
                                  "i=" + std::to_string(i + 1)});
                    }
            }

    // Axiom 4: h(a,b) = h(mu_i a, b) = h(a, mu_i b) for i in A and B.
    for (int am = 0; am < size; ++am)
        for (int bm = 0; bm < size; ++bm) {
            int common = am & bm;
            if (!common) continue;
            for (int i = 0; i < d.n; ++i) {
                if (!((common >> i) & 1)) continue;
                for (int x = 0; x < d.groups[am]->order(); ++x)
                    for (int y = 0; y < d.groups[bm]->order(); ++y) {
                        int base = d.h[am][bm][x][y];
                        if (base != d.h[am & ~(1 << i)][bm]
                                       [d.mu_apply(am, i, x)][y] ||
                            base != d.h[am][bm & ~(1 << i)][x]
                                       [d.mu_apply(bm, i, y)])
                            fail(4, am, bm,
                                 {d.groups[am]->label(x),
                                  d.groups[bm]->label(y),
                                  "i=" + std::to_string(i + 1)});
                    }
            }
        }

    // Axiom 5: h(a,a') = [a,a'].
    for (int am = 0; am < size; ++am) {
        const auto& ga = *d.groups[am];
        for (int x = 0; x < ga.order(); ++x)
            for (int y = 0; y < ga.order(); ++y)
                if (d.h[am][am][x][y] != ga.commutator(x, y))
                    fail(5, am, am, {ga.label(x), ga.label(y)});
    }

    // Axiom 8: h(a a', b) = ^a h(a', b) . h(a, b).
    for (int am = 0; am < size; ++am)
        for (int bm = 0; bm < size; ++bm) {
            const auto& ga = *d.groups[am];
            const auto& gu = *d.groups[am | bm];
            for (int x = 0; x < ga.order(); ++x)
                for (int x1 = 0; x1 < ga.order(); ++x1)
                    for (int y = 0; y < d.groups[bm]->order(); ++y) {
                        int lhs = d.h[am][bm][ga.mul(x, x1)][y];
                        int rhs = gu.mul(
                            d.act(am, x, am | bm, d.h[am][bm][x1][y]),
                            d.h[am][bm][x][y]);
                        if (lhs != rhs)
                            fail(8, am, bm,
                                 {ga.label(x), ga.label(x1),
                                  d.groups[bm]->label(y)});
                    }
        }

    // Axiom 9: h(a, b b') = h(a, b) . ^b h(a, b').
    for (int am = 0; am < size; ++am)
        for (int bm = 0; bm < size; ++bm) {
            const auto& gb = *d.groups[bm];
            const auto& gu = *d.groups[am | bm];
            for (int x = 0; x < d.groups[am]->order(); ++x)
                for (int y = 0; y < gb.order(); ++y)
                    for (int y1 = 0; y1 < gb.order(); ++y1) {
                        int lhs = d.h[am][bm][x][gb.mul(y, y1)];
                        int rhs = gu.mul(
                            d.h[am][bm][x][y],
                            d.act(bm, y, am | bm, d.h[am][bm][x][y1]));
                        if (lhs != rhs)
                            fail(9, am, bm,
                                 {d.groups[am]->label(x), gb.label(y),
                                  gb.label(y1)});
                    }
        }

    // Axiom 10: ^a h(b,c) = h(^a b, ^a c) when A is a subset of B and C.
    for (int am = 0; am < size; ++am)
        for (int bm = 0; bm < size; ++bm)
            for (int cm = 0; cm < size; ++cm) {
                if ((am & bm) != am || (am & cm) != am) continue;
                for (int x = 0; x < d.groups[am]->order(); ++x)
                    for (int y = 0; y < d.groups[bm]->order(); ++y)
                        for (int z = 0; z < d.groups[cm]->order(); ++z) {
                            int lhs = d.act(am, x, bm | cm, d.h[bm][cm][y][z]);
                            int rhs = d.h[bm][cm][d.act(am, x, bm, y)]
                                         [d.act(am, x, cm, z)];
                            if (lhs != rhs)
                                fail(10, am, bm,
                                     {d.groups[am]->label(x),
                                      d.groups[bm]->label(y),
                                      d.groups[cm]->label(z)});
                        }
            }

    // Axiom 11: ^a h(h(a^-1,b),c) . ^c h(h(c^-1,a),b) . ^b h(h(b^-1,c),a) = 1.
    for (int am = 0; am < size; ++am)
        for (int bm = 0; bm < size; ++bm)
            for (int cm = 0; cm < size; ++cm) {
                int un = am | bm | cm;
                const auto& gu = *d.groups[un];
                const auto &ga = *d.groups[am], &gb = *d.groups[bm],
                           &gc = *d.groups[cm];
                for (int x = 0; x < ga.order(); ++x)
                    for (int y = 0; y < gb.order(); ++y)
                        for (int z = 0; z < gc.order(); ++z) {
                            int t1 = d.act(
                                am, x, un,
                                d.h[am | bm][cm][d.h[am][bm][ga.inverse(x)][y]]
                                   [z]);
                            int t2 = d.act(
                                cm, z, un,
                                d.h[cm | am][bm][d.h[cm][am][gc.inverse(z)][x]]
                                   [y]);
                            int t3 = d.act(
                                bm, y, un,
                                d.h[bm | cm][am][d.h[bm][cm][gb.inverse(y)][z]]
                                   [x]);
                            if (gu.mul(gu.mul(t1, t2), t3) != 0)
                                fail(11, am, bm,
                                     {ga.label(x), gb.label(y), gc.label(z)});
                        }
            }

    return d;
}

namespace {

// h entry for the derived actions of a crossed module / square packed into a
// cube: h(a, b) = (^a b) b^-1.
std::vector<std::vector<int>> action_h(const Group& target,
                                       const Group& actor,
                                       const ActFn& act) {
    std::vector<std::vector<int>> t(actor.order(),
                                    std::vector<int>(target.order()));
    for (int a = 0; a < actor.order(); ++a)
        for (int x = 0; x < target.order(); ++x)
            t[a][x] = target.mul(act(a, x), target.inverse(x));
    return t;
}

std::vector<std::vector<int>> transpose_inv(const Group& range,
                                            const std::vector<std::vector<int>>& t) {
    std::vector<std::vector<int>> r(t.empty() ? 0 : t[0].size(),
                                    std::vector<int>(t.size()));
    for (size_t a = 0; a < t.size(); ++a)
        for (size_t b = 0; b < t[a].size(); ++b)
            r[b][a] = range.inverse(t[a][b]);
    return r;
}

std::vector<std::vector<int>> commutator_h(const Group& g) {
    std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) t[a][b] = g.commutator(a, b);
    return t;
}

}  // namespace

CrossedNCube ncube_from_xmod(const CrossedModule& cm) {
    CrossedNCube d;
    d.n = 1;
    d.groups = {cm.P, cm.M};
    d.mu.assign(2, std::vector<std::optional<Hom>>(1));
    d.mu[1][0] = cm.boundary;
    d.h.assign(2, std::vector<std::vector<std::vector<int>>>(2));
    d.h[0][0] = commutator_h(*cm.P);
    d.h[1][1] = commutator_h(*cm.M);
    d.h[0][1] = action_h(*cm.M, *cm.P,
                         [&](int p, int m) { return cm.action.act(p, m); });
    d.h[1][0] = transpose_inv(*cm.M, d.h[0][1]);
    return make_crossed_ncube(std::move(d));
}

CrossedNCube ncube_from_square(const CrossedSquare& sq) {
    CrossedNCube d;
    d.n = 2;
    // masks: 0 = P, 1 = M, 2 = N, 3 = L
    d.groups = {sq.P, sq.M, sq.N, sq.L};
    d.mu.assign(4, std::vector<std::optional<Hom>>(2));
    d.mu[1][0] = sq.mu;
    d.mu[2][1] = sq.nu;
    d.mu[3][0] = sq.lambda_p;  // drop direction 1: lands in N
    d.mu[3][1] = sq.lambda;    // drop direction 2: lands in M
    d.h.assign(4, std::vector<std::vector<std::vector<int>>>(4));
    d.h[0][0] = commutator_h(*sq.P);
    d.h[1][1] = commutator_h(*sq.M);
    d.h[2][2] = commutator_h(*sq.N);
    d.h[3][3] = commutator_h(*sq.L);
    d.h[0][1] = action_h(*sq.M, *sq.P,
                         [&](int p, int m) { return sq.act_m.act(p, m); });
    d.h[0][2] = action_h(*sq.N, *sq.P,
                         [&](int p, int n) { return sq.act_n.act(p, n); });
    d.h[0][3] = action_h(*sq.L, *sq.P,
                         [&](int p, int l) { return sq.act_l.act(p, l); });
    d.h[1][0] = transpose_inv(*sq.M, d.h[0][1]);
    d.h[2][0] = transpose_inv(*sq.N, d.h[0][2]);
    d.h[3][0] = transpose_inv(*sq.L, d.h[0][3]);
    d.h[1][2] = sq.h;
    d.h[2][1] = transpose_inv(*sq.L, sq.h);
    d.h[1][3] = action_h(*sq.L, *sq.M,
                         [&](int m, int l) { return sq.m_on_l(m, l); });
    d.h[3][1] = transpose_inv(*sq.L, d.h[1][3]);
    d.h[2][3] = action_h(*sq.L, *sq.N,
                         [&](int n, int l) { return sq.n_on_l(n, l); });
    d.h[3][2] = transpose_inv(*sq.L, d.h[2][3]);
    return make_crossed_ncube(std::move(d));
}

CrossedNCube inclusion_ncube(FinGroupPtr g, const std::vector<Subgroup>& ns) {
    const int n = static_cast<int>(ns.size());
    for (const auto& s : ns) require_normal(s);
    const int size = 1 << n;

    std::vector<Embedded> corner(size);
    for (int mask = 0; mask < size; ++mask) {
        Subgroup s = full_subgroup(g);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) s = intersect(s, ns[i]);
        corner[mask] = materialize(s);
    }

    CrossedNCube d;
    d.n = n;
    d.groups.resize(size);
    for (int mask = 0; mask < size; ++mask) d.groups[mask] = corner[mask].group;
    d.mu.assign(size, std::vector<std::optional<Hom>>(n));
    for (int mask = 0; mask < size; ++mask)
        for (int i = 0; i < n; ++i) {
            if (!((mask >> i) & 1)) continue;
            const Embedded& from = corner[mask];
            const Embedded& to = corner[mask & ~(1 << i)];
            std::vector<int> map(from.group->order());
            for (int x = 0; x < from.group->order(); ++x) {
                int idx = to.index_of_parent(from.inclusion.map[x]);
                if (idx < 0)
                    throw Error(Errc::BadInput, "intersection inclusion escapes");
                map[x] = idx;
            }
            d.mu[mask][i] = make_hom(from.group, to.group, std::move(map));
        }
    d.h.assign(size, std::vector<std::vector<std::vector<int>>>(size));
    for (int am = 0; am < size; ++am)
        for (int bm = 0; bm < size; ++bm) {
            const Embedded& ca = corner[am];
            const Embedded& cb = corner[bm];
            const Embedded& cu = corner[am | bm];
            auto& t = d.h[am][bm];
            t.assign(ca.group->order(), std::vector<int>(cb.group->order()));
            for (int x = 0; x < ca.group->order(); ++x)
                for (int y = 0; y < cb.group->order(); ++y) {
                    int comm = g->commutator(ca.inclusion.map[x],
                                             cb.inclusion.map[y]);
                    int idx = cu.index_of_parent(comm);
                    if (idx < 0)
                        throw Error(Errc::AxiomViolation,
                                    "[M_A, M_B] escapes M_{A u B} at A=" +
                                        mask_str(am) + ", B=" + mask_str(bm),
                                    "ncube.h-range");
                    t[x][y] = idx;
                }
        }
    return make_crossed_ncube(std::move(d));
}

// ---------------------------------------------------------------------------
// Squared complexes
// ---------------------------------------------------------------------------

SquaredComplex make_squared_complex(SquaredComplex d) {
    d.square = make_crossed_square(std::move(d.square));
    const size_t k = d.tail.size();
    if (d.boundary.size() != k || d.tail_action.size() != k)
        throw Error(Errc::BadInput, "squared complex tail structure incomplete");

    for (size_t j = 0; j < k; ++j) {
        const auto& c = *d.tail[j];
        for (int a = 0; a < c.order(); ++a)
            for (int b = a + 1; b < c.order(); ++b)
                if (c.mul(a, b) != c.mul(b, a))
                    throw Error(Errc::AxiomViolation,
                                "tail group C" + std::to_string(j + 3) +
                                    " is not abelian",
                                "sqcomplex.ii", {c.label(a), c.label(b)});
        GroupPtr expect_dst = j == 0 ? GroupPtr(d.square.L) : GroupPtr(d.tail[j - 1]);
        if (d.boundary[j].src != GroupPtr(d.tail[j]) ||
            d.boundary[j].dst != expect_dst)
            throw Error(Errc::BadInput, "tail boundary has wrong shape");
        if (d.tail_action[j].actor != d.square.P ||
            d.tail_action[j].target != GroupPtr(d.tail[j]))
            throw Error(Errc::BadInput, "tail action has wrong shape");
    }

    // (iii) boundaries compose to 1 and land in Ker lambda n Ker lambda'.
    if (k > 0) {
        for (int x = 0; x < d.tail[0]->order(); ++x) {
            int l = d.boundary[0](x);
            if (d.square.lambda(l) != 0 || d.square.lambda_p(l) != 0)
                throw Error(Errc::AxiomViolation,
                            "boundary of C3 leaves Ker lambda n Ker lambda'",
                            "sqcomplex.iii", {d.tail[0]->label(x)});
        }
        for (size_t j = 1; j < k; ++j)
            for (int x = 0; x < d.tail[j]->order(); ++x)
                if (d.boundary[j - 1](d.boundary[j](x)) != 0)
                    throw Error(Errc::AxiomViolation,
                                "dd != 1 at tail level " + std::to_string(j + 3),
                                "sqcomplex.iii", {d.tail[j]->label(x)});
    }

    // (iv) mu M and nu N act trivially on the tail.
    for (size_t j = 0; j < k; ++j) {
        const auto& act = d.tail_action[j];
        for (int m = 0; m < d.square.M->order(); ++m)
            for (int c = 0; c < d.tail[j]->order(); ++c)
                if (act.act(d.square.mu(m), c) != c)
                    throw Error(Errc::AxiomViolation,
                                "mu(M) does not act trivially on C" +
                                    std::to_string(j + 3),
                                "sqcomplex.iv",
                                {d.square.M->label(m), d.tail[j]->label(c)});
        for (int n = 0; n < d.square.N->order(); ++n)
            for (int c = 0; c < d.tail[j]->order(); ++c)
                if (act.act(d.square.nu(n), c) != c)
                    throw Error(Errc::AxiomViolation,
                                "nu(N) does not act trivially on C" +
                                    std::to_string(j + 3),
                                "sqcomplex.iv",
                                {d.square.N->label(n), d.tail[j]->label(c)});
    }

    // (v) boundaries are equivariant.
    for (size_t j = 0; j < k; ++j) {
        const auto& act = d.tail_action[j];
        for (int p = 0; p < d.square.P->order(); ++p)
            for (int c = 0; c < d.tail[j]->order(); ++c) {
                int lhs = d.boundary[j](act.act(p, c));
                int rhs = j == 0 ? d.square.act_l.act(p, d.boundary[j](c))
                                 : d.tail_action[j - 1].act(p, d.boundary[j](c));
                if (lhs != rhs)
                    throw Error(Errc::AxiomViolation,
                                "tail boundary is not equivariant at level " +
                                    std::to_string(j + 3),
                                "sqcomplex.v",
                                {d.square.P->label(p), d.tail[j]->label(c)});
            }
    }
    return d;
}

}  // namespace h3
