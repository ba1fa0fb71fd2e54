#include "homotopy3/xmod.hpp"

namespace h3 {

CrossedModule make_crossed_module(FinGroupPtr m, FinGroupPtr p, Hom boundary,
                                  GroupAction action) {
    if (boundary.src != m || boundary.dst != p)
        throw Error(Errc::BadInput, "crossed module boundary has wrong shape");
    if (action.actor != p || action.target != m)
        throw Error(Errc::BadInput, "crossed module action has wrong shape");

    const int nm = m->order();
    const int np = p->order();
    // C1: boundary(^p m) = p boundary(m) p^-1
    for (int a = 0; a < np; ++a)
        for (int x = 0; x < nm; ++x)
            if (boundary(action.act(a, x)) != p->conj(a, boundary(x)))
                throw Error(Errc::C1Violation,
                            "C1 fails at p=" + p->label(a) +
                                ", m=" + m->label(x),
                            "C1", {p->label(a), m->label(x)});
    // C2: ^{boundary(m)} m' = m m' m^-1
    for (int x = 0; x < nm; ++x)
        for (int y = 0; y < nm; ++y)
            if (action.act(boundary(x), y) != m->conj(x, y))
                throw Error(Errc::C2Violation,
                            "Peiffer identity fails at m=" + m->label(x) +
                                ", m'=" + m->label(y),
                            "C2", {m->label(x), m->label(y)});
    return CrossedModule{std::move(m), std::move(p), std::move(boundary),
                         std::move(action)};
}

CrossedModule inclusion_crossed_module(FinGroupPtr g, const Subgroup& n) {
    require_normal(n);
    Embedded carrier = materialize(n);
    GroupAction act = conjugation_action(g, n, carrier);
    return make_crossed_module(carrier.group, g, carrier.inclusion,
                               std::move(act));
}

CrossedModule module_crossed_module(FinGroupPtr l, FinGroupPtr p,
                                    GroupAction action) {
    for (int a = 0; a < l->order(); ++a)
        for (int b = a + 1; b < l->order(); ++b)
            if (l->mul(a, b) != l->mul(b, a))
                throw Error(Errc::NotAbelian,
                            "module crossed module needs an abelian group: [" +
                                l->label(a) + ", " + l->label(b) + "] != 1",
                            {}, {l->label(a), l->label(b)});
    return make_crossed_module(l, p, trivial_hom(l, p), std::move(action));
}

Cat1Group make_cat1(FinGroupPtr g, Hom s, Hom t) {
    if (s.src != g || s.dst != g || t.src != g || t.dst != g)
        throw Error(Errc::BadInput, "cat1 structure maps must be endomorphisms");
    for (int x = 0; x < g->order(); ++x) {
        if (s.map[t.map[x]] != t.map[x])
            throw Error(Errc::AxiomViolation,
                        "st = t fails at " + g->label(x), "cat1.st=t",
                        {g->label(x)});
        if (t.map[s.map[x]] != s.map[x])
            throw Error(Errc::AxiomViolation,
                        "ts = s fails at " + g->label(x), "cat1.ts=s",
                        {g->label(x)});
    }
    Subgroup ks = kernel(s);
    Subgroup kt = kernel(t);
    for (int a : ks.elements)
        for (int b : kt.elements)
            if (g->commutator(a, b) != 0)
                throw Error(Errc::AxiomViolation,
                            "[Ker s, Ker t] != 1 at (" + g->label(a) + ", " +
                                g->label(b) + ")",
                            "cat1.kernel-commutator",
                            {g->label(a), g->label(b)});
    return Cat1Group{std::move(g), std::move(s), std::move(t)};
}

Cat1Group cat1_from_crossed(const CrossedModule& cm) {
    Semidirect sd = semidirect(cm.M, cm.P, cm.action);
    const int np = cm.P->order();
    const int n = sd.group->order();
    std::vector<int> smap(n), tmap(n);
    for (int idx = 0; idx < n; ++idx) {
        auto [m, p] = sd.unpair(idx);
        smap[idx] = sd.pair_index(0, p);
        tmap[idx] = sd.pair_index(0, cm.P->mul(cm.boundary(m), p));
    }
    (void)np;
    Hom s = make_hom(sd.group, sd.group, std::move(smap));
    Hom t = make_hom(sd.group, sd.group, std::move(tmap));
    return make_cat1(sd.group, std::move(s), std::move(t));
}

CrossedModule crossed_from_cat1(const Cat1Group& c) {
    Embedded m = materialize(kernel(c.s));
    Embedded p = materialize(image(c.s));
    const auto& g = *c.G;

    std::vector<int> bmap(m.group->order());
    for (int i = 0; i < m.group->order(); ++i) {
        int idx = p.index_of_parent(c.t.map[m.inclusion.map[i]]);
        if (idx < 0)
            throw Error(Errc::AxiomViolation,
                        "t(Ker s) escapes Im s at " +
                            g.label(m.inclusion.map[i]),
                        "cat1.boundary");
        bmap[i] = idx;
    }
    Hom boundary = make_hom(m.group, p.group, std::move(bmap));

    std::vector<std::vector<int>> act(p.group->order(),
                                      std::vector<int>(m.group->order()));
    for (int a = 0; a < p.group->order(); ++a)
        for (int x = 0; x < m.group->order(); ++x) {
            int conj = g.conj(p.inclusion.map[a], m.inclusion.map[x]);
            int idx = m.index_of_parent(conj);
            if (idx < 0)
                throw Error(Errc::AxiomViolation,
                            "conjugation by Im s escapes Ker s",
                            "cat1.action");
            act[a][x] = idx;
        }
    return make_crossed_module(m.group, p.group, std::move(boundary),
                               make_action(p.group, m.group, std::move(act)));
}

bool is_xmod_morphism(const CrossedModule& a, const CrossedModule& b,
                      const Hom& f_m, const Hom& f_p) {
    if (f_m.src != a.M || f_m.dst != b.M || f_p.src != a.P || f_p.dst != b.P)
        return false;
    for (int x = 0; x < a.M->order(); ++x)
        if (b.boundary(f_m(x)) != f_p(a.boundary(x))) return false;
    for (int p = 0; p < a.P->order(); ++p)
        for (int x = 0; x < a.M->order(); ++x)
            if (f_m(a.action.act(p, x)) != b.action.act(f_p(p), f_m(x)))
                return false;
    return true;
}

std::optional<XModIso> find_xmod_iso(const CrossedModule& a,
                                     const CrossedModule& b, int iso_bound) {
    if (a.M->order() != b.M->order() || a.P->order() != b.P->order())
        return std::nullopt;
    std::optional<XModIso> found;
    IsoSearchOptions p_opts;
    p_opts.max_order = iso_bound;
    enumerate_isos(a.P, b.P, p_opts, [&](const Hom& f_p) {
        IsoSearchOptions m_opts;
        m_opts.max_order = iso_bound;
        m_opts.accept = [&](int x, int y) {
            return b.boundary(y) == f_p(a.boundary(x));
        };
        for (int p = 0; p < a.P->order(); ++p) {
            int q = f_p(p);
            m_opts.unary.emplace_back(
                [&a, p](int x) { return a.action.act(p, x); },
                [&b, q](int y) { return b.action.act(q, y); });
        }
        auto f_m = find_iso(a.M, b.M, m_opts);
        if (f_m) {
            found = XModIso{*f_m, f_p};
            return false;
        }
        return true;
    });
    return found;
}

std::optional<Hom> find_cat1_iso(const Cat1Group& a, const Cat1Group& b,
                                 int iso_bound) {
    IsoSearchOptions opts;
    opts.max_order = iso_bound;
    opts.unary.emplace_back([&a](int x) { return a.s.map[x]; },
                            [&b](int y) { return b.s.map[y]; });
    opts.unary.emplace_back([&a](int x) { return a.t.map[x]; },
                            [&b](int y) { return b.t.map[y]; });
    return find_iso(a.G, b.G, opts);
}

}  // namespace h3
