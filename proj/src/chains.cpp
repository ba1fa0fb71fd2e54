#include "homotopy3/chains.hpp"

namespace h3 {

ChainTower build_chain_tower(GroupPtr g, const Hom& s, const Hom& t, int depth,
                             const Config& cfg, bool stop_at_cap) {
    ChainTower tower;
    tower.base = g;
    tower.s = s;
    tower.t = t;

    const std::int64_t n_obj = image(s).order();
    const std::int64_t n_ker = g->order() / std::max<std::int64_t>(n_obj, 1);

    auto predicted = [&](int q) {
        std::int64_t size = n_obj;
        for (int i = 0; i < q; ++i) {
            if (size > cfg.max_order) return size;
            size *= n_ker;
        }
        return size;
    };

    // Fibers of s, for extending chains.
    std::vector<std::vector<int>> fiber_s(g->order());
    for (int a = 0; a < g->order(); ++a) fiber_s[s(a)].push_back(a);

    std::vector<GroupPtr> gfac{g};

    for (int q = 0; q <= depth; ++q) {
        if (predicted(q) > cfg.max_order) {
            if (stop_at_cap) break;
            throw Error(Errc::SizeBound,
                        "chain level " + std::to_string(q) + " would have " +
                            std::to_string(predicted(q)) +
                            " elements, beyond the cap " +
                            std::to_string(cfg.max_order));
        }
        std::vector<std::vector<int>> elems;
        if (q == 0) {
            for (int a : image(s).elements) elems.push_back({a});
            tower.levels.push_back(TupleGroup::make(gfac, std::move(elems)));
        } else if (q == 1) {
            for (int a = 0; a < g->order(); ++a) elems.push_back({a});
            tower.levels.push_back(TupleGroup::make(gfac, std::move(elems)));
        } else {
            auto prev =
                std::static_pointer_cast<const TupleGroup>(tower.levels[q - 1]);
            for (int i = 0; i < prev->order(); ++i) {
                const auto& c = prev->tuple(i);
                for (int a : fiber_s[t(c.back())]) {
                    std::vector<int> next = c;
                    next.push_back(a);
                    elems.push_back(std::move(next));
                }
            }
            tower.levels.push_back(TupleGroup::make(
                std::vector<GroupPtr>(q, g), std::move(elems)));
        }
        if (tower.levels.back()->order() != predicted(q))
            throw Error(Errc::BadInput,
                        "chain level size disagrees with |Ker s|^q |Im s|");
    }

    const int built = tower.built_depth();
    tower.face.resize(built + 1);
    tower.degen.resize(built + 1);

    auto tup = [&](int q) {
        return std::static_pointer_cast<const TupleGroup>(tower.levels[q]);
    };
    auto push_map = [&](std::vector<Hom>& out, int from_q, int to_q,
                        const std::function<std::vector<int>(
                            const std::vector<int>&)>& fn) {
        auto from = tup(from_q);
        auto to = tup(to_q);
        std::vector<int> map(from->order());
        for (int i = 0; i < from->order(); ++i) {
            int idx = to->index_of(fn(from->tuple(i)));
            if (idx < 0)
                throw Error(Errc::BadInput, "chain operator leaves the tower");
            map[i] = idx;
        }
        out.push_back(make_hom(tower.levels[from_q], tower.levels[to_q],
                               std::move(map)));
    };

    for (int q = 1; q <= built; ++q) {
        for (int i = 0; i <= q; ++i) {
            push_map(tower.face[q], q, q - 1,
                     [&, i, q](const std::vector<int>& c) -> std::vector<int> {
                         if (q == 1)
                             return {i == 0 ? t(c[0]) : s(c[0])};
                         std::vector<int> r;
                         r.reserve(q - 1);
                         if (i == 0) {
                             r.assign(c.begin() + 1, c.end());
                         } else if (i == q) {
                             r.assign(c.begin(), c.end() - 1);
                         } else {
                             r.assign(c.begin(), c.end());
                             int comp = g->mul(g->mul(c[i], g->inverse(s(c[i]))),
                                               c[i - 1]);
                             r[i - 1] = comp;
                             r.erase(r.begin() + i);
                         }
                         return r;
                     });
        }
    }
    for (int q = 0; q + 1 <= built; ++q) {
        for (int i = 0; i <= q; ++i) {
            push_map(tower.degen[q], q, q + 1,
                     [&, i, q](const std::vector<int>& c) -> std::vector<int> {
                         std::vector<int> r = c;
                         if (q == 0) return r;  // objects include as 1-chains
                         if (i == 0)
                             r.insert(r.begin(), s(c[0]));
                         else
                             r.insert(r.begin() + i, t(c[i - 1]));
                         return r;
                     });
        }
    }
    return tower;
}

}  // namespace h3
