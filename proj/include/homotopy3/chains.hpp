#pragma once

#include "homotopy3/group.hpp"

namespace h3 {

// Composable-chain levels over a cat1 structure (g, s, t): level q holds the
// q-tuples (a_0..a_{q-1}) with s(a_{j+1}) = t(a_j), as a TupleGroup in G^q;
// level 0 holds Im s as arity-1 tuples.  This is the nerve of the internal
// groupoid and is reused per-column by the binerve.
struct ChainTower {
    GroupPtr base;
    Hom s, t;
    std::vector<GroupPtr> levels;        // may stop early under the size cap
    std::vector<std::vector<Hom>> face;  // face[q][i], 1 <= q < levels.size()
    std::vector<std::vector<Hom>> degen; // degen[q][i], q+1 < levels.size()

    int built_depth() const { return static_cast<int>(levels.size()) - 1; }
};

// Builds levels 0..depth; when `stop_at_cap` the tower simply ends before a
// level whose predicted order exceeds cfg.max_order, otherwise that is a
// SizeBound error.
ChainTower build_chain_tower(GroupPtr g, const Hom& s, const Hom& t, int depth,
                             const Config& cfg, bool stop_at_cap = false);

}  // namespace h3
