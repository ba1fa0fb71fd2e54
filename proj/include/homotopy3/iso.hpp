#pragma once

#include <functional>
#include <optional>

#include "homotopy3/group.hpp"

namespace h3 {

// Backtracking isomorphism search over generator images with order-profile
// prefiltering.  Assignments propagate through inverses, products, and any
// supplied unary-map pairs, so structural constraints prune early.
struct IsoSearchOptions {
    // Pairs (u, u') enforcing f(u(a)) = u'(f(a)).
    std::vector<std::pair<std::function<int(int)>, std::function<int(int)>>>
        unary;
    // Candidate filter: may f map a to b?
    std::function<bool(int, int)> accept;
    // Throw TooLarge when both orders exceed this bound (0 disables).
    int max_order = 512;
};

// First isomorphism found, or nullopt when none exists.
std::optional<Hom> find_iso(GroupPtr a, GroupPtr b,
                            const IsoSearchOptions& opts = {});

// Enumerate isomorphisms; the callback returns false to stop early.
void enumerate_isos(GroupPtr a, GroupPtr b, const IsoSearchOptions& opts,
                    const std::function<bool(const Hom&)>& cb);

// Witness validation: bijective and a homomorphism.
bool is_isomorphism(const Hom& h);

}  // namespace h3
