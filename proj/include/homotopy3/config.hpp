#pragma once

#include <cstdint>

namespace h3 {

// Size limits shared by the whole pipeline.  `max_order` caps the number of
// elements any constructed group may enumerate (binerve cells, codiagonal
// levels); `dense_cap` caps the order for which a full Cayley table is
// materialized; `iso_bound` caps brute-force isomorphism searches.
struct Config {
    std::int64_t max_order = std::int64_t{1} << 20;
    int dense_cap = 4096;
    int iso_bound = 512;

    // Reads HOMOTOPY3_MAX_ORDER from the environment when set.
    static Config from_env();
};

}  // namespace h3
