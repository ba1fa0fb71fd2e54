#include "homotopy3/iso.hpp"

#include <algorithm>

namespace h3 {

namespace {

class IsoSearch {
  public:
    IsoSearch(const Group& a, const Group& b, const IsoSearchOptions& opts,
              const std::function<bool(const Hom&)>& cb, GroupPtr pa,
              GroupPtr pb)
        : a_(a), b_(b), opts_(opts), cb_(cb), pa_(std::move(pa)),
          pb_(std::move(pb)) {
        n_ = a_.order();
        img_.assign(n_, -1);
        used_.assign(n_, 0);
        orders_a_.resize(n_);
        orders_b_.resize(n_);
        for (int x = 0; x < n_; ++x) {
            orders_a_[x] = a_.element_order(x);
            orders_b_[x] = b_.element_order(x);
        }
        gens_ = generating_set(a_);
    }

    // Returns false when the callback asked to stop.
    bool run() {
        if (!assign(0, 0)) return true;
        return extend(0);
    }

  private:
    bool extend(size_t gi) {
        while (gi < gens_.size() && img_[gens_[gi]] >= 0) ++gi;
        if (gi == gens_.size()) return emit();
        int g = gens_[gi];
        for (int b = 0; b < n_; ++b) {
            if (used_[b] || orders_b_[b] != orders_a_[g]) continue;
            size_t mark = trail_.size();
            if (assign(g, b)) {
                if (!extend(gi + 1)) return false;
            }
            rollback(mark);
        }
        return true;
    }

    bool emit() {
        for (int x = 0; x < n_; ++x)
            if (img_[x] < 0) return true;  // generators missed some element
        Hom h{pa_, pb_, img_};
        return cb_(h);
    }

    // Assign f(x)=y and propagate; false on conflict (trail records changes).
    bool assign(int x, int y) {
        queue_.clear();
        if (!push(x, y)) return false;
        size_t qi = 0;
        while (qi < queue_.size()) {
            auto [px, py] = queue_[qi++];
            if (!propagate(px, py)) return false;
        }
        return true;
    }

    bool push(int x, int y) {
        if (img_[x] >= 0) return img_[x] == y;
        if (used_[y]) return false;
        if (orders_a_[x] != orders_b_[y]) return false;
        if (opts_.accept && !opts_.accept(x, y)) return false;
        img_[x] = y;
        used_[y] = 1;
        trail_.push_back(x);
        assigned_.push_back(x);
        queue_.emplace_back(x, y);
        return true;
    }

    bool propagate(int x, int y) {
        if (!push(a_.inverse(x), b_.inverse(y))) return false;
        for (const auto& [u, u2] : opts_.unary)
            if (!push(u(x), u2(y))) return false;
        // Close under products with everything already assigned.
        for (size_t i = 0; i < assigned_.size(); ++i) {
            int z = assigned_[i];
            int fz = img_[z];
            if (fz < 0) continue;
            if (!push(a_.mul(x, z), b_.mul(y, fz))) return false;
            if (!push(a_.mul(z, x), b_.mul(fz, y))) return false;
        }
        return true;
    }

    void rollback(size_t mark) {
        while (trail_.size() > mark) {
            int x = trail_.back();
            trail_.pop_back();
            used_[img_[x]] = 0;
            img_[x] = -1;
            assigned_.pop_back();
        }
    }

    const Group& a_;
    const Group& b_;
    const IsoSearchOptions& opts_;
    const std::function<bool(const Hom&)>& cb_;
    GroupPtr pa_, pb_;
    int n_ = 0;
    std::vector<int> img_;
    std::vector<char> used_;
    std::vector<int> orders_a_, orders_b_;
    std::vector<int> gens_;
    std::vector<int> trail_;
    std::vector<int> assigned_;
    std::vector<std::pair<int, int>> queue_;
};

bool profiles_match(const Group& a, const Group& b) {
    return a.order_profile() == b.order_profile();
}

}  // namespace

void enumerate_isos(GroupPtr a, GroupPtr b, const IsoSearchOptions& opts,
                    const std::function<bool(const Hom&)>& cb) {
    if (a->order() != b->order()) return;
    if (opts.max_order > 0 && a->order() > opts.max_order)
        throw Error(Errc::TooLarge,
                    "isomorphism search beyond the configured bound " +
                        std::to_string(opts.max_order));
    if (!profiles_match(*a, *b)) return;
    IsoSearch search(*a, *b, opts, cb, a, b);
    search.run();
}

std::optional<Hom> find_iso(GroupPtr a, GroupPtr b,
                            const IsoSearchOptions& opts) {
    std::optional<Hom> found;
    enumerate_isos(a, b, opts, [&](const Hom& h) {
        found = h;
        return false;
    });
    return found;
}

bool is_isomorphism(const Hom& h) {
    if (h.src->order() != h.dst->order()) return false;
    if (!is_injective(h)) return false;
    try {
        make_hom(h.src, h.dst, h.map);
    } catch (const Error&) {
        return false;
    }
    return true;
}

}  // namespace h3
