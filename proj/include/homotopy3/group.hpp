#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "homotopy3/config.hpp"
#include "homotopy3/errors.hpp"

namespace h3 {

// ---------------------------------------------------------------------------
// Groups.  Elements are dense indices 0..order-1 with the identity pinned at
// index 0.  Small groups carry a full Cayley table (FinGroup); large carriers
// (simplicial levels, binerve cells) are subgroups of direct products with an
// enumerated element list (TupleGroup) and never materialize a table.
// ---------------------------------------------------------------------------

class Group {
  public:
    virtual ~Group() = default;

    virtual int order() const = 0;
    virtual int mul(int a, int b) const = 0;
    virtual int inverse(int a) const = 0;
    virtual std::string label(int a) const;

    int conj(int g, int x) const { return mul(mul(g, x), inverse(g)); }
    int commutator(int a, int b) const {
        return mul(mul(a, b), mul(inverse(a), inverse(b)));
    }
    int element_order(int a) const;
    bool is_abelian() const;
    // Multiset of element orders, as (order, count) pairs sorted by order.
    std::vector<std::pair<int, int>> order_profile() const;
};

using GroupPtr = std::shared_ptr<const Group>;

class FinGroup final : public Group {
  public:
    // Validates closure, associativity, identity and inverses; relabels the
    // identity to index 0 when the given table has it elsewhere.
    static std::shared_ptr<const FinGroup> make(
        std::vector<std::vector<int>> table,
        std::vector<std::string> labels = {});

    int order() const override { return order_; }
    int mul(int a, int b) const override { return table_[a * order_ + b]; }
    int inverse(int a) const override { return inv_[a]; }
    std::string label(int a) const override;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<int>& flat_table() const { return table_; }
    std::vector<std::vector<int>> table_rows() const;

  private:
    FinGroup() = default;
    int order_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
};

using FinGroupPtr = std::shared_ptr<const FinGroup>;

// Subgroup of a direct product of factor groups, given by an explicit element
// list (tuples of factor indices, sorted lexicographically; the all-zero
// tuple, i.e. the identity, comes first).
class TupleGroup final : public Group {
  public:
    static std::shared_ptr<const TupleGroup> make(
        std::vector<GroupPtr> factors,
        std::vector<std::vector<int>> elements);

    int order() const override { return static_cast<int>(elems_.size()); }
    int mul(int a, int b) const override;
    int inverse(int a) const override;
    std::string label(int a) const override;

    int arity() const { return static_cast<int>(factors_.size()); }
    const std::vector<GroupPtr>& factors() const { return factors_; }
    const std::vector<int>& tuple(int i) const { return elems_[i]; }
    // Index of a tuple, or -1 when it is not an element.
    int index_of(const std::vector<int>& t) const;

  private:
    TupleGroup() = default;
    std::uint64_t key(const std::vector<int>& t) const;

    std::vector<GroupPtr> factors_;
    std::vector<std::vector<int>> elems_;
    std::vector<std::uint64_t> radix_;  // mixed-radix weights for hashing
    std::unordered_map<std::uint64_t, int> index_;
    mutable std::vector<int> inv_cache_;
};

using TupleGroupPtr = std::shared_ptr<const TupleGroup>;

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

struct Hom {
    GroupPtr src;
    GroupPtr dst;
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }
    bool is_endo() const { return src == dst; }
};

// Validates f(0)=0 and f(ab)=f(a)f(b); exact for any size (generator-based
// check beyond the pairwise cap).
Hom make_hom(GroupPtr src, GroupPtr dst, std::vector<int> map);
Hom identity_hom(GroupPtr g);
Hom trivial_hom(GroupPtr src, GroupPtr dst);
// f after g.
Hom compose(const Hom& f, const Hom& g);
bool hom_equal(const Hom& a, const Hom& b);
bool is_surjective(const Hom& h);
bool is_injective(const Hom& h);

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;  // sorted ascending, contains 0

    bool contains(int a) const;
    int order() const { return static_cast<int>(elements.size()); }
};

Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
Subgroup make_subgroup(GroupPtr g, std::vector<int> elements);  // validates closure
Subgroup generated_subgroup(GroupPtr g, std::span<const int> gens);
Subgroup kernel(const Hom& h);
Subgroup image(const Hom& h);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
// Conjugation witness (g, h) with g h g^-1 outside H, if any.
std::optional<std::pair<int, int>> normality_witness(const Subgroup& h);
bool is_normal(const Subgroup& h);
void require_normal(const Subgroup& h);  // throws NotNormal with witness

// Small generating set, greedy by ascending index.
std::vector<int> generating_set(const Group& g);

// A subgroup materialized as a dense FinGroup together with the inclusion.
struct Embedded {
    FinGroupPtr group;
    Hom inclusion;                // group -> parent
    // Index of a parent element within `group`, or -1.
    int index_of_parent(int parent_elt) const;
};

Embedded materialize(const Subgroup& s, const Config& cfg = {});

// ---------------------------------------------------------------------------
// Quotients, semidirect products, actions
// ---------------------------------------------------------------------------

struct Quotient {
    FinGroupPtr group;
    Hom projection;          // parent -> group
    std::vector<int> reps;   // coset representatives (minimal element index)
};

// Cosets are ordered by minimal representative; the identity coset is 0.
Quotient quotient(GroupPtr g, const Subgroup& n, const Config& cfg = {});

// Left action: table[g][x], each row an automorphism of target,
// table[g*g'][x] = table[g][table[g'][x]].
struct GroupAction {
    GroupPtr actor;
    GroupPtr target;
    std::vector<std::vector<int>> table;

    int act(int g, int x) const { return table[g][x]; }
};

GroupAction make_action(GroupPtr actor, GroupPtr target,
                        std::vector<std::vector<int>> table);
GroupAction trivial_action(GroupPtr actor, GroupPtr target);
// Action of g on the materialized subgroup h (which must be normal).
GroupAction conjugation_action(GroupPtr g, const Subgroup& h,
                               const Embedded& carrier);
GroupAction conjugation_action(GroupPtr g, const Subgroup& h);

struct Semidirect {
    FinGroupPtr group;   // pairs (k, q) indexed as k*|Q|+q
    Hom inject_k;
    Hom inject_q;
    Hom project_q;
    int pair_index(int k, int q) const;
    std::pair<int, int> unpair(int idx) const;
};

// (k,q)(k',q') = (k * act(q,k'), q q').
Semidirect semidirect(FinGroupPtr k, FinGroupPtr q, const GroupAction& act);

// Elementary divisors (sorted prime powers) of an abelian group.
std::vector<int> abelian_invariants(const Group& g);

std::string bracket_label(const Group& g, int a);

}  // namespace h3
