#include "homotopy3/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace h3 {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotAssociative: return "NotAssociative";
        case Errc::NoIdentity: return "NoIdentity";
        case Errc::NoInverse: return "NoInverse";
        case Errc::NotClosed: return "NotClosed";
        case Errc::NotHomomorphism: return "NotHomomorphism";
        case Errc::NotAction: return "NotAction";
        case Errc::NotNormal: return "NotNormal";
        case Errc::NotAbelian: return "NotAbelian";
        case Errc::C1Violation: return "C1Violation";
        case Errc::C2Violation: return "C2Violation";
        case Errc::AxiomViolation: return "AxiomViolation";
        case Errc::IdentityViolation: return "IdentityViolation";
        case Errc::DepthTooShallow: return "DepthTooShallow";
        case Errc::MooreTooLong: return "MooreTooLong";
        case Errc::HypothesisFailed: return "HypothesisFailed";
        case Errc::SizeBound: return "SizeBound";
        case Errc::TooLarge: return "TooLarge";
        case Errc::ParseError: return "ParseError";
        case Errc::BadInput: return "BadInput";
    }
    return "Unknown";
}

bool Error::is_axiom_failure() const {
    switch (code_) {
        case Errc::C1Violation:
        case Errc::C2Violation:
        case Errc::AxiomViolation:
        case Errc::IdentityViolation:
        case Errc::HypothesisFailed:
        case Errc::NotAssociative:
        case Errc::NoIdentity:
        case Errc::NoInverse:
        case Errc::NotClosed:
        case Errc::NotHomomorphism:
        case Errc::NotAction:
        case Errc::NotNormal:
        case Errc::NotAbelian:
        case Errc::MooreTooLong:
            return true;
        default:
            return false;
    }
}

Config Config::from_env() {
    Config cfg;
    if (const char* v = std::getenv("HOMOTOPY3_MAX_ORDER")) {
        char* end = nullptr;
        long long n = std::strtoll(v, &end, 10);
        if (end != v && n > 0) cfg.max_order = n;
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// Group base
// ---------------------------------------------------------------------------

std::string Group::label(int a) const { return "g" + std::to_string(a); }

int Group::element_order(int a) const {
    int x = a;
    int n = 1;
    while (x != 0) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

bool Group::is_abelian() const {
    int n = order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<std::pair<int, int>> Group::order_profile() const {
    std::map<int, int> counts;
    for (int a = 0; a < order(); ++a) counts[element_order(a)]++;
    return {counts.begin(), counts.end()};
}

std::string bracket_label(const Group& g, int a) { return g.label(a); }

// ---------------------------------------------------------------------------
// FinGroup
// ---------------------------------------------------------------------------

std::shared_ptr<const FinGroup> FinGroup::make(
    std::vector<std::vector<int>> table, std::vector<std::string> labels) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error(Errc::BadInput, "empty multiplication table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw Error(Errc::BadInput, "multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw Error(Errc::NotClosed,
                            "table entry " + std::to_string(v) +
                                " out of range 0.." + std::to_string(n - 1));
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw Error(Errc::BadInput, "label list does not match order");

    auto name = [&](int a) {
        return labels.empty() ? "g" + std::to_string(a) : labels[a];
    };

    // Locate the two-sided identity.
    int e = -1;
    for (int c = 0; c < n; ++c) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = table[c][a] == a && table[a][c] == a;
        if (ok) {
            e = c;
            break;
        }
    }
    if (e < 0) throw Error(Errc::NoIdentity, "no two-sided identity element");

    if (e != 0) {
        // Swap indices 0 <-> e so the identity sits at 0.
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[0], perm[e]);
        std::vector<std::vector<int>> t2(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                t2[a][b] = perm[table[perm[a]][perm[b]]];
        table = std::move(t2);
        if (!labels.empty()) std::swap(labels[0], labels[e]);
    }

    // Associativity, exhaustively.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error(Errc::NotAssociative,
                                "associativity fails at (" + name(a) + ", " +
                                    name(b) + ", " + name(c) + ")",
                                {}, {name(a), name(b), name(c)});

    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table[a][b] == 0 && table[b][a] == 0) {
                inv[a] = b;
                break;
            }
        }
        if (inv[a] < 0)
            throw Error(Errc::NoInverse, "no two-sided inverse for " + name(a),
                        {}, {name(a)});
    }

    auto g = std::shared_ptr<FinGroup>(new FinGroup());
    g->order_ = n;
    g->table_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g->table_[a * n + b] = table[a][b];
    g->inv_ = std::move(inv);
    g->labels_ = std::move(labels);
    return g;
}

std::string FinGroup::label(int a) const {
    if (!labels_.empty()) return labels_[a];
    return a == 0 ? "1" : "g" + std::to_string(a);
}

std::vector<std::vector<int>> FinGroup::table_rows() const {
    std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b) rows[a][b] = table_[a * order_ + b];
    return rows;
}

// ---------------------------------------------------------------------------
// TupleGroup
// ---------------------------------------------------------------------------

std::shared_ptr<const TupleGroup> TupleGroup::make(
    std::vector<GroupPtr> factors, std::vector<std::vector<int>> elements) {
    if (factors.empty())
        throw Error(Errc::BadInput, "tuple group needs at least one factor");
    auto g = std::shared_ptr<TupleGroup>(new TupleGroup());
    g->factors_ = std::move(factors);

    // Mixed-radix weights; orders in the catalog always fit in 64 bits.
    g->radix_.resize(g->factors_.size());
    std::uint64_t w = 1;
    for (size_t i = g->factors_.size(); i-- > 0;) {
        g->radix_[i] = w;
        std::uint64_t o = static_cast<std::uint64_t>(g->factors_[i]->order());
        if (w > UINT64_MAX / std::max<std::uint64_t>(o, 1))
            throw Error(Errc::SizeBound, "tuple key space exceeds 64 bits");
        w *= o;
    }

    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    g->elems_ = std::move(elements);
    if (g->elems_.empty() ||
        g->elems_[0] != std::vector<int>(g->factors_.size(), 0))
        throw Error(Errc::BadInput, "tuple group must contain the identity");
    g->index_.reserve(g->elems_.size() * 2);
    for (size_t i = 0; i < g->elems_.size(); ++i) {
        if (g->elems_[i].size() != g->factors_.size())
            throw Error(Errc::BadInput, "tuple arity mismatch");
        g->index_[g->key(g->elems_[i])] = static_cast<int>(i);
    }
    g->inv_cache_.assign(g->elems_.size(), -1);
    return g;
}

std::uint64_t TupleGroup::key(const std::vector<int>& t) const {
    std::uint64_t k = 0;
    for (size_t i = 0; i < t.size(); ++i)
        k += radix_[i] * static_cast<std::uint64_t>(t[i]);
    return k;
}

int TupleGroup::index_of(const std::vector<int>& t) const {
    auto it = index_.find(key(t));
    return it == index_.end() ? -1 : it->second;
}

int TupleGroup::mul(int a, int b) const {
    const auto& ta = elems_[a];
    const auto& tb = elems_[b];
    std::uint64_t k = 0;
    for (size_t i = 0; i < ta.size(); ++i)
        k += radix_[i] *
             static_cast<std::uint64_t>(factors_[i]->mul(ta[i], tb[i]));
    auto it = index_.find(k);
    if (it == index_.end())
        throw Error(Errc::NotClosed, "tuple group is not closed under product");
    return it->second;
}

int TupleGroup::inverse(int a) const {
    int cached = inv_cache_[a];
    if (cached >= 0) return cached;
    const auto& t = elems_[a];
    std::uint64_t k = 0;
    for (size_t i = 0; i < t.size(); ++i)
        k += radix_[i] * static_cast<std::uint64_t>(factors_[i]->inverse(t[i]));
    auto it = index_.find(k);
    if (it == index_.end())
        throw Error(Errc::NotClosed, "tuple group is not closed under inverse");
    inv_cache_[a] = it->second;
    return it->second;
}

std::string TupleGroup::label(int a) const {
    const auto& t = elems_[a];
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << factors_[i]->label(t[i]);
    }
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Homs
// ---------------------------------------------------------------------------

namespace {
constexpr int kPairCheckCap = 2048;
}

Hom make_hom(GroupPtr src, GroupPtr dst, std::vector<int> map) {
    const int n = src->order();
    if (static_cast<int>(map.size()) != n)
        throw Error(Errc::BadInput, "hom map length does not match source order");
    for (int v : map)
        if (v < 0 || v >= dst->order())
            throw Error(Errc::BadInput, "hom map entry out of range");
    if (map[0] != 0)
        throw Error(Errc::NotHomomorphism, "hom does not fix the identity", {},
                    {src->label(0)});

    auto check_pair = [&](int a, int b) {
        if (map[src->mul(a, b)] != dst->mul(map[a], map[b]))
            throw Error(Errc::NotHomomorphism,
                        "f(ab) != f(a)f(b) at a=" + src->label(a) +
                            ", b=" + src->label(b),
                        {}, {src->label(a), src->label(b)});
    };

    if (n <= kPairCheckCap) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) check_pair(a, b);
    } else {
        // f(sb)=f(s)f(b) for generators s and all b implies the hom property.
        for (int s : generating_set(*src))
            for (int b = 0; b < n; ++b) check_pair(s, b);
    }
    return Hom{std::move(src), std::move(dst), std::move(map)};
}

Hom identity_hom(GroupPtr g) {
    std::vector<int> m(g->order());
    std::iota(m.begin(), m.end(), 0);
    return Hom{g, g, std::move(m)};
}

Hom trivial_hom(GroupPtr src, GroupPtr dst) {
    std::vector<int> m(src->order(), 0);
    return Hom{std::move(src), std::move(dst), std::move(m)};
}

Hom compose(const Hom& f, const Hom& g) {
    std::vector<int> m(g.src->order());
    for (int a = 0; a < g.src->order(); ++a) m[a] = f.map[g.map[a]];
    return Hom{g.src, f.dst, std::move(m)};
}

bool hom_equal(const Hom& a, const Hom& b) { return a.map == b.map; }

bool is_surjective(const Hom& h) {
    std::vector<char> hit(h.dst->order(), 0);
    int count = 0;
    for (int v : h.map)
        if (!hit[v]) {
            hit[v] = 1;
            ++count;
        }
    return count == h.dst->order();
}

bool is_injective(const Hom& h) {
    std::vector<char> hit(h.dst->order(), 0);
    for (int v : h.map) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

bool Subgroup::contains(int a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
}

Subgroup trivial_subgroup(GroupPtr g) { return Subgroup{std::move(g), {0}}; }

Subgroup full_subgroup(GroupPtr g) {
    std::vector<int> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{std::move(g), std::move(all)};
}

Subgroup make_subgroup(GroupPtr g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    Subgroup s{g, elements};
    if (elements.empty() || elements[0] != 0)
        throw Error(Errc::NotClosed, "subgroup must contain the identity");
    for (int a : elements) {
        if (!s.contains(g->inverse(a)))
            throw Error(Errc::NotClosed,
                        "subgroup not closed under inverse at " + g->label(a));
        for (int b : elements)
            if (!s.contains(g->mul(a, b)))
                throw Error(Errc::NotClosed,
                            "subgroup not closed under product at " +
                                g->label(a) + ", " + g->label(b));
    }
    return s;
}

namespace {
// Orbit closure: products of generators reach the whole subgroup, finiteness
// supplies inverses.
std::vector<int> closure(const Group& g, std::span<const int> gens,
                         std::vector<char>& in, std::vector<int>& elems) {
    std::vector<int> frontier = elems;
    size_t next = 0;
    while (next < frontier.size()) {
        int x = frontier[next++];
        for (int s : gens) {
            int z = g.mul(x, s);
            if (!in[z]) {
                in[z] = 1;
                elems.push_back(z);
                frontier.push_back(z);
            }
        }
    }
    return elems;
}
}  // namespace

Subgroup generated_subgroup(GroupPtr g, std::span<const int> gens) {
    std::vector<char> in(g->order(), 0);
    in[0] = 1;
    std::vector<int> elems{0};
    closure(*g, gens, in, elems);
    std::sort(elems.begin(), elems.end());
    return Subgroup{std::move(g), std::move(elems)};
}

Subgroup kernel(const Hom& h) {
    std::vector<int> elems;
    for (int a = 0; a < h.src->order(); ++a)
        if (h.map[a] == 0) elems.push_back(a);
    return Subgroup{h.src, std::move(elems)};
}

Subgroup image(const Hom& h) {
    std::vector<char> hit(h.dst->order(), 0);
    std::vector<int> elems;
    for (int v : h.map)
        if (!hit[v]) {
            hit[v] = 1;
            elems.push_back(v);
        }
    std::sort(elems.begin(), elems.end());
    return Subgroup{h.dst, std::move(elems)};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (a.parent != b.parent)
        throw Error(Errc::BadInput, "intersection of subgroups of different groups");
    std::vector<int> elems;
    std::set_intersection(a.elements.begin(), a.elements.end(),
                          b.elements.begin(), b.elements.end(),
                          std::back_inserter(elems));
    return Subgroup{a.parent, std::move(elems)};
}

std::optional<std::pair<int, int>> normality_witness(const Subgroup& h) {
    const auto& g = *h.parent;
    // Conjugating by a generating set suffices.
    std::vector<int> gens;
    if (g.order() <= 64) {
        gens.resize(g.order());
        std::iota(gens.begin(), gens.end(), 0);
    } else {
        gens = generating_set(g);
    }
    for (int x : gens)
        for (int a : h.elements)
            if (!h.contains(g.conj(x, a))) return std::make_pair(x, a);
    return std::nullopt;
}

bool is_normal(const Subgroup& h) { return !normality_witness(h).has_value(); }

void require_normal(const Subgroup& h) {
    if (auto w = normality_witness(h)) {
        const auto& g = *h.parent;
        throw Error(Errc::NotNormal,
                    "subgroup is not normal: " + g.label(w->first) + " * " +
                        g.label(w->second) + " * " + g.label(w->first) +
                        "^-1 escapes",
                    {}, {g.label(w->first), g.label(w->second)});
    }
}

std::vector<int> generating_set(const Group& g) {
    std::vector<char> in(g.order(), 0);
    in[0] = 1;
    std::vector<int> gens;
    std::vector<int> elems{0};
    int scan = 1;
    while (static_cast<int>(elems.size()) < g.order()) {
        while (scan < g.order() && in[scan]) ++scan;
        gens.push_back(scan);
        in[scan] = 1;
        elems.push_back(scan);
        closure(g, gens, in, elems);
    }
    return gens;
}

// ---------------------------------------------------------------------------
// Materialization
// ---------------------------------------------------------------------------

int Embedded::index_of_parent(int parent_elt) const {
    const auto& m = inclusion.map;
    auto it = std::lower_bound(m.begin(), m.end(), parent_elt);
    if (it == m.end() || *it != parent_elt) return -1;
    return static_cast<int>(it - m.begin());
}

Embedded materialize(const Subgroup& s, const Config& cfg) {
    const int n = s.order();
    if (n > cfg.dense_cap)
        throw Error(Errc::SizeBound,
                    "subgroup of order " + std::to_string(n) +
                        " exceeds the dense materialization cap " +
                        std::to_string(cfg.dense_cap));
    const auto& parent = *s.parent;
    auto pos = [&](int p) {
        auto it = std::lower_bound(s.elements.begin(), s.elements.end(), p);
        if (it == s.elements.end() || *it != p)
            throw Error(Errc::NotClosed, "subgroup not closed under product");
        return static_cast<int>(it - s.elements.begin());
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[a][b] = pos(parent.mul(s.elements[a], s.elements[b]));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) labels[a] = parent.label(s.elements[a]);
    auto grp = FinGroup::make(std::move(table), std::move(labels));
    Hom incl{grp, s.parent, s.elements};
    return Embedded{std::move(grp), std::move(incl)};
}

// ---------------------------------------------------------------------------
// Quotient
// ---------------------------------------------------------------------------

Quotient quotient(GroupPtr g, const Subgroup& n, const Config& cfg) {
    if (n.parent != g)
        throw Error(Errc::BadInput, "quotient by a subgroup of another group");
    require_normal(n);
    const int order = g->order();
    std::vector<int> coset_of(order, -1);
    std::vector<int> reps;
    for (int a = 0; a < order; ++a) {
        if (coset_of[a] >= 0) continue;
        // a is minimal in its coset since we scan ascending.
        int c = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int h : n.elements) coset_of[g->mul(a, h)] = c;
        if (coset_of[a] != c)
            throw Error(Errc::NotClosed, "coset enumeration failed");
    }
    const int m = static_cast<int>(reps.size());
    if (m > cfg.dense_cap)
        throw Error(Errc::SizeBound, "quotient of order " + std::to_string(m) +
                                          " exceeds the dense cap");
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[a][b] = coset_of[g->mul(reps[a], reps[b])];
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a) labels[a] = "[" + g->label(reps[a]) + "]";
    auto q = FinGroup::make(std::move(table), std::move(labels));
    Hom proj{g, q, coset_of};
    return Quotient{q, std::move(proj), std::move(reps)};
}

// ---------------------------------------------------------------------------
// Actions
// ---------------------------------------------------------------------------

GroupAction make_action(GroupPtr actor, GroupPtr target,
                        std::vector<std::vector<int>> table) {
    const int na = actor->order();
    const int nt = target->order();
    if (static_cast<int>(table.size()) != na)
        throw Error(Errc::BadInput, "action table has wrong actor dimension");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != nt)
            throw Error(Errc::BadInput, "action table has wrong target dimension");
        for (int v : row)
            if (v < 0 || v >= nt)
                throw Error(Errc::BadInput, "action table entry out of range");
    }
    for (int x = 0; x < nt; ++x)
        if (table[0][x] != x)
            throw Error(Errc::NotAction, "identity must act trivially", {},
                        {target->label(x)});
    for (int a = 0; a < na; ++a) {
        const auto& row = table[a];
        std::vector<char> hit(nt, 0);
        for (int v : row) {
            if (hit[v])
                throw Error(Errc::NotAction,
                            "action of " + actor->label(a) + " is not bijective",
                            {}, {actor->label(a)});
            hit[v] = 1;
        }
        for (int x = 0; x < nt; ++x)
            for (int y = 0; y < nt; ++y)
                if (row[target->mul(x, y)] != target->mul(row[x], row[y]))
                    throw Error(Errc::NotAction,
                                "action of " + actor->label(a) +
                                    " is not an automorphism at (" +
                                    target->label(x) + ", " + target->label(y) +
                                    ")",
                                {},
                                {actor->label(a), target->label(x),
                                 target->label(y)});
    }
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            int ab = actor->mul(a, b);
            for (int x = 0; x < nt; ++x)
                if (table[ab][x] != table[a][table[b][x]])
                    throw Error(Errc::NotAction,
                                "action is not compatible with the product at (" +
                                    actor->label(a) + ", " + actor->label(b) +
                                    ")",
                                {}, {actor->label(a), actor->label(b),
                                     target->label(x)});
        }
    return GroupAction{std::move(actor), std::move(target), std::move(table)};
}

GroupAction trivial_action(GroupPtr actor, GroupPtr target) {
    std::vector<int> row(target->order());
    std::iota(row.begin(), row.end(), 0);
    std::vector<std::vector<int>> table(actor->order(), row);
    return GroupAction{std::move(actor), std::move(target), std::move(table)};
}

GroupAction conjugation_action(GroupPtr g, const Subgroup& h,
                               const Embedded& carrier) {
    require_normal(h);
    std::vector<std::vector<int>> table(g->order(),
                                        std::vector<int>(carrier.group->order()));
    for (int a = 0; a < g->order(); ++a)
        for (int x = 0; x < carrier.group->order(); ++x) {
            int conj = g->conj(a, carrier.inclusion.map[x]);
            int idx = carrier.index_of_parent(conj);
            if (idx < 0)
                throw Error(Errc::NotNormal,
                            "conjugation escapes the subgroup at " +
                                g->label(a));
            table[a][x] = idx;
        }
    return GroupAction{g, carrier.group, std::move(table)};
}

GroupAction conjugation_action(GroupPtr g, const Subgroup& h) {
    return conjugation_action(g, h, materialize(h));
}

// ---------------------------------------------------------------------------
// Semidirect product
// ---------------------------------------------------------------------------

int Semidirect::pair_index(int k, int q) const {
    return k * project_q.dst->order() + q;
}

std::pair<int, int> Semidirect::unpair(int idx) const {
    int qo = project_q.dst->order();
    return {idx / qo, idx % qo};
}

Semidirect semidirect(FinGroupPtr k, FinGroupPtr q, const GroupAction& act) {
    if (act.actor->order() != q->order() || act.target->order() != k->order())
        throw Error(Errc::BadInput, "semidirect action has wrong shape");
    const int nk = k->order();
    const int nq = q->order();
    const int n = nk * nq;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < nk; ++a)
        for (int b = 0; b < nq; ++b)
            for (int c = 0; c < nk; ++c)
                for (int d = 0; d < nq; ++d) {
                    int kk = k->mul(a, act.act(b, c));
                    int qq = q->mul(b, d);
                    table[a * nq + b][c * nq + d] = kk * nq + qq;
                }
    std::vector<std::string> labels(n);
    for (int a = 0; a < nk; ++a)
        for (int b = 0; b < nq; ++b)
            labels[a * nq + b] = "(" + k->label(a) + "," + q->label(b) + ")";
    auto g = FinGroup::make(std::move(table), std::move(labels));

    std::vector<int> inj_k(nk), inj_q(nq), proj(n);
    for (int a = 0; a < nk; ++a) inj_k[a] = a * nq;
    for (int b = 0; b < nq; ++b) inj_q[b] = b;
    for (int i = 0; i < n; ++i) proj[i] = i % nq;
    Semidirect result;
    result.group = g;
    result.inject_k = make_hom(k, g, std::move(inj_k));
    result.inject_q = make_hom(q, g, std::move(inj_q));
    result.project_q = make_hom(g, q, std::move(proj));
    return result;
}

// ---------------------------------------------------------------------------
// Abelian invariants
// ---------------------------------------------------------------------------

std::vector<int> abelian_invariants(const Group& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.mul(a, b) != g.mul(b, a))
                throw Error(Errc::NotAbelian,
                            "group is not abelian: [" + g.label(a) + ", " +
                                g.label(b) + "] != 1",
                            {}, {g.label(a), g.label(b)});
    if (n == 1) return {};

    std::vector<int> primes;
    int m = n;
    for (int p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            if (primes.empty() || primes.back() != p) primes.push_back(p);
            m /= p;
        }
    if (m > 1) primes.push_back(m);

    std::vector<int> orders(n);
    for (int a = 0; a < n; ++a) orders[a] = g.element_order(a);

    std::vector<int> divisors;
    for (int p : primes) {
        // #elements with x^(p^k) = 1 equals p^{sum_i min(lambda_i, k)} for the
        // p-primary type (lambda_1 >= lambda_2 >= ...); recover the lambdas.
        auto count_killed = [&](long long pk) {
            int c = 0;
            for (int a = 0; a < n; ++a)
                if (pk % orders[a] == 0) ++c;
            return c;
        };
        std::vector<int> sums;  // sums[k-1] = sum_i min(lambda_i, k)
        long long pk = 1;
        while (true) {
            pk *= p;
            int c = count_killed(pk);
            int e = 0;
            while (c > 1) {
                c /= p;
                ++e;
            }
            sums.push_back(e);
            if (!sums.empty() && sums.size() >= 2 &&
                sums[sums.size() - 1] == sums[sums.size() - 2])
                break;
            if (pk > n) break;
        }
        // lambda multiset from the partial sums.
        std::vector<int> diffs;
        int prev = 0;
        for (int s : sums) {
            diffs.push_back(s - prev);
            prev = s;
        }
        // diffs[k-1] = #{i : lambda_i >= k}
        for (size_t k = 0; k < diffs.size(); ++k) {
            int at_least_k = diffs[k];
            int at_least_k1 = k + 1 < diffs.size() ? diffs[k + 1] : 0;
            int exactly_k = at_least_k - at_least_k1;
            long long val = 1;
            for (size_t i = 0; i <= k; ++i) val *= p;
            for (int i = 0; i < exactly_k; ++i)
                divisors.push_back(static_cast<int>(val));
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace h3
