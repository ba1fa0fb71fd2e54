#pragma once

#include <array>
#include <optional>

#include "homotopy3/chains.hpp"
#include "homotopy3/simp.hpp"
#include "homotopy3/xsq.hpp"

namespace h3 {

// Truncated bisimplicial group.  Cells may be absent when their order exceeds
// the size cap; operator maps are stored only between present cells.
struct BisimpGroup {
    int depth = 0;
    std::vector<std::vector<std::optional<GroupPtr>>> cells;      // [p][q]
    std::vector<std::vector<std::int64_t>> cell_order;            // intended
    std::vector<std::vector<std::vector<Hom>>> face_h;   // [p][q][i] -> (p-1,q)
    std::vector<std::vector<std::vector<Hom>>> face_v;   // [p][q][j] -> (p,q-1)
    std::vector<std::vector<std::vector<Hom>>> degen_h;  // [p][q][i] -> (p+1,q)
    std::vector<std::vector<std::vector<Hom>>> degen_v;  // [p][q][j] -> (p,q+1)

    bool has_cell(int p, int q) const {
        return p >= 0 && q >= 0 && p <= depth && q <= depth &&
               cells[p][q].has_value();
    }
    GroupPtr cell(int p, int q) const;  // SizeBound when absent
    void init(int depth);
};

// Verifies the simplicial identities of every (present) row and column and
// that horizontal operators commute with vertical ones.
void validate_bisimp(const BisimpGroup& x);

BisimpGroup constant_bisimp(GroupPtr g, int depth);
// Rows all equal to `s` (vertical operators are identities).
BisimpGroup bisimp_from_rows(const SimplicialGroup& s);

// ---------------------------------------------------------------------------
// Binerve of a crossed square: the nerve of the associated cat2-group taken
// in both directions.  Column towers are built lazily under the size cap;
// |X_{p,q}| = |L|^{pq} |N|^p |M|^q |P| is asserted for every built cell.
// ---------------------------------------------------------------------------

struct Binerve {
    CrossedSquare square;
    Cat2Group cat2;
    int depth = 0;
    Config cfg;
    ChainTower horizontal;              // chains over (G, s1, t1)
    std::vector<Hom> vs, vt;            // s2, t2 restricted to each Y_p
    std::vector<ChainTower> vertical;   // vertical[p]: chains over Y_p

    bool cell_built(int p, int q) const;
    GroupPtr cell(int p, int q) const;
    std::int64_t expected_cell_order(int p, int q) const;
    // Horizontal operator as a map between built cells.
    Hom horizontal_face(int p, int q, int i) const;
    Hom horizontal_degen(int p, int q, int i) const;
    // Materialized window; band >= 0 keeps only cells with p+q <= band.
    BisimpGroup window(int band = -1) const;
};

Binerve make_binerve(const CrossedSquare& sq, int depth, const Config& cfg = {});

// Artin-Mazur codiagonal: level n is the subgroup of prod X_{p,n-p} cut out
// by d_0^v x_p = d^h_{p+1} x_{p+1}, enumerated through the fibers of the last
// horizontal face.
SimplicialGroup codiagonal(const BisimpGroup& x, int k);
SimplicialGroup diagonal(const BisimpGroup& x, int k);

struct LengthBoundCheck {
    std::string what;
    bool checked = false;  // false: skipped for size
    bool ok = false;
};

struct LengthBoundReport {
    int m = 0;
    std::vector<LengthBoundCheck> hypotheses;
    std::vector<LengthBoundCheck> conclusions;
    bool all_ok() const;
};

// Verifies the hypotheses (vertical Moore length <= 1, horizontal <= m-1)
// where the cells are present, then checks N(codiagonal)_n = 1 for
// m+1 <= n <= depth.  A verified-and-false hypothesis throws HypothesisFailed.
LengthBoundReport check_length_bound(const BisimpGroup& x, int m,
                                     const Config& cfg = {});

// Homotopy groups of the diagonal, streaming through the column towers when
// the (3,3) cell is too large to enumerate.
std::array<HomotopyGroup, 3> pi_diagonal(const Binerve& b,
                                         const Config& cfg = {});

}  // namespace h3
