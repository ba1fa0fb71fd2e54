#pragma once

#include <optional>

#include "homotopy3/group.hpp"
#include "homotopy3/iso.hpp"

namespace h3 {

// Crossed module: boundary M -> P with a P-action on M satisfying
//   C1:  boundary(^p m) = p boundary(m) p^-1
//   C2:  ^{boundary(m)} m' = m m' m^-1   (Peiffer identity)
struct CrossedModule {
    FinGroupPtr M;
    FinGroupPtr P;
    Hom boundary;       // M -> P
    GroupAction action; // P on M
};

CrossedModule make_crossed_module(FinGroupPtr m, FinGroupPtr p, Hom boundary,
                                  GroupAction action);
// Normal subgroup inclusion with the conjugation action.
CrossedModule inclusion_crossed_module(FinGroupPtr g, const Subgroup& n);
// Abelian L with trivial boundary; any P-action works.
CrossedModule module_crossed_module(FinGroupPtr l, FinGroupPtr p,
                                    GroupAction action);

// cat1 group: endomorphisms with s t = t, t s = s and [Ker s, Ker t] = 1.
struct Cat1Group {
    FinGroupPtr G;
    Hom s;
    Hom t;
};

Cat1Group make_cat1(FinGroupPtr g, Hom s, Hom t);
Cat1Group cat1_from_crossed(const CrossedModule& cm);
CrossedModule crossed_from_cat1(const Cat1Group& c);

// Morphism check shared with the crossed-square axioms: commuting square plus
// equivariance fM(^p m) = ^{fP(p)} fM(m).
bool is_xmod_morphism(const CrossedModule& a, const CrossedModule& b,
                      const Hom& f_m, const Hom& f_p);

struct XModIso {
    Hom f_m;
    Hom f_p;
};

std::optional<XModIso> find_xmod_iso(const CrossedModule& a,
                                     const CrossedModule& b,
                                     int iso_bound = 512);

std::optional<Hom> find_cat1_iso(const Cat1Group& a, const Cat1Group& b,
                                 int iso_bound = 512);

}  // namespace h3
