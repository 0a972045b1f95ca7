#ifndef MAGCAT_FUNCTOR_HPP
#define MAGCAT_FUNCTOR_HPP

#include <vector>

#include "magcat/fcat.hpp"

namespace magcat {

// A filtered functor between validated categories: preserves identities and
// composition, never increases degrees.
struct FCatFunctor {
    const FCat* dom = nullptr;
    const FCat* cod = nullptr;
    std::vector<ObjId> obj_map;
    std::vector<MorId> mor_map;

    ObjId on_object(ObjId a) const { return obj_map[a]; }
    MorId on_morphism(MorId f) const { return mor_map[f]; }
};

// Validates and returns; throws ValidationError with a witness otherwise.
FCatFunctor make_functor(const FCat& dom, const FCat& cod, std::vector<ObjId> obj_map,
                         std::vector<MorId> mor_map);

// For metric-like codomains the morphism map is forced by the object map;
// validates the 1-Lipschitz condition.
FCatFunctor metric_functor(const FCat& dom, const FCat& cod, std::vector<ObjId> obj_map);

FCatFunctor identity_functor(const FCat& c);
FCatFunctor constant_functor(const FCat& dom, const FCat& cod, ObjId target);
// g after f.
FCatFunctor compose(const FCatFunctor& g, const FCatFunctor& f);

// An r-natural transformation F => G: an object-indexed family of morphisms
// Fa -> Ga of degree <= r whose squares with every Ff / Gf commute.
struct RNatural {
    Exponent r;
    std::vector<MorId> component;  // in the codomain, indexed by domain object
};

RNatural make_r_natural(const FCatFunctor& F, const FCatFunctor& G, const Exponent& r,
                        std::vector<MorId> component);

}  // namespace magcat

#endif
