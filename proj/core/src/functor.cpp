#include "magcat/functor.hpp"

#include "magcat/errors.hpp"

namespace magcat {

FCatFunctor make_functor(const FCat& dom, const FCat& cod, std::vector<ObjId> obj_map,
                         std::vector<MorId> mor_map) {
    if (obj_map.size() != static_cast<size_t>(dom.num_objects()))
        throw ValidationError("functor object map has wrong size");
    if (mor_map.size() != static_cast<size_t>(dom.num_morphisms()))
        throw ValidationError("functor morphism map has wrong size");
    for (ObjId a : obj_map)
        if (a < 0 || a >= cod.num_objects())
            throw ValidationError("functor object image out of range");

    FCatFunctor F{&dom, &cod, std::move(obj_map), std::move(mor_map)};
    for (const auto& m : dom.morphisms()) {
        MorId fm = F.mor_map[m.id];
        if (fm < 0 || fm >= cod.num_morphisms())
            throw ValidationError("functor image of " + m.name + " out of range");
        const Morphism& im = cod.morphism(fm);
        if (im.src != F.obj_map[m.src] || im.tgt != F.obj_map[m.tgt])
            throw ValidationError("functor image of " + m.name + " has wrong endpoints");
        if (im.degree > m.degree)
            throw ValidationError("functor raises degree on " + m.name + ": " + m.degree.str() +
                                  " -> " + im.degree.str());
        if (m.is_identity && !im.is_identity)
            throw ValidationError("functor does not preserve the identity of " +
                                  dom.object_name(m.src));
    }
    for (const auto& mf : dom.morphisms())
        for (MorId g : dom.morphisms_from(mf.tgt)) {
            if (!dom.has_composite(g, mf.id)) continue;
            MorId gf = dom.compose(g, mf.id);
            MorId a = F.mor_map[mf.id], b = F.mor_map[g];
            if (!cod.has_composite(b, a))
                throw ValidationError("image composite missing for " + dom.morphism(g).name +
                                      " o " + mf.name);
            if (cod.compose(b, a) != F.mor_map[gf])
                throw ValidationError("functor breaks composition on " + dom.morphism(g).name +
                                      " o " + mf.name);
        }
    return F;
}

FCatFunctor metric_functor(const FCat& dom, const FCat& cod, std::vector<ObjId> obj_map) {
    if (!cod.metric_like())
        throw UsageError("metric_functor needs a metric-like codomain");
    std::vector<MorId> mor_map(dom.num_morphisms(), -1);
    for (const auto& m : dom.morphisms()) {
        ObjId a = obj_map[m.src], b = obj_map[m.tgt];
        const auto& h = cod.hom(a, b);
        if (h.empty())
            throw ValidationError("no image morphism for " + m.name + " (distance infinite)");
        mor_map[m.id] = h.front();
    }
    return make_functor(dom, cod, std::move(obj_map), std::move(mor_map));
}

FCatFunctor identity_functor(const FCat& c) {
    std::vector<ObjId> objs(c.num_objects());
    std::vector<MorId> mors(c.num_morphisms());
    for (int i = 0; i < c.num_objects(); ++i) objs[i] = i;
    for (int i = 0; i < c.num_morphisms(); ++i) mors[i] = i;
    return make_functor(c, c, std::move(objs), std::move(mors));
}

FCatFunctor constant_functor(const FCat& dom, const FCat& cod, ObjId target) {
    std::vector<ObjId> objs(dom.num_objects(), target);
    std::vector<MorId> mors(dom.num_morphisms(), cod.identity(target));
    return make_functor(dom, cod, std::move(objs), std::move(mors));
}

FCatFunctor compose(const FCatFunctor& g, const FCatFunctor& f) {
    if (f.cod != g.dom) throw UsageError("functor composition domain mismatch");
    std::vector<ObjId> objs(f.obj_map.size());
    std::vector<MorId> mors(f.mor_map.size());
    for (size_t i = 0; i < objs.size(); ++i) objs[i] = g.obj_map[f.obj_map[i]];
    for (size_t i = 0; i < mors.size(); ++i) mors[i] = g.mor_map[f.mor_map[i]];
    return make_functor(*f.dom, *g.cod, std::move(objs), std::move(mors));
}

RNatural make_r_natural(const FCatFunctor& F, const FCatFunctor& G, const Exponent& r,
                        std::vector<MorId> component) {
    if (F.dom != G.dom || F.cod != G.cod)
        throw UsageError("r-natural transformation needs parallel functors");
    const FCat& dom = *F.dom;
    const FCat& cod = *F.cod;
    if (component.size() != static_cast<size_t>(dom.num_objects()))
        throw ValidationError("r-natural transformation: one component per object required");
    for (ObjId a = 0; a < dom.num_objects(); ++a) {
        const Morphism& t = cod.morphism(component[a]);
        if (t.src != F.obj_map[a] || t.tgt != G.obj_map[a])
            throw ValidationError("component at " + dom.object_name(a) +
                                  " is not a morphism Fa -> Ga");
        if (t.degree > r)
            throw ValidationError("component at " + dom.object_name(a) + " has degree " +
                                  t.degree.str() + " > r = " + r.str());
    }
    for (const auto& m : dom.morphisms()) {
        MorId left = cod.compose(component[m.tgt], F.mor_map[m.id]);   // tau_b o Ff
        MorId right = cod.compose(G.mor_map[m.id], component[m.src]);  // Gf o tau_a
        if (left != right)
            throw ValidationError("naturality square fails at " + m.name);
    }
    return RNatural{r, std::move(component)};
}

}  // namespace magcat
