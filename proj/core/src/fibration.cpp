#include "magcat/fibration.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "magcat/errors.hpp"
#include "magcat/functor.hpp"
#include "magcat/magnitude.hpp"

namespace magcat {

void MetricSpace::validate() const {
    size_t n = points.size();
    if (d.size() != n) throw ValidationError("metric: matrix size mismatch");
    for (size_t i = 0; i < n; ++i) {
        if (d[i].size() != n) throw ValidationError("metric: matrix not square");
        if (d[i][i] != 0) throw ValidationError("metric: nonzero self-distance at " + points[i]);
        for (size_t j = 0; j < n; ++j) {
            if (d[i][j] < 0) throw ValidationError("metric: negative distance");
            if (d[i][j] != d[j][i])
                throw ValidationError("metric: asymmetric on (" + points[i] + "," + points[j] +
                                      ")");
            if (i != j && d[i][j] == 0)
                throw ValidationError("metric: degenerate pair (" + points[i] + "," + points[j] +
                                      ")");
        }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (d[i][k] > d[i][j] + d[j][k])
                    throw ValidationError("metric: triangle fails on (" + points[i] + "," +
                                          points[j] + "," + points[k] + ")");
}

MetricSpace to_metric_space(const FCat& c) {
    if (!c.metric_like()) throw UsageError("not a metric-like category");
    if (c.truncation()) throw UsageError("truncated ball is not a metric space");
    MetricSpace m;
    size_t n = c.num_objects();
    m.points.resize(n);
    m.d.assign(n, std::vector<Rational>(n, Rational(0)));
    for (size_t a = 0; a < n; ++a) {
        m.points[a] = c.object_name(static_cast<ObjId>(a));
        for (size_t b = 0; b < n; ++b) {
            auto e = c.distance(static_cast<ObjId>(a), static_cast<ObjId>(b));
            if (!e) throw UsageError("infinite distance: not a metric space");
            m.d[a][b] = e->value();
        }
    }
    m.validate();
    return m;
}

FCat to_fcat(const MetricSpace& m) {
    m.validate();
    DistanceMatrix dm(m.size(), std::vector<std::optional<Rational>>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) dm[i][j] = m.d[i][j];
    return from_metric(dm, m.points);
}

void MetricAction::validate() const {
    base.validate();
    size_t n = base.size();
    if (fibers.size() != n) throw ValidationError("metric action: one fiber per base point");
    for (const auto& f : fibers) {
        f.validate();
        if (f.size() == 0) throw ValidationError("metric action: empty fiber");
    }
    if (transport.size() != n) throw ValidationError("metric action: transport table size");
    for (size_t x = 0; x < n; ++x) {
        if (transport[x].size() != n) throw ValidationError("metric action: transport table size");
        for (size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            const auto& t = transport[x][y];
            if (t.size() != fibers[x].size())
                throw ValidationError("metric action: transport domain size (" + base.points[x] +
                                      " -> " + base.points[y] + ")");
            std::vector<bool> hit(fibers[y].size(), false);
            for (int img : t) {
                if (img < 0 || img >= static_cast<int>(fibers[y].size()) || hit[img])
                    throw ValidationError("metric action: transport not a bijection (" +
                                          base.points[x] + " -> " + base.points[y] + ")");
                hit[img] = true;
            }
            for (size_t a = 0; a < t.size(); ++a)
                for (size_t b = 0; b < t.size(); ++b)
                    if (fibers[y].d[t[a]][t[b]] != fibers[x].d[a][b])
                        throw ValidationError("metric action: transport is not an isometry (" +
                                              base.points[x] + " -> " + base.points[y] + ")");
            const auto& back = transport[y][x];
            for (size_t a = 0; a < t.size(); ++a)
                if (back[t[a]] != static_cast<int>(a))
                    throw ValidationError("metric action: transports not mutually inverse (" +
                                          base.points[x] + " <-> " + base.points[y] + ")");
        }
    }
    // Oplax comparison bound: the composite through y may move points at most
    // the triangle defect of the base.
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                Rational bound = base.d[x][y] + base.d[y][z] - base.d[x][z];
                for (size_t a = 0; a < fibers[x].size(); ++a) {
                    int via = transport[y][z][transport[x][y][a]];
                    int direct = transport[x][z][a];
                    if (fibers[z].d[via][direct] > bound)
                        throw ValidationError(
                            "metric action: comparison degree exceeds the triangle defect on (" +
                            base.points[x] + "," + base.points[y] + "," + base.points[z] +
                            ") at fiber point " + fibers[x].points[a]);
                }
            }
}

// ---------------------------------------------------------------------------

void OplaxFunctor::validate() const {
    size_t n = base.num_objects();
    if (fibers.size() != n) throw ValidationError("oplax functor: one fiber per base object");
    if (on_mor.size() != static_cast<size_t>(base.num_morphisms()))
        throw ValidationError("oplax functor: one transport per base morphism");
    // Transports are filtered functors; identities act as identities.
    for (const auto& m : base.morphisms()) {
        const FCat& src = fibers[m.src];
        const FCat& dst = fibers[m.tgt];
        FCatFunctor F = make_functor(src, dst, on_mor[m.id].obj, on_mor[m.id].mor);
        if (m.is_identity) {
            for (ObjId a = 0; a < src.num_objects(); ++a)
                if (F.obj_map[a] != a)
                    throw ValidationError("oplax functor: identity transport is not the identity");
        }
    }
    auto tau_component = [&](MorId f, MorId g, ObjId a) -> MorId {
        const Morphism& mf = base.morphism(f);
        const Morphism& mg = base.morphism(g);
        if (mf.is_identity) return fibers[mg.tgt].identity(on_mor[g].obj[a]);
        if (mg.is_identity) return fibers[mg.tgt].identity(on_mor[f].obj[a]);
        auto it = tau.find({f, g});
        if (it == tau.end())
            throw ValidationError("oplax functor: missing comparison for (" + mf.name + ", " +
                                  mg.name + ")");
        return it->second.at(a);
    };
    for (const auto& mf : base.morphisms())
        for (MorId g : base.morphisms_from(mf.tgt)) {
            const Morphism& mg = base.morphism(g);
            MorId gf = base.compose(g, mf.id);
            const FCat& dst = fibers[mg.tgt];
            const FCat& src = fibers[mf.src];
            for (ObjId a = 0; a < src.num_objects(); ++a) {
                MorId comp = tau_component(mf.id, g, a);
                const Morphism& mc = dst.morphism(comp);
                ObjId from = on_mor[gf].obj[a];
                ObjId to = on_mor[g].obj[on_mor[mf.id].obj[a]];
                if (mc.src != from || mc.tgt != to)
                    throw ValidationError("oplax functor: comparison has wrong endpoints on (" +
                                          mf.name + ", " + mg.name + ")");
                Exponent slack = mf.degree + mg.degree - base.morphism(gf).degree;
                if (mc.degree > slack)
                    throw ValidationError("oplax functor: comparison degree " + mc.degree.str() +
                                          " exceeds " + slack.str() + " on (" + mf.name + ", " +
                                          mg.name + ")");
            }
            // Naturality of the comparison in the fiber argument.
            for (const auto& xi : src.morphisms()) {
                MorId lhs = dst.compose(on_mor[g].mor[on_mor[mf.id].mor[xi.id]],
                                        tau_component(mf.id, g, xi.src));
                MorId rhs = dst.compose(tau_component(mf.id, g, xi.tgt), on_mor[gf].mor[xi.id]);
                if (lhs != rhs)
                    throw ValidationError("oplax functor: comparison not natural on (" + mf.name +
                                          ", " + mg.name + ") at " + xi.name);
            }
        }
    // Coherence: the two ways around a composable triple agree.
    for (const auto& mf : base.morphisms())
        for (MorId g : base.morphisms_from(mf.tgt))
            for (MorId h : base.morphisms_from(base.morphism(g).tgt)) {
                MorId gf = base.compose(g, mf.id);
                MorId hg = base.compose(h, g);
                const FCat& dst = fibers[base.morphism(h).tgt];
                const FCat& src = fibers[mf.src];
                for (ObjId a = 0; a < src.num_objects(); ++a) {
                    MorId left = dst.compose(on_mor[h].mor[tau_component(mf.id, g, a)],
                                             tau_component(gf, h, a));
                    MorId right = dst.compose(
                        tau_component(base.morphism(g).id, h, on_mor[mf.id].obj[a]),
                        tau_component(mf.id, hg, a));
                    if (left != right)
                        throw ValidationError("oplax functor: coherence fails on (" + mf.name +
                                              ", " + base.morphism(g).name + ", " +
                                              base.morphism(h).name + ")");
                }
            }
}

OplaxFunctor to_oplax(const MetricAction& a) {
    a.validate();
    OplaxFunctor f;
    f.base = to_fcat(a.base);
    for (const auto& fib : a.fibers) f.fibers.push_back(to_fcat(fib));
    f.on_mor.resize(f.base.num_morphisms());
    auto transport_of = [&](const Morphism& m) -> std::vector<int> {
        if (m.is_identity) {
            std::vector<int> id(a.fibers[m.src].size());
            for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
            return id;
        }
        return a.map(m.src, m.tgt);
    };
    for (const auto& m : f.base.morphisms()) {
        const std::vector<int> t = transport_of(m);
        OplaxFunctor::Transport tr;
        tr.obj.assign(t.begin(), t.end());
        tr.mor.resize(f.fibers[m.src].num_morphisms());
        for (const auto& xi : f.fibers[m.src].morphisms())
            tr.mor[xi.id] = f.fibers[m.tgt].hom(t[xi.src], t[xi.tgt]).front();
        f.on_mor[m.id] = std::move(tr);
    }
    for (const auto& mf : f.base.morphisms()) {
        if (mf.is_identity) continue;
        for (MorId g : f.base.morphisms_from(mf.tgt)) {
            const Morphism& mg = f.base.morphism(g);
            if (mg.is_identity) continue;
            MorId gf = f.base.compose(g, mf.id);
            std::vector<MorId> comps;
            const FCat& dst = f.fibers[mg.tgt];
            for (ObjId p = 0; p < f.fibers[mf.src].num_objects(); ++p) {
                ObjId from = f.on_mor[gf].obj[p];
                ObjId to = f.on_mor[g].obj[f.on_mor[mf.id].obj[p]];
                comps.push_back(dst.hom(from, to).front());
            }
            f.tau[{mf.id, g}] = std::move(comps);
        }
    }
    f.validate();
    return f;
}

FCat grothendieck(const OplaxFunctor& f) {
    f.validate();
    FCat e;
    // Total objects (x, a); remember the flattened index.
    std::vector<std::vector<ObjId>> obj_index(f.base.num_objects());
    for (ObjId x = 0; x < f.base.num_objects(); ++x) {
        obj_index[x].resize(f.fibers[x].num_objects());
        for (ObjId a = 0; a < f.fibers[x].num_objects(); ++a)
            obj_index[x][a] = e.add_object("(" + f.base.object_name(x) + "," +
                                           f.fibers[x].object_name(a) + ")");
    }
    // Morphisms (f, xi) keyed by (base morphism, fiber source point, xi).
    std::map<std::pair<MorId, std::pair<ObjId, MorId>>, MorId> mor_index;
    for (const auto& bm : f.base.morphisms())
        for (ObjId a = 0; a < f.fibers[bm.src].num_objects(); ++a) {
            ObjId fa = f.on_mor[bm.id].obj[a];
            for (MorId xi : f.fibers[bm.tgt].morphisms_from(fa)) {
                const Morphism& mxi = f.fibers[bm.tgt].morphism(xi);
                if (bm.is_identity && mxi.is_identity) {
                    mor_index[{bm.id, {a, xi}}] = e.identity(obj_index[bm.src][a]);
                    continue;
                }
                MorId id = e.add_morphism(
                    obj_index[bm.src][a], obj_index[bm.tgt][mxi.tgt], bm.degree + mxi.degree,
                    "(" + bm.name + ";" + mxi.name + ")");
                mor_index[{bm.id, {a, xi}}] = id;
            }
        }
    // Composition: (g, theta) o (f, xi) = (g o f, theta o Fg(xi) o tau_{f,g} a).
    auto tau_component = [&](MorId bf, MorId bg, ObjId a) -> MorId {
        const Morphism& mf = f.base.morphism(bf);
        const Morphism& mg = f.base.morphism(bg);
        if (mf.is_identity) return f.fibers[mg.tgt].identity(f.on_mor[bg].obj[a]);
        if (mg.is_identity) return f.fibers[mg.tgt].identity(f.on_mor[bf].obj[a]);
        return f.tau.at({bf, bg}).at(a);
    };
    for (const auto& [key1, m1] : mor_index) {
        MorId bf = key1.first;
        ObjId a = key1.second.first;
        MorId xi = key1.second.second;
        const Morphism& mbf = f.base.morphism(bf);
        ObjId b = f.fibers[mbf.tgt].morphism(xi).tgt;
        for (MorId bg : f.base.morphisms_from(mbf.tgt)) {
            const Morphism& mbg = f.base.morphism(bg);
            const FCat& dst = f.fibers[mbg.tgt];
            for (MorId theta : dst.morphisms_from(f.on_mor[bg].obj[b])) {
                MorId m2 = mor_index.at({bg, {b, theta}});
                MorId bgf = f.base.compose(bg, bf);
                MorId fiber_part =
                    dst.compose(theta, dst.compose(f.on_mor[bg].mor[xi], tau_component(bf, bg, a)));
                MorId m12 = mor_index.at({bgf, {a, fiber_part}});
                e.set_composite(m2, m1, m12);
            }
        }
    }
    e.finalize();
    return e;
}

FCat grothendieck(const MetricAction& a) {
    a.validate();
    size_t n = a.base.size();
    std::vector<std::pair<size_t, size_t>> pts;
    std::vector<std::string> names;
    for (size_t x = 0; x < n; ++x)
        for (size_t p = 0; p < a.fibers[x].size(); ++p) {
            pts.push_back({x, p});
            names.push_back("(" + a.base.points[x] + "," + a.fibers[x].points[p] + ")");
        }
    DistanceMatrix d(pts.size(), std::vector<std::optional<Rational>>(pts.size()));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j) {
            auto [x, p] = pts[i];
            auto [y, q] = pts[j];
            if (x == y)
                d[i][j] = a.fibers[x].d[p][q];
            else
                d[i][j] = a.base.d[x][y] + a.fibers[y].d[a.map(x, y)[p]][q];
        }
    return from_metric(d, names);
}

// ---------------------------------------------------------------------------

FibrationCheck is_metric_fibration(const FCat& total, const FCat& base,
                                   const std::vector<ObjId>& projection) {
    FibrationCheck out;
    out.witness.total = to_metric_space(total);
    out.witness.base = to_metric_space(base);
    const MetricSpace& X = out.witness.total;
    const MetricSpace& Y = out.witness.base;
    if (projection.size() != X.size())
        throw ValidationError("projection must cover every total point");
    out.witness.projection.assign(projection.begin(), projection.end());

    std::vector<bool> hit(Y.size(), false);
    for (int y : projection) {
        if (y < 0 || y >= static_cast<int>(Y.size()))
            throw ValidationError("projection image out of range");
        hit[y] = true;
    }
    for (size_t y = 0; y < Y.size(); ++y)
        if (!hit[y]) throw ValidationError("projection misses base point " + Y.points[y]);
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = 0; j < X.size(); ++j)
            if (Y.d[projection[i]][projection[j]] > X.d[i][j])
                throw ValidationError("projection is not 1-Lipschitz on (" + X.points[i] + "," +
                                      X.points[j] + ")");

    out.witness.lift.assign(X.size(), std::vector<int>(Y.size(), -1));
    for (size_t x = 0; x < X.size(); ++x)
        for (size_t y = 0; y < Y.size(); ++y) {
            std::vector<int> candidates;
            for (size_t z = 0; z < X.size(); ++z) {
                if (projection[z] != static_cast<int>(y)) continue;
                if (X.d[x][z] != Y.d[projection[x]][y]) continue;
                bool geodesic = true;
                for (size_t w = 0; w < X.size(); ++w) {
                    if (projection[w] != static_cast<int>(y)) continue;
                    if (X.d[x][w] != X.d[x][z] + X.d[w][z]) {
                        geodesic = false;
                        break;
                    }
                }
                if (geodesic) candidates.push_back(static_cast<int>(z));
            }
            if (candidates.size() != 1) {
                out.counterexample = "(" + X.points[x] + ", " + Y.points[y] + "): " +
                                     std::to_string(candidates.size()) + " lifts";
                return out;
            }
            out.witness.lift[x][y] = candidates.front();
        }
    out.is_fibration = true;
    return out;
}

MetricAction extract_action(const FibrationWitness& w) {
    MetricAction a;
    a.base = w.base;
    size_t n = w.base.size();
    std::vector<std::vector<int>> fiber_points(n);
    std::vector<int> local_index(w.total.size(), -1);
    for (size_t x = 0; x < w.total.size(); ++x) {
        local_index[x] = static_cast<int>(fiber_points[w.projection[x]].size());
        fiber_points[w.projection[x]].push_back(static_cast<int>(x));
    }
    for (size_t y = 0; y < n; ++y) {
        MetricSpace f;
        for (int p : fiber_points[y]) f.points.push_back(w.total.points[p]);
        f.d.assign(f.points.size(), std::vector<Rational>(f.points.size(), Rational(0)));
        for (size_t i = 0; i < fiber_points[y].size(); ++i)
            for (size_t j = 0; j < fiber_points[y].size(); ++j)
                f.d[i][j] = w.total.d[fiber_points[y][i]][fiber_points[y][j]];
        a.fibers.push_back(std::move(f));
    }
    a.transport.assign(n, std::vector<std::vector<int>>(n));
    for (size_t y = 0; y < n; ++y)
        for (size_t z = 0; z < n; ++z) {
            if (y == z) continue;
            std::vector<int> t(fiber_points[y].size());
            for (size_t i = 0; i < fiber_points[y].size(); ++i)
                t[i] = local_index[w.lift[fiber_points[y][i]][z]];
            a.transport[y][z] = std::move(t);
        }
    a.validate();
    return a;
}

ProductFormulaReport product_formula_check(const MetricAction& a, const Exponent& cutoff) {
    a.validate();
    ProductFormulaReport rep;
    // Transports certify that all fibers are isometric.
    rep.fibers_match = true;
    FCat total = grothendieck(a);
    FCat base_cat = to_fcat(a.base);
    FCat fiber_cat = to_fcat(a.fibers.front());
    rep.mag_total = magnitude(total, cutoff);
    rep.mag_base = magnitude(base_cat, cutoff);
    rep.mag_fiber = magnitude(fiber_cat, cutoff);
    rep.product = rep.mag_base * rep.mag_fiber;
    rep.magnitude_equal = rep.mag_total == rep.product;

    WeightVector wt = weighting(total, cutoff);
    WeightVector wb = weighting(base_cat, cutoff);
    rep.weighting_pointwise = true;
    size_t idx = 0;
    for (size_t x = 0; x < a.base.size(); ++x) {
        WeightVector wf = weighting(to_fcat(a.fibers[x]), cutoff);
        for (size_t p = 0; p < a.fibers[x].size(); ++p, ++idx)
            if (!(wt.entries[idx] == wb.entries[x] * wf.entries[p]))
                rep.weighting_pointwise = false;
    }
    return rep;
}

ProductFormulaReport product_formula_check(const OplaxFunctor& f, const Exponent& cutoff) {
    f.validate();
    ProductFormulaReport rep;
    FCat total = grothendieck(f);
    rep.mag_total = magnitude(total, cutoff);
    rep.mag_base = magnitude(f.base, cutoff);
    rep.mag_fiber = magnitude(f.fibers.front(), cutoff);
    rep.fibers_match = true;
    for (const auto& fib : f.fibers)
        if (!(magnitude(fib, cutoff) == rep.mag_fiber)) rep.fibers_match = false;
    rep.product = rep.mag_base * rep.mag_fiber;
    rep.magnitude_equal = rep.mag_total == rep.product;

    WeightVector wt = weighting(total, cutoff);
    WeightVector wb = weighting(f.base, cutoff);
    rep.weighting_pointwise = true;
    size_t idx = 0;
    for (ObjId x = 0; x < f.base.num_objects(); ++x) {
        WeightVector wf = weighting(f.fibers[x], cutoff);
        for (ObjId a = 0; a < f.fibers[x].num_objects(); ++a, ++idx)
            if (!(wt.entries[idx] == wb.entries[x] * wf.entries[a]))
                rep.weighting_pointwise = false;
    }
    return rep;
}

MetricAction cyclic_twist(const MetricSpace& fiber, const std::vector<int>& theta, int n) {
    fiber.validate();
    if (n < 3) throw UsageError("cyclic base needs n >= 3");
    if (theta.size() != fiber.size())
        throw ValidationError("twist permutation size mismatch");
    std::vector<int> inv(theta.size(), -1);
    for (size_t i = 0; i < theta.size(); ++i) {
        if (theta[i] < 0 || theta[i] >= static_cast<int>(theta.size()) || inv[theta[i]] != -1)
            throw ValidationError("twist is not a permutation");
        inv[theta[i]] = static_cast<int>(i);
    }
    for (size_t i = 0; i < theta.size(); ++i)
        for (size_t j = 0; j < theta.size(); ++j)
            if (fiber.d[theta[i]][theta[j]] != fiber.d[i][j])
                throw ValidationError("twist is not a self-isometry");

    MetricAction a;
    a.base.points.resize(n);
    a.base.d.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        a.base.points[i] = "c" + std::to_string(i);
        for (int j = 0; j < n; ++j) {
            int diff = std::abs(i - j);
            a.base.d[i][j] = Rational(std::min(diff, n - diff));
        }
    }
    a.fibers.assign(n, fiber);

    auto id_perm = [&]() {
        std::vector<int> p(fiber.size());
        for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
        return p;
    };
    auto apply = [&](const std::vector<int>& p, const std::vector<int>& q) {
        // q after p
        std::vector<int> r(p.size());
        for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
        return r;
    };
    // Per-edge transports: identity except the seam edge (n-1 -> 0) = theta.
    auto step = [&](int from, int dir) -> std::vector<int> {
        int to = ((from + dir) % n + n) % n;
        if (dir == 1) return (from == n - 1 && to == 0) ? theta : id_perm();
        return (from == 0 && to == n - 1) ? inv : id_perm();
    };
    auto walk = [&](int from, int to, int dir) {
        std::vector<int> acc = id_perm();
        int at = from;
        while (at != to) {
            acc = apply(acc, step(at, dir));
            at = ((at + dir) % n + n) % n;
        }
        return acc;
    };

    a.transport.assign(n, std::vector<std::vector<int>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int fwd = ((j - i) % n + n) % n;
            int bwd = n - fwd;
            if (fwd < bwd) {
                a.transport[i][j] = walk(i, j, 1);
            } else if (bwd < fwd) {
                a.transport[i][j] = walk(i, j, -1);
            } else {
                // Both directions are shortest; the triangle defect through
                // either midpoint is zero, so the two composites must agree.
                std::vector<int> one = walk(i, j, 1);
                std::vector<int> other = walk(i, j, -1);
                if (one != other)
                    throw ValidationError(
                        "even-cycle twist is inconsistent: antipodal transports (" +
                        a.base.points[i] + " -> " + a.base.points[j] +
                        ") differ along the two shortest paths (a non-trivial twist over an even "
                        "cycle is not a metric action)");
                a.transport[i][j] = std::move(one);
            }
        }
    a.validate();
    return a;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<Rational>> sorted_rows(const MetricSpace& m) {
    std::vector<std::vector<Rational>> rows = m.d;
    for (auto& r : rows) std::sort(r.begin(), r.end());
    return rows;
}

std::optional<std::vector<int>> isometry_search(
    const MetricSpace& a, const MetricSpace& b,
    const std::function<bool(size_t, size_t)>& admissible) {
    if (a.size() != b.size()) return std::nullopt;
    size_t n = a.size();
    auto ra = sorted_rows(a), rb = sorted_rows(b);
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(size_t)> place = [&](size_t i) -> bool {
        if (i == n) return true;
        for (size_t j = 0; j < n; ++j) {
            if (used[j] || ra[i] != rb[j] || !admissible(i, j)) continue;
            bool ok = true;
            for (size_t k = 0; k < i; ++k)
                if (a.d[i][k] != b.d[j][image[k]]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[i] = static_cast<int>(j);
            used[j] = true;
            if (place(i + 1)) return true;
            used[j] = false;
            image[i] = -1;
        }
        return false;
    };
    if (place(0)) return image;
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_isometry(const MetricSpace& a, const MetricSpace& b) {
    return isometry_search(a, b, [](size_t, size_t) { return true; });
}

std::optional<std::vector<int>> find_fibered_isometry(const MetricSpace& a,
                                                      const std::vector<int>& proj_a,
                                                      const MetricSpace& b,
                                                      const std::vector<int>& proj_b) {
    return isometry_search(
        a, b, [&](size_t i, size_t j) { return proj_a[i] == proj_b[j]; });
}

long girth(const MetricSpace& m) {
    size_t n = m.size();
    std::vector<std::vector<int>> adj(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && m.d[i][j] == 1) adj[i].push_back(static_cast<int>(j));
    long best = 0;
    for (size_t s = 0; s < n; ++s) {
        std::vector<long> dist(n, -1);
        std::vector<int> parent(n, -1);
        std::deque<int> queue{static_cast<int>(s)};
        dist[s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    long cycle = dist[u] + dist[v] + 1;
                    if (best == 0 || cycle < best) best = cycle;
                }
            }
        }
    }
    return best;
}

std::vector<Rational> distance_multiset(const MetricSpace& m) {
    std::vector<Rational> out;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j) out.push_back(m.d[i][j]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace magcat
