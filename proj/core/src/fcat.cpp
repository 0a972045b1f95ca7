#include "magcat/fcat.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <memory>
#include <set>

#include "magcat/errors.hpp"

namespace magcat {

namespace {
uint64_t comp_key(MorId g, MorId f) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(g)) << 32) | static_cast<uint32_t>(f);
}
}  // namespace

ObjId FCat::add_object(const std::string& name) {
    if (finalized_) throw UsageError("FCat is immutable after finalize()");
    ObjId a = static_cast<ObjId>(objects_.size());
    objects_.push_back(name);
    MorId id = static_cast<MorId>(morphisms_.size());
    morphisms_.push_back({id, a, a, Exponent(), true, "id_" + name});
    identity_.push_back(id);
    return a;
}

MorId FCat::add_morphism(ObjId src, ObjId tgt, Exponent degree, const std::string& name) {
    if (finalized_) throw UsageError("FCat is immutable after finalize()");
    MorId m = static_cast<MorId>(morphisms_.size());
    morphisms_.push_back({m, src, tgt, std::move(degree), false, name});
    return m;
}

void FCat::set_composite(MorId g, MorId f, MorId gf) {
    if (finalized_) throw UsageError("FCat is immutable after finalize()");
    comp_[comp_key(g, f)] = gf;
}

std::optional<ObjId> FCat::object_by_name(const std::string& name) const {
    for (ObjId a = 0; a < num_objects(); ++a)
        if (objects_[a] == name) return a;
    return std::nullopt;
}

const std::vector<MorId>& FCat::hom(ObjId a, ObjId b) const { return hom_[a][b]; }

bool FCat::has_composite(MorId g, MorId f) const { return comp_.count(comp_key(g, f)) > 0; }

MorId FCat::compose(MorId g, MorId f) const {
    auto it = comp_.find(comp_key(g, f));
    if (it == comp_.end())
        throw UsageError("composite not defined: " + morphisms_[g].name + " o " +
                         morphisms_[f].name);
    return it->second;
}

std::optional<Exponent> FCat::distance(ObjId a, ObjId b) const {
    if (!metric_like_) throw UsageError("distance() requires a metric-like category");
    const auto& h = hom_[a][b];
    if (h.empty()) return std::nullopt;
    return morphisms_[h.front()].degree;
}

void FCat::finalize() {
    if (finalized_) return;
    int n = num_objects();
    hom_.assign(n, std::vector<std::vector<MorId>>(n));
    from_.assign(n, {});
    into_.assign(n, {});
    for (const auto& m : morphisms_) {
        hom_[m.src][m.tgt].push_back(m.id);
        from_[m.src].push_back(m.id);
        into_[m.tgt].push_back(m.id);
    }
    metric_like_ = true;
    for (int a = 0; a < n && metric_like_; ++a)
        for (int b = 0; b < n; ++b)
            if (hom_[a][b].size() > 1) {
                metric_like_ = false;
                break;
            }
    // Composites with identities are forced; fill them in.
    for (const auto& m : morphisms_) {
        comp_[comp_key(identity_[m.tgt], m.id)] = m.id;
        comp_[comp_key(m.id, identity_[m.src])] = m.id;
    }
    validate();
    finalized_ = true;
}

void FCat::validate() const {
    int n = num_objects();
    for (ObjId a = 0; a < n; ++a) {
        const Morphism& id = morphisms_[identity_[a]];
        if (!id.is_identity || id.src != a || id.tgt != a)
            throw ValidationError("broken identity bookkeeping at object " + objects_[a]);
        if (!id.degree.is_zero())
            throw ValidationError("identity of " + objects_[a] + " has nonzero degree " +
                                  id.degree.str());
        int ids_here = 0;
        for (MorId m : hom_[a][a])
            if (morphisms_[m].is_identity) ++ids_here;
        if (ids_here != 1)
            throw ValidationError("object " + objects_[a] + " has " + std::to_string(ids_here) +
                                  " identities");
    }
    // Composition table: filtered law, endpoint compatibility, totality.
    for (const auto& [key, gf] : comp_) {
        MorId g = static_cast<MorId>(key >> 32);
        MorId f = static_cast<MorId>(key & 0xffffffffu);
        const Morphism& mf = morphisms_[f];
        const Morphism& mg = morphisms_[g];
        const Morphism& mgf = morphisms_[gf];
        if (mf.tgt != mg.src)
            throw ValidationError("composite stored for non-composable pair " + mg.name + " o " +
                                  mf.name);
        if (mgf.src != mf.src || mgf.tgt != mg.tgt)
            throw ValidationError("composite " + mgf.name + " of " + mg.name + " o " + mf.name +
                                  " has wrong endpoints");
        if (mgf.degree > mf.degree + mg.degree)
            throw ValidationError("filtered composition law fails: deg(" + mg.name + " o " +
                                  mf.name + ") = " + mgf.degree.str() + " > " +
                                  (mf.degree + mg.degree).str());
    }
    for (const auto& mf : morphisms_) {
        for (MorId g : from_[mf.tgt]) {
            const Morphism& mg = morphisms_[g];
            if (has_composite(g, mf.id)) continue;
            if (truncation_ && mf.degree + mg.degree > *truncation_) continue;
            throw ValidationError("composition not total: missing " + mg.name + " o " + mf.name);
        }
    }
    // Unit laws (already forced for table entries we added, but a user table
    // may have overwritten them).
    for (const auto& m : morphisms_) {
        if (compose(identity_[m.tgt], m.id) != m.id || compose(m.id, identity_[m.src]) != m.id)
            throw ValidationError("unit law fails at " + m.name);
    }
    // Associativity. Forced for metric-like categories (hom sets are
    // singletons), checked exhaustively otherwise.
    if (!metric_like_) {
        for (const auto& mf : morphisms_)
            for (MorId g : from_[mf.tgt]) {
                if (!has_composite(g, mf.id)) continue;
                MorId gf = compose(g, mf.id);
                for (MorId h : from_[morphisms_[g].tgt]) {
                    if (!has_composite(h, g) || !has_composite(h, gf)) continue;
                    MorId hg = compose(h, g);
                    if (!has_composite(hg, mf.id)) continue;
                    if (compose(h, gf) != compose(hg, mf.id))
                        throw ValidationError("associativity fails on (" + morphisms_[h].name +
                                              ", " + morphisms_[g].name + ", " + mf.name + ")");
                }
            }
    }
}

// ---------------------------------------------------------------------------

FCat from_metric(const DistanceMatrix& d, const std::vector<std::string>& names) {
    size_t n = d.size();
    for (const auto& row : d)
        if (row.size() != n) throw ValidationError("distance matrix is not square");
    for (size_t i = 0; i < n; ++i) {
        if (!d[i][i] || *d[i][i] != 0)
            throw ValidationError("nonzero diagonal at entry " + std::to_string(i));
        for (size_t j = 0; j < n; ++j)
            if (d[i][j] && *d[i][j] < 0)
                throw ValidationError("negative distance at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
    }
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            if (!d[x][y]) continue;
            for (size_t z = 0; z < n; ++z) {
                if (!d[y][z]) continue;
                if (!d[x][z] || *d[x][z] > *d[x][y] + *d[y][z])
                    throw ValidationError("triangle inequality fails on (" + std::to_string(x) +
                                          "," + std::to_string(y) + "," + std::to_string(z) + ")");
            }
        }

    FCat c;
    for (size_t i = 0; i < n; ++i)
        c.add_object(names.empty() ? "p" + std::to_string(i) : names[i]);
    std::vector<std::vector<MorId>> mor(n, std::vector<MorId>(n, -1));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            if (a == b) {
                mor[a][b] = c.identity(static_cast<ObjId>(a));
                continue;
            }
            if (!d[a][b]) continue;
            mor[a][b] = c.add_morphism(static_cast<ObjId>(a), static_cast<ObjId>(b),
                                       Exponent(*d[a][b]),
                                       c.object_name(a) + "->" + c.object_name(b));
        }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t e = 0; e < n; ++e) {
                if (mor[a][b] < 0 || mor[b][e] < 0 || a == b || b == e) continue;
                // Triangle inequality above guarantees the composite exists.
                c.set_composite(mor[b][e], mor[a][b], mor[a][e]);
            }
    c.finalize();
    return c;
}

DistanceMatrix distances(const FCat& c) {
    if (!c.metric_like()) throw UsageError("distances() requires a metric-like category");
    size_t n = c.num_objects();
    DistanceMatrix d(n, std::vector<std::optional<Rational>>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            auto e = c.distance(static_cast<ObjId>(a), static_cast<ObjId>(b));
            if (e) d[a][b] = e->value();
        }
    return d;
}

LocallyFiniteGraph finite_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                                const std::vector<std::string>& vertices, bool symmetric) {
    auto adj = std::make_shared<std::map<std::string, std::vector<std::string>>>();
    auto add_vertex = [&](const std::string& v) {
        adj->try_emplace(v);
    };
    for (const auto& v : vertices) add_vertex(v);
    for (const auto& [u, v] : edges) {
        add_vertex(u);
        add_vertex(v);
        (*adj)[u].push_back(v);
        if (symmetric) (*adj)[v].push_back(u);
    }
    for (auto& [v, ns] : *adj) {
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    }
    LocallyFiniteGraph g;
    g.symmetric = symmetric;
    if (!adj->empty()) g.base.push_back(adj->begin()->first);
    g.neighbors = [adj](const std::string& v) -> std::vector<std::string> {
        auto it = adj->find(v);
        if (it == adj->end()) return {};
        return it->second;
    };
    return g;
}

FCat from_graph(const LocallyFiniteGraph& g, const Exponent& radius) {
    if (g.base.empty()) throw ValidationError("graph ball needs at least one base label");
    if (!radius.is_integer())
        throw UsageError("graph radius must be an integer, got " + radius.str());
    long r = radius.value().get_num().get_si();

    // Multi-source ball around the base labels.
    std::map<std::string, long> dist_from_base;
    std::deque<std::string> frontier;
    for (const auto& b : g.base)
        if (dist_from_base.emplace(b, 0).second) frontier.push_back(b);
    bool saturated = true;
    for (long depth = 0; depth < r && !frontier.empty(); ++depth) {
        std::deque<std::string> next;
        for (const auto& u : frontier)
            for (const auto& v : g.neighbors(u))
                if (dist_from_base.emplace(v, depth + 1).second) next.push_back(v);
        frontier = std::move(next);
    }
    // Peek one layer further: unexplored neighbors mean the ball is a strict
    // restriction of the graph.
    for (const auto& u : frontier)
        for (const auto& v : g.neighbors(u))
            if (!dist_from_base.count(v)) {
                saturated = false;
                break;
            }

    std::vector<std::string> labels;
    for (const auto& [v, dd] : dist_from_base) labels.push_back(v);  // map order: sorted

    if (g.symmetric) {
        for (const auto& u : labels)
            for (const auto& v : g.neighbors(u)) {
                if (!dist_from_base.count(v)) continue;
                auto back = g.neighbors(v);
                if (std::find(back.begin(), back.end(), u) == back.end())
                    throw ValidationError("asymmetric adjacency on a symmetric graph: " + u +
                                          " -- " + v);
            }
    }

    // Pairwise distances by per-vertex breadth-first search bounded by the
    // radius; a shortest path of length <= r never leaves the r-ball of its
    // start, so these values are exact.
    size_t n = labels.size();
    DistanceMatrix d(n, std::vector<std::optional<Rational>>(n));
    bool all_exhausted = true;
    for (size_t i = 0; i < n; ++i) {
        std::map<std::string, long> dist;
        dist[labels[i]] = 0;
        std::deque<std::string> layer{labels[i]};
        long depth = 0;
        while (!layer.empty() && depth < r) {
            std::deque<std::string> next;
            for (const auto& u : layer)
                for (const auto& v : g.neighbors(u))
                    if (dist.emplace(v, depth + 1).second) next.push_back(v);
            layer = std::move(next);
            ++depth;
        }
        // If the last layer still has unexplored neighbors, some true
        // distances from this vertex exceed the radius.
        for (const auto& u : layer)
            for (const auto& v : g.neighbors(u))
                if (!dist.count(v)) {
                    all_exhausted = false;
                    break;
                }
        for (size_t j = 0; j < n; ++j) {
            auto it = dist.find(labels[j]);
            if (it != dist.end() && it->second <= r) d[i][j] = Rational(it->second);
        }
    }

    if (saturated && all_exhausted) return from_metric(d, labels);

    // Strict restriction: build the truncated category by hand. Composites
    // exist exactly for the pairs whose target distance survived the cap,
    // which covers every pair with total degree within the radius.
    FCat t;
    for (const auto& l : labels) t.add_object(l);
    std::vector<std::vector<MorId>> mor(n, std::vector<MorId>(n, -1));
    for (size_t a = 0; a < n; ++a) {
        mor[a][a] = t.identity(static_cast<ObjId>(a));
        for (size_t b = 0; b < n; ++b)
            if (a != b && d[a][b])
                mor[a][b] = t.add_morphism(static_cast<ObjId>(a), static_cast<ObjId>(b),
                                           Exponent(*d[a][b]), labels[a] + "->" + labels[b]);
    }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t e = 0; e < n; ++e) {
                if (a == b || b == e) continue;
                if (mor[a][b] < 0 || mor[b][e] < 0 || mor[a][e] < 0) continue;
                t.set_composite(mor[b][e], mor[a][b], mor[a][e]);
            }
    t.set_truncation(radius);
    t.finalize();
    return t;
}

std::vector<std::vector<bool>> strict_order(const Poset& p) {
    size_t n = p.elements.size();
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (auto [a, b] : p.less) {
        if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n))
            throw ValidationError("poset relation index out of range");
        if (a == b) throw ValidationError("reflexive strict relation " + p.elements[a] + " < " +
                                          p.elements[a]);
        lt[a][b] = true;
    }
    // Warshall closure.
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (lt[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (lt[k][j]) lt[i][j] = true;
    for (size_t i = 0; i < n; ++i)
        if (lt[i][i])
            throw ValidationError("order relation has a cycle through " + p.elements[i]);
    return lt;
}

FCat from_finite_poset_unit(const Poset& p) {
    auto lt = strict_order(p);
    size_t n = p.elements.size();
    DistanceMatrix d(n, std::vector<std::optional<Rational>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j)
                d[i][j] = Rational(0);
            else if (lt[i][j])
                d[i][j] = Rational(1);
        }
    return from_metric(d, p.elements);
}

FCat from_poset_ranked(const RankedPoset& p) {
    size_t n = p.elements.size();
    if (p.phi.size() != n) throw ValidationError("rank map size mismatch");
    Poset base{p.elements, p.covers};
    auto lt = strict_order(base);
    // Unique minimum.
    int minimum = -1;
    for (size_t i = 0; i < n; ++i) {
        bool is_min = true;
        for (size_t j = 0; j < n; ++j)
            if (j != i && !lt[i][j]) {
                is_min = false;
                break;
            }
        if (is_min) {
            minimum = static_cast<int>(i);
            break;
        }
    }
    if (minimum < 0) throw ValidationError("ranked poset has no minimum element");
    if (p.phi[minimum] != 0)
        throw ValidationError("phi(minimum) = " + std::to_string(p.phi[minimum]) + ", expected 0");
    for (size_t i = 0; i < n; ++i) {
        if (p.phi[i] < 0) throw ValidationError("negative rank at " + p.elements[i]);
        for (size_t j = 0; j < n; ++j)
            if (lt[i][j] && p.phi[i] > p.phi[j])
                throw ValidationError("phi is not order-preserving on " + p.elements[i] + " < " +
                                      p.elements[j]);
    }
    DistanceMatrix d(n, std::vector<std::optional<Rational>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j)
                d[i][j] = Rational(0);
            else if (lt[i][j])
                d[i][j] = Rational(p.phi[j] - p.phi[i]);
        }
    return from_metric(d, p.elements);
}

FCat from_finite_category(const CategorySpec& spec) {
    FCat c;
    std::map<std::string, ObjId> obj;
    for (const auto& o : spec.objects) {
        if (obj.count(o)) throw ValidationError("duplicate object name " + o);
        obj[o] = c.add_object(o);
    }
    std::map<std::string, MorId> mor;
    for (ObjId a = 0; a < c.num_objects(); ++a) mor["id_" + c.object_name(a)] = c.identity(a);
    for (const auto& m : spec.morphisms) {
        if (mor.count(m.name)) {
            // Allow explicitly listed identities, but pin their data.
            MorId id = mor[m.name];
            if (c.morphism(id).is_identity) {
                if (m.degree != 0)
                    throw ValidationError("identity " + m.name + " listed with nonzero degree");
                if (!obj.count(m.src) || !obj.count(m.tgt) || obj[m.src] != c.morphism(id).src ||
                    obj[m.tgt] != c.morphism(id).tgt)
                    throw ValidationError("identity " + m.name + " has wrong endpoints");
                continue;
            }
            throw ValidationError("duplicate morphism name " + m.name);
        }
        if (!obj.count(m.src)) throw ValidationError("unknown source object " + m.src);
        if (!obj.count(m.tgt)) throw ValidationError("unknown target object " + m.tgt);
        mor[m.name] = c.add_morphism(obj[m.src], obj[m.tgt], Exponent(m.degree), m.name);
    }
    for (const auto& t : spec.composition) {
        for (const auto& name : t)
            if (!mor.count(name)) throw ValidationError("unknown morphism in composition: " + name);
        c.set_composite(mor[t[0]], mor[t[1]], mor[t[2]]);
    }
    c.finalize();
    return c;
}

// --------------------------- groups ---------------------------------------

namespace {

// Uniform multiplication interface over canonical element labels.
struct GroupModel {
    std::function<std::string(const std::string&, const std::string&)> mul;
    std::string identity_label;
    std::vector<std::string> gen_labels;  // already symmetrized if requested
};

std::string fa_label(const std::vector<long>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::vector<long> fa_parse(const std::string& s) {
    std::vector<long> v;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' ) continue;
        if (ch == ',' || ch == ')') {
            if (!cur.empty()) v.push_back(std::stol(cur));
            cur.clear();
        } else
            cur += ch;
    }
    return v;
}

std::string fg_reduce(std::string w) {
    std::string out;
    for (char ch : w) {
        if (!out.empty() && out.back() != ch &&
            std::tolower(out.back()) == std::tolower(ch))
            out.pop_back();
        else
            out += ch;
    }
    return out;
}

GroupModel make_model(const GroupBall& g) {
    GroupModel m;
    switch (g.family) {
        case GroupBall::Family::Table: {
            size_t n = g.table.size();
            if (n == 0) throw ValidationError("empty multiplication table");
            for (const auto& row : g.table) {
                if (row.size() != n) throw ValidationError("multiplication table is not square");
                for (int e : row)
                    if (e < 0 || e >= static_cast<int>(n))
                        throw ValidationError(
                            "multiplication table not closed under multiplication");
            }
            // Group axioms with witnesses.
            int id = -1;
            for (size_t e = 0; e < n && id < 0; ++e) {
                bool ok = true;
                for (size_t x = 0; x < n; ++x)
                    if (g.table[e][x] != static_cast<int>(x) ||
                        g.table[x][e] != static_cast<int>(x))
                        ok = false;
                if (ok) id = static_cast<int>(e);
            }
            if (id < 0) throw ValidationError("multiplication table has no identity element");
            for (size_t a = 0; a < n; ++a) {
                bool has_inv = false;
                for (size_t b = 0; b < n; ++b)
                    if (g.table[a][b] == id && g.table[b][a] == id) has_inv = true;
                if (!has_inv)
                    throw ValidationError("element " + std::to_string(a) + " has no inverse");
            }
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    for (size_t e = 0; e < n; ++e)
                        if (g.table[g.table[a][b]][e] != g.table[a][g.table[b][e]])
                            throw ValidationError("multiplication table is not associative at (" +
                                                  std::to_string(a) + "," + std::to_string(b) +
                                                  "," + std::to_string(e) + ")");
            auto names = std::make_shared<std::vector<std::string>>();
            for (size_t i = 0; i < n; ++i)
                names->push_back(g.element_names.size() == n ? g.element_names[i]
                                                             : "g" + std::to_string(i));
            auto index = std::make_shared<std::map<std::string, int>>();
            for (size_t i = 0; i < n; ++i) (*index)[(*names)[i]] = static_cast<int>(i);
            auto table = std::make_shared<std::vector<std::vector<int>>>(g.table);
            m.identity_label = (*names)[id];
            m.mul = [names, index, table](const std::string& a, const std::string& b) {
                return (*names)[(*table)[index->at(a)][index->at(b)]];
            };
            std::set<int> gens(g.table_generators.begin(), g.table_generators.end());
            if (g.symmetrize) {
                for (int s : g.table_generators)
                    for (size_t b = 0; b < n; ++b)
                        if (g.table[s][b] == id) gens.insert(static_cast<int>(b));
            }
            for (int s : gens) {
                if (s < 0 || s >= static_cast<int>(n))
                    throw ValidationError("generator index out of range");
                if (s != id) m.gen_labels.push_back((*names)[s]);
            }
            break;
        }
        case GroupBall::Family::Cyclic: {
            if (g.modulus < 1) throw ValidationError("cyclic modulus must be >= 1");
            long n = g.modulus;
            m.identity_label = "0";
            m.mul = [n](const std::string& a, const std::string& b) {
                long x = (std::stol(a) + std::stol(b)) % n;
                return std::to_string((x + n) % n);
            };
            std::set<long> gens;
            for (long s : g.int_generators) {
                gens.insert(((s % n) + n) % n);
                if (g.symmetrize) gens.insert(((-s % n) + n) % n);
            }
            for (long s : gens)
                if (s != 0) m.gen_labels.push_back(std::to_string(s));
            break;
        }
        case GroupBall::Family::FreeAbelian: {
            if (g.rank < 1) throw ValidationError("free abelian rank must be >= 1");
            int k = g.rank;
            m.identity_label = fa_label(std::vector<long>(k, 0));
            m.mul = [k](const std::string& a, const std::string& b) {
                auto va = fa_parse(a), vb = fa_parse(b);
                std::vector<long> v(k, 0);
                for (int i = 0; i < k; ++i) v[i] = va[i] + vb[i];
                return fa_label(v);
            };
            for (int i = 0; i < k; ++i) {
                std::vector<long> v(k, 0);
                v[i] = 1;
                m.gen_labels.push_back(fa_label(v));
                if (g.symmetrize) {
                    v[i] = -1;
                    m.gen_labels.push_back(fa_label(v));
                }
            }
            break;
        }
        case GroupBall::Family::FreeGroup: {
            if (g.rank < 1 || g.rank > 26) throw ValidationError("free group rank must be 1..26");
            m.identity_label = "";
            m.mul = [](const std::string& a, const std::string& b) { return fg_reduce(a + b); };
            for (int i = 0; i < g.rank; ++i) {
                m.gen_labels.push_back(std::string(1, static_cast<char>('a' + i)));
                if (g.symmetrize)
                    m.gen_labels.push_back(std::string(1, static_cast<char>('A' + i)));
            }
            break;
        }
    }
    std::sort(m.gen_labels.begin(), m.gen_labels.end());
    m.gen_labels.erase(std::unique(m.gen_labels.begin(), m.gen_labels.end()), m.gen_labels.end());
    return m;
}

}  // namespace

GroupBallResult from_group(const GroupBall& g) {
    if (g.radius < 0) throw UsageError("group ball radius must be non-negative");
    GroupModel model = make_model(g);

    // Word lengths by breadth-first search from the identity.
    std::map<std::string, long> wl;
    wl[model.identity_label] = 0;
    std::deque<std::string> frontier{model.identity_label};
    for (long depth = 0; depth < g.radius && !frontier.empty(); ++depth) {
        std::deque<std::string> next;
        for (const auto& u : frontier)
            for (const auto& s : model.gen_labels) {
                std::string v = model.mul(u, s);
                if (wl.emplace(v, depth + 1).second) next.push_back(v);
            }
        frontier = std::move(next);
    }
    bool whole = true;
    for (const auto& u : frontier)
        for (const auto& s : model.gen_labels)
            if (!wl.count(model.mul(u, s))) whole = false;

    GroupBallResult out;
    out.whole_group = whole;
    for (const auto& [e, l] : wl) out.word_lengths.push_back({e, l});

    FCat c;
    ObjId star = c.add_object("*");
    std::map<std::string, MorId> mor;
    mor[model.identity_label] = c.identity(star);
    for (const auto& [e, l] : wl) {
        if (e == model.identity_label) continue;
        mor[e] = c.add_morphism(star, star, Exponent(Rational(l)),
                                e.empty() ? "e" : e);
    }
    for (const auto& [a, la] : wl)
        for (const auto& [b, lb] : wl) {
            std::string ab = model.mul(a, b);
            auto it = wl.find(ab);
            if (it == wl.end()) continue;  // product left the ball
            // Diagram order: the path that walks a then b is the product ab.
            c.set_composite(mor[b], mor[a], mor[ab]);
        }
    if (!whole) c.set_truncation(Exponent(Rational(g.radius)));
    c.finalize();
    out.one_object = std::move(c);

    auto model_ptr = std::make_shared<GroupModel>(model);
    out.cayley.symmetric = !g.directed_cayley;
    out.cayley.base = {model.identity_label};
    out.cayley.neighbors = [model_ptr](const std::string& v) {
        std::vector<std::string> ns;
        for (const auto& s : model_ptr->gen_labels) ns.push_back(model_ptr->mul(v, s));
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        return ns;
    };
    return out;
}

FCat kolmogorov_quotient(const FCat& x) {
    if (!x.metric_like())
        throw UsageError("Kolmogorov quotient needs a metric-like category");
    if (x.truncation())
        throw UsageError("Kolmogorov quotient of a truncated ball is not defined");
    int n = x.num_objects();
    // Union-find over zero-distance pairs.
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto zero = [&](int a, int b) {
        auto d1 = x.distance(a, b);
        auto d2 = x.distance(b, a);
        return d1 && d2 && d1->is_zero() && d2->is_zero();
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (zero(a, b)) parent[find(a)] = find(b);

    std::vector<int> reps;
    std::vector<int> cls(n, -1);
    for (int a = 0; a < n; ++a)
        if (find(a) == a) {
            cls[a] = static_cast<int>(reps.size());
            reps.push_back(a);
        }
    for (int a = 0; a < n; ++a) cls[a] = cls[find(a)];

    size_t k = reps.size();
    DistanceMatrix d(k, std::vector<std::optional<Rational>>(k));
    std::vector<std::string> names;
    for (size_t i = 0; i < k; ++i) names.push_back(x.object_name(reps[i]));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            auto e = x.distance(reps[i], reps[j]);
            if (e) d[i][j] = e->value();
        }
    // Inherited distances must not depend on the representative.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto e = x.distance(a, b);
            auto f = d[cls[a]][cls[b]];
            bool same = (!e && !f) || (e && f && e->value() == *f);
            if (!same)
                throw ValidationError("quotient distance ill-defined on (" + x.object_name(a) +
                                      "," + x.object_name(b) + ")");
        }
    return from_metric(d, names);
}

}  // namespace magcat
