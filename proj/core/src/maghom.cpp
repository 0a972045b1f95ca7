#include "magcat/maghom.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "magcat/errors.hpp"
#include "magcat/magnitude.hpp"

namespace magcat {

std::string PathGenerator::str(const FCat& c) const {
    if (tuple.empty()) return "(" + c.object_name(object) + ")";
    std::string s = "(";
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ", ";
        s += c.morphism(tuple[i]).name;
    }
    return s + ")";
}

bool is_t1_object(const FCat& c, ObjId a, std::string* witness) {
    for (MorId m : c.morphisms_from(a)) {
        const auto& mor = c.morphism(m);
        if (!mor.is_identity && mor.degree.is_zero()) {
            if (witness) *witness = mor.name;
            return false;
        }
    }
    for (MorId m : c.morphisms_into(a)) {
        const auto& mor = c.morphism(m);
        if (!mor.is_identity && mor.degree.is_zero()) {
            if (witness) *witness = mor.name;
            return false;
        }
    }
    return true;
}

namespace {

void check_preconditions(const FCat& c, const Exponent& ell, const Basepoints& bp) {
    for (auto obj : {bp.a, bp.b}) {
        if (!obj) continue;
        std::string witness;
        if (!is_t1_object(c, *obj, &witness))
            throw UsageError("basepoint " + c.object_name(*obj) +
                             " is not T1: witness morphism " + witness);
    }
    if (bp.b && !bp.a) throw UsageError("endpoint without a basepoint");
    if (c.truncation() && ell > *c.truncation())
        throw UsageError("grading " + ell.str() + " exceeds the truncation radius " +
                         c.truncation()->str());
}

// Composable tuples with total degree exactly ell, lexicographic in the
// morphism ids. `allow_identities` switches the un-normalized flavour.
// Enumeration is bounded by max_n, so uniformity is not required here.
std::vector<std::vector<PathGenerator>> enumerate_generators(const FCat& c, const Exponent& ell,
                                                             int max_n, const Basepoints& bp,
                                                             bool allow_identities) {
    std::vector<std::vector<PathGenerator>> gens(max_n + 1);
    if (ell.is_zero()) {
        if (bp.a) {
            if (!bp.b || *bp.b == *bp.a) gens[0].push_back({{}, *bp.a, *bp.a, *bp.a, Exponent()});
        } else {
            for (ObjId o = 0; o < c.num_objects(); ++o)
                gens[0].push_back({{}, o, o, o, Exponent()});
        }
    }

    std::vector<MorId> tuple;
    std::function<void(ObjId, const Rational&)> extend = [&](ObjId at, const Rational& used) {
        int n = static_cast<int>(tuple.size());
        if (n > 0 && used == ell.value()) {
            if (!bp.b || c.morphism(tuple.back()).tgt == *bp.b) {
                PathGenerator g;
                g.tuple = tuple;
                g.src = c.morphism(tuple.front()).src;
                g.tgt = c.morphism(tuple.back()).tgt;
                g.degree = ell;
                gens[n].push_back(std::move(g));
            }
        }
        if (n == max_n) return;
        for (MorId m : c.morphisms_from(at)) {
            const Morphism& mor = c.morphism(m);
            if (mor.is_identity && !allow_identities) continue;
            Rational total = used + mor.degree.value();
            if (total > ell.value()) continue;
            tuple.push_back(m);
            extend(mor.tgt, total);
            tuple.pop_back();
        }
    };
    if (bp.a) {
        extend(*bp.a, Rational(0));
    } else {
        for (ObjId o = 0; o < c.num_objects(); ++o) extend(o, Rational(0));
    }
    return gens;
}

struct GeneratorIndex {
    std::map<std::vector<MorId>, size_t> by_tuple;
    std::map<ObjId, size_t> by_object;

    explicit GeneratorIndex(const std::vector<PathGenerator>& gens) {
        for (size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].tuple.empty())
                by_object[gens[i].object] = i;
            else
                by_tuple[gens[i].tuple] = i;
        }
    }
    std::optional<size_t> find_tuple(const std::vector<MorId>& t) const {
        auto it = by_tuple.find(t);
        if (it == by_tuple.end()) return std::nullopt;
        return it->second;
    }
    std::optional<size_t> find_object(ObjId o) const {
        auto it = by_object.find(o);
        if (it == by_object.end()) return std::nullopt;
        return it->second;
    }
};

void assert_complex(const ChainComplexZ& cc) {
    for (size_t n = 2; n < cc.boundary.size(); ++n) {
        const IMatrix& a = cc.boundary[n - 1];
        const IMatrix& b = cc.boundary[n];
        if (a.rows() == 0 || a.cols() == 0 || b.rows() == 0 || b.cols() == 0) continue;
        if (!(a * b).is_zero()) throw Error("internal: boundary does not square to zero");
    }
}

ChainComplexZ build_complex(const FCat& c, const Exponent& ell, int max_n, const Basepoints& bp,
                            bool normalized) {
    ChainComplexZ cc;
    cc.gens = enumerate_generators(c, ell, max_n, bp, !normalized);
    cc.boundary.resize(max_n + 1);
    for (int n = 1; n <= max_n; ++n) {
        GeneratorIndex below(cc.gens[n - 1]);
        IMatrix d(cc.gens[n - 1].size(), cc.gens[n].size());
        for (size_t col = 0; col < cc.gens[n].size(); ++col) {
            const auto& t = cc.gens[n][col].tuple;
            // Endpoint faces survive the associated graded iff the dropped
            // morphism has degree zero. With a T1 basepoint a degree-0 first
            // morphism is an identity, so the source stays pinned.
            {
                const Morphism& first = c.morphism(t.front());
                if (first.degree.is_zero()) {
                    if (n == 1) {
                        if (auto row = below.find_object(first.tgt)) d.at(*row, col) += 1;
                    } else {
                        std::vector<MorId> rest(t.begin() + 1, t.end());
                        if (auto row = below.find_tuple(rest)) d.at(*row, col) += 1;
                    }
                }
            }
            for (int i = 1; i <= n - 1; ++i) {
                MorId f = t[i - 1], g = t[i];
                if (!c.has_composite(g, f)) continue;
                MorId h = c.compose(g, f);
                const Morphism& mh = c.morphism(h);
                if (mh.degree != c.morphism(f).degree + c.morphism(g).degree) continue;
                if (normalized && mh.is_identity) continue;
                std::vector<MorId> face;
                face.reserve(t.size() - 1);
                face.insert(face.end(), t.begin(), t.begin() + (i - 1));
                face.push_back(h);
                face.insert(face.end(), t.begin() + i + 1, t.end());
                if (auto row = below.find_tuple(face)) {
                    if (i % 2 == 0)
                        d.at(*row, col) += 1;
                    else
                        d.at(*row, col) -= 1;
                }
            }
            {
                const Morphism& last = c.morphism(t.back());
                if (last.degree.is_zero()) {
                    long sign = (n % 2 == 0) ? 1 : -1;
                    if (n == 1) {
                        if (auto row = below.find_object(last.src)) d.at(*row, col) += sign;
                    } else {
                        std::vector<MorId> rest(t.begin(), t.end() - 1);
                        if (auto row = below.find_tuple(rest)) d.at(*row, col) += sign;
                    }
                }
            }
        }
        cc.boundary[n] = std::move(d);
    }
    assert_complex(cc);
    return cc;
}

}  // namespace

ChainComplexZ mc_complex(const FCat& c, const Exponent& ell, int max_n, Basepoints bp) {
    check_preconditions(c, ell, bp);
    return build_complex(c, ell, max_n, bp, true);
}

ChainComplexZ mc_complex_unnormalized(const FCat& c, const Exponent& ell, int max_n,
                                      Basepoints bp) {
    check_preconditions(c, ell, bp);
    return build_complex(c, ell, max_n, bp, false);
}

HomologySummary homology_at(const ChainComplexZ& cc, int n) {
    if (n < 0 || n >= static_cast<int>(cc.gens.size()))
        throw UsageError("homology degree outside the built complex");
    if (n + 1 >= static_cast<int>(cc.boundary.size()))
        throw UsageError("homology at the top chain degree needs max_n >= n + 1");
    return homology_summary(cc.gens[n].size(), cc.boundary[n], cc.boundary[n + 1]);
}

HomologySummary magnitude_homology(const FCat& c, const Exponent& ell, int n, Basepoints bp) {
    ChainComplexZ cc = mc_complex(c, ell, n + 1, bp);
    return homology_at(cc, n);
}

EulerCheckReport euler_categorification_check(const FCat& c, const Exponent& cutoff, int max_n) {
    Classification cls = classify(c);
    if (!cls.tame) throw StrategyError("categorification check needs a tame category");
    long bound = longest_nondegenerate_path(c, cutoff);
    if (max_n < bound)
        throw UsageError("max_n = " + std::to_string(max_n) +
                         " is below the boundedness bound " + std::to_string(bound));

    NSeries mag = magnitude(c, cutoff);
    // Exponents that can carry either a magnitude term or a chain generator:
    // all realizable path lengths <= cutoff, plus zero.
    std::set<Rational> exponents;
    exponents.insert(Rational(0));
    {
        std::set<std::pair<ObjId, Rational>> seen;
        std::vector<std::pair<ObjId, Rational>> stack;
        for (ObjId a = 0; a < c.num_objects(); ++a) {
            stack.push_back({a, Rational(0)});
            seen.insert({a, Rational(0)});
        }
        while (!stack.empty()) {
            auto [at, used] = stack.back();
            stack.pop_back();
            for (MorId m : c.morphisms_from(at)) {
                const Morphism& mor = c.morphism(m);
                if (mor.is_identity) continue;
                Rational total = used + mor.degree.value();
                if (total > cutoff.value()) continue;
                exponents.insert(total);
                if (seen.insert({mor.tgt, total}).second) stack.push_back({mor.tgt, total});
            }
        }
    }

    EulerCheckReport report;
    report.path_bound = bound;
    report.equal = true;
    for (const Rational& e : exponents) {
        Exponent ell(e);
        ChainComplexZ cc = mc_complex(c, ell, max_n + 1);
        EulerCheckRow row;
        row.ell = ell;
        row.magnitude_coefficient = mag.coefficient(ell);
        Integer chi(0);
        for (int n = 0; n <= max_n; ++n) {
            HomologySummary h = homology_at(cc, n);
            row.betti.push_back(h.betti);
            chi += (n % 2 == 0) ? Integer(h.betti) : Integer(-h.betti);
        }
        row.euler_characteristic = chi;
        if (Rational(chi) != row.magnitude_coefficient) {
            if (report.equal) report.first_divergence = ell;
            report.equal = false;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

// ------------------------- Hochschild comparison ---------------------------

namespace {

// Generator of the ell-graded Hochschild complex: a tuple of morphisms (no
// composability constraint) of total degree ell, and a module basis pair.
struct HGen {
    std::vector<MorId> tuple;
    ObjId a = -1, b = -1;
    bool operator<(const HGen& o) const {
        if (tuple != o.tuple) return tuple < o.tuple;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

std::vector<HGen> hochschild_generators(const FCat& c, const Exponent& ell, int n) {
    std::vector<HGen> out;
    std::vector<MorId> tuple;
    std::function<void(const Rational&)> extend = [&](const Rational& used) {
        if (static_cast<int>(tuple.size()) == n) {
            if (used == ell.value())
                for (ObjId a = 0; a < c.num_objects(); ++a)
                    for (ObjId b = 0; b < c.num_objects(); ++b) out.push_back({tuple, a, b});
            return;
        }
        for (const auto& m : c.morphisms()) {
            Rational total = used + m.degree.value();
            if (total > ell.value()) continue;
            tuple.push_back(m.id);
            extend(total);
            tuple.pop_back();
        }
    };
    extend(Rational(0));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

HochschildCheckReport hochschild_graded_check(const FCat& c, const Exponent& ell, int max_n,
                                              long guardrail_cells) {
    check_preconditions(c, ell, {});
    // Pre-grading size estimate |Mor|^n |Ob|^2, summed over chain degrees.
    double cells = 0;
    for (int n = 0; n <= max_n; ++n) {
        double t = 1;
        for (int i = 0; i < n; ++i) t *= c.num_morphisms();
        cells += t * c.num_objects() * c.num_objects();
    }
    if (cells > static_cast<double>(guardrail_cells))
        throw ResourceError("Hochschild complex would have about " + std::to_string(cells) +
                            " cells; guardrail is " + std::to_string(guardrail_cells));

    std::vector<std::vector<HGen>> gens(max_n + 1);
    size_t total = 0;
    for (int n = 0; n <= max_n; ++n) {
        if (n == 0) {
            if (ell.is_zero())
                for (ObjId a = 0; a < c.num_objects(); ++a)
                    for (ObjId b = 0; b < c.num_objects(); ++b) gens[0].push_back({{}, a, b});
        } else {
            gens[n] = hochschild_generators(c, ell, n);
        }
        total += gens[n].size();
    }

    std::vector<IMatrix> boundary(max_n + 1);
    for (int n = 1; n <= max_n; ++n) {
        std::map<HGen, size_t> below;
        for (size_t i = 0; i < gens[n - 1].size(); ++i) below[gens[n - 1][i]] = i;
        IMatrix d(gens[n - 1].size(), gens[n].size());
        for (size_t col = 0; col < gens[n].size(); ++col) {
            const HGen& g = gens[n][col];
            const Morphism& first = c.morphism(g.tuple.front());
            const Morphism& last = c.morphism(g.tuple.back());
            // m . r_1 : right action survives the graded piece iff deg r_1 = 0.
            if (first.degree.is_zero() && first.src == g.b) {
                HGen face{std::vector<MorId>(g.tuple.begin() + 1, g.tuple.end()), g.a, first.tgt};
                auto it = below.find(face);
                if (it != below.end()) d.at(it->second, col) += 1;
            }
            // Ring products r_i r_{i+1} = f_{i+1} o f_i in the graded algebra.
            for (int i = 1; i <= n - 1; ++i) {
                MorId f = g.tuple[i - 1], gg = g.tuple[i];
                if (c.morphism(f).tgt != c.morphism(gg).src) continue;
                if (!c.has_composite(gg, f)) continue;
                MorId h = c.compose(gg, f);
                if (c.morphism(h).degree != c.morphism(f).degree + c.morphism(gg).degree) continue;
                HGen face;
                face.a = g.a;
                face.b = g.b;
                face.tuple.insert(face.tuple.end(), g.tuple.begin(), g.tuple.begin() + (i - 1));
                face.tuple.push_back(h);
                face.tuple.insert(face.tuple.end(), g.tuple.begin() + i + 1, g.tuple.end());
                auto it = below.find(face);
                if (it != below.end()) d.at(it->second, col) += (i % 2 == 0) ? 1 : -1;
            }
            // r_n . m : left action, again degree zero only.
            if (last.degree.is_zero() && last.tgt == g.a) {
                HGen face{std::vector<MorId>(g.tuple.begin(), g.tuple.end() - 1), last.src, g.b};
                auto it = below.find(face);
                if (it != below.end()) d.at(it->second, col) += (n % 2 == 0) ? 1 : -1;
            }
        }
        boundary[n] = std::move(d);
    }
    for (int n = 2; n <= max_n; ++n)
        if (boundary[n - 1].rows() && boundary[n].rows() && boundary[n - 1].cols() &&
            boundary[n].cols() && !(boundary[n - 1] * boundary[n]).is_zero())
            throw Error("internal: Hochschild boundary does not square to zero");

    HochschildCheckReport report;
    report.hochschild_generators = total;
    report.equal = true;
    for (int n = 0; n + 1 <= max_n; ++n) {
        HochschildCheckRow row;
        row.n = n;
        row.hochschild = homology_summary(gens[n].size(), n >= 1 ? boundary[n] : IMatrix(),
                                          boundary[n + 1]);
        row.magnitude = magnitude_homology(c, ell, n);
        if (!(row.hochschild == row.magnitude)) report.equal = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

// ----------------------------- induced maps --------------------------------

namespace {

QMatrix to_q(const IMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) out.at(i, j) = Rational(m.at(i, j));
    return out;
}

// Chain map in one degree: strictly filtered pushforward with the kill rule.
IMatrix chain_map_matrix(const FCatFunctor& F, const std::vector<PathGenerator>& dom_gens,
                         const std::vector<PathGenerator>& cod_gens, const Exponent& ell) {
    GeneratorIndex cod_index(cod_gens);
    IMatrix out(cod_gens.size(), dom_gens.size());
    for (size_t col = 0; col < dom_gens.size(); ++col) {
        const PathGenerator& g = dom_gens[col];
        if (g.tuple.empty()) {
            if (auto row = cod_index.find_object(F.on_object(g.object))) out.at(*row, col) = 1;
            continue;
        }
        std::vector<MorId> image;
        Rational total(0);
        bool killed = false;
        for (MorId m : g.tuple) {
            MorId fm = F.on_morphism(m);
            if (F.cod->morphism(fm).is_identity) {
                killed = true;
                break;
            }
            image.push_back(fm);
            total += F.cod->morphism(fm).degree.value();
        }
        if (killed || total != ell.value()) continue;
        if (auto row = cod_index.find_tuple(image)) out.at(*row, col) = 1;
    }
    return out;
}

}  // namespace

bool InducedMap::is_identity() const {
    if (dom_betti != cod_betti) return false;
    return matrix == QMatrix::identity(static_cast<size_t>(dom_betti));
}

InducedMap induced_map(const FCatFunctor& f, const Exponent& ell, int n, Basepoints bp) {
    Basepoints cod_bp;
    if (bp.a) cod_bp.a = f.on_object(*bp.a);
    if (bp.b) cod_bp.b = f.on_object(*bp.b);
    ChainComplexZ dom = mc_complex(*f.dom, ell, n + 1, bp);
    ChainComplexZ cod = mc_complex(*f.cod, ell, n + 1, cod_bp);

    IMatrix phi_n = chain_map_matrix(f, dom.gens[n], cod.gens[n], ell);
    // Chain map squares with the boundary, as sanity assertions.
    auto check_square = [](const IMatrix& lhs, const IMatrix& rhs) {
        for (size_t i = 0; i < lhs.rows(); ++i)
            for (size_t j = 0; j < lhs.cols(); ++j)
                if (lhs.at(i, j) != rhs.at(i, j))
                    throw Error("internal: pushforward is not a chain map");
    };
    {
        IMatrix phi_n1 = chain_map_matrix(f, dom.gens[n + 1], cod.gens[n + 1], ell);
        check_square(phi_n * dom.boundary[n + 1], cod.boundary[n + 1] * phi_n1);
    }
    if (n >= 1) {
        IMatrix phi_below = chain_map_matrix(f, dom.gens[n - 1], cod.gens[n - 1], ell);
        check_square(phi_below * dom.boundary[n], cod.boundary[n] * phi_n);
    }

    auto presentation = [](const ChainComplexZ& cc, int deg) {
        QMatrix cycles = deg >= 1 ? nullspace(to_q(cc.boundary[deg]))
                                  : QMatrix::identity(cc.gens[deg].size());
        QMatrix bdries = to_q(cc.boundary[deg + 1]);
        return QuotientSpace(bdries, cycles);
    };
    QuotientSpace dom_h = presentation(dom, n);
    QuotientSpace cod_h = presentation(cod, n);

    InducedMap out;
    out.dom_betti = static_cast<long>(dom_h.dimension());
    out.cod_betti = static_cast<long>(cod_h.dimension());
    out.matrix = QMatrix(cod_h.dimension(), dom_h.dimension());
    QMatrix phi = to_q(phi_n);
    for (size_t j = 0; j < dom_h.dimension(); ++j) {
        std::vector<Rational> v = dom_h.basis_vector(j);
        QMatrix col = phi * from_columns(v.size(), {v});
        std::vector<Rational> coords = cod_h.coordinates(col.column(0));
        for (size_t i = 0; i < coords.size(); ++i) out.matrix.at(i, j) = coords[i];
    }
    return out;
}

}  // namespace magcat
