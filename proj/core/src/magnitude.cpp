#include "magcat/magnitude.hpp"

#include <algorithm>
#include <map>

#include "magcat/errors.hpp"
#include "magcat/linalg_q.hpp"

namespace magcat {

SeriesMatrix SeriesMatrix::identity(size_t n, const Exponent& cutoff) {
    SeriesMatrix m(n, cutoff);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = NSeries::one(cutoff);
    return m;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
    if (n_ != o.n_) throw UsageError("series matrix product size mismatch");
    SeriesMatrix out(n_, cutoff_);
    out.labels = labels;
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            NSeries acc(cutoff_);
            for (size_t k = 0; k < n_; ++k) {
                if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
                acc = acc + at(i, k) * o.at(k, j);
            }
            out.at(i, j) = acc;
        }
    return out;
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
    if (n_ != o.n_) throw UsageError("series matrix sum size mismatch");
    SeriesMatrix out(n_, cutoff_);
    out.labels = labels;
    for (size_t i = 0; i < n_ * n_; ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& o) const {
    if (n_ != o.n_) throw UsageError("series matrix diff size mismatch");
    SeriesMatrix out(n_, cutoff_);
    out.labels = labels;
    for (size_t i = 0; i < n_ * n_; ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

bool SeriesMatrix::operator==(const SeriesMatrix& o) const {
    if (n_ != o.n_) return false;
    for (size_t i = 0; i < n_ * n_; ++i)
        if (!(data_[i] == o.data_[i])) return false;
    return true;
}

bool SeriesMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

std::optional<Exponent> SeriesMatrix::min_exponent() const {
    std::optional<Exponent> best;
    for (const auto& s : data_) {
        if (s.is_zero()) continue;
        Exponent e = s.min_exponent();
        if (!best || e < *best) best = e;
    }
    return best;
}

NSeries SeriesMatrix::row_sum(size_t i) const {
    NSeries acc(cutoff_);
    for (size_t j = 0; j < n_; ++j) acc = acc + at(i, j);
    return acc;
}

NSeries SeriesMatrix::col_sum(size_t j) const {
    NSeries acc(cutoff_);
    for (size_t i = 0; i < n_; ++i) acc = acc + at(i, j);
    return acc;
}

NSeries SeriesMatrix::total_sum() const {
    NSeries acc(cutoff_);
    for (const auto& s : data_) acc = acc + s;
    return acc;
}

SeriesMatrix SeriesMatrix::as_truncated() const {
    SeriesMatrix out = *this;
    for (auto& s : out.data_) s = s.as_truncated();
    return out;
}

// ---------------------------------------------------------------------------

std::string Classification::str() const {
    std::string s;
    s += finite ? "finite" : "infinite";
    s += finite_type ? ", finite type" : "";
    if (uniform) {
        s += ", uniform";
        if (epsilon) s += " (epsilon = " + epsilon->str() + ")";
    }
    s += tame ? ", tame" : ", not tame";
    s += quasi_tame ? ", quasi-tame" : ", not quasi-tame";
    if (degenerate_witness) s += ", degenerate pair " + *degenerate_witness;
    if (cycle_witness) s += ", degree-0 cycle " + *cycle_witness;
    if (truncation) s += ", truncated at radius " + truncation->str();
    return s;
}

Classification classify(const FCat& c) {
    Classification out;
    out.truncation = c.truncation();

    bool any_nonid = false;
    bool any_zero_nonid = false;
    std::optional<Exponent> min_pos;
    out.all_degrees_zero = true;
    for (const auto& m : c.morphisms()) {
        if (m.is_identity) continue;
        any_nonid = true;
        if (m.degree.is_zero())
            any_zero_nonid = true;
        else {
            out.all_degrees_zero = false;
            if (!min_pos || m.degree < *min_pos) min_pos = m.degree;
        }
    }
    out.uniform = !any_zero_nonid;
    if (out.uniform && any_nonid) out.epsilon = min_pos;

    // Boundedly many bounded-length paths fail exactly when the degree-0
    // non-identity morphisms admit a composable cycle.
    std::vector<MorId> zero_mors;
    for (const auto& m : c.morphisms())
        if (!m.is_identity && m.degree.is_zero()) zero_mors.push_back(m.id);
    std::map<MorId, int> state;  // 0 unseen, 1 on stack, 2 done
    std::vector<MorId> stack;
    std::optional<std::string> cycle;
    std::function<bool(MorId)> dfs = [&](MorId f) {
        state[f] = 1;
        stack.push_back(f);
        for (MorId g : zero_mors) {
            if (c.morphism(f).tgt != c.morphism(g).src) continue;
            if (state[g] == 1) {
                std::string w;
                auto it = std::find(stack.begin(), stack.end(), g);
                for (; it != stack.end(); ++it) w += c.morphism(*it).name + " ~ ";
                cycle = w + c.morphism(g).name;
                return true;
            }
            if (state[g] == 0 && dfs(g)) return true;
        }
        stack.pop_back();
        state[f] = 2;
        return false;
    };
    for (MorId f : zero_mors)
        if (state[f] == 0 && dfs(f)) break;
    out.cycle_witness = cycle;
    out.tame = !cycle.has_value();
    out.quasi_tame = out.tame;  // the two agree for finite categories

    if (c.metric_like()) {
        for (ObjId a = 0; a < c.num_objects() && !out.degenerate_witness; ++a)
            for (ObjId b = 0; b < c.num_objects(); ++b) {
                if (a == b) continue;
                auto d1 = c.distance(a, b), d2 = c.distance(b, a);
                if (d1 && d2 && d1->is_zero() && d2->is_zero()) {
                    out.degenerate_witness = "(" + c.object_name(a) + "," + c.object_name(b) + ")";
                    break;
                }
            }
    }
    out.skeletal_no_endos = out.all_degrees_zero && out.tame;
    return out;
}

SeriesMatrix zeta_matrix(const FCat& c, const Exponent& cutoff) {
    size_t n = c.num_objects();
    SeriesMatrix z(n, cutoff);
    for (size_t a = 0; a < n; ++a) {
        z.labels.push_back(c.object_name(static_cast<ObjId>(a)));
        for (size_t b = 0; b < n; ++b) {
            std::vector<SeriesTerm> terms;
            for (MorId m : c.hom(static_cast<ObjId>(a), static_cast<ObjId>(b)))
                terms.push_back({c.morphism(m).degree, Rational(1)});
            z.at(a, b) = NSeries(std::move(terms), cutoff);
        }
    }
    return z;
}

namespace {

// Accumulates sum_{k>=0} base^k; returns whether the iteration closed off
// exactly (some power vanished identically before reaching the cutoff).
SeriesMatrix neumann_sum(const SeriesMatrix& base, bool* exact_out) {
    size_t n = base.size();
    const Exponent& cutoff = base.cutoff();
    SeriesMatrix acc = SeriesMatrix::identity(n, cutoff);
    acc.labels = base.labels;
    bool exact = true;
    if (!base.is_zero()) {
        auto eps = base.min_exponent();
        if (eps->is_zero())
            throw StrategyError(
                "Neumann iteration does not terminate: a non-identity hom term sits at degree 0 "
                "(input is not uniform)");
        SeriesMatrix power = SeriesMatrix::identity(n, cutoff);
        for (;;) {
            power = power * base;
            if (power.is_zero()) break;
            acc = acc + power;
            if (*power.min_exponent() + *eps > cutoff) {
                exact = false;  // further powers only touch exponents beyond the cutoff
                break;
            }
        }
    }
    if (exact_out) *exact_out = exact;
    return exact ? acc : acc.as_truncated();
}

}  // namespace

SeriesMatrix zeta_inverse(const SeriesMatrix& z, InverseStrategy strategy) {
    size_t n = z.size();
    const Exponent& cutoff = z.cutoff();

    if (strategy == InverseStrategy::Auto) {
        SeriesMatrix probe = SeriesMatrix::identity(n, cutoff) - z;
        auto eps = probe.min_exponent();
        strategy = (!eps || !eps->is_zero()) ? InverseStrategy::Neumann
                                             : InverseStrategy::ConstantTermLU;
    }

    SeriesMatrix inv(n, cutoff);
    if (strategy == InverseStrategy::Neumann) {
        SeriesMatrix base = SeriesMatrix::identity(n, cutoff) - z;
        base.labels = z.labels;
        inv = neumann_sum(base, nullptr);
    } else {
        QMatrix z0(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) z0.at(i, j) = z.at(i, j).coefficient(Exponent());
        std::vector<Rational> witness;
        auto z0inv = inverse(z0, &witness);
        if (!z0inv) {
            std::string w = "kernel witness (";
            for (size_t i = 0; i < witness.size(); ++i)
                w += (i ? ", " : "") + to_string(witness[i]);
            throw NotInvertibleError("constant-term matrix is singular; " + w + ")");
        }
        // zeta = Z0 (I + W) with W = Z0^{-1} (zeta - Z0); all exponents of W
        // are positive, so the Neumann sum over -W terminates.
        SeriesMatrix z0inv_s(n, cutoff);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (z0inv->at(i, j) != 0)
                    z0inv_s.at(i, j) = NSeries::constant(z0inv->at(i, j), cutoff);
        SeriesMatrix pos = z;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                std::vector<SeriesTerm> terms;
                for (const auto& t : z.at(i, j).terms())
                    if (!t.exponent.is_zero()) terms.push_back(t);
                bool ex = z.at(i, j).is_exact();
                pos.at(i, j) = NSeries(std::move(terms), cutoff, ex);
            }
        SeriesMatrix w = z0inv_s * pos;
        SeriesMatrix minus_w(n, cutoff);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) minus_w.at(i, j) = -w.at(i, j);
        inv = neumann_sum(minus_w, nullptr) * z0inv_s;
    }
    inv.labels = z.labels;

    SeriesMatrix id = SeriesMatrix::identity(n, cutoff);
    if (!((z * inv).as_truncated() == id.as_truncated() &&
          (inv * z).as_truncated() == id.as_truncated()))
        throw Error("internal: zeta inverse verification failed");
    return inv;
}

namespace {

Exponent effective_horizon(const FCat& c, const Exponent& cutoff) {
    if (c.truncation() && *c.truncation() < cutoff) return *c.truncation();
    return cutoff;
}

}  // namespace

WeightVector weighting(const FCat& c, const Exponent& cutoff, InverseStrategy strategy) {
    SeriesMatrix inv = zeta_inverse(zeta_matrix(c, cutoff), strategy);
    WeightVector out;
    out.side = WeightVector::Side::Weighting;
    out.horizon = effective_horizon(c, cutoff);
    for (size_t i = 0; i < inv.size(); ++i) {
        out.labels.push_back(inv.labels[i]);
        out.entries.push_back(inv.row_sum(i));
    }
    return out;
}

WeightVector coweighting(const FCat& c, const Exponent& cutoff, InverseStrategy strategy) {
    SeriesMatrix inv = zeta_inverse(zeta_matrix(c, cutoff), strategy);
    WeightVector out;
    out.side = WeightVector::Side::Coweighting;
    out.horizon = effective_horizon(c, cutoff);
    for (size_t j = 0; j < inv.size(); ++j) {
        out.labels.push_back(inv.labels[j]);
        out.entries.push_back(inv.col_sum(j));
    }
    return out;
}

NSeries magnitude(const FCat& c, const Exponent& cutoff, InverseStrategy strategy) {
    return zeta_inverse(zeta_matrix(c, cutoff), strategy).total_sum();
}

namespace {

struct PathAccum {
    std::map<Rational, Rational> coeffs;
    void add(const Rational& exponent, long sign) { coeffs[exponent] += sign; }
    NSeries to_series(const Exponent& cutoff, bool exact) const {
        std::vector<SeriesTerm> terms;
        for (const auto& [e, v] : coeffs) terms.push_back({Exponent(e), v});
        return NSeries(std::move(terms), cutoff, exact);
    }
};

// Depth-first enumeration of non-degenerate paths with degree budget.
// `forward` walks source-to-target, otherwise target-to-source.
void enumerate_paths(const FCat& c, ObjId at, const Rational& used, const Exponent& cutoff,
                     long parity, bool forward, PathAccum& acc, long* longest, long depth) {
    const auto& step = forward ? c.morphisms_from(at) : c.morphisms_into(at);
    for (MorId m : step) {
        const Morphism& mor = c.morphism(m);
        if (mor.is_identity) continue;
        Rational total = used + mor.degree.value();
        if (total > cutoff.value()) continue;
        acc.add(total, parity);
        if (longest && depth + 1 > *longest) *longest = depth + 1;
        enumerate_paths(c, forward ? mor.tgt : mor.src, total, cutoff, -parity, forward, acc,
                        longest, depth + 1);
    }
}

void require_uniform(const FCat& c, const char* op) {
    Classification cls = classify(c);
    if (!cls.uniform)
        throw StrategyError(std::string(op) +
                            " needs a uniform category (degree-0 non-identity morphisms present" +
                            (cls.cycle_witness ? ": " + *cls.cycle_witness : std::string(")")));
}

}  // namespace

NSeries path_expansion_magnitude(const FCat& c, const Exponent& cutoff) {
    require_uniform(c, "path expansion");
    PathAccum acc;
    acc.add(Rational(0), c.num_objects());
    for (ObjId a = 0; a < c.num_objects(); ++a)
        enumerate_paths(c, a, Rational(0), cutoff, -1, true, acc, nullptr, 0);
    return acc.to_series(cutoff, false);
}

NSeries path_expansion_weighting(const FCat& c, ObjId a, const Exponent& cutoff) {
    require_uniform(c, "path expansion");
    PathAccum acc;
    acc.add(Rational(0), 1);
    enumerate_paths(c, a, Rational(0), cutoff, -1, true, acc, nullptr, 0);
    return acc.to_series(cutoff, false);
}

NSeries path_expansion_coweighting(const FCat& c, ObjId b, const Exponent& cutoff) {
    require_uniform(c, "path expansion");
    PathAccum acc;
    acc.add(Rational(0), 1);
    enumerate_paths(c, b, Rational(0), cutoff, -1, false, acc, nullptr, 0);
    return acc.to_series(cutoff, false);
}

long longest_nondegenerate_path(const FCat& c, const Exponent& cutoff) {
    require_uniform(c, "path length bound");
    PathAccum acc;
    long longest = 0;
    for (ObjId a = 0; a < c.num_objects(); ++a)
        enumerate_paths(c, a, Rational(0), cutoff, -1, true, acc, &longest, 0);
    return longest;
}

std::vector<std::vector<Integer>> mobius(const Poset& p) {
    size_t n = p.elements.size();
    FCat c = from_finite_poset_unit(p);
    // Chains have at most n - 1 steps, so cutoff n keeps every term.
    SeriesMatrix inv = zeta_inverse(zeta_matrix(c, Exponent(Rational(std::max<size_t>(n, 1)))),
                                    InverseStrategy::Neumann);
    std::vector<std::vector<Integer>> mu(n, std::vector<Integer>(n, Integer(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational v = inv.at(i, j).eval_at_one();
            if (v.get_den() != 1) throw Error("internal: non-integer Mobius value");
            mu[i][j] = v.get_num();
        }
    // Independent oracle: direct rational inversion of the incidence matrix.
    auto lt = strict_order(p);
    QMatrix xi(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) xi.at(i, j) = (i == j || lt[i][j]) ? 1 : 0;
    auto direct = inverse(xi);
    if (!direct) throw Error("internal: incidence matrix must be invertible");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (direct->at(i, j) != Rational(mu[i][j]))
                throw Error("internal: Mobius cross-check failed at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
    return mu;
}

PoincareResult poincare_polynomial(const RankedPoset& p) {
    FCat c = from_poset_ranked(p);
    long phi_max = 0;
    for (long v : p.phi) phi_max = std::max(phi_max, v);
    Exponent cutoff(Rational(std::max(phi_max, 1L)));

    Poset base{p.elements, p.covers};
    auto lt = strict_order(base);
    size_t n = p.elements.size();
    int minimum = -1;
    for (size_t i = 0; i < n && minimum < 0; ++i) {
        bool is_min = true;
        for (size_t j = 0; j < n; ++j)
            if (j != i && !lt[i][j]) is_min = false;
        if (is_min) minimum = static_cast<int>(i);
    }

    WeightVector w = weighting(c, cutoff);
    PoincareResult out{w.entries[minimum], w.entries[minimum].negate_variable(),
                       NSeries(cutoff), false};

    auto mu = mobius(base);
    std::vector<SeriesTerm> terms;
    for (size_t a = 0; a < n; ++a) {
        Rational coeff = Rational(mu[minimum][a]) * ((p.phi[a] % 2 == 0) ? 1 : -1);
        terms.push_back({Exponent(Rational(p.phi[a])), coeff});
    }
    out.via_mobius = NSeries(std::move(terms), cutoff);
    out.agree = out.polynomial == out.via_mobius;
    return out;
}

GrowthResult growth_series(const GroupBall& g, const Exponent& cutoff) {
    if (Rational(g.radius) < cutoff.value())
        throw UsageError("growth series horizon error: ball radius " + std::to_string(g.radius) +
                         " < cutoff " + cutoff.str());
    GroupBallResult ball = from_group(g);
    std::vector<SeriesTerm> terms;
    long max_wl = 0;
    for (const auto& [e, l] : ball.word_lengths) {
        terms.push_back({Exponent(Rational(l)), Rational(1)});
        max_wl = std::max(max_wl, l);
    }
    bool exact = ball.whole_group && Rational(max_wl) <= cutoff.value();
    GrowthResult out{NSeries(std::move(terms), cutoff, exact), NSeries(cutoff), WeightVector{},
                     false};
    out.magnitude = out.series.invert();

    FCat cay = from_graph(ball.cayley, Exponent(Rational(g.radius)));
    out.cayley_weighting = weighting(cay, cutoff);
    std::optional<ObjId> id_obj;
    for (const auto& [e, l] : ball.word_lengths)
        if (l == 0) id_obj = cay.object_by_name(e);
    out.cayley_agrees = id_obj && out.cayley_weighting.entries[*id_obj] == out.magnitude;
    return out;
}

}  // namespace magcat
