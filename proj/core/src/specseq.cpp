#include "magcat/specseq.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "magcat/errors.hpp"

namespace magcat {

FCat from_digraph(const Digraph& d) {
    size_t n = d.vertices.size();
    for (auto [a, b] : d.edges) {
        if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n))
            throw ValidationError("digraph edge index out of range");
        if (a == b) throw ValidationError("digraph has a loop at " + d.vertices[a]);
    }
    std::vector<std::vector<int>> out(n);
    for (auto [a, b] : d.edges) out[a].push_back(b);
    DistanceMatrix dist(n, std::vector<std::optional<Rational>>(n));
    for (size_t s = 0; s < n; ++s) {
        std::vector<long> dd(n, -1);
        dd[s] = 0;
        std::deque<int> queue{static_cast<int>(s)};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : out[u])
                if (dd[v] < 0) {
                    dd[v] = dd[u] + 1;
                    queue.push_back(v);
                }
        }
        for (size_t t = 0; t < n; ++t)
            if (dd[t] >= 0) dist[s][t] = Rational(dd[t]);
    }
    return from_metric(dist, d.vertices);
}

size_t FilteredChainQ::prefix(int n, long p) const {
    if (n < 0 || n > N || p < 0) return 0;
    const auto& g = gens[n];
    size_t k = 0;
    while (k < g.size() && g[k].filtration <= p) ++k;
    return k;
}

FilteredChainQ build_filtered_chain(const FCat& c, long L, int N) {
    for (const auto& m : c.morphisms())
        if (!m.degree.is_integer())
            throw UsageError("filtered nerve needs integral degrees, got " + m.degree.str() +
                             " on " + m.name);
    if (c.truncation() && Rational(L) > c.truncation()->value())
        throw UsageError("filtration cap exceeds the truncation radius");
    if (L < 0 || N < 0) throw UsageError("caps must be non-negative");

    FilteredChainQ fc;
    fc.cat = &c;
    fc.L = L;
    fc.N = N;
    for (const auto& m : c.morphisms())
        fc.max_degree = std::max(fc.max_degree, m.degree.value().get_num().get_si());
    fc.gens.resize(N + 1);
    for (ObjId o = 0; o < c.num_objects(); ++o) fc.gens[0].push_back({{}, o, 0});

    std::vector<MorId> tuple;
    long used = 0;
    std::function<void(ObjId)> extend = [&](ObjId at) {
        int n = static_cast<int>(tuple.size());
        if (n > 0) fc.gens[n].push_back({tuple, -1, used});
        if (n == N) return;
        for (MorId m : c.morphisms_from(at)) {
            const Morphism& mor = c.morphism(m);
            long deg = mor.degree.value().get_num().get_si();
            if (used + deg > L) continue;
            tuple.push_back(m);
            used += deg;
            extend(mor.tgt);
            used -= deg;
            tuple.pop_back();
        }
    };
    for (ObjId o = 0; o < c.num_objects(); ++o) extend(o);

    for (int n = 1; n <= N; ++n) {
        auto& g = fc.gens[n];
        std::stable_sort(g.begin(), g.end(), [](const NerveGen& a, const NerveGen& b) {
            if (a.filtration != b.filtration) return a.filtration < b.filtration;
            return a.tuple < b.tuple;
        });
    }

    fc.boundary.resize(N + 1);
    for (int n = 1; n <= N; ++n) {
        std::map<std::vector<MorId>, size_t> below_tuples;
        std::map<ObjId, size_t> below_objects;
        for (size_t i = 0; i < fc.gens[n - 1].size(); ++i) {
            if (fc.gens[n - 1][i].tuple.empty())
                below_objects[fc.gens[n - 1][i].object] = i;
            else
                below_tuples[fc.gens[n - 1][i].tuple] = i;
        }
        QMatrix d(fc.gens[n - 1].size(), fc.gens[n].size());
        for (size_t col = 0; col < fc.gens[n].size(); ++col) {
            const auto& t = fc.gens[n][col].tuple;
            auto add = [&](const std::vector<MorId>& face, std::optional<ObjId> obj, long sign) {
                if (obj) {
                    auto it = below_objects.find(*obj);
                    if (it == below_objects.end())
                        throw Error("internal: nerve face object missing");
                    d.at(it->second, col) += sign;
                    return;
                }
                auto it = below_tuples.find(face);
                if (it == below_tuples.end()) throw Error("internal: nerve face missing");
                d.at(it->second, col) += sign;
            };
            if (n == 1) {
                add({}, c.morphism(t[0]).tgt, 1);    // d_0 drops the source vertex
                add({}, c.morphism(t[0]).src, -1);   // d_1
            } else {
                add(std::vector<MorId>(t.begin() + 1, t.end()), std::nullopt, 1);
                for (int i = 1; i <= n - 1; ++i) {
                    MorId h = c.compose(t[i], t[i - 1]);
                    std::vector<MorId> face;
                    face.insert(face.end(), t.begin(), t.begin() + (i - 1));
                    face.push_back(h);
                    face.insert(face.end(), t.begin() + i + 1, t.end());
                    add(face, std::nullopt, (i % 2 == 0) ? 1 : -1);
                }
                add(std::vector<MorId>(t.begin(), t.end() - 1), std::nullopt,
                    (n % 2 == 0) ? 1 : -1);
            }
        }
        fc.boundary[n] = std::move(d);
    }
    for (int n = 2; n <= N; ++n)
        if (!(fc.boundary[n - 1] * fc.boundary[n]).is_zero())
            throw Error("internal: nerve boundary does not square to zero");
    return fc;
}

namespace {

// Vectors (columns) spanning { v in F_p C_n : dv in F_t C_{n-1} }, in ambient
// C_n coordinates.
QMatrix relative_cycles(const FilteredChainQ& fc, int n, long p, long t) {
    if (n < 0 || n > fc.N || p < 0) return QMatrix(fc.dim(n), 0);
    size_t cols = fc.prefix(n, p);
    size_t amb = fc.dim(n);
    if (n == 0) {
        // No boundary below: every chain is a relative cycle.
        QMatrix out(amb, cols);
        for (size_t j = 0; j < cols; ++j) out.at(j, j) = 1;
        return out;
    }
    const QMatrix& d = fc.boundary[n];
    size_t keep_from = fc.prefix(n - 1, t);  // rows with filtration > t
    std::vector<size_t> rows, colsel;
    for (size_t i = keep_from; i < fc.dim(n - 1); ++i) rows.push_back(i);
    for (size_t j = 0; j < cols; ++j) colsel.push_back(j);
    QMatrix restricted = submatrix(d, rows, colsel);
    QMatrix kernel = nullspace(restricted);  // coordinates in the F_p prefix
    QMatrix out(amb, kernel.cols());
    for (size_t j = 0; j < kernel.cols(); ++j)
        for (size_t i = 0; i < cols; ++i) out.at(i, j) = kernel.at(i, j);
    return out;
}

}  // namespace

PageEntry page(const FilteredChainQ& fc, int r, long p, long q) {
    if (r < 0) throw UsageError("page index must be non-negative");
    PageEntry out;
    out.r = r;
    out.p = p;
    out.q = q;
    long n = p + q;
    if (n < 0 || p < 0 || n > fc.N) {
        out.presentation = std::make_shared<QuotientSpace>(QMatrix(fc.dim(static_cast<int>(n)), 0),
                                                           QMatrix(fc.dim(static_cast<int>(n)), 0));
        out.cap_limited = n > fc.N;
        return out;
    }
    int nn = static_cast<int>(n);
    out.cap_limited = (nn + 1 > fc.N) || !fc.stage_complete(nn, p) ||
                      !fc.stage_complete(nn + 1, p + r - 1);

    QMatrix z = relative_cycles(fc, nn, p, p - r);
    QMatrix d1 = relative_cycles(fc, nn, p - 1, p - r);
    // d(Z^{r-1}_{p+r-1, n+1}) intersected with F_p.
    QMatrix d2(fc.dim(nn), 0);
    if (nn + 1 <= fc.N) {
        QMatrix lift = relative_cycles(fc, nn + 1, p + r - 1, p);
        if (lift.cols() > 0) d2 = fc.boundary[nn + 1] * lift;
    }
    out.presentation = std::make_shared<QuotientSpace>(concat_cols(d1, d2), z);
    out.dimension = out.presentation->dimension();
    return out;
}

std::vector<long> nerve_homology(const FilteredChainQ& fc) {
    std::vector<long> betti;
    for (int n = 0; n <= fc.N - 1; ++n) {
        size_t dim = fc.dim(n);
        size_t r_here = (n >= 1) ? rank(fc.boundary[n]) : 0;
        size_t r_up = rank(fc.boundary[n + 1]);
        betti.push_back(static_cast<long>(dim - r_here - r_up));
    }
    return betti;
}

// ------------------------------ GLMY oracle --------------------------------

namespace {

using Path = std::vector<int>;

void allowed_paths(const Digraph& d, int p, std::vector<Path>& out) {
    std::vector<std::vector<int>> adj(d.vertices.size());
    for (auto [a, b] : d.edges) adj[a].push_back(b);
    for (auto& v : adj) std::sort(v.begin(), v.end());
    Path cur;
    std::function<void(int)> extend = [&](int at) {
        if (static_cast<int>(cur.size()) == p + 1) {
            out.push_back(cur);
            return;
        }
        for (int v : adj[at]) {
            cur.push_back(v);
            extend(v);
            cur.pop_back();
        }
    };
    for (size_t v = 0; v < d.vertices.size(); ++v) {
        cur = {static_cast<int>(v)};
        extend(static_cast<int>(v));
    }
    std::sort(out.begin(), out.end());
}

bool regular(const Path& p) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] == p[i + 1]) return false;
    return true;
}

}  // namespace

PathHomology path_homology(const Digraph& d, int max_p) {
    // Omega_p in the basis of allowed p-paths, then homology of (Omega, d).
    int top = max_p + 1;
    std::vector<std::vector<Path>> allowed(top + 1);
    for (int p = 0; p <= top; ++p) allowed_paths(d, p, allowed[p]);

    // For each degree, the boundary of allowed paths expressed over all
    // regular faces; rows are split into allowed and non-allowed.
    std::vector<QMatrix> omega(top + 1);          // columns: Omega basis in allowed coords
    std::vector<QMatrix> omega_boundary(top + 1);  // Omega_p -> allowed (p-1) coords
    for (int p = 0; p <= top; ++p) {
        size_t na = allowed[p].size();
        if (p == 0) {
            omega[p] = QMatrix::identity(na);
            omega_boundary[p] = QMatrix(0, na);
            continue;
        }
        std::map<Path, size_t> allowed_index;
        for (size_t i = 0; i < allowed[p - 1].size(); ++i) allowed_index[allowed[p - 1][i]] = i;
        std::map<Path, size_t> extra_index;  // regular but not allowed
        std::vector<std::map<size_t, Rational>> cols_allowed(na), cols_extra(na);
        for (size_t j = 0; j < na; ++j) {
            const Path& path = allowed[p][j];
            for (size_t i = 0; i < path.size(); ++i) {
                Path face;
                face.reserve(path.size() - 1);
                for (size_t k = 0; k < path.size(); ++k)
                    if (k != i) face.push_back(path[k]);
                if (!regular(face)) continue;  // irregular faces are zero
                Rational sign = (i % 2 == 0) ? 1 : -1;
                auto it = allowed_index.find(face);
                if (it != allowed_index.end()) {
                    cols_allowed[j][it->second] += sign;
                } else {
                    auto [eit, inserted] = extra_index.try_emplace(face, extra_index.size());
                    cols_extra[j][eit->second] += sign;
                }
            }
        }
        QMatrix bad(extra_index.size(), na);
        for (size_t j = 0; j < na; ++j)
            for (const auto& [row, val] : cols_extra[j]) bad.at(row, j) = val;
        omega[p] = nullspace(bad);  // allowed-coordinate columns spanning Omega_p
        QMatrix good(allowed[p - 1].size(), na);
        for (size_t j = 0; j < na; ++j)
            for (const auto& [row, val] : cols_allowed[j]) good.at(row, j) = val;
        omega_boundary[p] = good * omega[p];
    }

    PathHomology out;
    for (int p = 0; p <= max_p; ++p) {
        size_t dim_omega = omega[p].cols();
        out.omega_dims.push_back(dim_omega);
        // rank of d : Omega_p -> C(allowed_{p-1}) equals the rank on
        // Omega_{p-1} since the image lies there.
        size_t r_here = (p >= 1) ? rank(omega_boundary[p]) : 0;
        size_t r_up = rank(omega_boundary[p + 1]);
        long betti = static_cast<long>(dim_omega - r_here - r_up);
        out.unreduced.push_back(betti);
        if (p == 0)
            out.reduced.push_back(betti - (d.vertices.empty() ? 0 : 1));
        else
            out.reduced.push_back(betti);
    }
    return out;
}

E2CheckReport e2_vs_path_homology(const Digraph& d, int max_p) {
    long L = max_p + 2;
    int N = max_p + 2;
    FCat c = from_digraph(d);
    FilteredChainQ fc = build_filtered_chain(c, L, N);
    PathHomology oracle = path_homology(d, max_p);

    E2CheckReport report;
    report.all_agree = true;
    for (long p = 0; p <= max_p; ++p) {
        E2CheckRow row;
        row.p = p;
        PageEntry e = page(fc, 2, p, 0);
        row.e2_dim = e.dimension;
        row.oracle = oracle.reduced[p];
        if (p == 0) {
            // The front page entry counts components; the reduced oracle
            // subtracts the augmentation.
            row.agree = static_cast<long>(row.e2_dim) == row.oracle + 1;
            row.note = "component count vs reduced: offset by the augmentation rank";
        } else {
            row.agree = static_cast<long>(row.e2_dim) == row.oracle;
        }
        if (e.cap_limited) {
            row.note += (row.note.empty() ? "" : "; ") + std::string("cap-limited, excluded");
        } else if (!row.agree) {
            report.all_agree = false;
        }
        report.rows.push_back(row);
    }
    return report;
}

// --------------------------- r-homotopy check ------------------------------

namespace {

// Pushforward of nerve generators along a functor (no kill rule: this is the
// plain filtered nerve).
QMatrix nerve_chain_map(const FCatFunctor& F, const FilteredChainQ& dom,
                        const FilteredChainQ& cod, int n) {
    std::map<std::vector<MorId>, size_t> cod_tuples;
    std::map<ObjId, size_t> cod_objects;
    for (size_t i = 0; i < cod.gens[n].size(); ++i) {
        if (cod.gens[n][i].tuple.empty())
            cod_objects[cod.gens[n][i].object] = i;
        else
            cod_tuples[cod.gens[n][i].tuple] = i;
    }
    QMatrix out(cod.dim(n), dom.dim(n));
    for (size_t j = 0; j < dom.gens[n].size(); ++j) {
        const NerveGen& g = dom.gens[n][j];
        if (g.tuple.empty()) {
            out.at(cod_objects.at(F.on_object(g.object)), j) = 1;
            continue;
        }
        std::vector<MorId> image;
        for (MorId m : g.tuple) image.push_back(F.on_morphism(m));
        auto it = cod_tuples.find(image);
        if (it == cod_tuples.end()) throw Error("internal: image nerve generator missing");
        out.at(it->second, j) = 1;
    }
    return out;
}

}  // namespace

RHomotopyReport r_homotopy_invariance_check(const FCatFunctor& F, const FCatFunctor& G,
                                            const RNatural& tau, long L, int N) {
    if (F.dom != G.dom || F.cod != G.cod)
        throw UsageError("r-homotopy check needs parallel functors");
    if (!tau.r.is_integer())
        throw UsageError("integer r required for the page comparison");
    int r = static_cast<int>(tau.r.value().get_num().get_si());
    int page_index = r + 1;

    FilteredChainQ dom = build_filtered_chain(*F.dom, L, N);
    FilteredChainQ cod = build_filtered_chain(*F.cod, L, N);

    RHomotopyReport report;
    report.page = page_index;
    report.all_equal = true;
    std::map<int, std::pair<QMatrix, QMatrix>> pushes;
    long p_max = std::max(L, static_cast<long>(N) * std::max(dom.max_degree, 1L));
    for (long p = 0; p <= p_max; ++p) {
        for (long n = 0; n + 1 <= N; ++n) {
            long q = n - p;
            PageEntry ed = page(dom, page_index, p, q);
            PageEntry ec = page(cod, page_index, p, q);
            if (ed.cap_limited || ec.cap_limited) continue;
            if (ed.dimension == 0) continue;
            auto it = pushes.find(static_cast<int>(n));
            if (it == pushes.end())
                it = pushes
                         .emplace(static_cast<int>(n),
                                  std::make_pair(
                                      nerve_chain_map(F, dom, cod, static_cast<int>(n)),
                                      nerve_chain_map(G, dom, cod, static_cast<int>(n))))
                         .first;
            const QMatrix& push_f = it->second.first;
            const QMatrix& push_g = it->second.second;
            bool equal = true;
            for (size_t j = 0; j < ed.dimension && equal; ++j) {
                std::vector<Rational> v = ed.presentation->basis_vector(j);
                QMatrix col = from_columns(v.size(), {v});
                auto cf = ec.presentation->coordinates((push_f * col).column(0));
                auto cg = ec.presentation->coordinates((push_g * col).column(0));
                if (cf != cg) equal = false;
            }
            RHomotopyRow row{p, q, ed.dimension, ec.dimension, equal};
            if (!equal) report.all_equal = false;
            report.rows.push_back(row);
        }
    }
    return report;
}

}  // namespace magcat
