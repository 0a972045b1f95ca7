// magcat: exact magnitude, magnitude homology and fibration toolkit for
// filtered-set enriched categories (graphs, digraphs, metric spaces, posets,
// finite categories, finitely generated groups).

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <magcat/acceptance.hpp>
#include <magcat/corpus.hpp>
#include <magcat/errors.hpp>
#include <magcat/fcat.hpp>
#include <magcat/fibration.hpp>
#include <magcat/functor.hpp>
#include <magcat/io.hpp>
#include <magcat/maghom.hpp>
#include <magcat/magnitude.hpp>
#include <magcat/specseq.hpp>

using namespace magcat;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string input;
    std::string kind = "graph";
    std::string cutoff = "5";
    std::string format = "text";
    long guardrail_cells = 2000000;
    std::string radius;  // graph ball radius, defaults to the vertex count
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
    auto* in = cmd->add_option("-i,--input", o.input, "input file (text or canonical JSON)");
    if (needs_input) in->required();
    cmd->add_option("-k,--kind", o.kind,
                    "input kind: graph|digraph|metric|poset|category|group|action");
    cmd->add_option("--cutoff", o.cutoff, "series cutoff L as a rational p/q");
    cmd->add_option("--format", o.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--guardrail-cells", o.guardrail_cells, "resource guardrail for big builds");
    cmd->add_option("--radius", o.radius, "ball radius for graph inputs");
}

struct Loaded {
    InputKind kind;
    std::optional<FCat> cat;
    std::optional<GroupBall> group;
    std::optional<PosetInput> poset;
    std::optional<Digraph> digraph;
    std::optional<ActionInput> action;
};

Digraph digraph_from_input(const GraphInput& g) {
    Digraph d;
    d.vertices = g.vertices;
    std::map<std::string, int> index;
    for (size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = static_cast<int>(i);
    for (const auto& [u, v] : g.edges) d.edges.insert({index[u], index[v]});
    return d;
}

Loaded load(const CommonOpts& o) {
    Loaded out;
    out.kind = input_kind_from_name(o.kind);
    std::string text = read_file(o.input);
    switch (out.kind) {
        case InputKind::Graph: {
            GraphInput g = parse_graph(text, true);
            Exponent radius(o.radius.empty() ? Rational(std::max<size_t>(g.vertices.size(), 1))
                                             : parse_rational(o.radius));
            out.cat = from_graph(finite_graph(g.edges, g.vertices, true), radius);
            break;
        }
        case InputKind::Digraph: {
            GraphInput g = parse_graph(text, false);
            out.digraph = digraph_from_input(g);
            out.cat = from_digraph(*out.digraph);
            break;
        }
        case InputKind::Metric: {
            std::vector<std::string> names;
            DistanceMatrix d = parse_metric(text, &names);
            out.cat = from_metric(d, names);
            break;
        }
        case InputKind::Poset: {
            out.poset = parse_poset(text);
            out.cat = from_finite_poset_unit(out.poset->poset);
            break;
        }
        case InputKind::Category:
            out.cat = from_finite_category(parse_category(text));
            break;
        case InputKind::Group: {
            out.group = parse_group(text);
            out.cat = from_group(*out.group).one_object;
            break;
        }
        case InputKind::Action:
            out.action = parse_action(text);
            break;
    }
    return out;
}

const FCat& require_cat(const Loaded& in) {
    if (!in.cat) throw UsageError("this command needs a category-like input");
    return *in.cat;
}

void print_series(const NSeries& s, const std::string& format) {
    if (format == "json")
        std::cout << emit_series_json(s);
    else
        std::cout << s.str() << "\n";
}

json summary_json(const HomologySummary& h) {
    json t = json::array();
    for (const auto& f : h.torsion) t.push_back(to_string(f));
    return json{{"betti", h.betti}, {"torsion", t}};
}

std::string classification_text(const Classification& c) { return c.str() + "\n"; }

GraphInput graph_input_from_file(const std::string& path) {
    return parse_graph(read_file(path), true);
}

// Metric-like category from a file holding either a graph or a metric JSON.
FCat space_from_file(const std::string& path) {
    std::string text = read_file(path);
    bool metric_json = text.find("\"kind\"") != std::string::npos &&
                       text.find("\"metric\"") != std::string::npos;
    if (metric_json) {
        std::vector<std::string> names;
        DistanceMatrix d = parse_metric(text, &names);
        return from_metric(d, names);
    }
    GraphInput g = parse_graph(text, true);
    return from_graph(finite_graph(g.edges, g.vertices, true),
                      Exponent(Rational(std::max<size_t>(g.vertices.size(), 1))));
}

// If the metric is the path metric of its unit-distance edges, the graph
// presentation is canonical; otherwise fall back to the metric matrix.
std::string emit_space(const FCat& total) {
    MetricSpace ms = to_metric_space(total);
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> vertices = ms.points;
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i + 1; j < ms.size(); ++j)
            if (ms.d[i][j] == 1) edges.push_back({ms.points[i], ms.points[j]});
    FCat regraphed = from_graph(finite_graph(edges, vertices, true),
                                Exponent(Rational(std::max<size_t>(vertices.size(), 1))));
    bool is_graph_metric = !regraphed.truncation() &&
                           regraphed.num_objects() == total.num_objects();
    if (is_graph_metric) {
        for (ObjId a = 0; a < total.num_objects() && is_graph_metric; ++a)
            for (ObjId b = 0; b < total.num_objects(); ++b) {
                auto da = total.distance(a, b);
                auto db = regraphed.distance(*regraphed.object_by_name(total.object_name(a)),
                                             *regraphed.object_by_name(total.object_name(b)));
                if (!(da && db && *da == *db)) {
                    is_graph_metric = false;
                    break;
                }
            }
    }
    if (is_graph_metric) {
        GraphInput g;
        g.symmetric = true;
        g.vertices = vertices;
        g.edges = edges;
        return emit_graph(g);
    }
    return emit_metric(distances(total), ms.points);
}

// Twist file lines: "u v : name0 name1 ..." (images of the fiber points).
std::vector<std::pair<std::pair<std::string, std::string>, std::vector<std::string>>>
parse_twists_file(const std::string& text) {
    std::vector<std::pair<std::pair<std::string, std::string>, std::vector<std::string>>> out;
    std::istringstream in(text);
    std::string line;
    int num = 0;
    while (std::getline(in, line)) {
        ++num;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> ts;
        std::string t;
        while (ls >> t) ts.push_back(t);
        if (ts.empty()) continue;
        if (ts.size() < 4 || ts[2] != ":")
            throw ParseError("twists line " + std::to_string(num) +
                             ": expected 'u v : image...'");
        out.push_back({{ts[0], ts[1]}, std::vector<std::string>(ts.begin() + 3, ts.end())});
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact magnitude and magnitude homology of filtered-set enriched categories"};
    app.require_subcommand(1);
    CommonOpts opts;

    auto* cmd_mag = app.add_subcommand("mag", "magnitude series of the input");
    auto* cmd_w = app.add_subcommand("weighting", "weighting vector (row sums of zeta^{-1})");
    auto* cmd_cw =
        app.add_subcommand("coweighting", "coweighting vector (column sums of zeta^{-1})");
    auto* cmd_cls =
        app.add_subcommand("classify", "finite type / uniform / tame classification");
    auto* cmd_val =
        app.add_subcommand("validate", "parse and validate the input, report diagnostics");
    auto* cmd_emit = app.add_subcommand("emit", "canonical JSON emission of the parsed input");
    auto* cmd_mob = app.add_subcommand("mobius", "Mobius function of a poset");
    auto* cmd_poin = app.add_subcommand("poincare", "Poincare polynomial of a ranked poset");
    auto* cmd_growth =
        app.add_subcommand("growth", "growth series of a group ball and its inverse");
    for (auto* c : {cmd_mag, cmd_w, cmd_cw, cmd_cls, cmd_val, cmd_emit, cmd_mob, cmd_poin,
                    cmd_growth})
        add_common(c, opts);

    auto* cmd_hom = app.add_subcommand("homology", "magnitude homology at one bidegree");
    std::string l_value = "1";
    int n_value = 1;
    std::string basepoint, endpoint;
    bool with_chains = false;
    cmd_hom->add_option("--l", l_value, "grading exponent as a rational p/q");
    cmd_hom->add_option("--n", n_value, "chain degree");
    cmd_hom->add_option("--basepoint", basepoint, "restrict first sources to this object");
    cmd_hom->add_option("--endpoint", endpoint, "additionally restrict last targets");
    cmd_hom->add_flag("--chains", with_chains, "include generators and boundary matrices");
    add_common(cmd_hom, opts);

    auto* cmd_euler =
        app.add_subcommand("euler-check", "alternating betti sums against the magnitude");
    int max_n = -1;
    cmd_euler->add_option("--max-n", max_n, "chain-degree bound (defaults to the path bound)");
    add_common(cmd_euler, opts);

    auto* cmd_hoch =
        app.add_subcommand("hochschild-check", "graded Hochschild vs magnitude homology");
    cmd_hoch->add_option("--l", l_value, "grading exponent");
    cmd_hoch->add_option("--max-n", max_n, "build complexes up to this chain degree");
    add_common(cmd_hoch, opts);

    auto* cmd_ss = app.add_subcommand("specseq", "page dimensions of the nerve filtration");
    int page_r = 1, max_p = 3, cap_L = 5, cap_N = 5;
    cmd_ss->add_option("--r", page_r, "page index");
    cmd_ss->add_option("--max-p", max_p, "largest filtration column");
    cmd_ss->add_option("--L", cap_L, "filtration cap");
    cmd_ss->add_option("--N", cap_N, "nerve length cap");
    add_common(cmd_ss, opts);

    auto* cmd_ph = app.add_subcommand("pathhom", "reduced path homology of a digraph");
    cmd_ph->add_option("--max-p", max_p, "top path degree");
    add_common(cmd_ph, opts);

    auto* fib = app.add_subcommand("fib", "metric fibrations");
    fib->require_subcommand(1);
    auto* fib_build = fib->add_subcommand("build", "Grothendieck construction from twist data");
    std::string base_file, fiber_file, twists_file, total_file, map_file;
    fib_build->add_option("--base", base_file, "base graph file")->required();
    fib_build->add_option("--fiber", fiber_file, "fiber graph file")->required();
    fib_build->add_option("--twists", twists_file, "twist list file ('u v : images...')");
    fib_build->add_option("--format", opts.format, "output format: text|json");
    auto* fib_check = fib->add_subcommand("check", "test a projection for the unique-lift law");
    fib_check->add_option("--total", total_file, "total space graph file")->required();
    fib_check->add_option("--base", base_file, "base graph file")->required();
    fib_check->add_option("--map", map_file, "lines 'total_vertex -> base_vertex'")->required();
    auto* fib_prod = fib->add_subcommand("product-check", "Mag E = Mag X * Mag F");
    add_common(fib_prod, opts);

    auto* cmd_check = app.add_subcommand("check", "built-in verification suites");
    std::string check_what = "all", corpus_name = "builtin";
    cmd_check->add_option("what", check_what, "'all'");
    cmd_check->add_option("--corpus", corpus_name, "corpus name (builtin only)");

    CLI11_PARSE(app, argc, argv);

    try {
        Exponent cutoff(parse_rational(opts.cutoff));
        const std::string& fmt = opts.format;

        if (cmd_mag->parsed()) {
            print_series(magnitude(require_cat(load(opts)), cutoff), fmt);
        } else if (cmd_w->parsed() || cmd_cw->parsed()) {
            Loaded in = load(opts);
            WeightVector w = cmd_w->parsed() ? weighting(require_cat(in), cutoff)
                                             : coweighting(require_cat(in), cutoff);
            if (fmt == "json") {
                std::cout << emit_weight_vector_json(w);
            } else {
                for (size_t i = 0; i < w.entries.size(); ++i)
                    std::cout << w.labels[i] << ": " << w.entries[i].str() << "\n";
                if (in.cat->truncation())
                    std::cout << "# values of the infinite object: exact up to q^"
                              << w.horizon.str() << " at the ball base\n";
                else
                    std::cout << "# exact up to q^" << w.horizon.str() << "\n";
            }
        } else if (cmd_cls->parsed() || cmd_val->parsed()) {
            Loaded in = load(opts);
            if (in.kind == InputKind::Action) {
                in.action->build();
                std::cout << (fmt == "json" ? "{\n  \"valid\": true\n}\n"
                                            : "valid metric action\n");
            } else {
                Classification cls = classify(require_cat(in));
                std::cout << (fmt == "json" ? emit_classification_json(cls)
                                            : classification_text(cls));
            }
        } else if (cmd_emit->parsed()) {
            std::string text = read_file(opts.input);
            switch (input_kind_from_name(opts.kind)) {
                case InputKind::Graph: std::cout << emit_graph(parse_graph(text, true)); break;
                case InputKind::Digraph:
                    std::cout << emit_graph(parse_graph(text, false));
                    break;
                case InputKind::Metric: {
                    std::vector<std::string> names;
                    DistanceMatrix d = parse_metric(text, &names);
                    std::cout << emit_metric(d, names);
                    break;
                }
                case InputKind::Poset: std::cout << emit_poset(parse_poset(text)); break;
                case InputKind::Category:
                    std::cout << emit_category(parse_category(text));
                    break;
                case InputKind::Group: std::cout << emit_group(parse_group(text)); break;
                case InputKind::Action: std::cout << emit_action(parse_action(text)); break;
            }
        } else if (cmd_mob->parsed()) {
            Loaded in = load(opts);
            if (!in.poset) throw UsageError("mobius needs --kind poset");
            auto mu = mobius(in.poset->poset);
            if (fmt == "json") {
                json rows = json::array();
                for (const auto& row : mu) {
                    json r = json::array();
                    for (const auto& v : row) r.push_back(to_string(v));
                    rows.push_back(r);
                }
                std::cout << json{{"elements", in.poset->poset.elements}, {"mobius", rows}}.dump(2)
                          << "\n";
            } else {
                for (size_t i = 0; i < mu.size(); ++i) {
                    for (size_t j = 0; j < mu.size(); ++j)
                        std::cout << (j ? " " : "") << to_string(mu[i][j]);
                    std::cout << "\n";
                }
            }
        } else if (cmd_poin->parsed()) {
            Loaded in = load(opts);
            if (!in.poset) throw UsageError("poincare needs --kind poset");
            PoincareResult r = poincare_polynomial(in.poset->ranked());
            if (fmt == "json") {
                json j;
                j["polynomial"] = r.polynomial.str();
                j["weighting_at_min"] = r.weighting_at_min.str();
                j["via_mobius"] = r.via_mobius.str();
                j["agree"] = r.agree;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "pi(q)  = " << r.polynomial.str() << "\n";
                std::cout << "pi(-q) = " << r.weighting_at_min.str() << " (weighting at the minimum)\n";
                std::cout << (r.agree ? "routes agree\n" : "ROUTES DISAGREE\n");
            }
            if (!r.agree) return 1;
        } else if (cmd_growth->parsed()) {
            Loaded in = load(opts);
            if (!in.group) throw UsageError("growth needs --kind group");
            GrowthResult r = growth_series(*in.group, cutoff);
            if (fmt == "json") {
                json j;
                j["series"] = json::parse(emit_series_json(r.series));
                j["magnitude"] = json::parse(emit_series_json(r.magnitude));
                j["cayley_agrees"] = r.cayley_agrees;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "growth    = " << r.series.str() << "\n";
                std::cout << "magnitude = " << r.magnitude.str() << "\n";
                std::cout << (r.cayley_agrees ? "matches the Cayley weighting\n"
                                              : "CAYLEY WEIGHTING MISMATCH\n");
            }
            if (!r.cayley_agrees) return 1;
        } else if (cmd_hom->parsed()) {
            Loaded in = load(opts);
            const FCat& cat = require_cat(in);
            Basepoints bp;
            if (!basepoint.empty()) {
                auto a = cat.object_by_name(basepoint);
                if (!a) throw UsageError("unknown basepoint '" + basepoint + "'");
                bp.a = *a;
            }
            if (!endpoint.empty()) {
                auto b = cat.object_by_name(endpoint);
                if (!b) throw UsageError("unknown endpoint '" + endpoint + "'");
                bp.b = *b;
            }
            Exponent ell(parse_rational(l_value));
            ChainComplexZ cc = mc_complex(cat, ell, n_value + 1, bp);
            HomologySummary h = homology_at(cc, n_value);
            if (fmt == "json") {
                json j;
                j["l"] = ell.str();
                j["n"] = n_value;
                j["summary"] = summary_json(h);
                if (with_chains) {
                    json degrees = json::array();
                    for (int n = 0; n <= n_value + 1; ++n) {
                        json gens = json::array();
                        for (const auto& g : cc.gens[n]) gens.push_back(g.str(cat));
                        json rows = json::array();
                        if (n >= 1)
                            for (size_t i = 0; i < cc.boundary[n].rows(); ++i) {
                                json row = json::array();
                                for (size_t jj = 0; jj < cc.boundary[n].cols(); ++jj)
                                    row.push_back(to_string(cc.boundary[n].at(i, jj)));
                                rows.push_back(row);
                            }
                        degrees.push_back(json{{"n", n}, {"generators", gens}, {"boundary", rows}});
                    }
                    j["chain_complex"] = degrees;
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "MH^" << ell.str() << "_" << n_value << ": " << h.str() << "\n";
            }
        } else if (cmd_euler->parsed()) {
            Loaded in = load(opts);
            const FCat& cat = require_cat(in);
            long bound = longest_nondegenerate_path(cat, cutoff);
            int use_n = max_n >= 0 ? max_n : static_cast<int>(bound);
            EulerCheckReport rep = euler_categorification_check(cat, cutoff, use_n);
            if (fmt == "json") {
                json rows = json::array();
                for (const auto& row : rep.rows)
                    rows.push_back(json{{"l", row.ell.str()},
                                        {"magnitude", to_string(row.magnitude_coefficient)},
                                        {"euler", to_string(row.euler_characteristic)}});
                std::cout << json{{"equal", rep.equal}, {"rows", rows}}.dump(2) << "\n";
            } else {
                for (const auto& row : rep.rows)
                    std::cout << "q^" << row.ell.str() << ": magnitude "
                              << to_string(row.magnitude_coefficient) << ", euler "
                              << to_string(row.euler_characteristic) << "\n";
                std::cout << (rep.equal ? "categorification holds\n" : "MISMATCH\n");
            }
            if (!rep.equal) return 1;
        } else if (cmd_hoch->parsed()) {
            Loaded in = load(opts);
            Exponent ell(parse_rational(l_value));
            int use_n = max_n >= 0 ? max_n : 3;
            HochschildCheckReport rep =
                hochschild_graded_check(require_cat(in), ell, use_n, opts.guardrail_cells);
            if (fmt == "json") {
                json rows = json::array();
                for (const auto& row : rep.rows)
                    rows.push_back(json{{"n", row.n},
                                        {"hochschild", summary_json(row.hochschild)},
                                        {"magnitude", summary_json(row.magnitude)}});
                std::cout << json{{"equal", rep.equal}, {"rows", rows}}.dump(2) << "\n";
            } else {
                for (const auto& row : rep.rows)
                    std::cout << "n = " << row.n << ": hochschild " << row.hochschild.str()
                              << " | magnitude " << row.magnitude.str() << "\n";
                std::cout << (rep.equal ? "descriptions agree\n" : "MISMATCH\n");
            }
            if (!rep.equal) return 1;
        } else if (cmd_ss->parsed()) {
            Loaded in = load(opts);
            FilteredChainQ fc = build_filtered_chain(require_cat(in), cap_L, cap_N);
            json rows = json::array();
            for (long p = 0; p <= max_p; ++p)
                for (long n = 0; n <= cap_N - 1; ++n) {
                    PageEntry e = page(fc, page_r, p, n - p);
                    if (e.dimension == 0 && e.cap_limited) continue;
                    rows.push_back(json{{"p", p},
                                        {"q", n - p},
                                        {"dim", e.dimension},
                                        {"cap_limited", e.cap_limited}});
                }
            if (fmt == "json") {
                std::cout << json{{"r", page_r}, {"entries", rows}}.dump(2) << "\n";
            } else {
                for (const auto& row : rows)
                    std::cout << "E^" << page_r << "_{" << row["p"] << "," << row["q"]
                              << "} dim " << row["dim"]
                              << (row["cap_limited"].get<bool>() ? " (cap-limited)" : "") << "\n";
            }
        } else if (cmd_ph->parsed()) {
            Loaded in = load(opts);
            if (!in.digraph) throw UsageError("pathhom needs --kind digraph");
            PathHomology ph = path_homology(*in.digraph, max_p);
            if (fmt == "json") {
                std::cout << json{{"reduced", ph.reduced}, {"unreduced", ph.unreduced}}.dump(2)
                          << "\n";
            } else {
                for (size_t p = 0; p < ph.reduced.size(); ++p)
                    std::cout << "H~_" << p << " = " << ph.reduced[p] << " (unreduced "
                              << ph.unreduced[p] << ")\n";
            }
        } else if (fib_build->parsed()) {
            ActionInput a;
            a.base = graph_input_from_file(base_file);
            a.fiber = graph_input_from_file(fiber_file);
            if (!twists_file.empty()) a.twists = parse_twists_file(read_file(twists_file));
            MetricAction action = a.build();
            std::cout << emit_space(grothendieck(action));
        } else if (fib_check->parsed()) {
            FCat total = space_from_file(total_file);
            FCat base = space_from_file(base_file);
            std::vector<ObjId> proj(total.num_objects(), -1);
            // Map file: total -> base, one pair per line.
            {
                std::istringstream ms(read_file(map_file));
                std::string u, arrow, v;
                while (ms >> u >> arrow >> v) {
                    if (arrow != "->") throw ParseError("map lines must read 'total -> base'");
                    auto a = total.object_by_name(u);
                    auto b = base.object_by_name(v);
                    if (!a || !b) throw ParseError("map names unknown vertex " + u + " or " + v);
                    proj[*a] = *b;
                }
            }
            for (ObjId a = 0; a < total.num_objects(); ++a)
                if (proj[a] < 0)
                    throw ParseError("map misses total vertex " + total.object_name(a));
            FibrationCheck check = is_metric_fibration(total, base, proj);
            if (check.is_fibration) {
                std::cout << "metric fibration: every (point, base point) has a unique lift\n";
            } else {
                std::cout << "not a metric fibration: " << check.counterexample << "\n";
                return 1;
            }
        } else if (fib_prod->parsed()) {
            Loaded in = load(opts);
            if (!in.action) throw UsageError("product-check needs --kind action");
            ProductFormulaReport rep = product_formula_check(in.action->build(), cutoff);
            if (fmt == "json") {
                json j;
                j["mag_total"] = rep.mag_total.str();
                j["mag_base"] = rep.mag_base.str();
                j["mag_fiber"] = rep.mag_fiber.str();
                j["magnitude_equal"] = rep.magnitude_equal;
                j["weighting_pointwise"] = rep.weighting_pointwise;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "Mag E = " << rep.mag_total.str() << "\n";
                std::cout << "Mag X * Mag F = " << rep.product.str() << "\n";
                std::cout << (rep.magnitude_equal && rep.weighting_pointwise
                                  ? "product formula holds (magnitude and weightings)\n"
                                  : "PRODUCT FORMULA FAILS\n");
            }
            if (!rep.magnitude_equal || !rep.weighting_pointwise) return 1;
        } else if (cmd_check->parsed()) {
            if (check_what != "all")
                throw UsageError("unknown check '" + check_what + "', try 'check all'");
            if (corpus_name != "builtin")
                throw UsageError("unknown corpus '" + corpus_name + "'");
            auto results = run_acceptance(argv[0]);
            std::cout << format_acceptance_table(results);
            for (const auto& r : results)
                if (!r.passed) return 1;
        }
        return 0;
    } catch (const ResourceError& e) {
        std::cerr << "resource guardrail: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
