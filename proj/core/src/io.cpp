#include "magcat/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "magcat/errors.hpp"

namespace magcat {

using nlohmann::json;

InputKind input_kind_from_name(const std::string& name) {
    if (name == "graph") return InputKind::Graph;
    if (name == "digraph") return InputKind::Digraph;
    if (name == "metric") return InputKind::Metric;
    if (name == "poset") return InputKind::Poset;
    if (name == "category") return InputKind::Category;
    if (name == "group") return InputKind::Group;
    if (name == "action") return InputKind::Action;
    throw ParseError("unknown input kind '" + name + "'");
}

std::string input_kind_name(InputKind kind) {
    switch (kind) {
        case InputKind::Graph: return "graph";
        case InputKind::Digraph: return "digraph";
        case InputKind::Metric: return "metric";
        case InputKind::Poset: return "poset";
        case InputKind::Category: return "category";
        case InputKind::Group: return "group";
        case InputKind::Action: return "action";
    }
    return "?";
}

namespace {

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

json parse_json_checked(const std::string& text, const std::string& expected_kind) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.contains("kind") || j["kind"] != expected_kind)
        throw ParseError("JSON document is not of kind '" + expected_kind + "'");
    return j;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

// Strips comments and blank lines, keeping 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) out.push_back({number, line});
    }
    return out;
}

Rational parse_rational_at(const std::string& token, int line) {
    try {
        return parse_rational(token);
    } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line) + ": " + e.what());
    }
}

void add_vertex(GraphInput& g, const std::string& v) {
    if (std::find(g.vertices.begin(), g.vertices.end(), v) == g.vertices.end())
        g.vertices.push_back(v);
}

}  // namespace

GraphInput parse_graph(const std::string& text, bool symmetric) {
    GraphInput g;
    g.symmetric = symmetric;
    if (looks_like_json(text)) {
        json j = parse_json_checked(text, symmetric ? "graph" : "digraph");
        for (const auto& v : j.at("vertices")) add_vertex(g, v.get<std::string>());
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
            std::string u = e[0].get<std::string>(), v = e[1].get<std::string>();
            add_vertex(g, u);
            add_vertex(g, v);
            g.edges.push_back({u, v});
        }
        return g;
    }
    const std::string arrow = symmetric ? "--" : "->";
    for (const auto& [num, line] : content_lines(text)) {
        auto ts = tokens(line);
        if (ts.size() == 1) {
            add_vertex(g, ts[0]);
            continue;
        }
        if (ts.size() != 3 || ts[1] != arrow)
            throw ParseError("line " + std::to_string(num) + ": expected 'u " + arrow +
                             " v' or a bare vertex");
        add_vertex(g, ts[0]);
        add_vertex(g, ts[2]);
        g.edges.push_back({ts[0], ts[2]});
    }
    return g;
}

DistanceMatrix parse_metric(const std::string& text, std::vector<std::string>* names) {
    DistanceMatrix d;
    std::vector<std::string> local_names;
    if (looks_like_json(text)) {
        json j = parse_json_checked(text, "metric");
        for (const auto& p : j.at("points")) local_names.push_back(p.get<std::string>());
        for (const auto& row : j.at("rows")) {
            std::vector<std::optional<Rational>> r;
            for (const auto& entry : row) {
                std::string s = entry.get<std::string>();
                if (s == "inf")
                    r.push_back(std::nullopt);
                else
                    r.push_back(parse_rational(s));
            }
            d.push_back(std::move(r));
        }
    } else {
        for (const auto& [num, line] : content_lines(text)) {
            std::vector<std::optional<Rational>> row;
            for (const auto& t : tokens(line)) {
                if (t == "inf")
                    row.push_back(std::nullopt);
                else
                    row.push_back(parse_rational_at(t, num));
            }
            d.push_back(std::move(row));
        }
        for (size_t i = 0; i < d.size(); ++i) local_names.push_back("p" + std::to_string(i));
    }
    if (names) *names = local_names;
    return d;
}

RankedPoset PosetInput::ranked() const {
    if (!has_ranks) throw UsageError("poset input has no rank lines");
    return RankedPoset{poset.elements, poset.less, ranks};
}

PosetInput parse_poset(const std::string& text) {
    PosetInput out;
    std::map<std::string, int> index;
    std::map<std::string, long> rank_of;
    auto element = [&](const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(out.poset.elements.size());
        out.poset.elements.push_back(name);
        index[name] = id;
        return id;
    };
    if (looks_like_json(text)) {
        json j = parse_json_checked(text, "poset");
        for (const auto& e : j.at("elements")) element(e.get<std::string>());
        for (const auto& r : j.at("relations"))
            out.poset.less.push_back(
                {element(r[0].get<std::string>()), element(r[1].get<std::string>())});
        if (j.contains("ranks")) {
            out.has_ranks = true;
            for (const auto& [k, v] : j.at("ranks").items()) rank_of[k] = v.get<long>();
        }
    } else {
        for (const auto& [num, line] : content_lines(text)) {
            auto ts = tokens(line);
            if (ts.size() == 1) {
                element(ts[0]);
            } else if (ts.size() == 3 && ts[1] == "<") {
                int a = element(ts[0]);
                int b = element(ts[2]);
                out.poset.less.push_back({a, b});
            } else if (ts.size() == 4 && ts[0] == "rank" && ts[2] == "=") {
                element(ts[1]);
                out.has_ranks = true;
                try {
                    rank_of[ts[1]] = std::stol(ts[3]);
                } catch (...) {
                    throw ParseError("line " + std::to_string(num) + ": malformed rank value '" +
                                     ts[3] + "'");
                }
            } else {
                throw ParseError("line " + std::to_string(num) +
                                 ": expected 'a < b', 'rank a = k' or a bare element");
            }
        }
    }
    if (out.has_ranks) {
        out.ranks.assign(out.poset.elements.size(), 0);
        for (size_t i = 0; i < out.poset.elements.size(); ++i) {
            auto it = rank_of.find(out.poset.elements[i]);
            if (it == rank_of.end())
                throw ParseError("missing rank for element '" + out.poset.elements[i] + "'");
            out.ranks[i] = it->second;
        }
    }
    return out;
}

CategorySpec parse_category(const std::string& text) {
    json j = parse_json_checked(text, "category");
    CategorySpec spec;
    for (const auto& o : j.at("objects")) spec.objects.push_back(o.get<std::string>());
    for (const auto& m : j.at("morphisms")) {
        CategorySpec::Mor mor;
        mor.name = m.at("name").get<std::string>();
        mor.src = m.at("src").get<std::string>();
        mor.tgt = m.at("tgt").get<std::string>();
        const auto& deg = m.at("degree");
        if (deg.is_array() && deg.size() == 2) {
            mor.degree =
                Rational(Integer(deg[0].get<std::string>()), Integer(deg[1].get<std::string>()));
            mor.degree.canonicalize();
        } else if (deg.is_string()) {
            mor.degree = parse_rational(deg.get<std::string>());
        } else if (deg.is_number_integer()) {
            mor.degree = Rational(deg.get<long>());
        } else {
            throw ParseError("morphism degree must be a pair, string or integer");
        }
        spec.morphisms.push_back(std::move(mor));
    }
    if (j.contains("composition"))
        for (const auto& t : j.at("composition")) {
            if (!t.is_array() || t.size() != 3)
                throw ParseError("composition entries must be [g, f, gf] triples");
            spec.composition.push_back(
                {t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
        }
    return spec;
}

GroupBall parse_group(const std::string& text) {
    json j = parse_json_checked(text, "group");
    GroupBall g;
    std::string family = j.at("family").get<std::string>();
    if (family == "cyclic") {
        g.family = GroupBall::Family::Cyclic;
        g.modulus = j.at("modulus").get<int>();
        for (const auto& s : j.at("generators")) g.int_generators.push_back(s.get<long>());
    } else if (family == "free") {
        g.family = GroupBall::Family::FreeGroup;
        g.rank = j.at("rank").get<int>();
    } else if (family == "free_abelian") {
        g.family = GroupBall::Family::FreeAbelian;
        g.rank = j.at("rank").get<int>();
    } else if (family == "table") {
        g.family = GroupBall::Family::Table;
        for (const auto& row : j.at("table")) {
            std::vector<int> r;
            for (const auto& e : row) r.push_back(e.get<int>());
            g.table.push_back(std::move(r));
        }
        for (const auto& s : j.at("generators")) g.table_generators.push_back(s.get<int>());
        if (j.contains("element_names"))
            for (const auto& n : j.at("element_names"))
                g.element_names.push_back(n.get<std::string>());
    } else {
        throw ParseError("unknown group family '" + family + "'");
    }
    g.radius = j.at("radius").get<long>();
    if (j.contains("symmetrize")) g.symmetrize = j.at("symmetrize").get<bool>();
    if (j.contains("directed_cayley")) g.directed_cayley = j.at("directed_cayley").get<bool>();
    return g;
}

MetricAction ActionInput::build() const {
    FCat base_cat = from_graph(finite_graph(base.edges, base.vertices, true),
                               Exponent(Rational(std::max<size_t>(base.vertices.size(), 1))));
    MetricSpace base_ms = to_metric_space(base_cat);
    FCat fiber_cat = from_graph(finite_graph(fiber.edges, fiber.vertices, true),
                                Exponent(Rational(std::max<size_t>(fiber.vertices.size(), 1))));
    MetricSpace fiber_ms = to_metric_space(fiber_cat);

    size_t n = base_ms.size();
    std::map<std::string, size_t> base_index, fiber_index;
    for (size_t i = 0; i < base_ms.size(); ++i) base_index[base_ms.points[i]] = i;
    for (size_t i = 0; i < fiber_ms.size(); ++i) fiber_index[fiber_ms.points[i]] = i;

    auto id_perm = [&]() {
        std::vector<int> p(fiber_ms.size());
        for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
        return p;
    };
    // Per-edge transports; unlisted edges carry the identity.
    std::map<std::pair<size_t, size_t>, std::vector<int>> edge_transport;
    for (const auto& [u, v] : base.edges) {
        auto iu = base_index.find(u), iv = base_index.find(v);
        if (iu == base_index.end() || iv == base_index.end())
            throw ParseError("edge endpoint missing from the base graph");
        edge_transport[{iu->second, iv->second}] = id_perm();
        edge_transport[{iv->second, iu->second}] = id_perm();
    }
    for (const auto& [edge, images] : twists) {
        auto iu = base_index.find(edge.first), iv = base_index.find(edge.second);
        if (iu == base_index.end() || iv == base_index.end())
            throw ParseError("twist names unknown base vertex (" + edge.first + "," +
                             edge.second + ")");
        if (images.size() != fiber_ms.size())
            throw ParseError("twist permutation must list every fiber point");
        std::vector<int> perm;
        for (const auto& name : images) {
            auto it = fiber_index.find(name);
            if (it == fiber_index.end())
                throw ParseError("twist names unknown fiber point '" + name + "'");
            perm.push_back(static_cast<int>(it->second));
        }
        std::vector<int> inv(perm.size(), -1);
        for (size_t i = 0; i < perm.size(); ++i) {
            if (inv[perm[i]] != -1) throw ParseError("twist is not a permutation");
            inv[perm[i]] = static_cast<int>(i);
        }
        edge_transport[{iu->second, iv->second}] = perm;
        edge_transport[{iv->second, iu->second}] = inv;
    }

    // Longer transports composed along a fixed shortest path (smallest next
    // vertex index); the action validation rejects inconsistent choices.
    MetricAction action;
    action.base = base_ms;
    action.fibers.assign(n, fiber_ms);
    action.transport.assign(n, std::vector<std::vector<int>>(n));
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            std::vector<int> acc = id_perm();
            size_t at = x;
            while (at != y) {
                size_t next = n;
                for (size_t cand = 0; cand < n; ++cand) {
                    if (cand == at) continue;
                    if (base_ms.d[at][cand] == 1 && base_ms.d[at][y] == base_ms.d[cand][y] + 1) {
                        next = cand;
                        break;
                    }
                }
                if (next == n) throw ParseError("base graph is not geodesically connected");
                const auto& step = edge_transport.at({at, next});
                std::vector<int> composed(acc.size());
                for (size_t i = 0; i < acc.size(); ++i) composed[i] = step[acc[i]];
                acc = std::move(composed);
                at = next;
            }
            action.transport[x][y] = std::move(acc);
        }
    action.validate();
    return action;
}

ActionInput parse_action(const std::string& text) {
    json j = parse_json_checked(text, "action");
    ActionInput a;
    a.base = parse_graph(j.at("base").dump(), true);
    a.fiber = parse_graph(j.at("fiber").dump(), true);
    if (j.contains("twists"))
        for (const auto& t : j.at("twists")) {
            std::pair<std::string, std::string> edge{t.at("edge")[0].get<std::string>(),
                                                     t.at("edge")[1].get<std::string>()};
            std::vector<std::string> perm;
            for (const auto& p : t.at("perm")) perm.push_back(p.get<std::string>());
            a.twists.push_back({edge, perm});
        }
    return a;
}

// ------------------------------ emission -----------------------------------

namespace {
std::string dump(const json& j) { return j.dump(2) + "\n"; }
}  // namespace

std::string emit_graph(const GraphInput& g) {
    json j;
    j["kind"] = g.symmetric ? "graph" : "digraph";
    j["vertices"] = g.vertices;
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = edges;
    return dump(j);
}

std::string emit_metric(const DistanceMatrix& d, const std::vector<std::string>& names) {
    json j;
    j["kind"] = "metric";
    j["points"] = names;
    json rows = json::array();
    for (const auto& row : d) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e ? to_string(*e) : "inf");
        rows.push_back(r);
    }
    j["rows"] = rows;
    return dump(j);
}

std::string emit_poset(const PosetInput& p) {
    json j;
    j["kind"] = "poset";
    j["elements"] = p.poset.elements;
    json rel = json::array();
    for (auto [a, b] : p.poset.less) rel.push_back({p.poset.elements[a], p.poset.elements[b]});
    j["relations"] = rel;
    if (p.has_ranks) {
        json ranks;
        for (size_t i = 0; i < p.poset.elements.size(); ++i)
            ranks[p.poset.elements[i]] = p.ranks[i];
        j["ranks"] = ranks;
    }
    return dump(j);
}

std::string emit_category(const CategorySpec& c) {
    json j;
    j["kind"] = "category";
    j["objects"] = c.objects;
    json mors = json::array();
    for (const auto& m : c.morphisms) {
        json mj;
        mj["name"] = m.name;
        mj["src"] = m.src;
        mj["tgt"] = m.tgt;
        mj["degree"] = {m.degree.get_num().get_str(), m.degree.get_den().get_str()};
        mors.push_back(mj);
    }
    j["morphisms"] = mors;
    json comp = json::array();
    for (const auto& t : c.composition) comp.push_back({t[0], t[1], t[2]});
    j["composition"] = comp;
    return dump(j);
}

std::string emit_group(const GroupBall& g) {
    json j;
    j["kind"] = "group";
    switch (g.family) {
        case GroupBall::Family::Cyclic:
            j["family"] = "cyclic";
            j["modulus"] = g.modulus;
            j["generators"] = g.int_generators;
            break;
        case GroupBall::Family::FreeGroup:
            j["family"] = "free";
            j["rank"] = g.rank;
            break;
        case GroupBall::Family::FreeAbelian:
            j["family"] = "free_abelian";
            j["rank"] = g.rank;
            break;
        case GroupBall::Family::Table:
            j["family"] = "table";
            j["table"] = g.table;
            j["generators"] = g.table_generators;
            if (!g.element_names.empty()) j["element_names"] = g.element_names;
            break;
    }
    j["radius"] = g.radius;
    j["symmetrize"] = g.symmetrize;
    if (g.directed_cayley) j["directed_cayley"] = true;
    return dump(j);
}

std::string emit_action(const ActionInput& a) {
    json j;
    j["kind"] = "action";
    j["base"] = json::parse(emit_graph(a.base));
    j["fiber"] = json::parse(emit_graph(a.fiber));
    json twists = json::array();
    for (const auto& [edge, perm] : a.twists) {
        json t;
        t["edge"] = {edge.first, edge.second};
        t["perm"] = perm;
        twists.push_back(t);
    }
    j["twists"] = twists;
    return dump(j);
}

namespace {

json series_to_json(const NSeries& s) {
    json j;
    j["cutoff"] = {s.cutoff().value().get_num().get_str(),
                   s.cutoff().value().get_den().get_str()};
    j["exact"] = s.is_exact();
    json terms = json::array();
    for (const auto& t : s.terms())
        terms.push_back({t.exponent.value().get_num().get_str(),
                         t.exponent.value().get_den().get_str(),
                         t.coefficient.get_num().get_str(), t.coefficient.get_den().get_str()});
    j["terms"] = terms;
    j["text"] = s.str();
    return j;
}

}  // namespace

std::string emit_series_json(const NSeries& s) { return dump(series_to_json(s)); }

std::string emit_weight_vector_json(const WeightVector& w) {
    json j;
    j["side"] = w.side == WeightVector::Side::Weighting ? "weighting" : "coweighting";
    j["horizon"] = {w.horizon.value().get_num().get_str(),
                    w.horizon.value().get_den().get_str()};
    json entries = json::array();
    for (size_t i = 0; i < w.entries.size(); ++i) {
        json e;
        e["object"] = w.labels[i];
        e["series"] = series_to_json(w.entries[i]);
        entries.push_back(e);
    }
    j["entries"] = entries;
    return dump(j);
}

std::string emit_classification_json(const Classification& c) {
    json j;
    j["finite"] = c.finite;
    j["finite_type"] = c.finite_type;
    j["uniform"] = c.uniform;
    if (c.epsilon) j["epsilon"] = to_string(c.epsilon->value());
    j["tame"] = c.tame;
    j["quasi_tame"] = c.quasi_tame;
    j["all_degrees_zero"] = c.all_degrees_zero;
    j["skeletal_no_endomorphisms"] = c.skeletal_no_endos;
    if (c.degenerate_witness) j["degenerate_witness"] = *c.degenerate_witness;
    if (c.cycle_witness) j["cycle_witness"] = *c.cycle_witness;
    if (c.truncation) j["truncated_at"] = to_string(c.truncation->value());
    return dump(j);
}

std::string emit_summary_json(const HomologySummary& h) {
    json j;
    j["betti"] = h.betti;
    json t = json::array();
    for (const auto& f : h.torsion) t.push_back(to_string(f));
    j["torsion"] = t;
    return dump(j);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace magcat
