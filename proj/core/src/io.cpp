#include "lhgf/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace lhgf {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

Simplex simplex_by_names(const SimplicialComplex& c, const std::vector<std::string>& names) {
    Simplex s;
    for (const auto& nm : names) {
        int v = c.vertex_index(nm);
        if (v < 0) throw Error(Err::ParseError, "unknown vertex '" + nm + "'");
        s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    return s;
}

Simplex simplex_from_key(const SimplicialComplex& c, const std::string& key) {
    return simplex_by_names(c, split(key, '-'));
}

Elem parse_level1(const Json& j, const ModelPtr& model) {
    if (model->kind() == "circle") {
        return Elem{1, CircleGlobe{frac(parse_rational(j.at("src").get<std::string>())),
                                   frac(parse_rational(j.at("tgt").get<std::string>())),
                                   parse_rational(j.at("disp").get<std::string>())}};
    }
    const CrossedModule* x = model_crossed_module(*model);
    if (!x) throw Error(Err::ModelLevelUnsupported, "model has no level-1 elements");
    return Elem{1, TwoCell{x->G.element(j.at("g").get<std::string>()),
                           x->H.element(j.at("h").get<std::string>())}};
}

}  // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Err::ParseError, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(Err::ParseError, path + ": " + e.what());
    }
    return j;
}

SimplicialComplex load_complex(const Json& j) {
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<std::vector<std::string>> simplices;
    for (const auto& s : j.at("simplices")) {
        std::vector<std::string> one;
        for (const auto& v : s) one.push_back(v.get<std::string>());
        simplices.push_back(std::move(one));
    }
    return SimplicialComplex::make(std::move(vertices), simplices);
}

FiniteGroup load_group(const Json& j) {
    if (j.contains("named")) {
        std::string nm = j.at("named").get<std::string>();
        int n = j.at("n").get<int>();
        if (nm == "cyclic") return FiniteGroup::cyclic(n);
        if (nm == "symmetric") return FiniteGroup::symmetric(n);
        throw Error(Err::ParseError, "unknown named group '" + nm + "'");
    }
    std::vector<std::string> names;
    for (const auto& e : j.at("elements")) names.push_back(e.get<std::string>());
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) {
        std::vector<int> r;
        for (const auto& x : row) r.push_back(x.get<int>());
        table.push_back(std::move(r));
    }
    return FiniteGroup::from_table(std::move(names), std::move(table));
}

CrossedModule load_crossed_module(const Json& j) {
    CrossedModule x;
    x.H = load_group(j.at("H"));
    x.G = load_group(j.at("G"));
    for (const auto& b : j.at("boundary")) x.boundary.push_back(x.G.element(b.get<std::string>()));
    for (const auto& row : j.at("action")) {
        std::vector<int> r;
        for (const auto& h : row) r.push_back(x.H.element(h.get<std::string>()));
        x.action.push_back(std::move(r));
    }
    return x;
}

ModelPtr load_model(const Json& j) {
    std::string kind = j.at("model").get<std::string>();
    if (kind == "discrete") return make_discrete_model(load_group(j.at("group")));
    if (kind == "circle") return make_circle_model();
    if (kind == "crossed_module") return make_two_group_model(load_crossed_module(j));
    throw Error(Err::ParseError, "unknown model kind '" + kind + "'");
}

GaugeField1 load_field1(const Json& j, const SimplicialComplex& base, const ModelPtr& model) {
    GaugeField1 f;
    f.base = &base;
    f.model = model;
    for (const auto& [key, val] : j.at("edges").items()) {
        Simplex e = simplex_from_key(base, key);
        if (e.size() != 2) throw Error(Err::ParseError, "edge key '" + key + "'");
        f.edges[{e[0], e[1]}] = model->parse_level0(val.get<std::string>());
    }
    if (j.contains("face_disp"))
        for (const auto& [key, val] : j.at("face_disp").items()) {
            Simplex t = simplex_from_key(base, key);
            if (t.size() != 3) throw Error(Err::ParseError, "face key '" + key + "'");
            f.face_disp[t] = parse_rational(val.get<std::string>());
        }
    return f;
}

GaugeField2 load_field2(const Json& j, const SimplicialComplex& base, const ModelPtr& model) {
    const CrossedModule* x = model_crossed_module(*model);
    if (!x) throw Error(Err::ParseError, "dimension-2 field needs a crossed_module model");
    GaugeField2 f;
    f.base = &base;
    f.model = model;
    for (const auto& [key, val] : j.at("edges").items()) {
        Simplex e = simplex_from_key(base, key);
        if (e.size() != 2) throw Error(Err::ParseError, "edge key '" + key + "'");
        f.edges[{e[0], e[1]}] = x->G.element(val.get<std::string>());
    }
    for (const auto& [key, val] : j.at("faces").items()) {
        Simplex t = simplex_from_key(base, key);
        if (t.size() != 3) throw Error(Err::ParseError, "face key '" + key + "'");
        f.faces[t] = x->H.element(val.get<std::string>());
    }
    return f;
}

GaugeTransform load_transform(const Json& j, const SimplicialComplex& base,
                              const ModelPtr& model) {
    GaugeTransform u;
    u.base = &base;
    u.model = model;
    for (const auto& [nm, val] : j.at("vertices").items()) {
        int v = base.vertex_index(nm);
        if (v < 0) throw Error(Err::ParseError, "unknown vertex '" + nm + "'");
        u.vertices[v] = model->parse_level0(val.get<std::string>());
    }
    if (j.contains("edges"))
        for (const auto& [key, val] : j.at("edges").items()) {
            Simplex e = simplex_from_key(base, key);
            if (e.size() != 2) throw Error(Err::ParseError, "edge key '" + key + "'");
            u.edge_values[{e[0], e[1]}] = parse_level1(val, model);
        }
    return u;
}

Cover load_cover(const Json& j, const SimplicialComplex& parent) {
    Cover c;
    c.parent = &parent;
    for (const auto& p : j.at("pieces")) {
        c.piece_names.push_back(p.at("name").get<std::string>());
        std::vector<std::vector<std::string>> simplices;
        std::set<std::string> used;
        for (const auto& s : p.at("simplices")) {
            std::vector<std::string> one;
            for (const auto& v : s) {
                one.push_back(v.get<std::string>());
                used.insert(one.back());
            }
            simplices.push_back(std::move(one));
        }
        std::vector<std::string> vertices;  // parent order
        for (const auto& nm : parent.vertex_names())
            if (used.count(nm)) vertices.push_back(nm);
        c.pieces.push_back(SimplicialComplex::make(std::move(vertices), simplices));
    }
    return c;
}

TransitionSystem load_transitions(const Json& j, const Cover& cover, const ModelPtr& model) {
    TransitionSystem ts;
    ts.cover = &cover;
    ts.model = model;
    if (!j.contains("transitions")) return ts;
    auto piece_index = [&](const std::string& nm) {
        for (int i = 0; i < static_cast<int>(cover.piece_names.size()); ++i)
            if (cover.piece_names[i] == nm) return i;
        throw Error(Err::ParseError, "unknown piece '" + nm + "'");
    };
    for (const auto& t : j.at("transitions")) {
        int i = piece_index(t.at("i").get<std::string>());
        int k = piece_index(t.at("j").get<std::string>());
        std::map<std::string, Elem> values;
        for (const auto& [nm, val] : t.at("vertices").items())
            values[nm] = model->parse_level0(val.get<std::string>());
        if (i < k) {
            ts.psi[{i, k}] = std::move(values);
        } else {
            std::map<std::string, Elem> inv;
            for (auto& [nm, val] : values) inv[nm] = model->inverse(Op::Internal, val);
            ts.psi[{k, i}] = std::move(inv);
        }
    }
    return ts;
}

ELGF load_elgf(const Json& j, const SimplicialComplex& base, const ModelPtr& model) {
    ELGF e;
    e.base = &base;
    e.model = model;
    for (const auto& entry : j.at("values")) {
        std::vector<std::string> tn, nn;
        for (const auto& v : entry.at("tau")) tn.push_back(v.get<std::string>());
        for (const auto& v : entry.at("nu")) nn.push_back(v.get<std::string>());
        NestedPair pr{simplex_by_names(base, tn), simplex_by_names(base, nn)};
        int level = entry.at("level").get<int>();
        Elem val = level == 0 ? model->parse_level0(entry.at("value").get<std::string>())
                              : parse_level1(entry.at("value"), model);
        if (val.level != level) throw Error(Err::ParseError, "level mismatch in ELGF entry");
        e.values[pr] = val;
    }
    return e;
}

namespace {

std::string edge_name(const SimplicialComplex& c, const EdgeKey& e) {
    return c.name(e.first) + "-" + c.name(e.second);
}

std::string simplex_name(const SimplicialComplex& c, const Simplex& s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += "-";
        out += c.name(v);
    }
    return out;
}

}  // namespace

Json field1_to_json(const GaugeField1& a) {
    Json edges = Json::object();
    for (const auto& [e, v] : a.edges) edges[edge_name(*a.base, e)] = a.model->show(v);
    Json out{{"edges", edges}};
    if (!a.face_disp.empty()) {
        Json fd = Json::object();
        for (const auto& [t, d] : a.face_disp) fd[simplex_name(*a.base, t)] = show_rational(d);
        out["face_disp"] = fd;
    }
    return out;
}

Json field2_to_json(const GaugeField2& a) {
    const CrossedModule& x = a.xm();
    Json edges = Json::object(), faces = Json::object();
    for (const auto& [e, v] : a.edges) edges[edge_name(*a.base, e)] = x.G.names[v];
    for (const auto& [t, h] : a.faces) faces[simplex_name(*a.base, t)] = x.H.names[h];
    return Json{{"edges", edges}, {"faces", faces}};
}

Json transform_to_json(const GaugeTransform& u) {
    Json vertices = Json::object();
    for (const auto& [v, g] : u.vertices) vertices[u.base->name(v)] = u.model->show(g);
    Json out{{"vertices", vertices}};
    if (!u.edge_values.empty()) {
        Json edges = Json::object();
        for (const auto& [e, val] : u.edge_values) {
            auto g = std::get<CircleGlobe>(val.v);
            edges[edge_name(*u.base, e)] = Json{{"src", show_rational(g.src)},
                                                {"tgt", show_rational(g.tgt)},
                                                {"disp", show_rational(g.disp)}};
        }
        out["edges"] = edges;
    }
    return out;
}

Json elgf_to_json(const ELGF& e) {
    Json values = Json::array();
    for (const auto& [pr, val] : e.values) {
        Json tau = Json::array(), nu = Json::array();
        for (int v : pr.tau) tau.push_back(e.base->name(v));
        for (int v : pr.nu) nu.push_back(e.base->name(v));
        Json entry{{"tau", tau}, {"nu", nu}, {"level", pr.level()}};
        if (pr.level() == 0) {
            entry["value"] = e.model->show(val);
        } else {
            auto g = std::get<CircleGlobe>(val.v);
            entry["value"] = Json{{"src", show_rational(g.src)},
                                  {"tgt", show_rational(g.tgt)},
                                  {"disp", show_rational(g.disp)}};
        }
        values.push_back(std::move(entry));
    }
    return Json{{"values", values}};
}

Json report_to_json(const Report& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(Json{{"rule", v.rule}, {"detail", v.detail}});
    return Json{{"ok", r.ok()}, {"violations", violations}};
}

}  // namespace lhgf
