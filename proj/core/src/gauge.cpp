#include "lhgf/gauge.hpp"

#include <algorithm>
#include <set>

namespace lhgf {

Elem GaugeTransform::at(int v) const {
    auto it = vertices.find(v);
    if (it == vertices.end())
        throw Error(Err::BaseMismatch, "no value at vertex " + base->name(v));
    return it->second;
}

Report validate_transform(const GaugeTransform& u) {
    Report r;
    for (int v = 0; v < u.base->vertex_count(); ++v)
        if (!u.vertices.count(v)) r.add("vertex coverage", u.base->name(v));
    for (const auto& [v, e] : u.vertices)
        if (e.level != 0) r.add("vertex level", u.base->name(v));
    for (const auto& [e, val] : u.edge_values) {
        if (!u.base->has_edge(e.first, e.second)) {
            r.add("edge value key", u.base->name(e.first) + "-" + u.base->name(e.second));
            continue;
        }
        if (val.level != 1) {
            r.add("edge value level", u.base->name(e.first) + "-" + u.base->name(e.second));
            continue;
        }
        auto itu = u.vertices.find(e.first);
        auto itv = u.vertices.find(e.second);
        if (itu == u.vertices.end() || itv == u.vertices.end()) continue;
        if (!u.model->eq(u.model->source(val), itu->second) ||
            !u.model->eq(u.model->target(val), itv->second))
            r.add("edge value endpoints",
                  u.base->name(e.first) + "-" + u.base->name(e.second));
    }
    return r;
}

GaugeTransform identity_transform(const SimplicialComplex& base, const ModelPtr& model) {
    GaugeTransform u;
    u.base = &base;
    u.model = model;
    for (int v = 0; v < base.vertex_count(); ++v) u.vertices[v] = model->identity(0);
    return u;
}

GaugeTransform compose_transforms(const GaugeTransform& u, const GaugeTransform& v) {
    if (u.base != v.base) throw Error(Err::BaseMismatch, "transforms live on different complexes");
    GaugeTransform w;
    w.base = u.base;
    w.model = u.model;
    for (const auto& [x, g] : u.vertices) w.vertices[x] = u.model->compose(Op::Internal, g, v.at(x));
    if (!u.edge_values.empty() || !v.edge_values.empty()) {
        for (const auto& [e, val] : u.edge_values) {
            auto it = v.edge_values.find(e);
            if (it != v.edge_values.end())
                w.edge_values[e] = u.model->compose(Op::Internal, val, it->second);
            else
                w.edge_values[e] = u.model->compose(Op::Internal, val, u.model->lift(v.at(e.first)));
        }
        for (const auto& [e, val] : v.edge_values)
            if (!u.edge_values.count(e))
                w.edge_values[e] = u.model->compose(Op::Internal, u.model->lift(u.at(e.first)), val);
    }
    return w;
}

GaugeTransform invert_transform(const GaugeTransform& u) {
    GaugeTransform w;
    w.base = u.base;
    w.model = u.model;
    for (const auto& [x, g] : u.vertices) w.vertices[x] = u.model->inverse(Op::Internal, g);
    for (const auto& [e, val] : u.edge_values)
        w.edge_values[e] = u.model->inverse(Op::Internal, val);
    return w;
}

GaugeField1 act(const GaugeTransform& u, const GaugeField1& a) {
    if (u.base != a.base) throw Error(Err::BaseMismatch, "transform and field bases differ");
    GaugeField1 b;
    b.base = a.base;
    b.model = a.model;
    for (const auto& [e, g] : a.edges) {
        Elem x = u.at(e.first), y = u.at(e.second);
        b.edges[e] = a.model->compose(Op::Internal, a.model->compose(Op::Internal, x, g),
                                      a.model->inverse(Op::Internal, y));
    }
    // vertex values shift circle displacements by an exact telescoping sum
    // only through level-1 edge data; without it they are untouched
    for (const auto& [t, d] : a.face_disp) {
        Rat shift(0);
        if (!u.edge_values.empty()) {
            auto disp_of = [&](int p, int q) {
                auto it = u.edge_values.find(edge_key(p, q));
                if (it == u.edge_values.end()) return Rat(0);
                Rat dd = std::get<CircleGlobe>(it->second.v).disp;
                return p < q ? dd : -dd;
            };
            shift = disp_of(t[0], t[1]) + disp_of(t[1], t[2]) - disp_of(t[0], t[2]);
        }
        b.face_disp[t] = d + shift;
    }
    return b;
}

GaugeField2 act(const GaugeTransform& u, const GaugeField2& a) {
    if (u.base != a.base) throw Error(Err::BaseMismatch, "transform and field bases differ");
    const CrossedModule& x = a.xm();
    GaugeField2 b;
    b.base = a.base;
    b.model = a.model;
    auto g_at = [&](int v) { return std::get<DiscreteElt>(u.at(v).v).g; };
    for (const auto& [e, g] : a.edges)
        b.edges[e] = x.G.times(x.G.times(g_at(e.first), g), x.G.inverse(g_at(e.second)));
    for (const auto& [t, h] : a.faces) b.faces[t] = x.act(g_at(t[0]), h);
    return b;
}

std::vector<GaugeTransform> enumerate_transforms(const SimplicialComplex& base,
                                                 const ModelPtr& model, const Budget* budget) {
    if (!model->finite())
        throw Error(Err::ModelNotFinite, model->kind() + " model cannot be enumerated");
    auto elems = model->level0_elements();
    int nv = base.vertex_count();
    std::vector<GaugeTransform> out;
    std::vector<size_t> counter(nv, 0);
    while (true) {
        if (budget) budget->tick();
        GaugeTransform u;
        u.base = &base;
        u.model = model;
        for (int v = 0; v < nv; ++v) u.vertices[v] = elems[counter[v]];
        out.push_back(std::move(u));
        int i = 0;
        for (; i < nv; ++i) {
            if (++counter[i] < elems.size()) break;
            counter[i] = 0;
        }
        if (i == nv) break;
    }
    return out;
}

std::vector<Orbit> orbits(const SimplicialComplex& base, const ModelPtr& model,
                          const Budget& budget) {
    auto fields = enumerate_fields1(base, model, &budget);
    auto transforms = enumerate_transforms(base, model, &budget);

    auto key_of = [&](const GaugeField1& f) {
        std::string k;
        for (const auto& [e, v] : f.edges) k += model->show(v) + "|";
        return k;
    };
    std::map<std::string, int> index_of;
    for (int i = 0; i < static_cast<int>(fields.size()); ++i) index_of[key_of(fields[i])] = i;

    std::vector<int> orbit_id(fields.size(), -1);
    std::vector<Orbit> out;
    for (int i = 0; i < static_cast<int>(fields.size()); ++i) {
        if (orbit_id[i] >= 0) continue;
        Orbit o;
        o.representative = fields[i];
        std::set<int> members;
        for (const auto& u : transforms) {
            budget.tick();
            int j = index_of.at(key_of(act(u, fields[i])));
            members.insert(j);
        }
        for (int j : members) orbit_id[j] = static_cast<int>(out.size());
        o.members.assign(members.begin(), members.end());
        out.push_back(std::move(o));
    }
    return out;
}

std::optional<GaugeTransform> is_gauge_equivalent(const GaugeField1& a, const GaugeField1& b,
                                                  const Budget& budget) {
    if (a.base != b.base) throw Error(Err::BaseMismatch, "fields live on different complexes");
    for (const auto& u : enumerate_transforms(*a.base, a.model, &budget)) {
        budget.tick();
        if (fields_equal(act(u, a), b)) return u;
    }
    return std::nullopt;
}

}  // namespace lhgf
