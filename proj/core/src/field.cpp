#include "lhgf/field.hpp"

namespace lhgf {

Elem GaugeField1::label(int u, int v) const {
    auto it = edges.find(edge_key(u, v));
    if (it == edges.end())
        throw Error(Err::EdgeNotInComplex,
                    base->name(std::min(u, v)) + "-" + base->name(std::max(u, v)));
    if (u < v) return it->second;
    return model->inverse(Op::Internal, it->second);
}

const CrossedModule& GaugeField2::xm() const {
    const CrossedModule* x = model_crossed_module(*model);
    if (!x) throw Error(Err::ModelLevelUnsupported, "dimension-2 field needs a crossed module");
    return *x;
}

int GaugeField2::label(int u, int v) const {
    auto it = edges.find(edge_key(u, v));
    if (it == edges.end())
        throw Error(Err::EdgeNotInComplex,
                    base->name(std::min(u, v)) + "-" + base->name(std::max(u, v)));
    if (u < v) return it->second;
    return xm().G.inverse(it->second);
}

Report validate_field1(const GaugeField1& a) {
    Report r;
    for (const auto& s : a.base->simplices_of_dim(1)) {
        auto it = a.edges.find({s[0], s[1]});
        if (it == a.edges.end()) {
            r.add("edge coverage", a.base->show_simplex(s) + " unlabeled");
            continue;
        }
        if (it->second.level != 0) r.add("label level", a.base->show_simplex(s));
    }
    for (const auto& [e, v] : a.edges) {
        if (e.first < 0 || e.second >= a.base->vertex_count()) {
            r.add("stray label", "vertex index out of range");
            continue;
        }
        if (!a.base->has_edge(e.first, e.second))
            r.add("stray label", a.base->name(e.first) + "-" + a.base->name(e.second));
    }

    if (!a.face_disp.empty() && r.ok()) {
        if (a.model->kind() != "circle") {
            r.add("face displacements", "only meaningful for the circle model");
            return r;
        }
        for (const auto& [t, d] : a.face_disp) {
            if (t.size() != 3 || !a.base->has_simplex(t)) {
                r.add("displacement key", "not a triangle of the complex");
                continue;
            }
            Rat around = std::get<CircleElt>(a.label(t[0], t[1]).v).angle;
            Elem rest = a.model->compose(Op::Internal, a.label(t[1], t[2]),
                                         a.model->inverse(Op::Internal, a.label(t[0], t[2])));
            Rat rim = frac(around + std::get<CircleElt>(rest.v).angle);
            if (frac(d) != rim)
                r.add("displacement coherence",
                      a.base->show_simplex(t) + ": disp " + show_rational(d) +
                          " != boundary defect " + show_rational(rim) + " (mod 1)");
        }
    }
    return r;
}

Report validate_field2(const GaugeField2& a) {
    Report r;
    const CrossedModule& x = a.xm();
    for (const auto& s : a.base->simplices_of_dim(1))
        if (!a.edges.count({s[0], s[1]})) r.add("edge coverage", a.base->show_simplex(s));
    for (const auto& t : a.base->simplices_of_dim(2)) {
        auto it = a.faces.find(t);
        if (it == a.faces.end()) {
            r.add("face coverage", a.base->show_simplex(t));
            continue;
        }
        int rim = x.G.times(x.G.times(a.label(t[0], t[1]), a.label(t[1], t[2])),
                            x.G.inverse(a.label(t[0], t[2])));
        if (x.boundary[it->second] != rim)
            r.add("fake-flatness", a.base->show_simplex(t) + ": boundary(" +
                                       x.H.names[it->second] + ") = " +
                                       x.G.names[x.boundary[it->second]] + ", edge word gives " +
                                       x.G.names[rim]);
    }
    return r;
}

Elem holonomy(const GaugeField1& a, const EdgeWord& w) {
    Elem h = a.model->identity(0);
    for (const auto& l : w.letters) h = a.model->compose(Op::Internal, h, a.label(l.from(), l.to()));
    return h;
}

int holonomy2(const GaugeField2& a, const EdgeWord& w) {
    const CrossedModule& x = a.xm();
    int h = x.G.id;
    for (const auto& l : w.letters) h = x.G.times(h, a.label(l.from(), l.to()));
    return h;
}

Elem surface_transport(const GaugeField2& a, const PastingDiagram& p) {
    Report ok = pasting_validate(p);
    if (!ok.ok()) throw Error(Err::BoundaryMismatch, ok.violations.front().detail);
    const CrossedModule& x = a.xm();
    int hacc = x.H.id;
    for (const auto& m : p.moves) {
        auto it = a.faces.find(m.tri);
        if (it == a.faces.end())
            throw Error(Err::FaceNotLabeled, a.base->show_simplex(m.tri));
        int h = it->second;
        if (!m.expand) h = x.H.inverse(h);
        int whisker = holonomy2(a, m.left);
        // vertical accumulation: later cells multiply on the left
        hacc = x.H.times(x.act(whisker, h), hacc);
    }
    return {1, TwoCell{holonomy2(a, p.source_word), hacc}};
}

std::vector<GaugeField1> enumerate_fields1(const SimplicialComplex& base, const ModelPtr& model,
                                           const Budget* budget) {
    if (!model->finite())
        throw Error(Err::ModelNotFinite, model->kind() + " model cannot be enumerated");
    auto elems = model->level0_elements();
    auto edges = base.simplices_of_dim(1);
    std::vector<GaugeField1> out;
    std::vector<size_t> counter(edges.size(), 0);
    while (true) {
        if (budget) budget->tick();
        GaugeField1 f;
        f.base = &base;
        f.model = model;
        for (size_t i = 0; i < edges.size(); ++i)
            f.edges[{edges[i][0], edges[i][1]}] = elems[counter[i]];
        out.push_back(std::move(f));
        size_t i = 0;
        for (; i < counter.size(); ++i) {
            if (++counter[i] < elems.size()) break;
            counter[i] = 0;
        }
        if (i == counter.size()) break;
        if (edges.empty()) break;
    }
    return out;
}

std::vector<GaugeField2> enumerate_fields2(const SimplicialComplex& base, const ModelPtr& model,
                                           const Budget* budget) {
    const CrossedModule* xp = model_crossed_module(*model);
    if (!xp) throw Error(Err::ModelNotFinite, "dimension-2 enumeration needs a crossed module");
    const CrossedModule& x = *xp;
    auto edges = base.simplices_of_dim(1);
    auto tris = base.simplices_of_dim(2);
    std::vector<GaugeField2> out;
    std::vector<int> counter(edges.size(), 0);
    int ng = x.G.order();
    while (true) {
        if (budget) budget->tick();
        GaugeField2 f;
        f.base = &base;
        f.model = model;
        for (size_t i = 0; i < edges.size(); ++i)
            f.edges[{edges[i][0], edges[i][1]}] = counter[i];
        // extend by every face labeling compatible with fake-flatness
        std::vector<std::vector<int>> choices;
        bool feasible = true;
        for (const auto& t : tris) {
            int rim = x.G.times(x.G.times(f.label(t[0], t[1]), f.label(t[1], t[2])),
                                x.G.inverse(f.label(t[0], t[2])));
            std::vector<int> hs;
            for (int h = 0; h < x.H.order(); ++h)
                if (x.boundary[h] == rim) hs.push_back(h);
            if (hs.empty()) {
                feasible = false;
                break;
            }
            choices.push_back(std::move(hs));
        }
        if (feasible) {
            std::vector<size_t> fc(tris.size(), 0);
            while (true) {
                if (budget) budget->tick();
                GaugeField2 g = f;
                for (size_t i = 0; i < tris.size(); ++i) g.faces[tris[i]] = choices[i][fc[i]];
                out.push_back(std::move(g));
                size_t i = 0;
                for (; i < fc.size(); ++i) {
                    if (++fc[i] < choices[i].size()) break;
                    fc[i] = 0;
                }
                if (i == fc.size()) break;
                if (tris.empty()) break;
            }
        }
        size_t i = 0;
        for (; i < counter.size(); ++i) {
            if (++counter[i] < ng) break;
            counter[i] = 0;
        }
        if (i == counter.size()) break;
        if (edges.empty()) break;
    }
    return out;
}

std::string wilson_loop(const GaugeField1& a, const EdgeWord& w) {
    if (!w.closed())
        throw Error(Err::NotClosed, "word runs " + a.base->name(w.src) + " to " +
                                        a.base->name(w.tgt));
    Elem h = holonomy(a, w);
    if (const FiniteGroup* g = model_group(*a.model))
        return g->class_label(std::get<DiscreteElt>(h.v).g);
    return a.model->show(h);  // abelian circle case: the value itself
}

bool fields_equal(const GaugeField1& a, const GaugeField1& b) {
    if (a.base != b.base || a.edges.size() != b.edges.size()) return false;
    for (const auto& [e, v] : a.edges) {
        auto it = b.edges.find(e);
        if (it == b.edges.end() || !a.model->eq(v, it->second)) return false;
    }
    if (a.face_disp != b.face_disp) return false;
    return true;
}

}  // namespace lhgf
