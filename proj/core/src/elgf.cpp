#include "lhgf/elgf.hpp"

#include <algorithm>

namespace lhgf {

const Elem& ELGF::value(const Simplex& tau, const Simplex& nu) const {
    auto it = values.find({tau, nu});
    if (it == values.end())
        throw Error(Err::InvalidGlobalField, "no value for pair (" + base->show_simplex(tau) +
                                                 ", " + base->show_simplex(nu) + ")");
    return it->second;
}

bool ELGF::has(const Simplex& tau, const Simplex& nu) const {
    return values.count({tau, nu}) > 0;
}

ELGF extract_elgf(const GaugeField1& a) {
    ELGF e;
    e.base = a.base;
    e.model = a.model;
    bool circle1 = a.model->kind() == "circle" && !a.face_disp.empty();

    for (const auto& pr : admissible_nested_pairs(*a.base).pairs) {
        int m = SimplicialComplex::max_vertex(pr.tau);
        if (pr.level() == 0) {
            e.values[pr] = a.label(m, pr.nu[0]);
        } else if (pr.level() == 1 && circle1) {
            int p = pr.nu[0], q = pr.nu[1];
            Simplex t{p, q, m};
            auto it = a.face_disp.find(t);
            if (it == a.face_disp.end())
                throw Error(Err::FaceNotLabeled, a.base->show_simplex(t));
            Rat ap = std::get<CircleElt>(a.label(m, p).v).angle;
            Rat aq = std::get<CircleElt>(a.label(m, q).v).angle;
            Rat apq = std::get<CircleElt>(a.label(p, q).v).angle;
            e.values[pr] = Elem{1, CircleGlobe{frac(ap + apq), aq, -it->second}};
        }
    }
    return e;
}

Report check_elgf(const ELGF& e) {
    Report r;
    NestedPairTable table = admissible_nested_pairs(*e.base);

    for (const auto& [pr, val] : e.values) {
        if (!nested_pair_admissible(pr.tau, pr.nu)) {
            r.add("admissibility", "(" + e.base->show_simplex(pr.tau) + ", " +
                                       e.base->show_simplex(pr.nu) + ")");
            continue;
        }
        if (val.level != pr.level())
            r.add("level matching", "(" + e.base->show_simplex(pr.tau) + ", " +
                                        e.base->show_simplex(pr.nu) + ")");
    }
    if (!r.ok()) return r;

    auto leg = [&](int mx, int v) -> const Elem& {
        Simplex edge{std::min(mx, v), std::max(mx, v)};
        return e.value(edge, {v});
    };

    // a level-0 value depends only on the leg edge: the value on
    // (tau, {v}) and on ({v, max tau}, {v}) describe the same 1-path
    for (const auto& [pr, val] : e.values) {
        if (pr.level() != 0 || pr.tau.size() <= 2) continue;
        int mt = SimplicialComplex::max_vertex(pr.tau);
        Simplex edge{pr.nu[0], mt};
        if (!e.has(edge, pr.nu)) continue;
        if (!e.model->eq(val, e.value(edge, pr.nu)))
            r.add("composition", "(" + e.base->show_simplex(pr.tau) + ", {" +
                                     e.base->name(pr.nu[0]) + "}) disagrees with its leg edge");
    }

    // composition instances at level 0: for {v} in nu in tau the value on
    // (tau, {v}) factors through the leg values and (nu, {v})
    for (const auto& pr : table.pairs) {
        if (pr.level() < 1) continue;
        const Simplex& tau = pr.tau;
        const Simplex& nu = pr.nu;
        int mt = SimplicialComplex::max_vertex(tau);
        int mn = SimplicialComplex::max_vertex(nu);
        for (int v : nu) {
            if (v == mn) continue;
            if (!e.has(tau, {v})) continue;
            try {
                Elem through = e.model->compose(
                    Op::Internal,
                    e.model->compose(Op::Internal, leg(mt, v),
                                     e.model->inverse(Op::Internal, leg(mn, v))),
                    e.value(nu, {v}));
                if (!e.model->eq(e.value(tau, {v}), through))
                    r.add("composition",
                          "(" + e.base->show_simplex(tau) + ", " + e.base->show_simplex(nu) +
                              ", {" + e.base->name(v) + "})");
            } catch (const Error& err) {
                r.add("composition", err.what());
            }
        }
    }

    // boundary assembly, level 1 (stored level-1 values only)
    for (const auto& [pr, val] : e.values) {
        if (pr.level() != 1) continue;
        int p = pr.nu[0], q = pr.nu[1];
        Simplex edge{p, q};
        try {
            Elem src_expected = e.model->compose(
                Op::Internal, e.value(pr.tau, {p}),
                e.model->inverse(Op::Internal, e.value(edge, {p})));
            if (!e.model->eq(e.model->source(val), src_expected) ||
                !e.model->eq(e.model->target(val), e.value(pr.tau, {q})))
                r.add("boundary assembly (level 1)",
                      "(" + e.base->show_simplex(pr.tau) + ", " + e.base->show_simplex(pr.nu) +
                          ")");
        } catch (const Error& err) {
            r.add("boundary assembly (level 1)", err.what());
        }
    }

    // boundary assembly, level 2: alternating displacement identity over
    // each admissible triangle face
    for (const auto& pr : table.pairs) {
        if (pr.level() != 2) continue;
        int p = pr.nu[0], q = pr.nu[1], s = pr.nu[2];
        NestedPair pq{pr.tau, {p, q}}, ps{pr.tau, {p, s}}, qs{pr.tau, {q, s}},
            low{pr.nu, {p, q}};
        auto have = [&](const NestedPair& k) { return e.values.count(k) > 0; };
        if (!(have(pq) && have(ps) && have(qs) && have(low))) continue;
        auto disp = [&](const NestedPair& k) {
            return std::get<CircleGlobe>(e.values.at(k).v).disp;
        };
        if (disp(qs) - disp(ps) + disp(pq) - disp(low) != Rat(0))
            r.add("boundary assembly (level 2)",
                  "(" + e.base->show_simplex(pr.tau) + ", " + e.base->show_simplex(pr.nu) + ")");
    }
    return r;
}

namespace {

struct OverlapComponent {
    int i, j;                 // piece indices, i < j
    std::vector<int> verts;   // parent vertex indices, sorted
};

std::vector<std::vector<int>> piece_components_in_parent(const Cover& cov, int i) {
    auto comps = connected_components(cov.pieces[i]);
    std::vector<std::vector<int>> out;
    for (auto& c : comps) {
        std::vector<int> pv;
        for (int v : c) pv.push_back(cov.parent->vertex_index(cov.pieces[i].name(v)));
        std::sort(pv.begin(), pv.end());
        out.push_back(std::move(pv));
    }
    return out;
}

}  // namespace

std::string classify_transitions(const TransitionSystem& ts, const Budget& budget) {
    const Cover& cov = *ts.cover;
    const ModelPtr& model = ts.model;
    if (!model->finite())
        throw Error(Err::ModelNotFinite, "finite-group classification needs a finite model");
    auto elems = model->level0_elements();
    int n = static_cast<int>(cov.pieces.size());

    // transitions must be constant on each overlap component
    std::vector<OverlapComponent> ocs;
    std::vector<Elem> given;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SimplicialComplex xij = cov.intersection(i, j);
            if (xij.vertex_count() == 0) continue;
            for (auto& comp : connected_components(xij)) {
                OverlapComponent oc;
                oc.i = i;
                oc.j = j;
                for (int v : comp) oc.verts.push_back(cov.parent->vertex_index(xij.name(v)));
                std::sort(oc.verts.begin(), oc.verts.end());
                Elem val = ts.at(i, j, cov.parent->name(oc.verts.front()));
                for (int v : oc.verts)
                    if (!model->eq(ts.at(i, j, cov.parent->name(v)), val))
                        throw Error(Err::InvalidGlobalField,
                                    "transition not constant on an overlap component");
                ocs.push_back(std::move(oc));
                given.push_back(val);
            }
        }

    // relabelings: one group element per connected component of each piece
    std::vector<std::pair<int, std::vector<int>>> slots;  // (piece, parent verts)
    for (int i = 0; i < n; ++i)
        for (auto& c : piece_components_in_parent(cov, i)) slots.push_back({i, c});

    auto component_slot = [&](int piece, int parent_vertex) {
        for (int s = 0; s < static_cast<int>(slots.size()); ++s)
            if (slots[s].first == piece &&
                std::binary_search(slots[s].second.begin(), slots[s].second.end(), parent_vertex))
                return s;
        throw Error(Err::InvalidGlobalField, "vertex outside its piece components");
    };

    auto serialize = [&](const std::vector<Elem>& vals) {
        std::string s;
        for (size_t k = 0; k < ocs.size(); ++k)
            s += cov.piece_names[ocs[k].i] + "," + cov.piece_names[ocs[k].j] + ":" +
                 model->show(vals[k]) + "|";
        return s;
    };

    std::string best = serialize(given);
    std::vector<size_t> counter(slots.size(), 0);
    while (true) {
        budget.tick();
        std::vector<Elem> moved(ocs.size(), model->identity(0));
        for (size_t k = 0; k < ocs.size(); ++k) {
            const Elem& ui = elems[counter[component_slot(ocs[k].i, ocs[k].verts.front())]];
            const Elem& uj = elems[counter[component_slot(ocs[k].j, ocs[k].verts.front())]];
            moved[k] = model->compose(Op::Internal, model->compose(Op::Internal, ui, given[k]),
                                      model->inverse(Op::Internal, uj));
        }
        best = std::min(best, serialize(moved));
        size_t s = 0;
        for (; s < counter.size(); ++s) {
            if (++counter[s] < elems.size()) break;
            counter[s] = 0;
        }
        if (s == counter.size()) break;
    }
    return best;
}

long long classify_circle(const GaugeField1& a) {
    const SimplicialComplex& c = *a.base;
    auto tris = c.simplices_of_dim(2);
    if (tris.empty()) throw Error(Err::NotAClosedSurface, "no triangles");
    if (!c.simplices_of_dim(3).empty())
        throw Error(Err::NotAClosedSurface, "dimension exceeds 2");

    // each edge in exactly two triangles
    std::map<EdgeKey, std::vector<int>> cofaces;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        const auto& s = tris[t];
        cofaces[{s[0], s[1]}].push_back(t);
        cofaces[{s[0], s[2]}].push_back(t);
        cofaces[{s[1], s[2]}].push_back(t);
    }
    for (const auto& e : c.simplices_of_dim(1)) {
        auto it = cofaces.find({e[0], e[1]});
        if (it == cofaces.end() || it->second.size() != 2)
            throw Error(Err::NotAClosedSurface,
                        "edge " + c.show_simplex(e) + " is not shared by exactly two triangles");
    }

    // boundary coefficient of the ascending triangle on each of its edges
    auto coeff = [&](const Simplex& t, const EdgeKey& e) {
        if (e == EdgeKey{t[1], t[2]}) return +1;
        if (e == EdgeKey{t[0], t[2]}) return -1;
        return +1;  // (t0,t1)
    };

    // orient by BFS: adjacent triangles must induce opposite signs on the
    // shared edge
    std::vector<int> sign(tris.size(), 0);
    std::vector<int> queue{0};
    sign[0] = +1;
    size_t head = 0;
    while (head < queue.size()) {
        int t = queue[head++];
        for (const auto& [e, ts] : cofaces) {
            if (ts[0] != t && ts[1] != t) continue;
            int o = ts[0] == t ? ts[1] : ts[0];
            int want = -sign[t] * coeff(tris[t], e) * coeff(tris[o], e);
            if (sign[o] == 0) {
                sign[o] = want;
                queue.push_back(o);
            } else if (sign[o] != want) {
                throw Error(Err::NotAClosedSurface, "surface is not orientable");
            }
        }
    }
    for (int s : sign)
        if (s == 0) throw Error(Err::NotAClosedSurface, "surface is not connected");

    Rat total(0);
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        auto it = a.face_disp.find(tris[t]);
        if (it == a.face_disp.end())
            throw Error(Err::FaceNotLabeled, c.show_simplex(tris[t]));
        total += Rat(sign[t]) * it->second;
    }
    if (total.denominator() != 1)
        throw Error(Err::InvalidGlobalField,
                    "total winding " + show_rational(total) + " is not an integer");
    return total.numerator();
}

FiberHomotopyData parallel_transport(const GaugeField1& a, const EdgeWord& w,
                                     const FiberHomotopyData& phi) {
    if (phi.anchor != w.src)
        throw Error(Err::AnchorMismatch, "data anchored at " + a.base->name(phi.anchor) +
                                             ", word starts at " + a.base->name(w.src));
    Elem h = holonomy(a, w);
    for (int l = 0; l < phi.element.level; ++l) h = a.model->lift(h);
    FiberHomotopyData out;
    out.anchor = w.tgt;
    out.element = a.model->compose(Op::Internal, phi.element, h);
    return out;
}

}  // namespace lhgf
