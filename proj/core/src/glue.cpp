#include "lhgf/glue.hpp"

#include <algorithm>

namespace lhgf {

bool TransitionSystem::defined(int i, int j, const std::string& vertex) const {
    if (i == j) return true;
    auto it = psi.find({std::min(i, j), std::max(i, j)});
    return it != psi.end() && it->second.count(vertex) > 0;
}

Elem TransitionSystem::at(int i, int j, const std::string& vertex) const {
    if (i == j) return model->identity(0);
    auto it = psi.find({std::min(i, j), std::max(i, j)});
    if (it == psi.end() || !it->second.count(vertex))
        throw Error(Err::InvalidGlobalField,
                    "transition (" + std::to_string(i) + "," + std::to_string(j) +
                        ") undefined at vertex " + vertex);
    Elem v = it->second.at(vertex);
    return i < j ? v : model->inverse(Op::Internal, v);
}

namespace {

// edge label of a local field addressed by parent vertex names
Elem local_edge_value(const GaugeField1& f, const std::string& a, const std::string& b) {
    int u = f.base->vertex_index(a), v = f.base->vertex_index(b);
    return f.label(u, v);
}

int local_edge_value2(const GaugeField2& f, const std::string& a, const std::string& b) {
    int u = f.base->vertex_index(a), v = f.base->vertex_index(b);
    return f.label(u, v);
}

std::vector<int> pieces_with_vertex(const Cover& c, const std::string& nm) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(c.pieces.size()); ++i)
        if (c.pieces[i].vertex_index(nm) >= 0) out.push_back(i);
    return out;
}

}  // namespace

Report validate_global(const GlobalField& gf) {
    Report r;
    const Cover& cov = gf.cover();
    const ModelPtr& model = gf.transitions.model;
    int n = static_cast<int>(cov.pieces.size());

    size_t nlocals = gf.dim2() ? gf.locals2.size() : gf.locals1.size();
    if (static_cast<int>(nlocals) != n) {
        r.add("locals", "expected one local field per piece");
        return r;
    }
    for (int i = 0; i < n; ++i) {
        Report lr = gf.dim2() ? validate_field2(gf.locals2[i]) : validate_field1(gf.locals1[i]);
        for (auto& v : lr.violations) r.add("piece " + cov.piece_names[i] + " " + v.rule, v.detail);
    }
    if (!r.ok()) return r;

    // overlap coverage of psi
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SimplicialComplex xij = cov.intersection(i, j);
            for (const auto& nm : xij.vertex_names())
                if (!gf.transitions.defined(i, j, nm))
                    r.add("transition coverage", "(" + cov.piece_names[i] + "," +
                                                     cov.piece_names[j] + ") at " + nm);
        }
    if (!r.ok()) return r;

    // triple cocycle on vertices
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (const auto& nm : cov.parent->vertex_names()) {
                    if (cov.pieces[i].vertex_index(nm) < 0 ||
                        cov.pieces[j].vertex_index(nm) < 0 ||
                        cov.pieces[k].vertex_index(nm) < 0)
                        continue;
                    Elem lhs = model->compose(Op::Internal, gf.transitions.at(i, j, nm),
                                              gf.transitions.at(j, k, nm));
                    if (!model->eq(lhs, gf.transitions.at(i, k, nm)))
                        r.add("cocycle", "(" + cov.piece_names[i] + "," + cov.piece_names[j] +
                                             "," + cov.piece_names[k] + ") at " + nm);
                }

    // overlap compatibility on shared simplices
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SimplicialComplex xij = cov.intersection(i, j);
            for (const auto& e : xij.simplices_of_dim(1)) {
                std::string a = xij.name(e[0]), b = xij.name(e[1]);
                if (gf.dim2()) {
                    const CrossedModule& x = gf.locals2[i].xm();
                    int pa = std::get<DiscreteElt>(gf.transitions.at(i, j, a).v).g;
                    int pb = std::get<DiscreteElt>(gf.transitions.at(i, j, b).v).g;
                    int rhs = x.G.times(x.G.times(pa, local_edge_value2(gf.locals2[j], a, b)),
                                        x.G.inverse(pb));
                    if (local_edge_value2(gf.locals2[i], a, b) != rhs)
                        r.add("compatibility", "edge " + a + "-" + b + " on (" +
                                                   cov.piece_names[i] + "," + cov.piece_names[j] +
                                                   ")");
                } else {
                    Elem rhs = model->compose(
                        Op::Internal,
                        model->compose(Op::Internal, gf.transitions.at(i, j, a),
                                       local_edge_value(gf.locals1[j], a, b)),
                        model->inverse(Op::Internal, gf.transitions.at(i, j, b)));
                    if (!model->eq(local_edge_value(gf.locals1[i], a, b), rhs))
                        r.add("compatibility", "edge " + a + "-" + b + " on (" +
                                                   cov.piece_names[i] + "," + cov.piece_names[j] +
                                                   ")");
                }
            }
            if (gf.dim2())
                for (const auto& t : xij.simplices_of_dim(2)) {
                    const CrossedModule& x = gf.locals2[i].xm();
                    std::string n0 = xij.name(t[0]), n1 = xij.name(t[1]), n2 = xij.name(t[2]);
                    auto face_of = [&](const GaugeField2& f) {
                        Simplex s{f.base->vertex_index(n0), f.base->vertex_index(n1),
                                  f.base->vertex_index(n2)};
                        std::sort(s.begin(), s.end());
                        return f.faces.at(s);
                    };
                    int p0 = std::get<DiscreteElt>(gf.transitions.at(i, j, n0).v).g;
                    if (face_of(gf.locals2[i]) != x.act(p0, face_of(gf.locals2[j])))
                        r.add("compatibility", "triangle " + n0 + "-" + n1 + "-" + n2 + " on (" +
                                                   cov.piece_names[i] + "," + cov.piece_names[j] +
                                                   ")");
                }
        }
    return r;
}

NormalizeResult normalize_transitions(const GlobalField& gf) {
    Report valid = validate_global(gf);
    if (!valid.ok())
        throw Error(Err::InvalidGlobalField, valid.violations.front().rule + ": " +
                                                 valid.violations.front().detail);
    const Cover& cov = gf.cover();
    const ModelPtr& model = gf.transitions.model;
    int n = static_cast<int>(cov.pieces.size());

    NormalizeResult out;
    out.field.transitions.cover = gf.transitions.cover;
    out.field.transitions.model = model;

    // u_i(v) = psi_{r,i}(v) where r is the lowest piece containing v; the
    // pairwise cocycle at v makes every transition a coboundary there
    for (int i = 0; i < n; ++i) {
        GaugeTransform u;
        u.base = &cov.pieces[i];
        u.model = model;
        for (int v = 0; v < cov.pieces[i].vertex_count(); ++v) {
            const std::string& nm = cov.pieces[i].name(v);
            int r = pieces_with_vertex(cov, nm).front();
            u.vertices[v] = gf.transitions.at(r, i, nm);
        }
        out.transforms.push_back(std::move(u));
    }

    // transformed transitions must be the identity on every overlap vertex
    for (const auto& [pair, values] : gf.transitions.psi) {
        auto [i, j] = pair;
        std::map<std::string, Elem> nv;
        for (const auto& [nm, val] : values) {
            Elem ui = out.transforms[i].at(cov.pieces[i].vertex_index(nm));
            Elem uj = out.transforms[j].at(cov.pieces[j].vertex_index(nm));
            Elem moved = model->compose(Op::Internal, model->compose(Op::Internal, ui, val),
                                        model->inverse(Op::Internal, uj));
            if (!model->eq(moved, model->identity(0)))
                throw Error(Err::InvalidGlobalField,
                            "transitions do not normalize at vertex " + nm);
            nv[nm] = moved;
        }
        out.field.transitions.psi[pair] = std::move(nv);
    }

    for (int i = 0; i < n; ++i) {
        if (gf.dim2())
            out.field.locals2.push_back(act(out.transforms[i], gf.locals2[i]));
        else
            out.field.locals1.push_back(act(out.transforms[i], gf.locals1[i]));
    }
    return out;
}

GaugeField1 glue_to_single(const GlobalField& gf) {
    const Cover& cov = gf.cover();
    const ModelPtr& model = gf.transitions.model;
    GaugeField1 out;
    out.base = cov.parent;
    out.model = model;
    for (const auto& e : cov.parent->simplices_of_dim(1)) {
        std::string a = cov.parent->name(e[0]), b = cov.parent->name(e[1]);
        bool have = false;
        Elem val = model->identity(0);
        for (int i = 0; i < static_cast<int>(cov.pieces.size()); ++i) {
            int u = cov.pieces[i].vertex_index(a), v = cov.pieces[i].vertex_index(b);
            if (u < 0 || v < 0 || !cov.pieces[i].has_edge(std::min(u, v), std::max(u, v)))
                continue;
            Elem here = gf.locals1[i].label(u, v);
            if (!have) {
                val = here;
                have = true;
            } else if (!model->eq(val, here)) {
                throw Error(Err::OverlapDisagreement, "edge " + a + "-" + b);
            }
        }
        if (!have) throw Error(Err::OverlapDisagreement, "edge " + a + "-" + b + " uncovered");
        out.edges[{e[0], e[1]}] = val;
    }
    // circle displacements ride along when the locals carry them
    for (int i = 0; i < static_cast<int>(cov.pieces.size()); ++i)
        for (const auto& [t, d] : gf.locals1[i].face_disp) {
            Simplex s;
            for (int v : t) s.push_back(cov.parent->vertex_index(cov.pieces[i].name(v)));
            std::sort(s.begin(), s.end());
            auto it = out.face_disp.find(s);
            if (it != out.face_disp.end() && it->second != d)
                throw Error(Err::OverlapDisagreement,
                            "triangle displacement " + cov.parent->show_simplex(s));
            out.face_disp[s] = d;
        }
    return out;
}

GaugeField2 glue_to_single2(const GlobalField& gf) {
    const Cover& cov = gf.cover();
    GaugeField2 out;
    out.base = cov.parent;
    out.model = gf.locals2.front().model;
    for (const auto& e : cov.parent->simplices_of_dim(1)) {
        std::string a = cov.parent->name(e[0]), b = cov.parent->name(e[1]);
        bool have = false;
        int val = 0;
        for (int i = 0; i < static_cast<int>(cov.pieces.size()); ++i) {
            int u = cov.pieces[i].vertex_index(a), v = cov.pieces[i].vertex_index(b);
            if (u < 0 || v < 0 || !cov.pieces[i].has_edge(std::min(u, v), std::max(u, v)))
                continue;
            int here = gf.locals2[i].label(u, v);
            if (!have) {
                val = here;
                have = true;
            } else if (val != here) {
                throw Error(Err::OverlapDisagreement, "edge " + a + "-" + b);
            }
        }
        if (!have) throw Error(Err::OverlapDisagreement, "edge " + a + "-" + b + " uncovered");
        out.edges[{e[0], e[1]}] = val;
    }
    for (const auto& t : cov.parent->simplices_of_dim(2)) {
        std::string n0 = cov.parent->name(t[0]), n1 = cov.parent->name(t[1]),
                    n2 = cov.parent->name(t[2]);
        bool have = false;
        int val = 0;
        for (int i = 0; i < static_cast<int>(cov.pieces.size()); ++i) {
            const auto& piece = cov.pieces[i];
            Simplex s{piece.vertex_index(n0), piece.vertex_index(n1), piece.vertex_index(n2)};
            if (s[0] < 0 || s[1] < 0 || s[2] < 0) continue;
            std::sort(s.begin(), s.end());
            auto it = gf.locals2[i].faces.find(s);
            if (it == gf.locals2[i].faces.end()) continue;
            if (!have) {
                val = it->second;
                have = true;
            } else if (val != it->second) {
                throw Error(Err::OverlapDisagreement,
                            "triangle " + cov.parent->show_simplex(t));
            }
        }
        if (!have)
            throw Error(Err::OverlapDisagreement,
                        "triangle " + cov.parent->show_simplex(t) + " uncovered");
        out.faces[t] = val;
    }
    return out;
}

EqualizerResult equalizer_check(const SimplicialComplex& parent, const Cover& cover,
                                const ModelPtr& model, const Budget& budget) {
    EqualizerResult res;
    auto global_fields = enumerate_fields1(parent, model, &budget);
    res.global_count = static_cast<long long>(global_fields.size());

    int n = static_cast<int>(cover.pieces.size());
    std::vector<std::vector<GaugeField1>> piece_fields;
    for (int i = 0; i < n; ++i)
        piece_fields.push_back(enumerate_fields1(cover.pieces[i], model, &budget));

    // shared canonical edges between pieces, by name
    struct SharedEdge {
        int i, j;
        std::string a, b;
    };
    std::vector<SharedEdge> shared;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SimplicialComplex xij = cover.intersection(i, j);
            for (const auto& e : xij.simplices_of_dim(1))
                shared.push_back({i, j, xij.name(e[0]), xij.name(e[1])});
        }

    auto tuple_key = [&](const std::vector<const GaugeField1*>& tup) {
        std::string k;
        for (int i = 0; i < n; ++i)
            for (const auto& [e, v] : tup[i]->edges) k += model->show(v) + "|";
        return k;
    };

    std::set<std::string> limit_keys;
    std::vector<size_t> counter(n, 0);
    while (true) {
        budget.tick();
        std::vector<const GaugeField1*> tup;
        for (int i = 0; i < n; ++i) tup.push_back(&piece_fields[i][counter[i]]);
        bool compatible = true;
        for (const auto& s : shared) {
            if (!model->eq(local_edge_value(*tup[s.i], s.a, s.b),
                           local_edge_value(*tup[s.j], s.a, s.b))) {
                compatible = false;
                break;
            }
        }
        if (compatible) limit_keys.insert(tuple_key(tup));
        int i = 0;
        for (; i < n; ++i) {
            if (++counter[i] < piece_fields[i].size()) break;
            counter[i] = 0;
        }
        if (i == n) break;
    }
    res.limit_count = static_cast<long long>(limit_keys.size());

    // restriction map: parent field -> tuple of piece restrictions
    std::set<std::string> image;
    bool injective = true;
    for (const auto& g : global_fields) {
        budget.tick();
        std::vector<GaugeField1> restr(n);
        for (int i = 0; i < n; ++i) {
            restr[i].base = &cover.pieces[i];
            restr[i].model = model;
            for (const auto& e : cover.pieces[i].simplices_of_dim(1)) {
                int pu = parent.vertex_index(cover.pieces[i].name(e[0]));
                int pv = parent.vertex_index(cover.pieces[i].name(e[1]));
                restr[i].edges[{e[0], e[1]}] = g.label(pu, pv);
            }
        }
        std::vector<const GaugeField1*> tup;
        for (int i = 0; i < n; ++i) tup.push_back(&restr[i]);
        std::string k = tuple_key(tup);
        if (!image.insert(k).second) injective = false;
        if (!limit_keys.count(k)) res.report.add("restriction", "image outside the limit");
    }
    for (const auto& k : limit_keys)
        if (!image.count(k)) {
            res.report.add("surjectivity", "limit tuple not in the image");
            break;
        }
    if (!injective) res.report.add("injectivity", "two global fields restrict equally");
    res.bijective = res.report.ok() && res.global_count == res.limit_count;
    return res;
}

GaugeField1 coarse_grain(const GaugeField1& fine, const Subdivision& sub,
                         const SimplicialComplex& coarse) {
    if (fine.base->vertex_names() != sub.complex.vertex_names())
        throw Error(Err::NotARefinement, "field does not live on the given subdivision");
    GaugeField1 out;
    out.base = &coarse;
    out.model = fine.model;
    for (const auto& e : coarse.simplices_of_dim(1)) {
        auto it = sub.edge_chain.find({e[0], e[1]});
        if (it == sub.edge_chain.end())
            throw Error(Err::NotARefinement,
                        "no chain for edge " + coarse.show_simplex(e));
        Elem h = fine.model->identity(0);
        for (auto [a, b] : it->second)
            h = fine.model->compose(Op::Internal, h, fine.label(a, b));
        out.edges[{e[0], e[1]}] = h;
    }
    return out;
}

}  // namespace lhgf
