#include "lhgf/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lhgf {

namespace {

void add_with_closure(std::set<Simplex>& out, Simplex s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) return;
    // enumerate nonempty subsets
    int n = static_cast<int>(s.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Simplex sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(s[i]);
        out.insert(sub);
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::make(std::vector<std::string> vertex_names,
                                          const std::vector<std::vector<std::string>>& simplices) {
    SimplicialComplex c;
    c.names_ = std::move(vertex_names);
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(c.names_.size()); ++i) idx[c.names_[i]] = i;
    for (const auto& s : simplices) {
        Simplex t;
        for (const auto& nm : s) {
            auto it = idx.find(nm);
            if (it == idx.end()) throw Error(Err::ParseError, "unknown vertex '" + nm + "' in simplex");
            t.push_back(it->second);
        }
        add_with_closure(c.simplices_, t);
    }
    return c;
}

SimplicialComplex SimplicialComplex::raw(std::vector<std::string> vertex_names,
                                         std::set<Simplex> simplices) {
    SimplicialComplex c;
    c.names_ = std::move(vertex_names);
    c.simplices_ = std::move(simplices);
    return c;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

int SimplicialComplex::vertex_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i)
        if (names_[i] == name) return i;
    return -1;
}

bool SimplicialComplex::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return simplices_.count({u, v}) > 0;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int k) const {
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (static_cast<int>(s.size()) == k + 1) out.push_back(s);
    return out;
}

std::string SimplicialComplex::show_simplex(const Simplex& s) const {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += names_[s[i]];
    }
    return out + "]";
}

Report SimplicialComplex::validate() const {
    Report r;
    int n = vertex_count();
    for (const auto& s : simplices_) {
        if (s.empty()) {
            r.add("nonempty", "empty simplex listed");
            continue;
        }
        bool ascending = true;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= n) {
                r.add("vertex-range", "simplex references vertex index " + std::to_string(s[i]));
                ascending = false;
                break;
            }
            if (i > 0 && s[i] <= s[i - 1]) ascending = false;
        }
        if (!ascending) {
            r.add("ascending-order", "simplex not strictly ascending: " + show_simplex(s));
            continue;
        }
        // downward closure on facets suffices (facet-of-facet covered inductively)
        if (s.size() > 1) {
            for (size_t skip = 0; skip < s.size(); ++skip) {
                Simplex face;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != skip) face.push_back(s[i]);
                if (!simplices_.count(face))
                    r.add("downward-closure", "missing face " + show_simplex(face) + " of " + show_simplex(s));
            }
        }
    }
    return r;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
    SimplicialComplex c;
    c.names_ = names_;
    for (const auto& s : simplices_)
        if (static_cast<int>(s.size()) <= k + 1) c.simplices_.insert(s);
    return c;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (const auto& s : simplices_) {
        auto t = translate_to(other, s);
        if (!t || !other.has_simplex(*t)) return false;
    }
    return true;
}

std::optional<Simplex> SimplicialComplex::translate_to(const SimplicialComplex& other,
                                                       const Simplex& s) const {
    Simplex t;
    for (int v : s) {
        int w = other.vertex_index(names_[v]);
        if (w < 0) return std::nullopt;
        t.push_back(w);
    }
    std::sort(t.begin(), t.end());
    return t;
}

bool nested_pair_admissible(const Simplex& tau, const Simplex& nu) {
    if (nu.size() >= tau.size()) return false;
    // nu contained in tau minus its maximal vertex
    size_t j = 0;
    for (int v : nu) {
        while (j < tau.size() && tau[j] < v) ++j;
        if (j >= tau.size() || tau[j] != v) return false;
    }
    return nu.back() != tau.back();
}

NestedPairTable admissible_nested_pairs(const SimplicialComplex& c) {
    NestedPairTable table;
    for (const auto& tau : c.simplices()) {
        if (tau.size() < 2) continue;
        // proper faces avoiding the maximal vertex = nonempty subsets of tau \ {max}
        Simplex body(tau.begin(), tau.end() - 1);
        int n = static_cast<int>(body.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex nu;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) nu.push_back(body[i]);
            table.pairs.push_back({tau, nu});
        }
    }
    std::sort(table.pairs.begin(), table.pairs.end());
    for (const auto& p : table.pairs) {
        std::vector<NestedPair> bd;
        int n = static_cast<int>(p.nu.size());
        if (n > 1) {
            for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
                Simplex phi;
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) phi.push_back(p.nu[i]);
                bd.push_back({p.tau, phi});
            }
        }
        table.boundary[p] = std::move(bd);
    }
    return table;
}

Subdivision barycentric_subdivide(const SimplicialComplex& c) {
    Subdivision out;
    // new vertices = original simplices, ordered by (dim, lex)
    std::vector<Simplex> cells(c.simplices().begin(), c.simplices().end());
    std::sort(cells.begin(), cells.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::map<Simplex, int> cell_index;
    std::vector<std::string> names;
    for (const auto& s : cells) {
        cell_index[s] = static_cast<int>(names.size());
        std::string nm;
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) nm += "+";
            nm += c.vertex_names()[s[i]];
        }
        names.push_back(nm);
    }
    // simplices = chains under strict face inclusion; dims strictly increase
    // along a chain, so chains are ascending in the new order.
    std::set<Simplex> simp;
    // grow chains by DFS from each cell
    std::vector<std::vector<int>> extends(cells.size());  // cell -> cells it is a proper face of
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = 0; j < cells.size(); ++j) {
            if (i == j || cells[i].size() >= cells[j].size()) continue;
            if (std::includes(cells[j].begin(), cells[j].end(), cells[i].begin(), cells[i].end()))
                extends[i].push_back(static_cast<int>(j));
        }
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int i) -> void {
        chain.push_back(i);
        Simplex s;
        for (int k : chain) s.push_back(cell_index[cells[k]]);
        std::sort(s.begin(), s.end());
        simp.insert(s);
        for (int j : extends[i]) self(self, j);
        chain.pop_back();
    };
    for (size_t i = 0; i < cells.size(); ++i) dfs(dfs, static_cast<int>(i));

    out.complex = SimplicialComplex::raw(names, simp);
    for (const auto& s : cells) {
        if (s.size() != 2) continue;
        int a = cell_index[{s[0]}];
        int b = cell_index[{s[1]}];
        int m = cell_index[s];
        out.edge_chain[{s[0], s[1]}] = {{a, m}, {m, b}};
    }
    return out;
}

SimplicialComplex glue(const SimplicialComplex& c1, const SimplicialComplex& c2,
                       const SimplicialComplex& shared) {
    if (!shared.is_subcomplex_of(c1) || !shared.is_subcomplex_of(c2))
        throw Error(Err::SharedNotSubcomplex, "shared complex is not a subcomplex of both inputs");

    // vertex name space: c1 names kept; c2 names kept when in shared or
    // unseen, renamed with "'" when clashing outside shared.
    std::map<std::string, std::string> rename2;
    for (const auto& nm : c2.vertex_names()) {
        bool in_shared = shared.vertex_index(nm) >= 0;
        bool in_c1 = c1.vertex_index(nm) >= 0;
        if (in_c1 && !in_shared) {
            std::string fresh = nm + "'";
            while (c1.vertex_index(fresh) >= 0 || c2.vertex_index(fresh) >= 0) fresh += "'";
            rename2[nm] = fresh;
        } else {
            rename2[nm] = nm;
        }
    }
    // merged global order: ordered merge, c1 priority
    std::vector<std::string> merged = c1.vertex_names();
    size_t pos = 0;  // insertion point within merged, advanced past matches
    for (const auto& nm0 : c2.vertex_names()) {
        const std::string& nm = rename2[nm0];
        auto it = std::find(merged.begin(), merged.end(), nm);
        if (it != merged.end()) {
            pos = static_cast<size_t>(it - merged.begin()) + 1;
        } else {
            merged.insert(merged.begin() + pos, nm);
            ++pos;
        }
    }
    std::vector<std::vector<std::string>> simp;
    auto emit = [&](const SimplicialComplex& c, const std::map<std::string, std::string>* ren) {
        for (const auto& s : c.simplices()) {
            std::vector<std::string> t;
            for (int v : s) {
                const std::string& nm = c.vertex_names()[v];
                t.push_back(ren ? ren->at(nm) : nm);
            }
            simp.push_back(t);
        }
    };
    emit(c1, nullptr);
    emit(c2, &rename2);
    return SimplicialComplex::make(merged, simp);
}

CollapseResult is_collapsible(const SimplicialComplex& c) {
    CollapseResult res;
    std::set<Simplex> live = c.simplices();
    if (live.empty()) {
        res.collapsible = false;
        return res;
    }
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (const auto& f : live) {
            // free face: contained in exactly one strictly larger simplex,
            // which must be its codimension-1 coface
            int count = 0;
            Simplex only;
            for (const auto& s : live) {
                if (s.size() > f.size() &&
                    std::includes(s.begin(), s.end(), f.begin(), f.end())) {
                    ++count;
                    only = s;
                    if (count > 1) break;
                }
            }
            if (count == 1 && only.size() == f.size() + 1) {
                res.steps.push_back({f, only});
                live.erase(f);
                live.erase(only);
                progressed = true;
                break;
            }
        }
    }
    res.collapsible = (live.size() == 1 && live.begin()->size() == 1);
    return res;
}

std::vector<std::vector<int>> connected_components(const SimplicialComplex& c) {
    int n = c.vertex_count();
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    for (const auto& s : c.simplices())
        for (size_t i = 1; i < s.size(); ++i) rep[find(s[i])] = find(s[0]);
    std::map<int, std::vector<int>> groups;
    for (const auto& s : c.simplices())
        if (s.size() == 1) groups[find(s[0])].push_back(s[0]);
    std::vector<std::vector<int>> out;
    for (auto& [root, vs] : groups) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        out.push_back(vs);
    }
    return out;
}

namespace {

SimplicialComplex restrict_to_vertices(const SimplicialComplex& c, const std::vector<int>& verts) {
    std::map<int, int> remap;
    std::vector<std::string> names;
    for (int v : verts) {
        remap[v] = static_cast<int>(names.size());
        names.push_back(c.vertex_names()[v]);
    }
    std::set<Simplex> simp;
    for (const auto& s : c.simplices()) {
        bool inside = true;
        for (int v : s)
            if (!remap.count(v)) { inside = false; break; }
        if (!inside) continue;
        Simplex t;
        for (int v : s) t.push_back(remap[v]);
        simp.insert(t);
    }
    return SimplicialComplex::raw(names, simp);
}

bool components_collapsible(const SimplicialComplex& c) {
    for (const auto& comp : connected_components(c))
        if (!is_collapsible(restrict_to_vertices(c, comp)).collapsible) return false;
    return true;
}

}  // namespace

SimplicialComplex Cover::intersection(int i, int j) const {
    std::set<Simplex> inter;
    for (const auto& s : pieces[i].simplices()) {
        auto t = pieces[i].translate_to(pieces[j], s);
        if (t && pieces[j].has_simplex(*t)) inter.insert(s);
    }
    // reindex into a standalone complex using piece i's names
    std::vector<std::string> names;
    std::map<int, int> remap;
    for (const auto& s : inter)
        for (int v : s)
            if (!remap.count(v)) remap[v] = 0;
    int next = 0;
    for (auto& [v, idx] : remap) {
        idx = next++;
        names.push_back(pieces[i].vertex_names()[v]);
    }
    std::set<Simplex> simp;
    for (const auto& s : inter) {
        Simplex t;
        for (int v : s) t.push_back(remap[v]);
        simp.insert(t);
    }
    return SimplicialComplex::raw(names, simp);
}

Report Cover::validate() const {
    Report r;
    if (!parent) {
        r.add("cover", "no parent complex");
        return r;
    }
    std::set<Simplex> uni;
    for (size_t i = 0; i < pieces.size(); ++i) {
        const auto& p = pieces[i];
        Report pr = p.validate();
        for (auto& v : pr.violations) r.add("piece-closure(" + piece_names[i] + ")", v.detail);
        if (!p.is_subcomplex_of(*parent))
            r.add("piece-subcomplex", piece_names[i] + " is not a subcomplex of the parent");
        for (const auto& s : p.simplices()) {
            auto t = p.translate_to(*parent, s);
            if (t) uni.insert(*t);
        }
        if (!components_collapsible(p))
            r.add("goodness", "piece " + piece_names[i] + " not certified collapsible");
    }
    if (uni != parent->simplices()) r.add("cover-union", "union of pieces does not equal the parent");
    for (size_t i = 0; i < pieces.size(); ++i)
        for (size_t j = i + 1; j < pieces.size(); ++j) {
            auto inter = intersection(static_cast<int>(i), static_cast<int>(j));
            if (inter.simplices().empty()) continue;
            if (!components_collapsible(inter))
                r.add("goodness", "intersection " + piece_names[i] + "∩" + piece_names[j] +
                                      " not certified collapsible");
        }
    return r;
}

}  // namespace lhgf
