#include "lhgf/word.hpp"

#include <algorithm>

namespace lhgf {

EdgeWord empty_word(const SimplicialComplex& c, int v) {
    EdgeWord w;
    w.base = &c;
    w.src = w.tgt = v;
    return w;
}

EdgeWord make_word(const SimplicialComplex& c, const std::vector<std::pair<int, int>>& steps) {
    EdgeWord w;
    w.base = &c;
    if (steps.empty()) throw Error(Err::NotComposable, "empty step list has no endpoints");
    w.src = steps.front().first;
    int at = w.src;
    for (auto [a, b] : steps) {
        if (a != at)
            throw Error(Err::NotComposable,
                        "step starts at " + c.name(a) + ", expected " + c.name(at));
        int u = std::min(a, b), v = std::max(a, b);
        if (!c.has_edge(u, v))
            throw Error(Err::EdgeNotInComplex, c.name(u) + "-" + c.name(v));
        w.letters.push_back({u, v, a == u ? +1 : -1});
        at = b;
    }
    w.tgt = at;
    return w;
}

EdgeWord word_through(const SimplicialComplex& c, const std::vector<int>& vs) {
    if (vs.empty()) throw Error(Err::NotComposable, "empty vertex list");
    if (vs.size() == 1) return empty_word(c, vs[0]);
    std::vector<std::pair<int, int>> steps;
    for (size_t i = 0; i + 1 < vs.size(); ++i) steps.push_back({vs[i], vs[i + 1]});
    return make_word(c, steps);
}

EdgeWord parse_word(const SimplicialComplex& c, const std::string& literal) {
    EdgeWord w;
    w.base = &c;
    if (literal.empty()) throw Error(Err::ParseError, "empty word literal");
    size_t pos = 0;
    bool first = true;
    while (pos < literal.size()) {
        size_t dot = literal.find('.', pos);
        std::string tok = literal.substr(pos, dot == std::string::npos ? dot : dot - pos);
        pos = dot == std::string::npos ? literal.size() : dot + 1;
        bool inverted = false;
        if (!tok.empty() && tok.back() == '~') {
            inverted = true;
            tok.pop_back();
        }
        size_t gt = tok.find('>');
        if (gt == std::string::npos || gt == 0 || gt + 1 >= tok.size())
            throw Error(Err::ParseError, "bad letter '" + tok + "' (expected v1>v2)");
        int a = c.vertex_index(tok.substr(0, gt));
        int b = c.vertex_index(tok.substr(gt + 1));
        if (a < 0 || b < 0) throw Error(Err::ParseError, "unknown vertex in '" + tok + "'");
        if (inverted) std::swap(a, b);
        int u = std::min(a, b), v = std::max(a, b);
        if (!c.has_edge(u, v))
            throw Error(Err::EdgeNotInComplex, c.name(u) + "-" + c.name(v));
        Letter l{u, v, a == u ? +1 : -1};
        if (first) {
            w.src = a;
            first = false;
        } else if (w.tgt != a) {
            throw Error(Err::NotComposable,
                        "letter '" + tok + "' starts at " + c.name(a) + ", expected " +
                            c.name(w.tgt));
        }
        w.letters.push_back(l);
        w.tgt = b;
    }
    return w;
}

std::string show_word(const EdgeWord& w) {
    if (w.empty()) return "(empty at " + w.base->name(w.src) + ")";
    std::string s;
    for (const auto& l : w.letters) {
        if (!s.empty()) s += ".";
        s += w.base->name(l.u) + ">" + w.base->name(l.v);
        if (l.orient < 0) s += "~";
    }
    return s;
}

EdgeWord reduce_word(const EdgeWord& w) {
    EdgeWord r;
    r.base = w.base;
    r.src = w.src;
    r.tgt = w.tgt;
    for (const auto& l : w.letters) {
        if (!r.letters.empty() && r.letters.back() == l.inverted())
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

EdgeWord compose_words(const EdgeWord& u, const EdgeWord& w) {
    if (u.tgt != w.src)
        throw Error(Err::EndpointMismatch, "target " + u.base->name(u.tgt) +
                                               " != source " + w.base->name(w.src));
    EdgeWord c;
    c.base = u.base;
    c.src = u.src;
    c.tgt = w.tgt;
    c.letters = u.letters;
    c.letters.insert(c.letters.end(), w.letters.begin(), w.letters.end());
    return reduce_word(c);
}

EdgeWord invert_word(const EdgeWord& w) {
    EdgeWord r;
    r.base = w.base;
    r.src = w.tgt;
    r.tgt = w.src;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(it->inverted());
    return r;
}

bool words_equal(const EdgeWord& u, const EdgeWord& w) {
    EdgeWord a = reduce_word(u), b = reduce_word(w);
    return a.src == b.src && a.tgt == b.tgt && a.letters == b.letters;
}

namespace {

EdgeWord long_edge_word(const SimplicialComplex& c, const Simplex& t) {
    return word_through(c, {t[0], t[2]});
}
EdgeWord short_pair_word(const SimplicialComplex& c, const Simplex& t) {
    return word_through(c, {t[0], t[1], t[2]});
}

EdgeWord splice(const TriMove& m, const SimplicialComplex& c, bool input) {
    const EdgeWord& mid = (m.expand == input) ? long_edge_word(c, m.tri)
                                              : short_pair_word(c, m.tri);
    return compose_words(compose_words(m.left, mid), m.right);
}

}  // namespace

EdgeWord move_input(const TriMove& m, const SimplicialComplex& c) { return splice(m, c, true); }
EdgeWord move_output(const TriMove& m, const SimplicialComplex& c) { return splice(m, c, false); }

Report pasting_validate(const PastingDiagram& p) {
    Report r;
    const SimplicialComplex& c = *p.base;
    EdgeWord cur = reduce_word(p.source_word);
    int n = 0;
    for (const auto& m : p.moves) {
        ++n;
        if (m.tri.size() != 3 || !c.has_simplex(m.tri)) {
            r.add("move triangle", "move " + std::to_string(n) + ": triangle not in complex");
            return r;
        }
        EdgeWord in, out;
        try {
            in = move_input(m, c);
            out = move_output(m, c);
        } catch (const Error& e) {
            r.add("move contexts", "move " + std::to_string(n) + ": " + e.what());
            return r;
        }
        if (!words_equal(cur, in)) {
            r.add("move application",
                  "move " + std::to_string(n) + ": current word " + show_word(cur) +
                      " does not match move input " + show_word(in));
            return r;
        }
        cur = reduce_word(out);
    }
    if (!words_equal(cur, p.target_word))
        r.add("target word", "moves end at " + show_word(cur) + ", declared target " +
                                 show_word(reduce_word(p.target_word)));
    return r;
}

PastingDiagram pasting_compose(const PastingDiagram& p, const PastingDiagram& q, PasteDir d) {
    PastingDiagram out;
    out.base = p.base;
    if (d == PasteDir::Vertical) {
        if (!words_equal(p.target_word, q.source_word))
            throw Error(Err::BoundaryMismatch,
                        "vertical composition: target of first != source of second");
        out.source_word = p.source_word;
        out.target_word = q.target_word;
        out.moves = p.moves;
        out.moves.insert(out.moves.end(), q.moves.begin(), q.moves.end());
        return out;
    }
    if (reduce_word(p.source_word).tgt != reduce_word(q.source_word).src)
        throw Error(Err::BoundaryMismatch, "horizontal composition: endpoint mismatch");
    out.source_word = compose_words(p.source_word, q.source_word);
    out.target_word = compose_words(p.target_word, q.target_word);
    for (TriMove m : p.moves) {
        m.right = compose_words(m.right, q.source_word);
        out.moves.push_back(std::move(m));
    }
    for (TriMove m : q.moves) {
        m.left = compose_words(p.target_word, m.left);
        out.moves.push_back(std::move(m));
    }
    return out;
}

}  // namespace lhgf
