#ifndef LHGF_WORD_HPP
#define LHGF_WORD_HPP

#include <string>
#include <vector>

#include "lhgf/complex.hpp"

namespace lhgf {

/// One traversal step: the canonical edge (u < v) read forwards (+1) or
/// backwards (-1).
struct Letter {
    int u, v;
    int orient;  // +1: u -> v, -1: v -> u
    int from() const { return orient > 0 ? u : v; }
    int to() const { return orient > 0 ? v : u; }
    Letter inverted() const { return {u, v, -orient}; }
    bool operator==(const Letter& o) const = default;
    auto operator<=>(const Letter& o) const = default;
};

/// Path in the 1-skeleton as a composable sequence of letters. Words are
/// not automatically reduced; reduce_word gives the canonical form.
struct EdgeWord {
    const SimplicialComplex* base = nullptr;
    std::vector<Letter> letters;
    int src = -1;  // meaningful even when empty
    int tgt = -1;

    bool empty() const { return letters.empty(); }
    bool closed() const { return src == tgt; }
};

/// Empty word at a vertex.
EdgeWord empty_word(const SimplicialComplex& c, int v);

/// Builds a word from (from,to) vertex steps; checks every step is an edge
/// of the complex and consecutive steps chain up.
EdgeWord make_word(const SimplicialComplex& c, const std::vector<std::pair<int, int>>& steps);

/// Word along consecutive vertices v0, v1, ..., vn.
EdgeWord word_through(const SimplicialComplex& c, const std::vector<int>& vertices);

/// Parses the literal form `a>b.b>c.c>a~` (`~` inverts the preceding
/// letter). Vertex names resolved in c.
EdgeWord parse_word(const SimplicialComplex& c, const std::string& literal);

std::string show_word(const EdgeWord& w);

EdgeWord reduce_word(const EdgeWord& w);
EdgeWord compose_words(const EdgeWord& u, const EdgeWord& w);  // reduced
EdgeWord invert_word(const EdgeWord& w);
bool words_equal(const EdgeWord& u, const EdgeWord& w);  // up to reduction

/// Whiskered triangle substitution. For triangle [a,b,c] (ascending), the
/// long edge is a>c and the short pair is a>b.b>c; `expand` replaces long
/// by short pair, `contract` the reverse. Contexts are words.
struct TriMove {
    Simplex tri;  // 3 ascending vertex indices
    bool expand = true;
    EdgeWord left;
    EdgeWord right;
};

struct PastingDiagram {
    const SimplicialComplex* base = nullptr;
    EdgeWord source_word;
    EdgeWord target_word;
    std::vector<TriMove> moves;
};

/// The word a move rewrites from / to (context · edge piece · context),
/// reduced.
EdgeWord move_input(const TriMove& m, const SimplicialComplex& c);
EdgeWord move_output(const TriMove& m, const SimplicialComplex& c);

Report pasting_validate(const PastingDiagram& p);

enum class PasteDir { Vertical, Horizontal };
PastingDiagram pasting_compose(const PastingDiagram& p, const PastingDiagram& q, PasteDir d);

}  // namespace lhgf

#endif
