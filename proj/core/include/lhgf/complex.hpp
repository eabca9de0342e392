#ifndef LHGF_COMPLEX_HPP
#define LHGF_COMPLEX_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lhgf/base.hpp"

namespace lhgf {

/// A simplex is an ascending list of vertex indices into the owning
/// complex's vertex table. The vertex table order is the global order.
using Simplex = std::vector<int>;

struct NestedPair;

/// Finite simplicial complex with a global vertex order. Immutable after
/// construction; all operations below are pure.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds from vertex names (in global order) and simplices given as
    /// name lists; the downward closure is always taken.
    static SimplicialComplex make(std::vector<std::string> vertex_names,
                                  const std::vector<std::vector<std::string>>& simplices);

    /// Raw constructor: no closure, no sorting. Used by validate tests to
    /// build deliberately broken complexes.
    static SimplicialComplex raw(std::vector<std::string> vertex_names,
                                 std::set<Simplex> simplices);

    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::set<Simplex>& simplices() const { return simplices_; }
    int dim() const;
    int vertex_count() const { return static_cast<int>(names_.size()); }
    int vertex_index(const std::string& name) const;  // -1 when absent
    const std::string& name(int v) const { return names_[v]; }

    bool has_simplex(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool has_edge(int u, int v) const;

    std::vector<Simplex> simplices_of_dim(int k) const;
    std::string show_simplex(const Simplex& s) const;

    /// Last vertex in the global order (the "maximal vertex" convention).
    static int max_vertex(const Simplex& s) { return s.back(); }

    Report validate() const;
    SimplicialComplex skeleton(int k) const;
    bool is_subcomplex_of(const SimplicialComplex& other) const;  // by vertex names

    /// Translates this complex's simplex to the index space of `other`;
    /// nullopt when a vertex name is missing there.
    std::optional<Simplex> translate_to(const SimplicialComplex& other, const Simplex& s) const;

private:
    std::vector<std::string> names_;
    std::set<Simplex> simplices_;
};

/// Nested pair (tau, nu): nu a proper face of tau avoiding tau's maximal
/// vertex. The combinatorial core of a simplex of paths.
struct NestedPair {
    Simplex tau;
    Simplex nu;
    int level() const { return static_cast<int>(nu.size()) - 1; }
    bool operator<(const NestedPair& o) const {
        if (tau != o.tau) return tau < o.tau;
        return nu < o.nu;
    }
    bool operator==(const NestedPair& o) const { return tau == o.tau && nu == o.nu; }
};

bool nested_pair_admissible(const Simplex& tau, const Simplex& nu);

/// All admissible pairs grouped by level, plus for each pair the admissible
/// boundary sub-pairs (tau, phi) with phi a proper face of nu.
struct NestedPairTable {
    std::vector<NestedPair> pairs;                       // sorted
    std::map<NestedPair, std::vector<NestedPair>> boundary;
};

NestedPairTable admissible_nested_pairs(const SimplicialComplex& c);

/// Barycentric subdivision. Barycenter of simplex {v0..vk} is named by
/// joining the vertex names with '+'; new vertices ordered by (dim, lex),
/// so every flag is ascending.
struct Subdivision {
    SimplicialComplex complex;
    /// original canonical edge (u,v) -> the 2-segment chain through the
    /// barycenter, as ordered (from,to) vertex index pairs in `complex`.
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edge_chain;
};

Subdivision barycentric_subdivide(const SimplicialComplex& c);

/// Pushout of c1 <- shared -> c2, identifying simplices by vertex names.
/// Vertices present in both inputs but not in `shared` are kept distinct by
/// renaming the copy from c2 (suffix "'").
SimplicialComplex glue(const SimplicialComplex& c1, const SimplicialComplex& c2,
                       const SimplicialComplex& shared);

/// Greedy free-face collapse. `collapsible == true` certifies
/// contractibility; false only means "not certified".
struct CollapseResult {
    bool collapsible = false;
    /// (free face, coface) pairs removed, in order.
    std::vector<std::pair<Simplex, Simplex>> steps;
};

CollapseResult is_collapsible(const SimplicialComplex& c);

/// Partition of vertex indices into connected components (sorted).
std::vector<std::vector<int>> connected_components(const SimplicialComplex& c);

/// Cover of a parent complex by subcomplexes; intersections are derived.
struct Cover {
    const SimplicialComplex* parent = nullptr;
    std::vector<std::string> piece_names;
    std::vector<SimplicialComplex> pieces;

    SimplicialComplex intersection(int i, int j) const;
    Report validate() const;  // union, closure, goodness certificate
};

}  // namespace lhgf

#endif
