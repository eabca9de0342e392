#ifndef LHGF_FIELD_HPP
#define LHGF_FIELD_HPP

#include <map>
#include <utility>

#include "lhgf/algebra.hpp"
#include "lhgf/word.hpp"

namespace lhgf {

using EdgeKey = std::pair<int, int>;  // canonical: first < second

inline EdgeKey edge_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

/// Dimension-1 field: one level-0 label per canonical edge. For the circle
/// model a field may additionally carry one exact displacement per
/// triangle, the level-1 datum of the label homotopy across the face;
/// coherence: disp ≡ A(e01) + A(e12) − A(e02) (mod 1).
struct GaugeField1 {
    const SimplicialComplex* base = nullptr;
    ModelPtr model;
    std::map<EdgeKey, Elem> edges;
    std::map<Simplex, Rat> face_disp;

    Elem label(int u, int v) const;  // oriented read, inverse when u > v
};

/// Dimension-2 field over a crossed-module model: edge labels in G, face
/// labels in H subject to fake-flatness.
struct GaugeField2 {
    const SimplicialComplex* base = nullptr;
    ModelPtr model;  // two-group model
    std::map<EdgeKey, int> edges;  // values in G
    std::map<Simplex, int> faces;  // values in H

    const CrossedModule& xm() const;
    int label(int u, int v) const;  // oriented read in G
};

Report validate_field1(const GaugeField1& a);
Report validate_field2(const GaugeField2& a);

Elem holonomy(const GaugeField1& a, const EdgeWord& w);
int holonomy2(const GaugeField2& a, const EdgeWord& w);  // G-valued

/// Level-1 element of the two-group model; source = holonomy of the
/// source word.
Elem surface_transport(const GaugeField2& a, const PastingDiagram& p);

std::vector<GaugeField1> enumerate_fields1(const SimplicialComplex& base, const ModelPtr& model,
                                           const Budget* budget = nullptr);
std::vector<GaugeField2> enumerate_fields2(const SimplicialComplex& base, const ModelPtr& model,
                                           const Budget* budget = nullptr);

std::string wilson_loop(const GaugeField1& a, const EdgeWord& w);

bool fields_equal(const GaugeField1& a, const GaugeField1& b);

}  // namespace lhgf

#endif
