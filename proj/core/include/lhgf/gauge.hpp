#ifndef LHGF_GAUGE_HPP
#define LHGF_GAUGE_HPP

#include <optional>

#include "lhgf/field.hpp"

namespace lhgf {

/// Vertex-valued (globular) gauge transformation. For the circle model a
/// transform may also carry level-1 values on edges; their endpoints must
/// match the vertex values.
struct GaugeTransform {
    const SimplicialComplex* base = nullptr;
    ModelPtr model;
    std::map<int, Elem> vertices;          // level 0
    std::map<EdgeKey, Elem> edge_values;   // level 1, optional

    Elem at(int v) const;
};

Report validate_transform(const GaugeTransform& u);

GaugeTransform identity_transform(const SimplicialComplex& base, const ModelPtr& model);
GaugeTransform compose_transforms(const GaugeTransform& u, const GaugeTransform& v);
GaugeTransform invert_transform(const GaugeTransform& u);

GaugeField1 act(const GaugeTransform& u, const GaugeField1& a);
GaugeField2 act(const GaugeTransform& u, const GaugeField2& a);

std::vector<GaugeTransform> enumerate_transforms(const SimplicialComplex& base,
                                                 const ModelPtr& model,
                                                 const Budget* budget = nullptr);

struct Orbit {
    GaugeField1 representative;  // minimal under enumeration order
    std::vector<int> members;    // indices into the enumerated field list
    int size() const { return static_cast<int>(members.size()); }
};

/// Partition of all dimension-1 fields into gauge orbits; orbits sorted by
/// minimal member index in the enumeration order.
std::vector<Orbit> orbits(const SimplicialComplex& base, const ModelPtr& model,
                          const Budget& budget);

std::optional<GaugeTransform> is_gauge_equivalent(const GaugeField1& a, const GaugeField1& b,
                                                  const Budget& budget);

}  // namespace lhgf

#endif
