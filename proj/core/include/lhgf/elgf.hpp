#ifndef LHGF_ELGF_HPP
#define LHGF_ELGF_HPP

#include "lhgf/glue.hpp"

namespace lhgf {

/// Extended field: one model element per admissible nested pair. Level-0
/// values are stored for every model; level-1 values only for the circle
/// model (read from per-triangle displacements).
struct ELGF {
    const SimplicialComplex* base = nullptr;
    ModelPtr model;
    std::map<NestedPair, Elem> values;

    const Elem& value(const Simplex& tau, const Simplex& nu) const;
    bool has(const Simplex& tau, const Simplex& nu) const;
};

/// value(tau, {v}) = holonomy of the leg path from the maximal vertex of
/// tau down to v; circle level-1 values carry the displacement of the
/// triangle {v1, v2, max(tau)} with reversed sign.
ELGF extract_elgf(const GaugeField1& a);

/// Verifies level matching, every admissible composition instance at
/// level 0, and the boundary-assembly identities at levels 1 and 2.
Report check_elgf(const ELGF& e);

/// Finite-group case: canonical form of the vertex cocycle class under
/// componentwise relabeling, as a deterministic label string.
std::string classify_transitions(const TransitionSystem& ts, const Budget& budget);

/// Circle case: total winding of the face displacements over the oriented
/// closed surface; gauge-invariant integer.
long long classify_circle(const GaugeField1& a);

struct FiberHomotopyData {
    int anchor = -1;  // vertex of the base
    Elem element;
};

FiberHomotopyData parallel_transport(const GaugeField1& a, const EdgeWord& w,
                                     const FiberHomotopyData& phi);

}  // namespace lhgf

#endif
