#ifndef LHGF_GLUE_HPP
#define LHGF_GLUE_HPP

#include "lhgf/gauge.hpp"

namespace lhgf {

/// Cech transition data over a cover. Only pairs i < j are stored; the
/// (j,i) value is the pointwise inverse. Values are keyed by vertex name
/// so piece-local index spaces never leak.
struct TransitionSystem {
    const Cover* cover = nullptr;
    ModelPtr model;
    std::map<std::pair<int, int>, std::map<std::string, Elem>> psi;

    /// psi_ij at a vertex; identity when i == j. Throws when the vertex is
    /// not covered by the stored overlap data.
    Elem at(int i, int j, const std::string& vertex) const;
    bool defined(int i, int j, const std::string& vertex) const;
};

/// Global field: transition system plus one local field per piece.
/// Exactly one of locals1 / locals2 is populated.
struct GlobalField {
    TransitionSystem transitions;
    std::vector<GaugeField1> locals1;
    std::vector<GaugeField2> locals2;

    const Cover& cover() const { return *transitions.cover; }
    bool dim2() const { return !locals2.empty(); }
};

Report validate_global(const GlobalField& gf);

struct NormalizeResult {
    GlobalField field;
    std::vector<GaugeTransform> transforms;  // one per piece
};

/// Gauge-transforms each piece so every transition restricts to the
/// identity on overlap vertices. Deterministic: the vertex value of u_i is
/// read off the transition from the lowest-indexed piece containing that
/// vertex. Throws InvalidGlobalField when the input fails validation or
/// the transitions admit no vertex normalization.
NormalizeResult normalize_transitions(const GlobalField& gf);

/// Single field on the parent complex; requires vertex-identity
/// transitions and locals agreeing on overlaps.
GaugeField1 glue_to_single(const GlobalField& gf);
GaugeField2 glue_to_single2(const GlobalField& gf);

struct EqualizerResult {
    long long global_count = 0;
    long long limit_count = 0;
    bool bijective = false;
    Report report;
};

/// Enumerates fields on the parent and compatible tuples of piece fields,
/// and certifies the restriction map is a bijection elementwise.
EqualizerResult equalizer_check(const SimplicialComplex& parent, const Cover& cover,
                                const ModelPtr& model, const Budget& budget);

/// Coarse edge labels are holonomies of the fine field along the
/// through-barycenter chains.
GaugeField1 coarse_grain(const GaugeField1& fine, const Subdivision& sub,
                         const SimplicialComplex& coarse);

}  // namespace lhgf

#endif
