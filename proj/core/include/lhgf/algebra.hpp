#ifndef LHGF_ALGEBRA_HPP
#define LHGF_ALGEBRA_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lhgf/base.hpp"

namespace lhgf {

/// Finite group as a Cayley table over opaque element labels.
struct FiniteGroup {
    std::vector<std::string> names;
    std::vector<std::vector<int>> mul;  // mul[a][b] = a·b
    std::vector<int> inv;
    int id = 0;

    int order() const { return static_cast<int>(names.size()); }
    int times(int a, int b) const { return mul[a][b]; }
    int inverse(int a) const { return inv[a]; }
    int element(const std::string& name) const;  // throws ParseError when absent

    Report validate() const;
    std::vector<std::vector<int>> conjugacy_classes() const;
    int conjugacy_class_of(int g) const;  // index into conjugacy_classes()
    std::string class_label(int g) const;

    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int n);
    static FiniteGroup from_table(std::vector<std::string> names,
                                  std::vector<std::vector<int>> table);
};

/// Crossed module (boundary: H -> G, G acting on H). Equivalent data to a
/// strict 2-group; everything is table-checkable.
struct CrossedModule {
    FiniteGroup H;
    FiniteGroup G;
    std::vector<int> boundary;            // H index -> G index
    std::vector<std::vector<int>> action;  // action[g][h] = g ▷ h

    int act(int g, int h) const { return action[g][h]; }
    Report validate() const;
};

// -- leveled homotopy-group models --------------------------------------

struct DiscreteElt { int g; };
struct CircleElt { Rat angle; };                // level 0, mod 1
struct CircleGlobe { Rat src, tgt, disp; };     // level >= 1; src/tgt mod 1, disp exact
struct TwoCell { int g, h; };                   // crossed-module level >= 1

struct Elem {
    int level = 0;
    std::variant<DiscreteElt, CircleElt, CircleGlobe, TwoCell> v;
};

/// Composition selector for model_compose: the internal group product ⊙
/// (defined at every level) or the directional composition +_k at the
/// element's own level.
enum class Op { Internal, Directional };

/// Leveled algebraic model of a delooped gauge group: level 0 is a group,
/// level k holds k-globe classes with boundaries one level down.
class HomotopyModel {
public:
    virtual ~HomotopyModel() = default;
    virtual std::string kind() const = 0;
    virtual int max_level() const = 0;
    virtual bool finite() const = 0;
    virtual std::vector<Elem> level0_elements() const;  // throws ModelNotFinite by default

    virtual Elem identity(int level) const = 0;
    virtual Elem compose(Op op, const Elem& x, const Elem& y) const = 0;
    virtual Elem inverse(Op op, const Elem& x) const = 0;
    virtual Elem lift(const Elem& x) const = 0;      // degeneracy, level+1
    virtual Elem source(const Elem& x) const = 0;    // boundary, level-1
    virtual Elem target(const Elem& x) const = 0;
    virtual bool eq(const Elem& x, const Elem& y) const = 0;

    virtual std::string show(const Elem& x) const = 0;
    virtual Elem parse_level0(const std::string& s) const = 0;
};

using ModelPtr = std::shared_ptr<const HomotopyModel>;

/// Finite discrete group: trivial homotopy above level 0; every higher
/// element is a degenerate lift.
ModelPtr make_discrete_model(FiniteGroup g);

/// Circle with winding: level 0 = angles mod 1, level 1 = homotopy classes
/// of paths rel endpoints, recorded as exact displacement.
ModelPtr make_circle_model();

/// Strict 2-group of a crossed module: level 1 elements are pairs (g, h)
/// with source g and target boundary(h)·g.
ModelPtr make_two_group_model(CrossedModule xm);

/// Same as make_two_group_model; named per the construction it implements.
inline ModelPtr two_group_from_crossed_module(CrossedModule xm) {
    return make_two_group_model(std::move(xm));
}

/// Access to the underlying data for models that have it (nullptr otherwise).
const FiniteGroup* model_group(const HomotopyModel& m);
const CrossedModule* model_crossed_module(const HomotopyModel& m);

}  // namespace lhgf

#endif
