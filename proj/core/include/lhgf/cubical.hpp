#ifndef LHGF_CUBICAL_HPP
#define LHGF_CUBICAL_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lhgf/base.hpp"

namespace lhgf {

/// Point of the standard cube [0,1]^k, exact coordinates.
using CubePoint = std::vector<Rat>;

/// Generator maps of the cube site, acting on points. Slots are 1-based.
struct FaceInsert {
    int i;
    int alpha;  // 0 or 1
};
struct Project {
    int i;
};
struct Connection {
    int i;
};
struct SigmaToSimplex {
    int m;
};

struct CubeMap {
    std::variant<FaceInsert, Project, Connection, SigmaToSimplex> kind;
    int domain_dim;
    int codomain_dim;

    static CubeMap face_insert(int i, int alpha, int k);  // k -> k+1
    static CubeMap project(int i, int k);                 // k+1 -> k
    static CubeMap connection(int i, int k);              // k+1 -> k
    static CubeMap sigma(int m);                          // m -> m
};

CubePoint apply_cube_map(const CubeMap& m, const CubePoint& p);

/// Pointwise verification of the cubical and connection relations on the
/// full grid with the given step, for every valid index combination up to
/// dimension k_max. `perturb_connection` swaps max for min (a planted
/// defect used to show the harness detects violations).
Report check_site_relations(int k_max, const Rat& grid_step, bool perturb_connection = false);

/// Certifies the two face properties of the simplex parametrization map on
/// a grid: the face {first coordinate = 0} collapses to a single vertex,
/// and the face {first coordinate = 1} restricts to the map one dimension
/// down.
Report sigma_face_property(int m, const Rat& grid_step);

// -- formal cube expressions ---------------------------------------------

enum class ThinVerdict { Thin, AlgebraicallyThin, Nondegenerate };

struct CubeExpr;
using CubeExprPtr = std::shared_ptr<const CubeExpr>;

struct CubeExpr {
    enum class Kind { Generator, Degeneracy, Connection, Compose };
    Kind kind;
    std::string name;  // Generator
    int index = 0;     // Degeneracy/Connection: i; Compose: direction
    int dim = 0;       // Generator dimension
    CubeExprPtr a, b;

    static CubeExprPtr generator(std::string name, int dim);
    static CubeExprPtr degeneracy(int i, CubeExprPtr x);
    static CubeExprPtr connection(int i, CubeExprPtr x);
    static CubeExprPtr compose(int dir, CubeExprPtr x, CubeExprPtr y);
};

/// Dimension of a well-formed expression; throws MalformedExpression.
int expr_dim(const CubeExpr& e);

ThinVerdict classify_thinness(const CubeExpr& e);
const char* thin_verdict_name(ThinVerdict v);

}  // namespace lhgf

#endif
