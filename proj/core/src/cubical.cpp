#include "lhgf/cubical.hpp"

#include <algorithm>
#include <functional>

namespace lhgf {

CubeMap CubeMap::face_insert(int i, int alpha, int k) {
    return {FaceInsert{i, alpha}, k, k + 1};
}
CubeMap CubeMap::project(int i, int k) { return {Project{i}, k + 1, k}; }
CubeMap CubeMap::connection(int i, int k) { return {Connection{i}, k + 1, k}; }
CubeMap CubeMap::sigma(int m) { return {SigmaToSimplex{m}, m, m}; }

CubePoint apply_cube_map(const CubeMap& m, const CubePoint& p) {
    if (static_cast<int>(p.size()) != m.domain_dim)
        throw Error(Err::DimensionMismatch,
                    "point has dimension " + std::to_string(p.size()) + ", map expects " +
                        std::to_string(m.domain_dim));
    if (std::holds_alternative<FaceInsert>(m.kind)) {
        auto f = std::get<FaceInsert>(m.kind);
        CubePoint q = p;
        q.insert(q.begin() + (f.i - 1), Rat(f.alpha));
        return q;
    }
    if (std::holds_alternative<Project>(m.kind)) {
        auto f = std::get<Project>(m.kind);
        CubePoint q = p;
        q.erase(q.begin() + (f.i - 1));
        return q;
    }
    if (std::holds_alternative<Connection>(m.kind)) {
        auto f = std::get<Connection>(m.kind);
        CubePoint q;
        for (int j = 0; j < static_cast<int>(p.size()); ++j) {
            if (j == f.i - 1)
                q.push_back(std::max(p[j], p[j + 1]));
            else if (j != f.i)
                q.push_back(p[j]);
        }
        return q;
    }
    auto s = std::get<SigmaToSimplex>(m.kind);
    CubePoint q(s.m);
    Rat prod(1);
    for (int j = 0; j < s.m; ++j) {
        prod *= p[j];
        q[j] = prod;
    }
    return q;
}

namespace {

using PtMap = std::function<CubePoint(const CubePoint&)>;

// dimension-agnostic point operations; relation checks fix the source
// dimension and the chain takes care of itself
PtMap D(int i, int alpha) {
    return [=](const CubePoint& p) {
        CubePoint q = p;
        q.insert(q.begin() + (i - 1), Rat(alpha));
        return q;
    };
}
PtMap E(int i) {
    return [=](const CubePoint& p) {
        CubePoint q = p;
        q.erase(q.begin() + (i - 1));
        return q;
    };
}
PtMap G(int i, bool perturb) {
    return [=](const CubePoint& p) {
        CubePoint q;
        for (int j = 0; j < static_cast<int>(p.size()); ++j) {
            if (j == i - 1)
                q.push_back(perturb ? std::min(p[j], p[j + 1]) : std::max(p[j], p[j + 1]));
            else if (j != i)
                q.push_back(p[j]);
        }
        return q;
    };
}

std::vector<CubePoint> grid(int k, const Rat& step) {
    std::vector<Rat> axis;
    for (Rat x(0); x <= Rat(1); x += step) axis.push_back(x);
    std::vector<CubePoint> pts{CubePoint{}};
    for (int d = 0; d < k; ++d) {
        std::vector<CubePoint> next;
        for (const auto& p : pts)
            for (const auto& x : axis) {
                CubePoint q = p;
                q.push_back(x);
                next.push_back(std::move(q));
            }
        pts = std::move(next);
    }
    return pts;
}

struct Checker {
    Rat step;
    Report& report;

    void check(const std::string& label, int src_dim, const PtMap& lhs, const PtMap& rhs) {
        for (const auto& p : grid(src_dim, step)) {
            if (lhs(p) != rhs(p)) {
                std::string pt = "(";
                for (size_t j = 0; j < p.size(); ++j)
                    pt += (j ? "," : "") + show_rational(p[j]);
                pt += ")";
                report.add(label, "fails at " + pt);
                return;  // one witness per relation instance
            }
        }
    }
};

PtMap after(const PtMap& f, const PtMap& g) {
    return [=](const CubePoint& p) { return f(g(p)); };
}
PtMap idmap() {
    return [](const CubePoint& p) { return p; };
}

std::string idx(const std::string& nm, int i) { return nm + "_" + std::to_string(i); }

}  // namespace

Report check_site_relations(int k_max, const Rat& grid_step, bool perturb) {
    Report r;
    Checker ck{grid_step, r};

    // every relation is checked pointwise at every source dimension n up
    // to k_max, over all index combinations valid there
    for (int n = 0; n <= k_max; ++n) {
        // E_i D_i^a = id  (n -> n+1 -> n)
        for (int i = 1; i <= n + 1; ++i)
            for (int a = 0; a <= 1; ++a)
                ck.check(idx("E", i) + " " + idx("D", i) + "^" + std::to_string(a) + " = id", n,
                         after(E(i), D(i, a)), idmap());

        // D_i^a D_j^b = D_{j+1}^b D_i^a  for i <= j  (n -> n+2)
        for (int j = 1; j <= n + 1; ++j)
            for (int i = 1; i <= j; ++i)
                for (int a = 0; a <= 1; ++a)
                    for (int b = 0; b <= 1; ++b)
                        ck.check(idx("D", i) + " " + idx("D", j) + " = " + idx("D", j + 1) + " " +
                                     idx("D", i),
                                 n, after(D(i, a), D(j, b)), after(D(j + 1, b), D(i, a)));

        // E_i E_j = E_{j-1} E_i  for i < j  (n -> n-2)
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i)
                ck.check(idx("E", i) + " " + idx("E", j) + " = " + idx("E", j - 1) + " " +
                             idx("E", i),
                         n, after(E(i), E(j)), after(E(j - 1), E(i)));

        // E_i D_j^a mixed commutation  (n -> n+1 -> n vs n -> n-1 -> n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n + 1; ++j)
                for (int a = 0; a <= 1; ++a) {
                    if (j < i)
                        ck.check(idx("E", i + 1) + " " + idx("D", j) + " = " + idx("D", j) + " " +
                                     idx("E", i),
                                 n, after(E(i + 1), D(j, a)), after(D(j, a), E(i)));
                    if (j > i)
                        ck.check(idx("E", i) + " " + idx("D", j) + " = " + idx("D", j - 1) + " " +
                                     idx("E", i),
                                 n, after(E(i), D(j, a)), after(D(j - 1, a), E(i)));
                }

        // connection vs face insertions  (n -> n+1 -> n)
        for (int i = 1; i <= n; ++i) {
            ck.check(idx("G", i) + " " + idx("D", i) + "^0 = id", n, after(G(i, perturb), D(i, 0)),
                     idmap());
            ck.check(idx("G", i) + " " + idx("D", i + 1) + "^0 = id", n,
                     after(G(i, perturb), D(i + 1, 0)), idmap());
            ck.check(idx("G", i) + " " + idx("D", i) + "^1 = " + idx("D", i) + "^1 " + idx("E", i),
                     n, after(G(i, perturb), D(i, 1)), after(D(i, 1), E(i)));
            ck.check(idx("G", i) + " " + idx("D", i + 1) + "^1 = " + idx("D", i) + "^1 " +
                         idx("E", i),
                     n, after(G(i, perturb), D(i + 1, 1)), after(D(i, 1), E(i)));
        }

        // E_i G_i = E_i E_{i+1}  (n -> n-2)
        for (int i = 1; i + 1 <= n; ++i)
            ck.check(idx("E", i) + " " + idx("G", i) + " = " + idx("E", i) + " " + idx("E", i + 1),
                     n, after(E(i), G(i, perturb)), after(E(i), E(i + 1)));

        // G_i G_{i+1} = G_i G_i  (n -> n-2)
        for (int i = 1; i + 2 <= n; ++i)
            ck.check(idx("G", i) + " " + idx("G", i + 1) + " = " + idx("G", i) + " " + idx("G", i),
                     n, after(G(i, perturb), G(i + 1, perturb)),
                     after(G(i, perturb), G(i, perturb)));

        // G_i G_j = G_{j-1} G_i  for j >= i+2  (n -> n-2)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 2; j + 1 <= n; ++j)
                ck.check(idx("G", i) + " " + idx("G", j) + " = " + idx("G", j - 1) + " " +
                             idx("G", i),
                         n, after(G(i, perturb), G(j, perturb)),
                         after(G(j - 1, perturb), G(i, perturb)));

        // G vs distant D  (n -> n+1 -> n vs n -> n-1 -> n)
        for (int i = 1; i <= n; ++i)
            for (int a = 0; a <= 1; ++a) {
                for (int j = 1; j <= i - 1; ++j)
                    ck.check(idx("G", i) + " " + idx("D", j) + " = " + idx("D", j) + " " +
                                 idx("G", i - 1),
                             n, after(G(i, perturb), D(j, a)), after(D(j, a), G(i - 1, perturb)));
                for (int j = i + 2; j <= n + 1; ++j)
                    ck.check(idx("G", i) + " " + idx("D", j) + " = " + idx("D", j - 1) + " " +
                                 idx("G", i),
                             n, after(G(i, perturb), D(j, a)), after(D(j - 1, a), G(i, perturb)));
            }
    }
    return r;
}

Report sigma_face_property(int m, const Rat& grid_step) {
    Report r;
    if (m < 1) return r;
    CubeMap sig = CubeMap::sigma(m);
    for (const auto& tail : grid(m - 1, grid_step)) {
        CubePoint p0{Rat(0)};
        p0.insert(p0.end(), tail.begin(), tail.end());
        CubePoint img = apply_cube_map(sig, p0);
        for (const auto& x : img)
            if (x != Rat(0)) {
                r.add("face a1=0 collapses", "nonzero image coordinate");
                break;
            }

        CubePoint p1{Rat(1)};
        p1.insert(p1.end(), tail.begin(), tail.end());
        CubePoint img1 = apply_cube_map(sig, p1);
        if (img1[0] != Rat(1)) {
            r.add("face a1=1 first coordinate", "expected 1");
            continue;
        }
        CubePoint sub = apply_cube_map(CubeMap::sigma(m - 1), tail);
        for (int j = 0; j < m - 1; ++j)
            if (img1[j + 1] != sub[j]) {
                r.add("face a1=1 restriction", "does not match lower-dimensional map");
                break;
            }
    }
    return r;
}

CubeExprPtr CubeExpr::generator(std::string name, int dim) {
    auto e = std::make_shared<CubeExpr>();
    e->kind = Kind::Generator;
    e->name = std::move(name);
    e->dim = dim;
    return e;
}
CubeExprPtr CubeExpr::degeneracy(int i, CubeExprPtr x) {
    auto e = std::make_shared<CubeExpr>();
    e->kind = Kind::Degeneracy;
    e->index = i;
    e->a = std::move(x);
    return e;
}
CubeExprPtr CubeExpr::connection(int i, CubeExprPtr x) {
    auto e = std::make_shared<CubeExpr>();
    e->kind = Kind::Connection;
    e->index = i;
    e->a = std::move(x);
    return e;
}
CubeExprPtr CubeExpr::compose(int dir, CubeExprPtr x, CubeExprPtr y) {
    auto e = std::make_shared<CubeExpr>();
    e->kind = Kind::Compose;
    e->index = dir;
    e->a = std::move(x);
    e->b = std::move(y);
    return e;
}

int expr_dim(const CubeExpr& e) {
    switch (e.kind) {
        case CubeExpr::Kind::Generator:
            if (e.dim < 0) throw Error(Err::MalformedExpression, "negative generator dimension");
            return e.dim;
        case CubeExpr::Kind::Degeneracy:
        case CubeExpr::Kind::Connection: {
            int d = expr_dim(*e.a);
            if (e.index < 0 || e.index > d)
                throw Error(Err::MalformedExpression, "constructor index out of range");
            if (e.kind == CubeExpr::Kind::Connection && d < 1)
                throw Error(Err::MalformedExpression, "connection needs dimension >= 1");
            return d + 1;
        }
        case CubeExpr::Kind::Compose: {
            int da = expr_dim(*e.a), db = expr_dim(*e.b);
            if (da != db)
                throw Error(Err::MalformedExpression, "composition of unequal dimensions");
            if (e.index < 0 || e.index >= da)
                throw Error(Err::MalformedExpression, "composition direction out of range");
            return da;
        }
    }
    throw Error(Err::MalformedExpression, "unknown constructor");
}

namespace {
bool all_leaves_thin(const CubeExpr& e) {
    if (e.kind == CubeExpr::Kind::Compose)
        return all_leaves_thin(*e.a) && all_leaves_thin(*e.b);
    return e.kind == CubeExpr::Kind::Degeneracy || e.kind == CubeExpr::Kind::Connection;
}
}  // namespace

ThinVerdict classify_thinness(const CubeExpr& e) {
    expr_dim(e);  // well-formedness
    if (e.kind == CubeExpr::Kind::Degeneracy || e.kind == CubeExpr::Kind::Connection)
        return ThinVerdict::Thin;
    if (e.kind == CubeExpr::Kind::Compose && all_leaves_thin(e))
        return ThinVerdict::AlgebraicallyThin;
    return ThinVerdict::Nondegenerate;
}

const char* thin_verdict_name(ThinVerdict v) {
    switch (v) {
        case ThinVerdict::Thin: return "thin";
        case ThinVerdict::AlgebraicallyThin: return "algebraically_thin";
        case ThinVerdict::Nondegenerate: return "nondegenerate";
    }
    return "?";
}

}  // namespace lhgf
