#include "lhgf/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lhgf {

int FiniteGroup::element(const std::string& nm) const {
    for (int i = 0; i < order(); ++i)
        if (names[i] == nm) return i;
    throw Error(Err::ParseError, "unknown group element '" + nm + "'");
}

Report FiniteGroup::validate() const {
    Report r;
    int n = order();
    if (static_cast<int>(mul.size()) != n) {
        r.add("table", "multiplication table has " + std::to_string(mul.size()) +
                           " rows, expected " + std::to_string(n));
        return r;
    }
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(mul[a].size()) != n) {
            r.add("table", "row " + names[a] + " has wrong length");
            return r;
        }
        for (int b = 0; b < n; ++b)
            if (mul[a][b] < 0 || mul[a][b] >= n) {
                r.add("table", "entry (" + names[a] + "," + names[b] + ") out of range");
                return r;
            }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    r.add("associativity", "(" + names[a] + "," + names[b] + "," + names[c] + ")");
    for (int a = 0; a < n; ++a) {
        if (mul[id][a] != a) r.add("left identity", names[a]);
        if (mul[a][id] != a) r.add("right identity", names[a]);
    }
    if (static_cast<int>(inv.size()) != n) {
        r.add("inverses", "inverse table has wrong length");
        return r;
    }
    for (int a = 0; a < n; ++a) {
        if (mul[inv[a]][a] != id) r.add("left inverse", names[a]);
        if (mul[a][inv[a]] != id) r.add("right inverse", names[a]);
    }
    return r;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
    int n = order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> classes;
    for (int g = 0; g < n; ++g) {
        if (seen[g]) continue;
        std::set<int> cls;
        for (int u = 0; u < n; ++u) cls.insert(mul[mul[u][g]][inv[u]]);
        std::vector<int> v(cls.begin(), cls.end());
        for (int x : v) seen[x] = true;
        classes.push_back(std::move(v));
    }
    return classes;
}

int FiniteGroup::conjugacy_class_of(int g) const {
    auto classes = conjugacy_classes();
    for (int i = 0; i < static_cast<int>(classes.size()); ++i)
        if (std::binary_search(classes[i].begin(), classes[i].end(), g)) return i;
    return -1;
}

std::string FiniteGroup::class_label(int g) const {
    int lo = g;
    for (int u = 0; u < order(); ++u) lo = std::min(lo, mul[mul[u][g]][inv[u]]);
    return names[lo];
}

FiniteGroup FiniteGroup::cyclic(int n) {
    FiniteGroup g;
    for (int i = 0; i < n; ++i) g.names.push_back(std::to_string(i));
    g.mul.assign(n, std::vector<int>(n));
    g.inv.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        g.inv[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    }
    return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto name_of = [](const std::vector<int>& q) {
        std::string s;
        for (int x : q) s += static_cast<char>('0' + x);
        return s;
    };
    int m = static_cast<int>(perms.size());
    FiniteGroup g;
    for (auto& q : perms) g.names.push_back(name_of(q));
    g.mul.assign(m, std::vector<int>(m));
    g.inv.assign(m, 0);
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    for (int a = 0; a < m; ++a) {
        std::vector<int> ia(n);
        for (int x = 0; x < n; ++x) ia[perms[a][x]] = x;
        g.inv[a] = index_of(ia);
        for (int b = 0; b < m; ++b) {
            // left-to-right: (a·b)(x) = b(a(x))
            std::vector<int> ab(n);
            for (int x = 0; x < n; ++x) ab[x] = perms[b][perms[a][x]];
            g.mul[a][b] = index_of(ab);
        }
    }
    return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names,
                                    std::vector<std::vector<int>> table) {
    FiniteGroup g;
    g.names = std::move(names);
    g.mul = std::move(table);
    int n = g.order();
    g.id = 0;
    for (int e = 0; e < n; ++e) {
        bool is_id = true;
        for (int x = 0; x < n && is_id; ++x)
            is_id = x < static_cast<int>(g.mul.size()) &&
                    x < static_cast<int>(g.mul[e].size()) && g.mul[e][x] == x && g.mul[x][e] == x;
        if (is_id) {
            g.id = e;
            break;
        }
    }
    g.inv.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul[a][b] == g.id) {
                g.inv[a] = b;
                break;
            }
    return g;
}

Report CrossedModule::validate() const {
    Report r;
    r.merge(H.validate());
    r.merge(G.validate());
    if (!r.ok()) return r;
    int nh = H.order(), ng = G.order();
    if (static_cast<int>(boundary.size()) != nh) {
        r.add("boundary", "wrong length");
        return r;
    }
    if (static_cast<int>(action.size()) != ng) {
        r.add("action", "wrong number of rows");
        return r;
    }
    for (int h1 = 0; h1 < nh; ++h1)
        for (int h2 = 0; h2 < nh; ++h2)
            if (boundary[H.times(h1, h2)] != G.times(boundary[h1], boundary[h2]))
                r.add("boundary homomorphism", "(" + H.names[h1] + "," + H.names[h2] + ")");
    for (int g = 0; g < ng; ++g) {
        if (action[g][H.id] != H.id) r.add("action preserves identity", G.names[g]);
        for (int h1 = 0; h1 < nh; ++h1)
            for (int h2 = 0; h2 < nh; ++h2)
                if (action[g][H.times(h1, h2)] != H.times(action[g][h1], action[g][h2]))
                    r.add("action by automorphisms",
                          "(" + G.names[g] + "," + H.names[h1] + "," + H.names[h2] + ")");
    }
    for (int g1 = 0; g1 < ng; ++g1)
        for (int g2 = 0; g2 < ng; ++g2)
            for (int h = 0; h < nh; ++h)
                if (action[G.times(g1, g2)][h] != action[g1][action[g2][h]])
                    r.add("action composition",
                          "(" + G.names[g1] + "," + G.names[g2] + "," + H.names[h] + ")");
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < nh; ++h)
            if (boundary[action[g][h]] != G.times(G.times(g, boundary[h]), G.inverse(g)))
                r.add("equivariance", "(" + G.names[g] + "," + H.names[h] + ")");
    for (int h = 0; h < nh; ++h)
        for (int h2 = 0; h2 < nh; ++h2)
            if (action[boundary[h]][h2] != H.times(H.times(h, h2), H.inverse(h)))
                r.add("Peiffer", "(" + H.names[h] + "," + H.names[h2] + ")");
    return r;
}

std::vector<Elem> HomotopyModel::level0_elements() const {
    throw Error(Err::ModelNotFinite, kind() + " model has infinite level 0");
}

namespace {

[[noreturn]] void bad_level(const std::string& kind, int level) {
    throw Error(Err::ModelLevelUnsupported,
                kind + " model does not support level " + std::to_string(level));
}

class DiscreteModel final : public HomotopyModel {
public:
    explicit DiscreteModel(FiniteGroup g) : g_(std::move(g)) {}

    std::string kind() const override { return "discrete"; }
    int max_level() const override { return 2; }
    bool finite() const override { return true; }

    std::vector<Elem> level0_elements() const override {
        std::vector<Elem> out;
        for (int i = 0; i < g_.order(); ++i) out.push_back({0, DiscreteElt{i}});
        return out;
    }

    Elem identity(int level) const override {
        if (level < 0 || level > max_level()) bad_level(kind(), level);
        return {level, DiscreteElt{g_.id}};
    }

    Elem compose(Op op, const Elem& x, const Elem& y) const override {
        auto a = std::get<DiscreteElt>(x.v), b = std::get<DiscreteElt>(y.v);
        if (x.level != y.level)
            throw Error(Err::BoundaryMismatch, "levels differ in discrete composition");
        if (op == Op::Directional && x.level >= 1 && a.g != b.g)
            throw Error(Err::BoundaryMismatch, "degenerate cells must match for +_k");
        // above level 0 every element is degenerate, so both laws collapse
        // to the group law
        return {x.level, DiscreteElt{g_.times(a.g, b.g)}};
    }

    Elem inverse(Op, const Elem& x) const override {
        return {x.level, DiscreteElt{g_.inverse(std::get<DiscreteElt>(x.v).g)}};
    }

    Elem lift(const Elem& x) const override {
        if (x.level + 1 > max_level()) bad_level(kind(), x.level + 1);
        return {x.level + 1, x.v};
    }
    Elem source(const Elem& x) const override {
        if (x.level == 0) bad_level(kind(), -1);
        return {x.level - 1, x.v};
    }
    Elem target(const Elem& x) const override { return source(x); }

    bool eq(const Elem& x, const Elem& y) const override {
        return x.level == y.level &&
               std::get<DiscreteElt>(x.v).g == std::get<DiscreteElt>(y.v).g;
    }

    std::string show(const Elem& x) const override {
        return g_.names[std::get<DiscreteElt>(x.v).g];
    }
    Elem parse_level0(const std::string& s) const override {
        return {0, DiscreteElt{g_.element(s)}};
    }

    const FiniteGroup& group() const { return g_; }

private:
    FiniteGroup g_;
};

class CircleModel final : public HomotopyModel {
public:
    std::string kind() const override { return "circle"; }
    int max_level() const override { return 2; }
    bool finite() const override { return false; }

    Elem identity(int level) const override {
        if (level == 0) return {0, CircleElt{Rat(0)}};
        if (level <= max_level()) return {level, CircleGlobe{Rat(0), Rat(0), Rat(0)}};
        bad_level(kind(), level);
    }

    Elem compose(Op op, const Elem& x, const Elem& y) const override {
        if (x.level != y.level)
            throw Error(Err::BoundaryMismatch, "levels differ in circle composition");
        if (x.level == 0) {
            return {0, CircleElt{frac(std::get<CircleElt>(x.v).angle +
                                      std::get<CircleElt>(y.v).angle)}};
        }
        auto a = std::get<CircleGlobe>(x.v), b = std::get<CircleGlobe>(y.v);
        if (op == Op::Internal)
            return {x.level, CircleGlobe{frac(a.src + b.src), frac(a.tgt + b.tgt),
                                         a.disp + b.disp}};
        if (a.tgt != b.src)
            throw Error(Err::BoundaryMismatch,
                        "target " + show_rational(a.tgt) + " != source " + show_rational(b.src));
        return {x.level, CircleGlobe{a.src, b.tgt, a.disp + b.disp}};
    }

    Elem inverse(Op op, const Elem& x) const override {
        if (x.level == 0) return {0, CircleElt{frac(-std::get<CircleElt>(x.v).angle)}};
        auto a = std::get<CircleGlobe>(x.v);
        if (op == Op::Internal)
            return {x.level, CircleGlobe{frac(-a.src), frac(-a.tgt), -a.disp}};
        return {x.level, CircleGlobe{a.tgt, a.src, -a.disp}};
    }

    Elem lift(const Elem& x) const override {
        if (x.level + 1 > max_level()) bad_level(kind(), x.level + 1);
        if (x.level == 0) {
            Rat a = std::get<CircleElt>(x.v).angle;
            return {1, CircleGlobe{a, a, Rat(0)}};
        }
        auto g = std::get<CircleGlobe>(x.v);  // degenerate above level 1
        return {x.level + 1, g};
    }

    Elem source(const Elem& x) const override {
        if (x.level == 0) bad_level(kind(), -1);
        auto g = std::get<CircleGlobe>(x.v);
        if (x.level == 1) return {0, CircleElt{g.src}};
        return {x.level - 1, g};
    }
    Elem target(const Elem& x) const override {
        if (x.level == 0) bad_level(kind(), -1);
        auto g = std::get<CircleGlobe>(x.v);
        if (x.level == 1) return {0, CircleElt{g.tgt}};
        return {x.level - 1, g};
    }

    bool eq(const Elem& x, const Elem& y) const override {
        if (x.level != y.level) return false;
        if (x.level == 0)
            return std::get<CircleElt>(x.v).angle == std::get<CircleElt>(y.v).angle;
        auto a = std::get<CircleGlobe>(x.v), b = std::get<CircleGlobe>(y.v);
        return a.src == b.src && a.tgt == b.tgt && a.disp == b.disp;
    }

    std::string show(const Elem& x) const override {
        if (x.level == 0) return show_rational(std::get<CircleElt>(x.v).angle);
        auto g = std::get<CircleGlobe>(x.v);
        return "(" + show_rational(g.src) + "," + show_rational(g.tgt) + ";" +
               show_rational(g.disp) + ")";
    }
    Elem parse_level0(const std::string& s) const override {
        return {0, CircleElt{frac(parse_rational(s))}};
    }
};

class TwoGroupModel final : public HomotopyModel {
public:
    explicit TwoGroupModel(CrossedModule xm) : xm_(std::move(xm)) {}

    std::string kind() const override { return "crossed_module"; }
    int max_level() const override { return 2; }
    bool finite() const override { return true; }

    std::vector<Elem> level0_elements() const override {
        std::vector<Elem> out;
        for (int i = 0; i < xm_.G.order(); ++i) out.push_back({0, DiscreteElt{i}});
        return out;
    }

    Elem identity(int level) const override {
        if (level == 0) return {0, DiscreteElt{xm_.G.id}};
        if (level <= max_level()) return {level, TwoCell{xm_.G.id, xm_.H.id}};
        bad_level(kind(), level);
    }

    Elem compose(Op op, const Elem& x, const Elem& y) const override {
        if (x.level != y.level)
            throw Error(Err::BoundaryMismatch, "levels differ in 2-group composition");
        if (x.level == 0) {
            return {0, DiscreteElt{xm_.G.times(std::get<DiscreteElt>(x.v).g,
                                               std::get<DiscreteElt>(y.v).g)}};
        }
        auto a = std::get<TwoCell>(x.v), b = std::get<TwoCell>(y.v);
        if (op == Op::Internal) {
            // (g1,h1) ⊙ (g2,h2) = (g1·g2, h1·(g1 ▷ h2))
            return {x.level,
                    TwoCell{xm_.G.times(a.g, b.g), xm_.H.times(a.h, xm_.act(a.g, b.h))}};
        }
        if (x.level >= 2) {
            // degenerate above level 1: must be identical lifts
            if (a.g != b.g || a.h != b.h)
                throw Error(Err::BoundaryMismatch, "degenerate cells must match for +_k");
            return x;
        }
        int tgt_a = xm_.G.times(xm_.boundary[a.h], a.g);
        if (tgt_a != b.g)
            throw Error(Err::BoundaryMismatch,
                        "target " + xm_.G.names[tgt_a] + " != source " + xm_.G.names[b.g]);
        return {1, TwoCell{a.g, xm_.H.times(b.h, a.h)}};
    }

    Elem inverse(Op op, const Elem& x) const override {
        if (x.level == 0)
            return {0, DiscreteElt{xm_.G.inverse(std::get<DiscreteElt>(x.v).g)}};
        auto a = std::get<TwoCell>(x.v);
        if (op == Op::Internal) {
            int gi = xm_.G.inverse(a.g);
            return {x.level, TwoCell{gi, xm_.act(gi, xm_.H.inverse(a.h))}};
        }
        return {x.level,
                TwoCell{xm_.G.times(xm_.boundary[a.h], a.g), xm_.H.inverse(a.h)}};
    }

    Elem lift(const Elem& x) const override {
        if (x.level + 1 > max_level()) bad_level(kind(), x.level + 1);
        if (x.level == 0) return {1, TwoCell{std::get<DiscreteElt>(x.v).g, xm_.H.id}};
        return {x.level + 1, x.v};
    }

    Elem source(const Elem& x) const override {
        if (x.level == 0) bad_level(kind(), -1);
        auto a = std::get<TwoCell>(x.v);
        if (x.level == 1) return {0, DiscreteElt{a.g}};
        return {x.level - 1, a};
    }
    Elem target(const Elem& x) const override {
        if (x.level == 0) bad_level(kind(), -1);
        auto a = std::get<TwoCell>(x.v);
        if (x.level == 1) return {0, DiscreteElt{xm_.G.times(xm_.boundary[a.h], a.g)}};
        return {x.level - 1, a};
    }

    bool eq(const Elem& x, const Elem& y) const override {
        if (x.level != y.level) return false;
        if (x.level == 0)
            return std::get<DiscreteElt>(x.v).g == std::get<DiscreteElt>(y.v).g;
        auto a = std::get<TwoCell>(x.v), b = std::get<TwoCell>(y.v);
        return a.g == b.g && a.h == b.h;
    }

    std::string show(const Elem& x) const override {
        if (x.level == 0) return xm_.G.names[std::get<DiscreteElt>(x.v).g];
        auto a = std::get<TwoCell>(x.v);
        return "(" + xm_.G.names[a.g] + "," + xm_.H.names[a.h] + ")";
    }
    Elem parse_level0(const std::string& s) const override {
        return {0, DiscreteElt{xm_.G.element(s)}};
    }

    const CrossedModule& crossed_module() const { return xm_; }

private:
    CrossedModule xm_;
};

}  // namespace

ModelPtr make_discrete_model(FiniteGroup g) {
    return std::make_shared<DiscreteModel>(std::move(g));
}

ModelPtr make_circle_model() { return std::make_shared<CircleModel>(); }

ModelPtr make_two_group_model(CrossedModule xm) {
    return std::make_shared<TwoGroupModel>(std::move(xm));
}

const FiniteGroup* model_group(const HomotopyModel& m) {
    if (auto* d = dynamic_cast<const DiscreteModel*>(&m)) return &d->group();
    if (auto* t = dynamic_cast<const TwoGroupModel*>(&m)) return &t->crossed_module().G;
    return nullptr;
}

const CrossedModule* model_crossed_module(const HomotopyModel& m) {
    if (auto* t = dynamic_cast<const TwoGroupModel*>(&m)) return &t->crossed_module();
    return nullptr;
}

}  // namespace lhgf
