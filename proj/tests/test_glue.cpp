#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace lhgf;

namespace {

GaugeField1 restrict_field(const GaugeField1& f, const SimplicialComplex& piece) {
    GaugeField1 r;
    r.base = &piece;
    r.model = f.model;
    for (const auto& e : piece.simplices_of_dim(1)) {
        int pu = f.base->vertex_index(piece.name(e[0]));
        int pv = f.base->vertex_index(piece.name(e[1]));
        r.edges[{e[0], e[1]}] = f.label(pu, pv);
    }
    return r;
}

Cover two_triangle_cover(const SimplicialComplex& parent) {
    Cover cov;
    cov.parent = &parent;
    cov.piece_names = {"X1", "X2"};
    cov.pieces = {SimplicialComplex::make({"a", "b", "c"}, {{"a", "b", "c"}}),
                  SimplicialComplex::make({"b", "c", "d"}, {{"b", "c", "d"}})};
    return cov;
}

Cover path3_cover(const SimplicialComplex& parent) {
    Cover cov;
    cov.parent = &parent;
    cov.piece_names = {"X1", "X2", "X3"};
    cov.pieces = {SimplicialComplex::make({"a", "b", "c"}, {{"a", "b", "c"}}),
                  SimplicialComplex::make({"b", "c", "d"}, {{"b", "c", "d"}}),
                  SimplicialComplex::make({"c", "d", "e"}, {{"c", "d", "e"}})};
    return cov;
}

// global field built from a parent field and one transform per piece:
// locals are the transformed restrictions, psi_ij = u_i u_j^{-1} pointwise
GlobalField twisted_global(const GaugeField1& parent_field, const Cover& cov,
                           const std::vector<GaugeTransform>& us) {
    const ModelPtr& m = parent_field.model;
    GlobalField gf;
    gf.transitions.cover = &cov;
    gf.transitions.model = m;
    int n = static_cast<int>(cov.pieces.size());
    for (int i = 0; i < n; ++i)
        gf.locals1.push_back(act(us[i], restrict_field(parent_field, cov.pieces[i])));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto xij = cov.intersection(i, j);
            for (const auto& nm : xij.vertex_names()) {
                Elem ui = us[i].at(cov.pieces[i].vertex_index(nm));
                Elem uj = us[j].at(cov.pieces[j].vertex_index(nm));
                gf.transitions.psi[{i, j}][nm] =
                    m->compose(Op::Internal, ui, m->inverse(Op::Internal, uj));
            }
        }
    return gf;
}

}  // namespace

TEST_CASE("identity transitions with matching restrictions validate and glue back") {
    auto parent = fx::two_triangles();
    auto cov = two_triangle_cover(parent);
    REQUIRE(cov.validate().ok());
    auto m = make_discrete_model(FiniteGroup::cyclic(2));
    Budget b;
    for (const auto& f : enumerate_fields1(parent, m, &b)) {
        GlobalField gf;
        gf.transitions.cover = &cov;
        gf.transitions.model = m;
        for (size_t i = 0; i < cov.pieces.size(); ++i)
            gf.locals1.push_back(restrict_field(f, cov.pieces[i]));
        auto xij = cov.intersection(0, 1);
        for (const auto& nm : xij.vertex_names())
            gf.transitions.psi[{0, 1}][nm] = m->identity(0);
        CHECK(validate_global(gf).ok());
        CHECK(fields_equal(glue_to_single(gf), f));
    }
}

TEST_CASE("validate_global flags a planted overlap disagreement") {
    auto parent = fx::two_triangles();
    auto cov = two_triangle_cover(parent);
    auto m = make_discrete_model(FiniteGroup::cyclic(3));
    std::mt19937 rng(3);
    auto f = fx::random_field(parent, m, rng);

    GlobalField gf;
    gf.transitions.cover = &cov;
    gf.transitions.model = m;
    for (size_t i = 0; i < cov.pieces.size(); ++i)
        gf.locals1.push_back(restrict_field(f, cov.pieces[i]));
    auto xij = cov.intersection(0, 1);
    for (const auto& nm : xij.vertex_names())
        gf.transitions.psi[{0, 1}][nm] = m->identity(0);
    REQUIRE(validate_global(gf).ok());

    // shift the shared edge b-c in one piece only
    int bu = cov.pieces[1].vertex_index("b"), cu = cov.pieces[1].vertex_index("c");
    auto& slot = gf.locals1[1].edges[edge_key(bu, cu)];
    slot = m->compose(Op::Internal, slot, Elem{0, DiscreteElt{1}});
    auto r = validate_global(gf);
    CHECK_FALSE(r.ok());
    CHECK_THROWS_AS(glue_to_single(gf), Error);
    CHECK_THROWS_AS(normalize_transitions(gf), Error);
}

TEST_CASE("validate_global flags a planted cocycle defect") {
    auto parent = fx::triangle_path3();
    auto cov = path3_cover(parent);
    REQUIRE(cov.validate().ok());
    auto m = make_discrete_model(FiniteGroup::cyclic(4));
    std::mt19937 rng(9);
    auto f = fx::random_field(parent, m, rng);
    std::vector<GaugeTransform> us;
    for (const auto& p : cov.pieces) us.push_back(fx::random_transform(p, m, rng));
    auto gf = twisted_global(f, cov, us);
    REQUIRE(validate_global(gf).ok());

    // X1 and X3 meet only at c, so perturbing psi_13 there can only break
    // the triple cocycle
    auto& slot = gf.transitions.psi[{0, 2}]["c"];
    slot = m->compose(Op::Internal, slot, Elem{0, DiscreteElt{1}});
    auto r = validate_global(gf);
    CHECK_FALSE(r.ok());
    bool cocycle = false;
    for (const auto& v : r.violations) cocycle |= v.rule == "cocycle";
    CHECK(cocycle);
}

TEST_CASE("normalization kills the transitions and the result glues") {
    std::mt19937 rng(41);
    auto m = make_discrete_model(FiniteGroup::cyclic(4));

    auto parent2 = fx::two_triangles();
    auto cov2 = two_triangle_cover(parent2);
    auto parent3 = fx::triangle_path3();
    auto cov3 = path3_cover(parent3);

    struct Case {
        const SimplicialComplex* parent;
        const Cover* cov;
    };
    for (auto [parent, cov] : {Case{&parent2, &cov2}, Case{&parent3, &cov3}}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto f = fx::random_field(*parent, m, rng);
            std::vector<GaugeTransform> us;
            for (const auto& p : cov->pieces) us.push_back(fx::random_transform(p, m, rng));
            auto gf = twisted_global(f, *cov, us);
            REQUIRE(validate_global(gf).ok());

            auto norm = normalize_transitions(gf);
            REQUIRE(norm.transforms.size() == cov->pieces.size());
            for (const auto& [pair, values] : norm.field.transitions.psi)
                for (const auto& [nm, val] : values) CHECK(m->eq(val, m->identity(0)));
            CHECK(validate_global(norm.field).ok());

            auto glued = glue_to_single(norm.field);
            CHECK(validate_field1(glued).ok());
            // the pieces of the glued field are exactly the normalized locals
            for (size_t i = 0; i < cov->pieces.size(); ++i)
                CHECK(fields_equal(restrict_field(glued, cov->pieces[i]),
                                   norm.field.locals1[i]));
        }
    }
}

TEST_CASE("already-normalized input yields identity transforms") {
    auto parent = fx::two_triangles();
    auto cov = two_triangle_cover(parent);
    auto m = make_discrete_model(FiniteGroup::cyclic(3));
    std::mt19937 rng(8);
    auto f = fx::random_field(parent, m, rng);
    std::vector<GaugeTransform> us;
    for (const auto& p : cov.pieces) us.push_back(identity_transform(p, m));
    auto gf = twisted_global(f, cov, us);
    auto norm = normalize_transitions(gf);
    for (const auto& u : norm.transforms)
        for (const auto& [v, g] : u.vertices) CHECK(m->eq(g, m->identity(0)));
    CHECK(fields_equal(glue_to_single(norm.field), f));
}

TEST_CASE("equalizer: restrictions are a bijection onto the compatible tuples") {
    Budget b;
    auto m2 = make_discrete_model(FiniteGroup::cyclic(2));
    auto parent = fx::two_triangles();
    auto cov = two_triangle_cover(parent);
    auto res = equalizer_check(parent, cov, m2, b);
    CHECK(res.global_count == 32);
    CHECK(res.limit_count == 32);
    CHECK(res.bijective);
    CHECK(res.report.ok());

    // hollow triangle, cover by two arcs meeting in two isolated vertices
    auto tri = fx::hollow_triangle();
    Cover arcs;
    arcs.parent = &tri;
    arcs.piece_names = {"U", "V"};
    arcs.pieces = {SimplicialComplex::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}),
                   SimplicialComplex::make({"a", "c"}, {{"a", "c"}})};
    REQUIRE(arcs.validate().ok());
    auto res3 = equalizer_check(tri, arcs, make_discrete_model(FiniteGroup::cyclic(3)), b);
    CHECK(res3.global_count == 27);
    CHECK(res3.limit_count == 27);
    CHECK(res3.bijective);
}

TEST_CASE("coarse graining a subdivided edge composes the chain") {
    auto c = SimplicialComplex::make({"a", "b"}, {{"a", "b"}});
    auto sub = barycentric_subdivide(c);
    auto m = make_discrete_model(FiniteGroup::cyclic(6));
    GaugeField1 fine;
    fine.base = &sub.complex;
    fine.model = m;
    int a = sub.complex.vertex_index("a");
    int ab = sub.complex.vertex_index("a+b");
    int bb = sub.complex.vertex_index("b");
    // oriented chain a -> a+b -> b reads 2 then 3
    fine.edges[edge_key(a, ab)] = Elem{0, DiscreteElt{a < ab ? 2 : 4}};
    fine.edges[edge_key(ab, bb)] = Elem{0, DiscreteElt{ab < bb ? 3 : 3}};

    auto coarse = coarse_grain(fine, sub, c);
    CHECK(m->show(coarse.label(0, 1)) == "5");
}

TEST_CASE("coarse graining preserves loop holonomy") {
    auto c = fx::hollow_triangle();
    auto sub = barycentric_subdivide(c);
    auto m = make_discrete_model(FiniteGroup::cyclic(6));
    std::mt19937 rng(13);
    auto loop = parse_word(c, "a>b.b>c.a>c~");
    for (int trial = 0; trial < 30; ++trial) {
        auto fine = fx::random_field(sub.complex, m, rng);
        auto coarse = coarse_grain(fine, sub, c);
        CHECK(validate_field1(coarse).ok());

        // walk the same loop through the barycenters on the fine side
        std::vector<int> stops;
        auto push_chain = [&](int u, int v) {
            const auto& chain = sub.edge_chain.at(edge_key(std::min(u, v), std::max(u, v)));
            if (u < v) {
                if (stops.empty()) stops.push_back(chain[0].first);
                stops.push_back(chain[0].second);
                stops.push_back(chain[1].second);
            } else {
                if (stops.empty()) stops.push_back(chain[1].second);
                stops.push_back(chain[1].first);
                stops.push_back(chain[0].first);
            }
        };
        push_chain(0, 1);
        push_chain(1, 2);
        push_chain(2, 0);
        auto fine_loop = word_through(sub.complex, stops);
        CHECK(m->eq(holonomy(fine, fine_loop), holonomy(coarse, loop)));
    }
}

TEST_CASE("coarse graining commutes with vertex gauge transforms") {
    auto c = fx::hollow_triangle();
    auto sub = barycentric_subdivide(c);
    auto m = make_discrete_model(FiniteGroup::symmetric(3));
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        auto fine = fx::random_field(sub.complex, m, rng);
        auto ufine = fx::random_transform(sub.complex, m, rng);
        GaugeTransform ucoarse;
        ucoarse.base = &c;
        ucoarse.model = m;
        for (int v = 0; v < c.vertex_count(); ++v)
            ucoarse.vertices[v] = ufine.at(sub.complex.vertex_index(c.name(v)));
        CHECK(fields_equal(coarse_grain(act(ufine, fine), sub, c),
                           act(ucoarse, coarse_grain(fine, sub, c))));
    }
}

TEST_CASE("coarse graining rejects a field on the wrong complex") {
    auto c = fx::hollow_triangle();
    auto sub = barycentric_subdivide(c);
    auto m = make_discrete_model(FiniteGroup::cyclic(2));
    std::mt19937 rng(1);
    auto f = fx::random_field(c, m, rng);  // lives on the coarse complex
    CHECK_THROWS_AS(coarse_grain(f, sub, c), Error);
}

TEST_CASE("dimension-2 global fields validate and glue") {
    auto parent = fx::two_triangles();
    auto cov = two_triangle_cover(parent);
    auto m = make_two_group_model(fx::z2_identity_xmod());
    Budget b;
    for (const auto& f : enumerate_fields2(parent, m, &b)) {
        GlobalField gf;
        gf.transitions.cover = &cov;
        gf.transitions.model = m;
        for (const auto& piece : cov.pieces) {
            GaugeField2 loc;
            loc.base = &piece;
            loc.model = m;
            for (const auto& e : piece.simplices_of_dim(1)) {
                int pu = parent.vertex_index(piece.name(e[0]));
                int pv = parent.vertex_index(piece.name(e[1]));
                loc.edges[{e[0], e[1]}] = f.label(pu, pv);
            }
            for (const auto& t : piece.simplices_of_dim(2)) {
                Simplex pt;
                for (int v : t) pt.push_back(parent.vertex_index(piece.name(v)));
                std::sort(pt.begin(), pt.end());
                loc.faces[t] = f.faces.at(pt);
            }
            gf.locals2.push_back(std::move(loc));
        }
        auto xij = cov.intersection(0, 1);
        for (const auto& nm : xij.vertex_names())
            gf.transitions.psi[{0, 1}][nm] = m->identity(0);
        CHECK(validate_global(gf).ok());
        auto glued = glue_to_single2(gf);
        CHECK(glued.edges == f.edges);
        CHECK(glued.faces == f.faces);
    }
}
