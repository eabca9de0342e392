#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace lhgf;

TEST_CASE("gauge action on a single Z_4 edge") {
    auto c = SimplicialComplex::make({"a", "b"}, {{"a", "b"}});
    auto m = make_discrete_model(FiniteGroup::cyclic(4));
    GaugeField1 f;
    f.base = &c;
    f.model = m;
    f.edges[{0, 1}] = Elem{0, DiscreteElt{1}};

    GaugeTransform u;
    u.base = &c;
    u.model = m;
    u.vertices[0] = Elem{0, DiscreteElt{2}};
    u.vertices[1] = Elem{0, DiscreteElt{3}};
    REQUIRE(validate_transform(u).ok());

    // 2 + 1 - 3 = 0
    CHECK(m->show(act(u, f).label(0, 1)) == "0");
}

TEST_CASE("holonomy transforms by conjugation at the endpoints") {
    auto c = fx::theta_graph();
    auto m = make_discrete_model(FiniteGroup::symmetric(3));
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = fx::random_field(c, m, rng);
        auto u = fx::random_transform(c, m, rng);
        auto w = word_through(c, {0, 2, 1, 3, 0});  // a m1 b m2 a
        Elem lhs = holonomy(act(u, f), w);
        Elem rhs = m->compose(Op::Internal, m->compose(Op::Internal, u.at(w.src), holonomy(f, w)),
                              m->inverse(Op::Internal, u.at(w.tgt)));
        CHECK(m->eq(lhs, rhs));
    }
}

TEST_CASE("transform composition is compatible with the action") {
    auto c = fx::hollow_triangle();
    auto m = make_discrete_model(FiniteGroup::symmetric(3));
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = fx::random_field(c, m, rng);
        auto u = fx::random_transform(c, m, rng);
        auto v = fx::random_transform(c, m, rng);
        CHECK(fields_equal(act(compose_transforms(u, v), f), act(u, act(v, f))));
        CHECK(fields_equal(act(invert_transform(u), act(u, f)), f));
        CHECK(fields_equal(act(identity_transform(c, m), f), f));
    }
}

TEST_CASE("orbit structure on the hollow triangle") {
    Budget b;
    auto tri = fx::hollow_triangle();

    auto z2 = make_discrete_model(FiniteGroup::cyclic(2));
    auto os2 = orbits(tri, z2, b);
    REQUIRE(os2.size() == 2);
    CHECK(os2[0].size() == 4);
    CHECK(os2[1].size() == 4);

    // orbit count equals the number of conjugacy classes of the loop holonomy
    auto s3 = make_discrete_model(FiniteGroup::symmetric(3));
    auto os3 = orbits(tri, s3, b);
    CHECK(os3.size() == 3);
    long long total = 0;
    for (const auto& o : os3) {
        total += o.size();
        // orbit size divides the size of the acting group |G|^V
        CHECK(216 % o.size() == 0);
    }
    CHECK(total == 216);  // |G|^E, every field in exactly one orbit
}

TEST_CASE("a single edge has one orbit") {
    Budget b;
    auto c = SimplicialComplex::make({"a", "b"}, {{"a", "b"}});
    auto os = orbits(c, make_discrete_model(FiniteGroup::cyclic(4)), b);
    REQUIRE(os.size() == 1);
    CHECK(os[0].size() == 4);
}

TEST_CASE("gauge equivalence witnesses check out") {
    Budget b;
    auto c = fx::hollow_triangle();
    auto m = make_discrete_model(FiniteGroup::cyclic(3));
    std::mt19937 rng(5);
    auto f = fx::random_field(c, m, rng);
    auto u = fx::random_transform(c, m, rng);
    auto g = act(u, f);

    auto w = is_gauge_equivalent(f, g, b);
    REQUIRE(w.has_value());
    CHECK(fields_equal(act(*w, f), g));

    // different loop holonomy class: never equivalent
    auto h = f;
    Elem old = h.edges.at({0, 1});
    h.edges[{0, 1}] = m->compose(Op::Internal, old, Elem{0, DiscreteElt{1}});
    CHECK_FALSE(is_gauge_equivalent(f, h, b).has_value());
}

TEST_CASE("wilson loops are gauge invariant") {
    auto c = fx::hollow_triangle();
    auto m = make_discrete_model(FiniteGroup::symmetric(3));
    auto loop = parse_word(c, "a>b.b>c.a>c~");
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        auto f = fx::random_field(c, m, rng);
        auto u = fx::random_transform(c, m, rng);
        CHECK(wilson_loop(act(u, f), loop) == wilson_loop(f, loop));
    }
}

TEST_CASE("dimension-2 action preserves fake-flatness") {
    auto c = fx::two_triangles();
    auto m = make_two_group_model(fx::z2_identity_xmod());
    Budget b;
    auto fields = enumerate_fields2(c, m, &b);
    auto transforms = enumerate_transforms(c, m, &b);
    for (const auto& f : fields)
        for (const auto& u : transforms) {
            auto g = act(u, f);
            CHECK(validate_field2(g).ok());
            auto back = act(invert_transform(u), g);
            CHECK(back.edges == f.edges);
            CHECK(back.faces == f.faces);
        }
}

TEST_CASE("circle transform with edge data shifts face displacements exactly") {
    auto c = fx::closed_triangle();
    auto m = make_circle_model();
    GaugeField1 f;
    f.base = &c;
    f.model = m;
    f.edges[{0, 1}] = Elem{0, CircleElt{Rat(1, 3)}};
    f.edges[{1, 2}] = Elem{0, CircleElt{Rat(1, 4)}};
    f.edges[{0, 2}] = Elem{0, CircleElt{Rat(1, 2)}};
    f.face_disp[{0, 1, 2}] = Rat(1, 12);
    REQUIRE(validate_field1(f).ok());

    GaugeTransform u;
    u.base = &c;
    u.model = m;
    u.vertices[0] = Elem{0, CircleElt{Rat(1, 6)}};
    u.vertices[1] = Elem{0, CircleElt{Rat(1, 2)}};
    u.vertices[2] = Elem{0, CircleElt{Rat(5, 6)}};
    // level-1 data: tgt - src ≡ disp (mod 1), one winding on a-b
    u.edge_values[{0, 1}] = Elem{1, CircleGlobe{Rat(1, 6), Rat(1, 2), Rat(4, 3)}};
    u.edge_values[{1, 2}] = Elem{1, CircleGlobe{Rat(1, 2), Rat(5, 6), Rat(1, 3)}};
    u.edge_values[{0, 2}] = Elem{1, CircleGlobe{Rat(1, 6), Rat(5, 6), Rat(2, 3)}};
    REQUIRE(validate_transform(u).ok());

    auto g = act(u, f);
    CHECK(validate_field1(g).ok());
    // shift by 4/3 + 1/3 - 2/3 = 1
    CHECK(g.face_disp.at({0, 1, 2}) == Rat(1, 12) + Rat(1));

    // vertex-only transforms never move the displacement
    auto plain = u;
    plain.edge_values.clear();
    CHECK(act(plain, f).face_disp.at({0, 1, 2}) == Rat(1, 12));
    CHECK(validate_field1(act(plain, f)).ok());

    // mismatched endpoints are reported
    auto bad = u;
    bad.edge_values[{0, 1}] = Elem{1, CircleGlobe{Rat(0), Rat(1, 2), Rat(1, 2)}};
    CHECK_FALSE(validate_transform(bad).ok());
}
