#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace lhgf;

namespace {

GaugeField1 z6_triangle() {
    static auto c = fx::hollow_triangle();
    GaugeField1 f;
    f.base = &c;
    f.model = make_discrete_model(FiniteGroup::cyclic(6));
    f.edges[{0, 1}] = Elem{0, DiscreteElt{1}};  // a-b
    f.edges[{1, 2}] = Elem{0, DiscreteElt{2}};  // b-c
    f.edges[{0, 2}] = Elem{0, DiscreteElt{3}};  // a-c
    return f;
}

}  // namespace

TEST_CASE("holonomy around a Z_6 triangle") {
    auto f = z6_triangle();
    REQUIRE(validate_field1(f).ok());
    auto loop = parse_word(*f.base, "a>b.b>c.a>c~");
    // 1 + 2 - 3 = 0
    CHECK(f.model->show(holonomy(f, loop)) == "0");
    auto forward = parse_word(*f.base, "a>b.b>c");
    CHECK(f.model->show(holonomy(f, forward)) == "3");
    CHECK(f.model->show(holonomy(f, invert_word(forward))) == "3");  // -3 = 3 in Z_6
}

TEST_CASE("holonomy respects reduction and composition") {
    auto c = fx::theta_graph();
    auto m = make_discrete_model(FiniteGroup::symmetric(3));
    std::mt19937 rng(11);
    auto edges = c.simplices_of_dim(1);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = fx::random_field(c, m, rng);
        // random composable word
        EdgeWord w = empty_word(c, 0);
        int at = 0;
        for (int i = 0; i < 8; ++i) {
            std::vector<Letter> opts;
            for (const auto& e : edges) {
                if (e[0] == at) opts.push_back({e[0], e[1], +1});
                if (e[1] == at) opts.push_back({e[0], e[1], -1});
            }
            auto l = opts[std::uniform_int_distribution<size_t>(0, opts.size() - 1)(rng)];
            w.letters.push_back(l);
            at = l.to();
        }
        w.tgt = at;
        CHECK(m->eq(holonomy(f, w), holonomy(f, reduce_word(w))));

        // split anywhere: hol(uv) = hol(u) hol(v)
        EdgeWord u = w, v = w;
        u.letters.resize(4);
        u.tgt = u.letters.back().to();
        v.letters.erase(v.letters.begin(), v.letters.begin() + 4);
        v.src = u.tgt;
        CHECK(m->eq(holonomy(f, w),
                    m->compose(Op::Internal, holonomy(f, u), holonomy(f, v))));
    }
}

TEST_CASE("validate_field1 flags missing and stray labels") {
    auto f = z6_triangle();
    auto broken = f;
    broken.edges.erase({1, 2});
    CHECK_FALSE(validate_field1(broken).ok());

    auto stray = f;
    stray.edges[{1, 5}] = Elem{0, DiscreteElt{0}};
    CHECK_FALSE(validate_field1(stray).ok());

    auto wrong_level = f;
    wrong_level.edges[{0, 1}] = Elem{1, DiscreteElt{1}};
    CHECK_FALSE(validate_field1(wrong_level).ok());
}

TEST_CASE("circle field displacement coherence") {
    auto c = fx::closed_triangle();
    auto m = make_circle_model();
    GaugeField1 f;
    f.base = &c;
    f.model = m;
    f.edges[{0, 1}] = Elem{0, CircleElt{Rat(1, 3)}};
    f.edges[{1, 2}] = Elem{0, CircleElt{Rat(1, 4)}};
    f.edges[{0, 2}] = Elem{0, CircleElt{Rat(1, 2)}};
    // rim = 1/3 + 1/4 - 1/2 = 1/12; any integer shift keeps coherence
    f.face_disp[{0, 1, 2}] = Rat(1, 12) + Rat(2);
    CHECK(validate_field1(f).ok());

    f.face_disp[{0, 1, 2}] = Rat(1, 6);
    CHECK_FALSE(validate_field1(f).ok());
}

TEST_CASE("enumeration counts are |G|^edges") {
    Budget b;
    auto z2 = make_discrete_model(FiniteGroup::cyclic(2));
    auto z3 = make_discrete_model(FiniteGroup::cyclic(3));
    auto tri = fx::hollow_triangle();
    auto theta = fx::theta_graph();
    CHECK(enumerate_fields1(tri, z2, &b).size() == 8);
    CHECK(enumerate_fields1(tri, z3, &b).size() == 27);
    CHECK(enumerate_fields1(theta, z2, &b).size() == 64);
    for (const auto& f : enumerate_fields1(tri, z3, &b)) CHECK(validate_field1(f).ok());

    Budget tiny{5};
    CHECK_THROWS_AS(enumerate_fields1(theta, z3, &tiny), Error);
}

TEST_CASE("dimension-2 fields over the identity crossed module") {
    auto c = fx::closed_triangle();
    auto m = make_two_group_model(fx::z2_identity_xmod());
    Budget b;
    auto fields = enumerate_fields2(c, m, &b);
    // boundary is injective, so h is forced by the edges: 2^3 fields
    CHECK(fields.size() == 8);
    for (const auto& f : fields) CHECK(validate_field2(f).ok());

    auto bad = fields[1];
    bad.faces[{0, 1, 2}] ^= 1;
    auto r = validate_field2(bad);
    CHECK_FALSE(r.ok());
}

TEST_CASE("surface transport across one triangle") {
    auto c = fx::two_triangles();
    auto m = make_two_group_model(fx::z2_identity_xmod());
    Budget b;
    auto fields = enumerate_fields2(c, m, &b);
    REQUIRE_FALSE(fields.empty());

    PastingDiagram ex;
    ex.base = &c;
    ex.source_word = parse_word(c, "a>c");
    ex.target_word = parse_word(c, "a>b.b>c");
    ex.moves = {{Simplex{0, 1, 2}, true, empty_word(c, 0), empty_word(c, 2)}};

    for (const auto& f : fields) {
        Elem t = surface_transport(f, ex);
        CHECK(m->eq(m->source(t), Elem{0, DiscreteElt{holonomy2(f, ex.source_word)}}));
        CHECK(m->eq(m->target(t), Elem{0, DiscreteElt{holonomy2(f, ex.target_word)}}));
    }
}

TEST_CASE("surface transport composes vertically") {
    auto c = fx::two_triangles();
    auto m = make_two_group_model(fx::z2_identity_xmod());
    Budget b;
    auto fields = enumerate_fields2(c, m, &b);

    PastingDiagram ex;
    ex.base = &c;
    ex.source_word = parse_word(c, "a>c");
    ex.target_word = parse_word(c, "a>b.b>c");
    ex.moves = {{Simplex{0, 1, 2}, true, empty_word(c, 0), empty_word(c, 2)}};

    PastingDiagram back;
    back.base = &c;
    back.source_word = ex.target_word;
    back.target_word = ex.source_word;
    back.moves = {{Simplex{0, 1, 2}, false, empty_word(c, 0), empty_word(c, 2)}};

    auto vert = pasting_compose(ex, back, PasteDir::Vertical);
    for (const auto& f : fields) {
        Elem lhs = surface_transport(f, vert);
        Elem rhs = m->compose(Op::Directional, surface_transport(f, ex),
                              surface_transport(f, back));
        CHECK(m->eq(lhs, rhs));
        // expand then contract is the identity 2-cell on the source
        CHECK(m->eq(lhs, m->lift(Elem{0, DiscreteElt{holonomy2(f, ex.source_word)}})));
    }
}

TEST_CASE("surface transport needs the face labeled") {
    auto c = fx::two_triangles();
    auto m = make_two_group_model(fx::z2_identity_xmod());
    Budget b;
    auto f = enumerate_fields2(c, m, &b).front();
    f.faces.erase({0, 1, 2});

    PastingDiagram ex;
    ex.base = &c;
    ex.source_word = parse_word(c, "a>c");
    ex.target_word = parse_word(c, "a>b.b>c");
    ex.moves = {{Simplex{0, 1, 2}, true, empty_word(c, 0), empty_word(c, 2)}};
    CHECK_THROWS_AS(surface_transport(f, ex), Error);
}

TEST_CASE("wilson loop reports conjugacy classes") {
    auto c = fx::hollow_triangle();
    auto s3 = FiniteGroup::symmetric(3);
    auto m = make_discrete_model(s3);
    GaugeField1 f;
    f.base = &c;
    f.model = m;
    f.edges[{0, 1}] = Elem{0, DiscreteElt{s3.element("102")}};
    f.edges[{1, 2}] = Elem{0, DiscreteElt{s3.id}};
    f.edges[{0, 2}] = Elem{0, DiscreteElt{s3.id}};

    auto loop = parse_word(c, "a>b.b>c.a>c~");
    // holonomy is a transposition; its class label is the minimal transposition
    CHECK(wilson_loop(f, loop) == s3.class_label(s3.element("102")));

    // basepoint change conjugates, the class stays put
    auto loop_b = parse_word(c, "b>c.a>c~.a>b");
    CHECK(wilson_loop(f, loop_b) == wilson_loop(f, loop));

    CHECK_THROWS_AS(wilson_loop(f, parse_word(c, "a>b")), Error);
}
