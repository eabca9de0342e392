#include <doctest.h>

#include "fixtures.hpp"

using namespace lhgf;

TEST_CASE("octahedron validates and has the expected counts") {
    auto c = fx::octahedron();
    CHECK(c.validate().ok());
    CHECK(c.dim() == 2);
    CHECK(c.vertex_count() == 6);
    CHECK(c.simplices_of_dim(1).size() == 12);
    CHECK(c.simplices_of_dim(2).size() == 8);
}

TEST_CASE("validate flags missing faces and bad vertex order") {
    auto broken = SimplicialComplex::raw({"a", "b", "c"}, {{0, 1, 2}});
    CHECK_FALSE(broken.validate().ok());  // faces of the triangle absent

    auto descending = SimplicialComplex::raw({"a", "b"}, {{0}, {1}, {1, 0}});
    CHECK_FALSE(descending.validate().ok());
}

TEST_CASE("skeleton") {
    auto c = fx::octahedron();
    auto sk1 = c.skeleton(1);
    CHECK(sk1.simplices_of_dim(1).size() == 12);
    CHECK(sk1.simplices_of_dim(2).empty());
    CHECK(c.skeleton(5).simplices() == c.simplices());
    CHECK(fx::closed_triangle().skeleton(0).simplices().size() == 3);

    for (int m = 0; m <= 2; ++m)
        for (int k = 0; k <= m; ++k)
            CHECK(c.skeleton(m).skeleton(k).simplices() == c.skeleton(k).simplices());
}

TEST_CASE("barycentric subdivision of a single edge") {
    auto c = SimplicialComplex::make({"a", "b"}, {{"a", "b"}});
    auto sub = barycentric_subdivide(c);
    CHECK(sub.complex.vertex_count() == 3);
    CHECK(sub.complex.simplices_of_dim(1).size() == 2);
    auto chain = sub.edge_chain.at({0, 1});
    REQUIRE(chain.size() == 2);
    CHECK(sub.complex.name(chain[0].first) == "a");
    CHECK(sub.complex.name(chain[0].second) == "a+b");
    CHECK(sub.complex.name(chain[1].second) == "b");
}

TEST_CASE("barycentric subdivision of a closed triangle counts flags") {
    auto sub = barycentric_subdivide(fx::closed_triangle());
    CHECK(sub.complex.vertex_count() == 7);
    CHECK(sub.complex.simplices_of_dim(1).size() == 12);
    CHECK(sub.complex.simplices_of_dim(2).size() == 6);
    CHECK(sub.complex.validate().ok());
}

TEST_CASE("barycentric subdivision of the empty complex") {
    auto sub = barycentric_subdivide(SimplicialComplex::make({}, {}));
    CHECK(sub.complex.vertex_count() == 0);
    CHECK(sub.complex.simplices().empty());
}

TEST_CASE("glue two triangles along an edge") {
    auto t1 = SimplicialComplex::make({"a", "b", "c"}, {{"a", "b", "c"}});
    auto t2 = SimplicialComplex::make({"b", "c", "d"}, {{"b", "c", "d"}});
    auto shared = SimplicialComplex::make({"b", "c"}, {{"b", "c"}});
    auto g = glue(t1, t2, shared);
    CHECK(g.vertex_count() == 4);
    CHECK(g.simplices_of_dim(1).size() == 5);
    CHECK(g.simplices_of_dim(2).size() == 2);
    CHECK(g.validate().ok());
}

TEST_CASE("glue rejects a non-subcomplex shared part") {
    auto t1 = SimplicialComplex::make({"a", "b"}, {{"a", "b"}});
    auto t2 = SimplicialComplex::make({"c", "d"}, {{"c", "d"}});
    auto shared = SimplicialComplex::make({"x"}, {{"x"}});
    CHECK_THROWS_AS(glue(t1, t2, shared), Error);
}

TEST_CASE("glue with empty shared part is a disjoint union") {
    auto t1 = SimplicialComplex::make({"a", "b"}, {{"a", "b"}});
    auto t2 = SimplicialComplex::make({"c"}, {{"c"}});
    auto g = glue(t1, t2, SimplicialComplex::make({}, {}));
    CHECK(g.vertex_count() == 3);
}

TEST_CASE("admissible nested pairs, small cases") {
    auto edge = SimplicialComplex::make({"a", "b"}, {{"a", "b"}});
    auto te = admissible_nested_pairs(edge);
    REQUIRE(te.pairs.size() == 1);
    CHECK(te.pairs[0].tau == Simplex{0, 1});
    CHECK(te.pairs[0].nu == Simplex{0});
    CHECK(te.pairs[0].level() == 0);

    auto tri = admissible_nested_pairs(fx::closed_triangle());
    int level0 = 0, level1 = 0;
    for (const auto& p : tri.pairs) {
        if (p.level() == 0) ++level0;
        if (p.level() == 1) ++level1;
    }
    // triangle: nu in {a},{b},{a,b} for tau=[a,b,c], plus one per edge
    CHECK(level0 == 5);
    CHECK(level1 == 1);

    CHECK(admissible_nested_pairs(SimplicialComplex::make({"a"}, {{"a"}})).pairs.empty());
}

TEST_CASE("admissible pairs agree with a brute-force subset scan") {
    for (const auto& c : {fx::tetrahedron(), fx::octahedron(), fx::two_triangles()}) {
        auto table = admissible_nested_pairs(c);
        std::set<NestedPair> got(table.pairs.begin(), table.pairs.end());
        std::set<NestedPair> want;
        for (const auto& tau : c.simplices()) {
            if (tau.size() < 2) continue;
            int m = static_cast<int>(tau.size()) - 1;
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                Simplex nu;
                for (int i = 0; i < m; ++i)
                    if (mask & (1u << i)) nu.push_back(tau[i]);
                want.insert({tau, nu});
            }
        }
        CHECK(got == want);
        for (const auto& p : table.pairs) {
            CHECK(nested_pair_admissible(p.tau, p.nu));
            for (const auto& b : table.boundary.at(p))
                CHECK(nested_pair_admissible(b.tau, b.nu));
        }
    }
}

TEST_CASE("collapsibility") {
    CHECK(is_collapsible(fx::closed_triangle()).collapsible);
    CHECK_FALSE(is_collapsible(fx::hollow_triangle()).collapsible);
    CHECK(is_collapsible(SimplicialComplex::make({"a"}, {{"a"}})).collapsible);
    CHECK(is_collapsible(fx::tetrahedron()).collapsible);
    CHECK(is_collapsible(fx::two_triangles()).collapsible);
}

TEST_CASE("connected components") {
    auto c = SimplicialComplex::make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    auto comps = connected_components(c);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3});
}

TEST_CASE("cover validation") {
    auto parent = fx::two_triangles();
    Cover cov;
    cov.parent = &parent;
    cov.piece_names = {"X1", "X2"};
    cov.pieces = {SimplicialComplex::make({"a", "b", "c"}, {{"a", "b", "c"}}),
                  SimplicialComplex::make({"b", "c", "d"}, {{"b", "c", "d"}})};
    CHECK(cov.validate().ok());
    auto xij = cov.intersection(0, 1);
    CHECK(xij.vertex_count() == 2);
    CHECK(xij.simplices_of_dim(1).size() == 1);

    Cover bad;
    bad.parent = &parent;
    bad.piece_names = {"X1"};
    bad.pieces = {SimplicialComplex::make({"a", "b", "c"}, {{"a", "b", "c"}})};
    CHECK_FALSE(bad.validate().ok());  // d uncovered
}

TEST_CASE("cover with disconnected but componentwise-collapsible overlap passes") {
    auto parent = fx::square_cycle();
    Cover cov;
    cov.parent = &parent;
    cov.piece_names = {"U", "V"};
    cov.pieces = {SimplicialComplex::make({"a", "b", "d"}, {{"a", "b"}, {"a", "d"}}),
                  SimplicialComplex::make({"b", "c", "d"}, {{"b", "c"}, {"c", "d"}})};
    CHECK(cov.validate().ok());
    CHECK(connected_components(cov.intersection(0, 1)).size() == 2);
}
