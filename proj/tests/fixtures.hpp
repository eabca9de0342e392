#ifndef LHGF_TESTS_FIXTURES_HPP
#define LHGF_TESTS_FIXTURES_HPP

#include <random>

#include "lhgf/elgf.hpp"

namespace fx {

using namespace lhgf;

inline SimplicialComplex hollow_triangle() {
    return SimplicialComplex::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

inline SimplicialComplex closed_triangle() {
    return SimplicialComplex::make({"a", "b", "c"}, {{"a", "b", "c"}});
}

inline SimplicialComplex square_cycle() {
    return SimplicialComplex::make({"a", "b", "c", "d"},
                                   {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
}

// two vertices joined by three internally subdivided strands
inline SimplicialComplex theta_graph() {
    return SimplicialComplex::make({"a", "b", "m1", "m2", "m3"},
                                   {{"a", "m1"}, {"m1", "b"}, {"a", "m2"}, {"m2", "b"},
                                    {"a", "m3"}, {"m3", "b"}});
}

inline SimplicialComplex two_triangles() {
    return SimplicialComplex::make({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"b", "c", "d"}});
}

inline SimplicialComplex triangle_path3() {
    return SimplicialComplex::make({"a", "b", "c", "d", "e"},
                                   {{"a", "b", "c"}, {"b", "c", "d"}, {"c", "d", "e"}});
}

inline SimplicialComplex tetrahedron() {
    return SimplicialComplex::make({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
}

inline SimplicialComplex octahedron() {
    return SimplicialComplex::make(
        {"a", "b", "c", "d", "e", "f"},
        {{"a", "b", "c"}, {"a", "c", "d"}, {"a", "d", "e"}, {"a", "b", "e"},
         {"b", "c", "f"}, {"c", "d", "f"}, {"d", "e", "f"}, {"b", "e", "f"}});
}

inline CrossedModule z2_identity_xmod() {
    CrossedModule x;
    x.H = FiniteGroup::cyclic(2);
    x.G = FiniteGroup::cyclic(2);
    x.boundary = {0, 1};
    x.action = {{0, 1}, {0, 1}};
    return x;
}

inline GaugeField1 random_field(const SimplicialComplex& c, const ModelPtr& m,
                                std::mt19937& rng) {
    auto elems = m->level0_elements();
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    GaugeField1 f;
    f.base = &c;
    f.model = m;
    for (const auto& e : c.simplices_of_dim(1)) f.edges[{e[0], e[1]}] = elems[pick(rng)];
    return f;
}

inline GaugeTransform random_transform(const SimplicialComplex& c, const ModelPtr& m,
                                       std::mt19937& rng) {
    auto elems = m->level0_elements();
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    GaugeTransform u;
    u.base = &c;
    u.model = m;
    for (int v = 0; v < c.vertex_count(); ++v) u.vertices[v] = elems[pick(rng)];
    return u;
}

inline Rat random_angle(std::mt19937& rng) {
    std::uniform_int_distribution<long long> num(0, 11);
    return Rat(num(rng), 12);
}

inline GaugeTransform random_circle_transform(const SimplicialComplex& c, const ModelPtr& m,
                                              std::mt19937& rng) {
    GaugeTransform u;
    u.base = &c;
    u.model = m;
    for (int v = 0; v < c.vertex_count(); ++v)
        u.vertices[v] = Elem{0, CircleElt{random_angle(rng)}};
    return u;
}

}  // namespace fx

#endif
