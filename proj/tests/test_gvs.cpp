#include <doctest.h>

#include <algorithm>

#include "colorlie/gvs.hpp"
#include "test_helpers.hpp"

using namespace colorlie;
using namespace colorlie::testing;

namespace {

SpacePtr z2z2_space() {
    GradingGroup g{{2, 2}};
    return make_space(2, g,
                      {{"a", make_degree(g, {0, 0})},
                       {"b", make_degree(g, {1, 0})},
                       {"c", make_degree(g, {0, 1})},
                       {"d", make_degree(g, {1, 1})}});
}

// Random subspace spanned by homogeneous vectors only.
Subspace random_graded_subspace(SplitMix64& rng, const SpacePtr& s, size_t count) {
    std::vector<Vec> gens;
    const auto degrees = s->support();
    for (size_t t = 0; t < count; ++t) {
        const Degree d = degrees[rng.below(degrees.size())];
        Vec v = zero_vec(s);
        for (size_t i : s->component(d))
            v.coords[i] = Scalar::rational(s->cyclo_order, rng.small_rational());
        gens.push_back(v);
    }
    return span(s, gens);
}

} // namespace

TEST_CASE("map apply and compose basics") {
    SplitMix64 rng(11);
    const SpacePtr v = super_space_dim2();
    const GradedMap id = identity_map(v);

    GradedMap f = zero_map(v, v);
    f.mat[0][1] = Scalar::one(2);
    f = make_map(v, v, f.mat);

    CHECK(compose(id, f) == f);
    CHECK(compose(f, id) == f);
    CHECK(zero_map(v, v).apply(random_vec(rng, v)).is_zero());

    // shift arithmetic: f maps e1 (deg 1) to e0 (deg 0): shift = -1 = 1 in Z2.
    REQUIRE(f.shift.has_value());
    CHECK(*f.shift == make_degree(v->group, {1}));
    const GradedMap ff = compose(f, f);
    REQUIRE(ff.shift.has_value());
    CHECK(*ff.shift == degree_zero(v->group));
    CHECK(ff.is_zero());

    CHECK_THROWS_WITH_AS(f.apply(random_vec(rng, trivial_space(2))),
                         doctest::Contains("SpaceMismatch"), Error);
}

TEST_CASE("homogeneous map components") {
    const SpacePtr v = super_space_dim2();

    GradedMap f = zero_map(v, v);
    f.mat[0][1] = Scalar::one(2); // shift 1
    auto parts = homogeneous_map_components(f);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == make_degree(v->group, {1}));
    CHECK(parts[0].second == f);

    CHECK(homogeneous_map_components(zero_map(v, v)).empty());

    auto id_parts = homogeneous_map_components(identity_map(v));
    REQUIRE(id_parts.size() == 1);
    CHECK(id_parts[0].first == degree_zero(v->group));

    // Roundtrip: the components sum back to the map, exactly.
    SplitMix64 rng(202);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Scalar>> mat(v->dim(),
                                             std::vector<Scalar>(v->dim(), Scalar::zero(2)));
        for (auto& row : mat)
            for (auto& x : row) x = random_field_element(rng, 2);
        const GradedMap g = make_map(v, v, mat);
        auto comps = homogeneous_map_components(g);
        GradedMap sum = zero_map(v, v);
        for (const auto& [d, part] : comps) {
            REQUIRE(detect_shift(part) == d);
            sum = sum + part;
        }
        CHECK(sum == g);
    }
}

TEST_CASE("subspace span, membership, kernel") {
    SplitMix64 rng(31);
    const SpacePtr v = z2z2_space();

    CHECK(kernel(identity_map(v)) == zero_subspace(v));

    const Vec x = random_vec(rng, v);
    if (!x.is_zero()) CHECK(span(v, {x}).contains(x));

    const Vec y = random_vec(rng, v);
    const Subspace s = span(v, {x, y});
    CHECK(s.contains(x + y));
    CHECK(s.contains(Scalar::integer(2, -3) * x));

    // graded flag: single-degree vectors are graded, mixed ones are not.
    const Subspace graded_one = span(v, {basis_vec(v, 1)});
    CHECK(graded_one.graded);
    const Subspace mixed = span(v, {basis_vec(v, 0) + basis_vec(v, 1)});
    CHECK_FALSE(mixed.graded);
    const Subspace recovered = span(v, {basis_vec(v, 0) + basis_vec(v, 1), basis_vec(v, 1)});
    CHECK(recovered.graded);
    CHECK(recovered.homogeneous_basis.size() == 2);
}

TEST_CASE("echelon canonicity: generator order never changes the subspace") {
    SplitMix64 rng(47);
    const SpacePtr v = z2z2_space();
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Vec> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_vec(rng, v));
        const Subspace a = span(v, gens);
        std::reverse(gens.begin(), gens.end());
        const Subspace b = span(v, gens);
        std::rotate(gens.begin(), gens.begin() + 1, gens.end());
        const Subspace c = span(v, gens);
        CHECK(a == b);
        CHECK(a == c);
        CHECK(a.graded == b.graded);
    }
}

TEST_CASE("intersection agrees with the dimension formula and the membership oracle") {
    SplitMix64 rng(53);
    const SpacePtr v = z2z2_space();
    for (int trial = 0; trial < 25; ++trial) {
        const Subspace a = span(v, {random_vec(rng, v), random_vec(rng, v)});
        const Subspace b = span(v, {random_vec(rng, v), random_vec(rng, v)});
        const Subspace both = intersect(a, b);
        const Subspace sum = subspace_sum(a, b);
        CHECK(both.dim() + sum.dim() == a.dim() + b.dim());
        for (const auto& w : both.basis_vectors()) {
            CHECK(oracle_member(a.rows, w));
            CHECK(oracle_member(b.rows, w));
        }
    }
}

TEST_CASE("preimage and image") {
    SplitMix64 rng(61);
    const SpacePtr v = z2z2_space();
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<std::vector<Scalar>> mat(v->dim(),
                                             std::vector<Scalar>(v->dim(), Scalar::zero(2)));
        for (auto& row : mat)
            for (auto& x : row) x = random_field_element(rng, 2);
        const GradedMap f = make_map(v, v, mat);
        const Subspace w = span(v, {random_vec(rng, v)});
        const Subspace pre = preimage(f, w);
        for (const auto& u : pre.basis_vectors()) CHECK(w.contains(f.apply(u)));
        CHECK(pre.dim() >= kernel(f).dim());
        CHECK(image(f).dim() + kernel(f).dim() == v->dim());
    }
}

TEST_CASE("null space of endomorphism subspaces") {
    const SpacePtr v = super_space_dim2();
    const SpacePtr ev = end_space(v);
    REQUIRE(ev->dim() == 4);
    CHECK(ev->degrees[0 * 2 + 1] == make_degree(v->group, {1})); // E_0_1 has odd degree

    // D = all of gl(V) -> null space 0; D = 0 -> null space V.
    CHECK(null_space_of_endos(v, full_subspace(ev)) == zero_subspace(v));
    CHECK(null_space_of_endos(v, zero_subspace(ev)) == full_subspace(v));
}

TEST_CASE("double annihilator restores random graded subspaces") {
    SplitMix64 rng(71);
    for (const SpacePtr& v : {super_space_dim2(), z2z2_space(), trivial_space(3)}) {
        for (int trial = 0; trial < 12; ++trial) {
            const Subspace w = random_graded_subspace(rng, v, 2);
            REQUIRE(w.graded);
            const Subspace ann = annihilator_endos(v, w);
            const Subspace back = null_space_of_endos(v, ann);
            CHECK(back == w);
            // Cross-check with the independent membership oracle.
            for (const auto& u : back.basis_vectors()) CHECK(oracle_member(w.rows, u));
        }
    }
}

TEST_CASE("endo flattening roundtrip") {
    SplitMix64 rng(83);
    const SpacePtr v = z2z2_space();
    const SpacePtr ev = end_space(v);
    for (int trial = 0; trial < 10; ++trial) {
        const Vec e = random_vec(rng, ev);
        CHECK(endo_to_vec(ev, vec_to_endo(v, e)) == e);
    }
}

TEST_CASE("vector rendering") {
    const SpacePtr v = super_space_dim2();
    Vec x = zero_vec(v);
    x.coords[0] = Scalar::rational(2, Rat(1, 2));
    x.coords[1] = Scalar::integer(2, -1);
    CHECK(x.str() == "1/2*e0 - e1");
    CHECK(zero_vec(v).str() == "0");
}
