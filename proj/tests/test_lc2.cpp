#include <doctest.h>

#include "colorlie/lc2.hpp"
#include "test_helpers.hpp"

using namespace colorlie;
using namespace colorlie::testing;

namespace {

ColorAlgebra make_sl2() {
    const SpacePtr s = trivial_space(3);
    const Scalar one = Scalar::one(1), two = Scalar::integer(1, 2);
    std::vector<BracketEntry> entries = {
        {0, 1, 2, one},  {1, 0, 2, -one}, {2, 0, 0, two},
        {0, 2, 0, -two}, {2, 1, 1, -two}, {1, 2, 1, two},
    };
    return ColorAlgebra{s, Bicharacter::trivial(), BracketTable::from_entries(s, entries)};
}

QuadraticForm sl2_killing() {
    QuadraticForm q{make_sl2(), {}};
    q.gram.assign(3, std::vector<Scalar>(3, Scalar::zero(1)));
    q.gram[0][1] = q.gram[1][0] = Scalar::integer(1, 4);
    q.gram[2][2] = Scalar::integer(1, 8);
    return q;
}

QuadraticForm gl11_supertrace() {
    const ColorAlgebra gl = gl_bracket(super_space_dim2(), Bicharacter::super_sign());
    QuadraticForm q{gl, {}};
    const Scalar one = Scalar::one(2);
    q.gram.assign(4, std::vector<Scalar>(4, Scalar::zero(2)));
    q.gram[0][0] = one;
    q.gram[1][2] = one;
    q.gram[2][1] = -one;
    q.gram[3][3] = -one;
    return q;
}

TwoTermAlgebra abelian_two_term() {
    const SpacePtr v0 = trivial_space(2);
    const SpacePtr v1 = make_space(1, GradingGroup::trivial(),
                                   {{"h0", degree_zero(GradingGroup::trivial())}});
    return make_two_term(v0, v1, Bicharacter::trivial(), zero_map(v1, v0),
                         BracketTable::zero(v0), {}, {});
}

// Random homogeneous morphism of a chosen degree.
Morphism2 random_morphism(SplitMix64& rng, const TwoTermAlgebra& t, const Degree& deg) {
    Vec x = zero_vec(t.v0), h = zero_vec(t.v1);
    for (size_t i : t.v0->component(deg))
        x.coords[i] = Scalar::rational(t.v0->cyclo_order, rng.small_rational());
    for (size_t i : t.v1->component(deg))
        h.coords[i] = Scalar::rational(t.v1->cyclo_order, rng.small_rational());
    return Morphism2{x, h};
}

} // namespace

TEST_CASE("composition of 2-vector space morphisms") {
    const TwoTermAlgebra t = two_term_from_omni(super_space_dim2(), Bicharacter::super_sign());
    SplitMix64 rng(17);

    const Degree even = degree_zero(t.v0->group);
    const Morphism2 f = random_morphism(rng, t, even);
    CHECK(compose2(t, identity_morphism(t, f.src), f) == f);
    CHECK(compose2(t, f, identity_morphism(t, morphism_target(t, f))) == f);

    // (x,h) then (x+dh,k) = (x, h+k)
    const Morphism2 g{morphism_target(t, f), random_morphism(rng, t, even).lift};
    const Morphism2 gf = compose2(t, f, g);
    CHECK(gf.src == f.src);
    CHECK(gf.lift == f.lift + g.lift);

    // associative on seeded composable triples
    for (int trial = 0; trial < 20; ++trial) {
        const Morphism2 a = random_morphism(rng, t, even);
        const Morphism2 b{morphism_target(t, a), random_morphism(rng, t, even).lift};
        const Morphism2 c{morphism_target(t, b), random_morphism(rng, t, even).lift};
        CHECK(compose2(t, compose2(t, a, b), c) == compose2(t, a, compose2(t, b, c)));
    }

    CHECK_THROWS_WITH_AS(
        compose2(t, f, Morphism2{f.src + basis_vec(t.v0, 0), zero_vec(t.v1)}),
        doctest::Contains("NonComposable"), Error);
}

TEST_CASE("bracket functor") {
    const TwoTermAlgebra t = two_term_from_omni(super_space_dim2(), Bicharacter::super_sign());
    SplitMix64 rng(23);

    // [1_x, 1_y] = 1_{[x,y]}
    for (size_t i = 0; i < t.v0->dim(); ++i)
        for (size_t j = 0; j < t.v0->dim(); ++j) {
            const Morphism2 br = bracket_functor(t, identity_morphism(t, basis_vec(t.v0, i)),
                                                 identity_morphism(t, basis_vec(t.v0, j)));
            CHECK(br == identity_morphism(t, t.l2_00.eval_basis(i, j)));
        }

    const auto degrees = all_degrees(t.v0->group);
    for (int trial = 0; trial < 15; ++trial) {
        const Degree d1 = degrees[rng.below(degrees.size())];
        const Degree d2 = degrees[rng.below(degrees.size())];

        // eps-skewness of the functor on homogeneous morphisms
        const Morphism2 f = random_morphism(rng, t, d1);
        const Morphism2 g = random_morphism(rng, t, d2);
        const Morphism2 lhs = bracket_functor(t, f, g);
        const Morphism2 rhs = t.bichar.eval_scalar(d1, d2) * bracket_functor(t, g, f);
        CHECK(lhs.src == -rhs.src);
        CHECK(lhs.lift == -rhs.lift);

        // functor law on composable pairs: [g o f, g' o f'] = [g,g'] o [f,f']
        const Morphism2 f2{morphism_target(t, f), random_morphism(rng, t, d1).lift};
        const Morphism2 g2{morphism_target(t, g), random_morphism(rng, t, d2).lift};
        const Morphism2 left =
            bracket_functor(t, compose2(t, f, f2), compose2(t, g, g2));
        const Morphism2 right = compose2(t, bracket_functor(t, f, g),
                                         bracket_functor(t, f2, g2));
        CHECK(left == right);

        // target compatibility: t([f,g]) = [t(f), t(g)]
        CHECK(morphism_target(t, bracket_functor(t, f, g)) ==
              t.l2_00.eval(morphism_target(t, f), morphism_target(t, g)));
    }
}

TEST_CASE("jacobiator morphisms") {
    SUBCASE("abelian algebra: identity on 0") {
        const TwoTermAlgebra t = abelian_two_term();
        const Morphism2 j = jacobiator(t, basis_vec(t.v0, 0), basis_vec(t.v0, 1),
                                       basis_vec(t.v0, 0));
        CHECK(j.src.is_zero());
        CHECK(j.lift.is_zero());
    }

    SUBCASE("string algebra lift is B([x,y],z)") {
        const TwoTermAlgebra t = string_from_quadratic(sl2_killing());
        const Morphism2 j = jacobiator(t, basis_vec(t.v0, 0), basis_vec(t.v0, 1),
                                       basis_vec(t.v0, 2));
        CHECK(j.lift.coords[0] == Scalar::integer(1, 8)); // B([e,f],h) = B(h,h)
        CHECK(j.src == t.l2_00.eval(t.l2_00.eval_basis(0, 1), basis_vec(t.v0, 2)));
    }

    SUBCASE("source and target match the Jacobiator contract") {
        const TwoTermAlgebra t =
            two_term_from_omni(super_space_dim2(), Bicharacter::super_sign());
        const auto& dg = t.v0->degrees;
        for (size_t i = 0; i < t.v0->dim(); ++i)
            for (size_t j = 0; j < t.v0->dim(); ++j)
                for (size_t k = 0; k < t.v0->dim(); ++k) {
                    const Vec x = basis_vec(t.v0, i), y = basis_vec(t.v0, j),
                              z = basis_vec(t.v0, k);
                    const Morphism2 jac = jacobiator(t, x, y, z);
                    CHECK(jac.src == t.l2_00.eval(t.l2_00.eval(x, y), z));
                    const Vec want_target =
                        t.l2_00.eval(x, t.l2_00.eval(y, z)) +
                        t.bichar.eval_scalar(dg[j], dg[k]) *
                            t.l2_00.eval(t.l2_00.eval(x, z), y);
                    CHECK(morphism_target(t, jac) == want_target);
                }
    }

    SUBCASE("naturality square in the third variable") {
        const TwoTermAlgebra t =
            two_term_from_omni(super_space_dim2(), Bicharacter::super_sign());
        SplitMix64 rng(31);
        const auto degrees = all_degrees(t.v0->group);
        for (int trial = 0; trial < 12; ++trial) {
            const Degree dx = degrees[rng.below(degrees.size())];
            const Degree dy = degrees[rng.below(degrees.size())];
            const Degree dz = degrees[rng.below(degrees.size())];
            Vec x = zero_vec(t.v0), y = zero_vec(t.v0);
            for (size_t i : t.v0->component(dx))
                x.coords[i] = Scalar::rational(2, rng.small_rational());
            for (size_t i : t.v0->component(dy))
                y.coords[i] = Scalar::rational(2, rng.small_rational());
            const Morphism2 f = random_morphism(rng, t, dz); // f: z -> z'
            const Vec z = f.src;
            const Vec z2 = morphism_target(t, f);

            const Morphism2 ix = identity_morphism(t, x);
            const Morphism2 iy = identity_morphism(t, y);
            const Morphism2 top = bracket_functor(t, bracket_functor(t, ix, iy), f);
            const Morphism2 right = jacobiator(t, x, y, z2);
            const Morphism2 left = jacobiator(t, x, y, z);
            const Morphism2 bottom =
                bracket_functor(t, ix, bracket_functor(t, iy, f)) +
                t.bichar.eval_scalar(dy, dz) *
                    bracket_functor(t, bracket_functor(t, ix, f), iy);
            CHECK(compose2(t, top, right) == compose2(t, left, bottom));
        }
    }
}

TEST_CASE("jacobiator identity verdicts") {
    SUBCASE("strict algebras pass trivially") {
        const ColorAlgebra gl = gl_bracket(super_space_dim2(), Bicharacter::super_sign());
        const CrossedModule c = inner_derivation_module(gl);
        const TwoTermAlgebra t = crossed_to_strict(c);
        CHECK(check_jacobiator_identity(t).ok());
    }

    SUBCASE("two-term-from-omni passes, dims 1 and 2") {
        CHECK(check_jacobiator_identity(
                  two_term_from_omni(trivial_space(1), Bicharacter::trivial()))
                  .ok());
        CHECK(check_jacobiator_identity(
                  two_term_from_omni(super_space_dim2(), Bicharacter::super_sign()))
                  .ok());
    }

    SUBCASE("string algebras pass") {
        CHECK(check_jacobiator_identity(string_from_quadratic(sl2_killing())).ok());
        CHECK(check_jacobiator_identity(string_from_quadratic(gl11_supertrace())).ok());
    }

    SUBCASE("broken l3 fails with the axiom-(i) witness") {
        TwoTermAlgebra t = string_from_quadratic(gl11_supertrace());
        const Scalar one = Scalar::one(2);
        auto eps = [&](size_t a, size_t b) {
            return t.bichar.eval_scalar(t.v0->degrees[a], t.v0->degrees[b]);
        };
        auto add = [&](size_t a, size_t b, size_t c, const Scalar& val) {
            t.l3[a][b][c][0] += val;
        };
        add(0, 1, 2, one);
        add(1, 0, 2, -(eps(0, 1) * one));
        add(0, 2, 1, -(eps(1, 2) * one));
        add(1, 2, 0, eps(0, 1) * eps(0, 2) * one);
        add(2, 0, 1, eps(1, 2) * eps(0, 2) * one);
        add(2, 1, 0, -(eps(0, 1) * eps(0, 2) * eps(1, 2) * one));

        const AxiomReport axioms = check_axioms(t);
        REQUIRE_FALSE(axioms.axioms.at('i').ok());
        const JacobiatorReport jac = check_jacobiator_identity(t);
        CHECK_FALSE(jac.coherence.ok());
        CHECK(jac.common_target.ok());
        // witness-for-witness agreement with axiom (i)
        REQUIRE(jac.coherence.witness.has_value());
        CHECK(jac.coherence.witness->tuple == axioms.axioms.at('i').witness->tuple);
    }
}

TEST_CASE("lc2 roundtrip is the exact identity") {
    std::vector<TwoTermAlgebra> fixtures;
    fixtures.push_back(string_from_quadratic(sl2_killing()));
    fixtures.push_back(string_from_quadratic(gl11_supertrace()));
    fixtures.push_back(two_term_from_omni(super_space_dim2(), Bicharacter::super_sign()));
    fixtures.push_back(abelian_two_term());
    {
        const ColorAlgebra gl = gl_bracket(super_space_dim2(), Bicharacter::super_sign());
        fixtures.push_back(crossed_to_strict(inner_derivation_module(gl)));
    }
    for (const auto& t : fixtures) {
        const TwoTermAlgebra rebuilt = lc2_roundtrip(t);
        CHECK(rebuilt == t);
    }
}
