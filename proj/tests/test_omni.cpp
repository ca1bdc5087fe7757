#include <doctest.h>

#include "colorlie/omni.hpp"
#include "test_helpers.hpp"

using namespace colorlie;
using namespace colorlie::testing;

namespace {

OmniAlgebra super_omni() { return make_omni(super_space_dim2(), Bicharacter::super_sign()); }

// Lie color bracket on the super dim-2 space: [e1,e1] = e0, e0 central.
BracketTable heisenberg_super(const SpacePtr& v) {
    std::vector<BracketEntry> entries = {{1, 1, 0, Scalar::one(2)}};
    return BracketTable::from_entries(v, entries);
}

// eps-skew, graded, but Jacobi-violating: [e0,e1] = e1 together with
// [e1,e1] = e0 gives J2(e0,e1,e1) = 2 e0.
BracketTable broken_super(const SpacePtr& v) {
    const Scalar one = Scalar::one(2);
    std::vector<BracketEntry> entries = {
        {0, 1, 1, one}, {1, 0, 1, -one}, {1, 1, 0, one}};
    return BracketTable::from_entries(v, entries);
}

ColorAlgebra gl11() { return gl_bracket(super_space_dim2(), Bicharacter::super_sign()); }

} // namespace

TEST_CASE("omni space assembles gl(V) + V degreewise") {
    const OmniAlgebra o = super_omni();
    CHECK(o.e_dim() == 6);
    CHECK(o.gl_dim() == 4);
    // E_alpha = gl(V)_alpha + V_alpha: count degrees.
    size_t odd = 0;
    for (const auto& d : o.e->degrees) odd += d.residues[0];
    CHECK(odd == 3); // E_0_1, E_1_0, e1
}

TEST_CASE("circle operation") {
    const OmniAlgebra o = super_omni();
    SplitMix64 rng(5);

    // (A+0) o (0+y) = Ay
    const GradedMap a = vec_to_endo(o.v, random_vec(rng, o.glv));
    const Vec y = random_vec(rng, o.v);
    CHECK(omni_circ(o, embed_endo(o, a), embed_vec(o, y)) == embed_vec(o, a.apply(y)));

    // (0+x) o (B+y) = 0
    const Vec x = random_vec(rng, o.v);
    const GradedMap b = vec_to_endo(o.v, random_vec(rng, o.glv));
    CHECK(omni_circ(o, embed_vec(o, x), embed_endo(o, b) + embed_vec(o, y)).is_zero());

    // (E, o) is a Leibniz color algebra.
    CHECK(check_leibniz(ColorAlgebra{o.e, o.bichar, o.circ}).ok());
}

TEST_CASE("skew bracket") {
    const OmniAlgebra o = super_omni();
    SplitMix64 rng(7);

    const GradedMap a = vec_to_endo(o.v, random_vec(rng, o.glv));
    const Vec y = random_vec(rng, o.v);
    const Scalar half = Scalar::rational(2, Rat(1, 2));
    CHECK(omni_bracket(o, embed_endo(o, a), embed_vec(o, y)) ==
          embed_vec(o, half * a.apply(y)));

    // Pure endomorphisms: the bracket is the gl color commutator.
    for (size_t p = 0; p < o.gl_dim(); ++p)
        for (size_t q = 0; q < o.gl_dim(); ++q) {
            const Vec br = omni_bracket(o, basis_vec(o.e, p), basis_vec(o.e, q));
            CHECK(vec_part(o, br).is_zero());
            CHECK(endo_part(o, br) ==
                  vec_to_endo(o.v, o.gl.bracket.eval_basis(p, q)));
        }

    // eps-skew on all basis pairs; Jacobi genuinely fails on E.
    const ColorAlgebra be{o.e, o.bichar, o.bracket};
    const LieVerdict v = check_lie_color(be);
    CHECK(v.graded.ok());
    CHECK(v.skew.ok());
    CHECK_FALSE(v.jacobi_j1.ok());
    CHECK_FALSE(v.jacobi_j2.ok());

    // [e,e] need not vanish for odd e: E_0_1 + e1 squares to e0.
    const Vec e = basis_vec(o.e, 1) + basis_vec(o.e, o.gl_dim() + 1);
    CHECK(omni_bracket(o, e, e) == basis_vec(o.e, o.gl_dim() + 0));
}

TEST_CASE("symmetric pairing") {
    const OmniAlgebra o = super_omni();
    SplitMix64 rng(9);

    const Vec y = random_vec(rng, o.v);
    const Scalar half = Scalar::rational(2, Rat(1, 2));
    CHECK(omni_pairing(o, embed_endo(o, identity_map(o.v)), embed_vec(o, y)) == half * y);
    CHECK(omni_pairing(o, embed_vec(o, random_vec(rng, o.v)), embed_vec(o, y)).is_zero());

    // eps-symmetry on all homogeneous basis pairs.
    for (size_t p = 0; p < o.e_dim(); ++p)
        for (size_t q = 0; q < o.e_dim(); ++q) {
            const Scalar eps = o.bichar.eval_scalar(o.e->degrees[p], o.e->degrees[q]);
            CHECK(omni_pairing(o, basis_vec(o.e, p), basis_vec(o.e, q)) ==
                  eps * omni_pairing(o, basis_vec(o.e, q), basis_vec(o.e, p)));
        }

    // circ = bracket + pairing on homogeneous pairs.
    for (size_t p = 0; p < o.e_dim(); ++p)
        for (size_t q = 0; q < o.e_dim(); ++q) {
            const Vec circ = omni_circ(o, basis_vec(o.e, p), basis_vec(o.e, q));
            const Vec sum = omni_bracket(o, basis_vec(o.e, p), basis_vec(o.e, q)) +
                            embed_vec(o, omni_pairing(o, basis_vec(o.e, p), basis_vec(o.e, q)));
            CHECK(circ == sum);
        }
}

TEST_CASE("J1 equals T on all homogeneous basis triples") {
    for (const SpacePtr& v : {super_space_dim2(), trivial_space(1), trivial_space(2)}) {
        const Bicharacter b =
            v->group == GradingGroup{{2}} ? Bicharacter::super_sign() : Bicharacter::trivial();
        const OmniAlgebra o = make_omni(v, b);
        for (size_t p = 0; p < o.e_dim(); ++p)
            for (size_t q = 0; q < o.e_dim(); ++q)
                for (size_t r = 0; r < o.e_dim(); ++r) {
                    const Vec j1 = omni_J1(o, basis_vec(o.e, p), basis_vec(o.e, q),
                                           basis_vec(o.e, r));
                    const Vec t =
                        omni_T(o, basis_vec(o.e, p), basis_vec(o.e, q), basis_vec(o.e, r));
                    CHECK(j1 == embed_vec(o, t));
                }
    }
    // Degenerate cases: zero vector parts and zero endo parts.
    const OmniAlgebra o = super_omni();
    CHECK(omni_T(o, basis_vec(o.e, 0), basis_vec(o.e, 1), basis_vec(o.e, 2)).is_zero());
    CHECK(omni_T(o, basis_vec(o.e, 4), basis_vec(o.e, 5), basis_vec(o.e, 4)).is_zero());
}

TEST_CASE("orthogonal complements") {
    const OmniAlgebra o = super_omni();
    CHECK(orth_complement(o, gl_block(o)) == gl_block(o));
    CHECK(orth_complement(o, v_block(o)) == v_block(o));

    const Subspace f = graph_of_adjoint(o, heisenberg_super(o.v));
    CHECK(orth_complement(o, f) == f);
    const Subspace fb = graph_of_adjoint(o, broken_super(o.v));
    CHECK(orth_complement(o, fb) == fb);

    CHECK_THROWS_WITH_AS(
        orth_complement(o, span(o.e, {basis_vec(o.e, 0) + basis_vec(o.e, 1)})),
        doctest::Contains("NotGraded"), Error);

    // (L^perp)^perp contains L, and complements of graded subspaces are graded.
    SplitMix64 rng(97);
    const auto degrees = all_degrees(o.e->group);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Vec> gens;
        for (int g = 0; g < 2; ++g) {
            const Degree d = degrees[rng.below(degrees.size())];
            Vec v = zero_vec(o.e);
            for (size_t i : o.e->component(d))
                v.coords[i] = Scalar::rational(2, rng.small_rational());
            gens.push_back(v);
        }
        const Subspace l = span(o.e, gens);
        REQUIRE(l.graded);
        const Subspace perp = orth_complement(o, l);
        REQUIRE(perp.graded);
        const Subspace back = orth_complement(o, perp);
        for (const auto& b : l.basis_vectors()) CHECK(back.contains(b));
    }
}

TEST_CASE("Dirac verdicts") {
    const OmniAlgebra o = super_omni();

    CHECK(is_dirac(o, v_block(o)).ok());
    CHECK(is_dirac(o, gl_block(o)).ok());

    const DiracVerdict good = is_dirac(o, graph_of_adjoint(o, heisenberg_super(o.v)));
    CHECK(good.ok());

    const DiracVerdict bad = is_dirac(o, graph_of_adjoint(o, broken_super(o.v)));
    CHECK(bad.isotropic.ok());
    CHECK(bad.maximal.ok());
    CHECK_FALSE(bad.closed.ok());
    CHECK(bad.closed.witness.has_value());

    // Dirac verdicts track Lie verdicts on these fixtures.
    CHECK(check_lie_color(ColorAlgebra{o.v, o.bichar, heisenberg_super(o.v)}).ok());
    CHECK_FALSE(check_lie_color(ColorAlgebra{o.v, o.bichar, broken_super(o.v)}).ok());

    // Non-skew omega is refused.
    BracketTable nonskew = BracketTable::zero(o.v);
    nonskew.value[0][1][1] = Scalar::one(2); // missing the mirror term
    CHECK_THROWS_WITH_AS(graph_of_adjoint(o, nonskew), doctest::Contains("NotSkew"), Error);
}

TEST_CASE("characteristic pairs") {
    const OmniAlgebra o = super_omni();

    SUBCASE("L = gl(V)") {
        const CharacteristicPair cp = characteristic_pair(o, gl_block(o));
        CHECK(cp.d.dim() == o.gl_dim());
        CHECK(cp.d0.dim() == 0);
        CHECK(cp.pi.empty());
        CHECK(cp.ok());
    }

    SUBCASE("L = V") {
        const CharacteristicPair cp = characteristic_pair(o, v_block(o));
        CHECK(cp.d.dim() == 0);
        CHECK(cp.d0 == full_subspace(o.v));
        for (const auto& p : cp.pi) CHECK(p.is_zero());
        CHECK(cp.ok());
    }

    SUBCASE("L = F_omega for a Lie omega recovers pi = ad") {
        const BracketTable w = heisenberg_super(o.v);
        const CharacteristicPair cp = characteristic_pair(o, graph_of_adjoint(o, w));
        CHECK(cp.d.dim() == 0);
        CHECK(cp.d0 == full_subspace(o.v));
        REQUIRE(cp.pi.size() == 2);
        for (size_t s = 0; s < 2; ++s) {
            const auto deg = cp.d0.homogeneous_basis[s].homogeneous_degree();
            REQUIRE(deg.has_value());
            // homogeneous basis of the full super space is (e0, e1)
            size_t idx = deg->residues[0] == 0 ? 0 : 1;
            CHECK(cp.pi[s] == adjoint_endo(o, w, idx));
        }
        CHECK(cp.ok());
    }

    SUBCASE("conditions fail on a non-Dirac maximal isotropic") {
        const CharacteristicPair cp =
            characteristic_pair(o, graph_of_adjoint(o, broken_super(o.v)));
        CHECK_FALSE(cp.ok());
    }

    SUBCASE("non maximal isotropic input is rejected") {
        CHECK_THROWS_WITH_AS(characteristic_pair(o, span(o.e, {basis_vec(o.e, 1)})),
                             doctest::Contains("NotMaximalIsotropic"), Error);
    }
}

TEST_CASE("dirac-from-lie and lie-from-dirac") {
    const OmniAlgebra o = super_omni();

    SUBCASE("W = V reproduces the graph of the adjoint") {
        const BracketTable w = heisenberg_super(o.v);
        std::vector<Vec> basis = {basis_vec(o.v, 0), basis_vec(o.v, 1)};
        const SpacePtr ws = pattern_space(o.v, basis, "w");
        BracketTable bw = BracketTable::zero(ws);
        bw.value = w.value;
        const Subspace l = dirac_from_lie(o, basis, bw);
        CHECK(l == graph_of_adjoint(o, w));
        CHECK(is_dirac(o, l).ok());
        CHECK(recovered_bracket(o, l, basis, ws) == bw);
    }

    SUBCASE("W = 0 gives gl(V)") {
        const SpacePtr ws = pattern_space(o.v, {}, "w");
        const Subspace l = dirac_from_lie(o, {}, BracketTable::zero(ws));
        CHECK(l == gl_block(o));
    }

    SUBCASE("proper graded abelian W") {
        std::vector<Vec> basis = {basis_vec(o.v, 1)};
        const SpacePtr ws = pattern_space(o.v, basis, "w");
        const Subspace l = dirac_from_lie(o, basis, BracketTable::zero(ws));
        CHECK(is_dirac(o, l).ok());
        CHECK(recovered_bracket(o, l, basis, ws) == BracketTable::zero(ws));
        // W^0 has dimension 2 here (kills e1), plus the graph line.
        CHECK(l.dim() == 3);
        // the intersection with gl(V) solves to exactly the annihilator of W
        const CharacteristicPair cp = characteristic_pair(o, l);
        CHECK(cp.d == annihilator_endos(o.v, span(o.v, basis)));
        CHECK(cp.d0 == span(o.v, basis));
    }

    SUBCASE("non-Lie input is rejected") {
        std::vector<Vec> basis = {basis_vec(o.v, 0), basis_vec(o.v, 1)};
        const SpacePtr ws = pattern_space(o.v, basis, "w");
        BracketTable bw = BracketTable::zero(ws);
        bw.value = broken_super(o.v).value;
        CHECK_THROWS_WITH_AS(dirac_from_lie(o, basis, bw), doctest::Contains("NotLie"),
                             Error);
    }

    SUBCASE("roundtrip on gl(1|1) as the base space") {
        const ColorAlgebra gl = gl11();
        const OmniAlgebra og = make_omni(gl.space, gl.bichar);
        std::vector<Vec> basis;
        for (size_t i = 0; i < 4; ++i) basis.push_back(basis_vec(gl.space, i));
        const SpacePtr ws = pattern_space(og.v, basis, "w");
        BracketTable bw = BracketTable::zero(ws);
        bw.value = gl.bracket.value;
        const Subspace l = dirac_from_lie(og, basis, bw);
        CHECK(is_dirac(og, l).ok());
        CHECK(recovered_bracket(og, l, basis, ws) == bw);

        const InducedLie induced = lie_from_dirac(og, l);
        CHECK(check_lie_color(induced.algebra).ok());
        CHECK(induced.space->dim() == 4);
    }
}

TEST_CASE("derivations and the normalizer") {
    const OmniAlgebra o = super_omni();

    SUBCASE("zero bracket: every endomorphism is a derivation") {
        const DerivationsResult r = derivations(o, BracketTable::zero(o.v));
        CHECK(r.der == full_subspace(o.glv));
        CHECK(r.normalizer == full_subspace(o.glv));
        CHECK(r.ok());
    }

    SUBCASE("identity map fails to derive a nonabelian bracket") {
        BracketTable w = BracketTable::zero(o.v);
        const Scalar one = Scalar::one(2);
        w.value[0][1][1] = one;
        w.value[1][0][1] = -one; // [e0,e1] = e1
        CHECK(check_lie_color(ColorAlgebra{o.v, o.bichar, w}).ok());
        CHECK_FALSE(is_derivation(o, w, identity_map(o.v)));
        CHECK(is_derivation(o, w, zero_map(o.v, o.v)));
        const DerivationsResult r = derivations(o, w);
        CHECK(r.ok());
        CHECK_FALSE(r.der.contains(endo_to_vec(o.glv, identity_map(o.v))));
    }

    SUBCASE("Der(gl(1|1)) two ways, with the supertrace outer derivation") {
        const ColorAlgebra gl = gl11();
        const OmniAlgebra og = make_omni(gl.space, gl.bichar);
        const DerivationsResult r = derivations(og, gl.bracket);
        CHECK(r.ok());
        // all inner derivations are present
        for (size_t i = 0; i < 4; ++i) {
            const GradedMap ad = adjoint_endo(og, gl.bracket, i);
            CHECK(r.der.contains(endo_to_vec(og.glv, ad)));
            CHECK(is_derivation(og, gl.bracket, ad));
        }
        // X -> str(X) * I is an outer derivation of gl(1|1)
        std::vector<std::vector<Scalar>> mat(
            4, std::vector<Scalar>(4, Scalar::zero(2)));
        const Scalar one = Scalar::one(2);
        // str picks coords of E_0_0 minus E_1_1; output is the identity E_0_0+E_1_1.
        mat[0][0] = one;
        mat[3][0] = one;
        mat[0][3] = -one;
        mat[3][3] = -one;
        const GradedMap strder = make_map(gl.space, gl.space, mat);
        CHECK(is_derivation(og, gl.bracket, strder));
        CHECK(r.der.contains(endo_to_vec(og.glv, strder)));
        // inner derivations span 3 dimensions (center is the identity)
        std::vector<Vec> inner;
        for (size_t i = 0; i < 4; ++i)
            inner.push_back(endo_to_vec(og.glv, adjoint_endo(og, gl.bracket, i)));
        CHECK(span(og.glv, inner).dim() == 3);
        CHECK(r.der.dim() >= 4);
    }
}
