#include <doctest.h>

#include <array>

#include "colorlie/coloralg.hpp"
#include "test_helpers.hpp"

using namespace colorlie;
using namespace colorlie::testing;

namespace {

// ---------------------------------------------------------------------------
// Independent gl(1|1) oracle: plain 2x2 rational matrices and the super sign
// (-1)^{|x||y|}, no library bracket machinery involved.

using M2 = std::array<std::array<Rat, 2>, 2>;

M2 unit(size_t a, size_t b) {
    M2 m{};
    m[a][b] = 1;
    return m;
}

M2 mul(const M2& x, const M2& y) {
    M2 out{};
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t k = 0; k < 2; ++k) out[i][j] += x[i][k] * y[k][j];
    return out;
}

M2 sub(const M2& x, const M2& y) {
    M2 out{};
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) out[i][j] = x[i][j] - y[i][j];
    return out;
}

M2 scale(long c, const M2& x) {
    M2 out{};
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) out[i][j] = c * x[i][j];
    return out;
}

int parity(size_t p) { return int((p / 2 + p % 2) % 2); } // degree of E_ab

M2 super_commutator(size_t p, size_t q) {
    const M2 x = unit(p / 2, p % 2), y = unit(q / 2, q % 2);
    const long sign = (parity(p) * parity(q)) % 2 ? -1 : 1;
    return sub(mul(x, y), scale(sign, mul(y, x)));
}

ColorAlgebra make_gl11() { return gl_bracket(super_space_dim2(), Bicharacter::super_sign()); }

ColorAlgebra make_sl2() {
    const SpacePtr s = trivial_space(3); // t0=e, t1=f, t2=h
    const Scalar one = Scalar::one(1), two = Scalar::integer(1, 2);
    std::vector<BracketEntry> entries = {
        {0, 1, 2, one},  {1, 0, 2, -one}, // [e,f] = h
        {2, 0, 0, two},  {0, 2, 0, -two}, // [h,e] = 2e
        {2, 1, 1, -two}, {1, 2, 1, two},  // [h,f] = -2f
    };
    return ColorAlgebra{s, Bicharacter::trivial(), BracketTable::from_entries(s, entries)};
}

// eps-consistent perturbation: adds delta to c_ij^k and the matching skew
// mirror term, so skewness survives while Jacobi generally breaks.
ColorAlgebra perturb_skew(ColorAlgebra a, size_t i, size_t j, size_t k, const Scalar& delta) {
    a.bracket.value[i][j][k] += delta;
    const Scalar mirror =
        a.bichar.eval_scalar(a.space->degrees[j], a.space->degrees[i]) * delta;
    a.bracket.value[j][i][k] -= mirror;
    return a;
}

// Test-local J1 evaluator reading the structure constants directly.
Vec oracle_j1(const ColorAlgebra& a, size_t i, size_t j, size_t k) {
    const auto& d = a.space->degrees;
    auto bb = [&](const Vec& u, const Vec& v) { return a.bracket.eval(u, v); };
    const Vec x = basis_vec(a.space, i), y = basis_vec(a.space, j), z = basis_vec(a.space, k);
    return a.bichar.eval_scalar(d[k], d[i]) * bb(bb(x, y), z) +
           a.bichar.eval_scalar(d[i], d[j]) * bb(bb(y, z), x) +
           a.bichar.eval_scalar(d[j], d[k]) * bb(bb(z, x), y);
}

} // namespace

TEST_CASE("abelian algebra passes check-lie-color") {
    const SpacePtr s = super_space_dim2();
    const ColorAlgebra a{s, Bicharacter::super_sign(), BracketTable::zero(s)};
    CHECK(check_lie_color(a).ok());
}

TEST_CASE("gl(1|1) structure constants match the independent matrix oracle") {
    const ColorAlgebra gl = make_gl11();
    REQUIRE(gl.space->dim() == 4);
    for (size_t p = 0; p < 4; ++p) {
        for (size_t q = 0; q < 4; ++q) {
            const M2 expected = super_commutator(p, q);
            const Vec got = gl.bracket.eval_basis(p, q);
            for (size_t r = 0; r < 2; ++r)
                for (size_t c = 0; c < 2; ++c)
                    CHECK(got.coords[r * 2 + c] == Scalar::rational(2, expected[r][c]));
        }
    }
    CHECK(check_lie_color(gl).ok());
}

TEST_CASE("perturbed gl(1|1) fails with a witness the oracle confirms") {
    const ColorAlgebra broken =
        perturb_skew(make_gl11(), 0, 1, 1, Scalar::one(2)); // [E_0_0, E_0_1] += E_0_1
    const LieVerdict v = check_lie_color(broken);
    CHECK(v.graded.ok());
    CHECK(v.skew.ok());
    CHECK_FALSE(v.ok());
    REQUIRE(v.jacobi_j1.witness.has_value());
    const auto& w = *v.jacobi_j1.witness;
    REQUIRE(w.tuple.size() == 3);
    std::vector<size_t> idx;
    for (const auto& nm : w.tuple) {
        for (size_t i = 0; i < broken.space->dim(); ++i)
            if (broken.space->names[i] == nm) idx.push_back(i);
    }
    REQUIRE(idx.size() == 3);
    CHECK_FALSE(oracle_j1(broken, idx[0], idx[1], idx[2]).is_zero());
    CHECK(oracle_j1(broken, idx[0], idx[1], idx[2]).str() == w.lhs);
}

TEST_CASE("gl-bracket small cases") {
    // dim V = 1, trivial group: 1-dimensional abelian gl.
    const SpacePtr v1 = trivial_space(1);
    const ColorAlgebra gl1 = gl_bracket(v1, Bicharacter::trivial());
    CHECK(gl1.space->dim() == 1);
    CHECK(gl1.bracket.eval_basis(0, 0).is_zero());
    CHECK(check_lie_color(gl1).ok());

    // [A, A] = 0 for degree-0 A: eps(0,0) = 1 kills the square.
    const ColorAlgebra gl = make_gl11();
    const Vec a = basis_vec(gl.space, 0) + basis_vec(gl.space, 3); // diagonal, degree 0
    CHECK(gl.bracket.eval(a, a).is_zero());
}

TEST_CASE("gl-bracket passes check-lie-color for dim <= 3 over small groups") {
    struct Config {
        GradingGroup group;
        unsigned m;
        std::vector<std::vector<long>> exps;
    };
    const std::vector<Config> configs = {
        {GradingGroup::trivial(), 1, {{0}}},
        {GradingGroup{{2}}, 2, {{1}}},
        {GradingGroup{{3}}, 3, {{0}}},
        {GradingGroup{{2, 2}}, 2, {{1, 0}, {0, 1}}},
        {GradingGroup{{6}}, 6, {{3}}},
    };
    for (const auto& cfg : configs) {
        const Bicharacter b = Bicharacter::make(cfg.group, cfg.m, cfg.exps);
        REQUIRE(b.validate().ok);
        const auto degrees = all_degrees(cfg.group);
        for (size_t dim = 1; dim <= 3; ++dim) {
            std::vector<std::pair<std::string, Degree>> basis;
            for (size_t i = 0; i < dim; ++i)
                basis.emplace_back("v" + std::to_string(i), degrees[i % degrees.size()]);
            const SpacePtr v = make_space(cfg.m, cfg.group, std::move(basis));
            CHECK(check_lie_color(gl_bracket(v, b)).ok());
        }
    }
}

TEST_CASE("check-representation") {
    const ColorAlgebra gl = make_gl11();

    SUBCASE("zero action always passes") {
        Representation r{gl, super_space_dim2(), {}};
        for (size_t i = 0; i < gl.space->dim(); ++i)
            r.action.push_back(zero_map(r.module, r.module));
        CHECK(check_representation(r).ok());
    }

    SUBCASE("adjoint representation of gl(1|1) passes") {
        CHECK(check_representation(adjoint_representation(gl)).ok());
    }

    SUBCASE("tautological representation of gl(V) on V passes") {
        CHECK(check_representation(
                  tautological_representation(super_space_dim2(), Bicharacter::super_sign()))
                  .ok());
    }

    SUBCASE("identity action of a nonabelian algebra fails the module identity") {
        const ColorAlgebra sl2 = make_sl2();
        Representation r{sl2, trivial_space(2), {}};
        for (size_t i = 0; i < 3; ++i) r.action.push_back(identity_map(r.module));
        const RepVerdict v = check_representation(r);
        CHECK_FALSE(v.ok());
        CHECK(v.identity.witness.has_value());
    }

    SUBCASE("wrong shift raises ShiftMismatch") {
        Representation r{gl, super_space_dim2(), {}};
        for (size_t i = 0; i < gl.space->dim(); ++i)
            r.action.push_back(identity_map(r.module)); // shift 0 even for odd basis
        CHECK_THROWS_WITH_AS(check_representation(r), doctest::Contains("ShiftMismatch"),
                             Error);
    }
}

TEST_CASE("semidirect products pass check-lie-color") {
    SUBCASE("abelian algebra, zero action") {
        const SpacePtr s = trivial_space(2);
        const ColorAlgebra g{s, Bicharacter::trivial(), BracketTable::zero(s)};
        Representation r{g, trivial_space(2), {}};
        for (size_t i = 0; i < 2; ++i) r.action.push_back(zero_map(r.module, r.module));
        const ColorAlgebra sum = semidirect_product(g, r);
        CHECK(sum.space->dim() == 4);
        CHECK(check_lie_color(sum).ok());
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) CHECK(sum.bracket.eval_basis(i, j).is_zero());
    }

    SUBCASE("gl(V) acting tautologically: the unhalved omni bracket") {
        const Representation taut =
            tautological_representation(super_space_dim2(), Bicharacter::super_sign());
        const ColorAlgebra sum = semidirect_product(taut.algebra, taut);
        CHECK(sum.space->dim() == 6);
        CHECK(check_lie_color(sum).ok());
    }

    SUBCASE("adjoint semidirect product of gl(1|1)") {
        const ColorAlgebra gl = make_gl11();
        const ColorAlgebra sum = semidirect_product(gl, adjoint_representation(gl));
        CHECK(check_lie_color(sum).ok());
    }
}

TEST_CASE("check-leibniz") {
    SUBCASE("every Lie color algebra is Leibniz") {
        CHECK(check_leibniz(make_gl11()).ok());
        CHECK(check_leibniz(make_sl2()).ok());
    }

    SUBCASE("non-graded constants are rejected before evaluation") {
        const SpacePtr s = super_space_dim2();
        ColorAlgebra a{s, Bicharacter::super_sign(), BracketTable::zero(s)};
        a.bracket.value[0][0][1] = Scalar::one(2); // deg 0+0 -> component of deg 1
        const LeibnizVerdict v = check_leibniz(a);
        CHECK_FALSE(v.graded.ok());
        CHECK(v.leibniz.status == CheckOutcome::Status::skipped);
    }
}

namespace {

// Killing form oracle: B(x,y) = trace(ad x . ad y), straight from the
// structure constants.
QuadraticForm killing_form(const ColorAlgebra& a) {
    const Representation ad = adjoint_representation(a);
    const size_t n = a.space->dim();
    QuadraticForm q{a, {}};
    q.gram.assign(n, std::vector<Scalar>(n, Scalar::zero(a.space->cyclo_order)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const GradedMap prod = compose(ad.action[i], ad.action[j]);
            Scalar tr = Scalar::zero(a.space->cyclo_order);
            for (size_t k = 0; k < n; ++k) tr += prod.mat[k][k];
            q.gram[i][j] = tr;
        }
    }
    return q;
}

} // namespace

TEST_CASE("check-quadratic") {
    SUBCASE("sl(2) with its Killing form") {
        const QuadraticForm q = killing_form(make_sl2());
        // Frozen oracle values for basis (e, f, h).
        CHECK(q.gram[0][1] == Scalar::integer(1, 4));
        CHECK(q.gram[1][0] == Scalar::integer(1, 4));
        CHECK(q.gram[2][2] == Scalar::integer(1, 8));
        CHECK(q.gram[0][0].is_zero());
        CHECK(check_quadratic(q).ok());
    }

    SUBCASE("abelian algebra with the identity gram on a degree-0 space") {
        const SpacePtr s = trivial_space(2);
        ColorAlgebra a{s, Bicharacter::trivial(), BracketTable::zero(s)};
        QuadraticForm q{a, identity_map(s).mat};
        CHECK(check_quadratic(q).ok());
    }

    SUBCASE("perturbed gram fails invariance with a witness") {
        QuadraticForm q = killing_form(make_sl2());
        q.gram[0][0] += Scalar::one(1); // B(e,e) = 1 breaks invariance
        const QuadraticVerdict v = check_quadratic(q);
        CHECK_FALSE(v.invariant.ok());
        CHECK(v.invariant.witness.has_value());
        CHECK(v.nondegenerate.ok());
    }
}

TEST_CASE("derived identity: J1 = eps(z,x) J2 for every eps-skew bracket") {
    std::vector<ColorAlgebra> fixtures = {
        make_gl11(),
        make_sl2(),
        perturb_skew(make_gl11(), 0, 1, 1, Scalar::one(2)),       // skew, non-Jacobi
        perturb_skew(make_sl2(), 2, 0, 0, Scalar::integer(1, 5)), // skew, non-Jacobi
    };
    for (const auto& a : fixtures) {
        const LieVerdict v = check_lie_color(a);
        REQUIRE(v.graded.ok());
        REQUIRE(v.skew.ok());
        const size_t n = a.space->dim();
        const auto& d = a.space->degrees;
        for (size_t i = 0; i < n; ++i) {
            const Vec x = basis_vec(a.space, i);
            for (size_t j = 0; j < n; ++j) {
                const Vec y = basis_vec(a.space, j);
                for (size_t k = 0; k < n; ++k) {
                    const Vec z = basis_vec(a.space, k);
                    const Vec j2 = a.eval(a.eval(x, y), z) - a.eval(x, a.eval(y, z)) +
                                   a.bichar.eval_scalar(d[i], d[j]) * a.eval(y, a.eval(x, z));
                    CHECK(oracle_j1(a, i, j, k) == a.bichar.eval_scalar(d[k], d[i]) * j2);
                }
            }
        }
    }
}
