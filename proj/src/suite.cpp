#include "colorlie/suite.hpp"

#include <algorithm>

#include "colorlie/fixtures.hpp"
#include "colorlie/lc2.hpp"
#include "colorlie/rng.hpp"
#include "colorlie/twoterm.hpp"

namespace colorlie {

namespace {

Scalar random_scalar(SplitMix64& rng, unsigned m) {
    const auto& ctx = cyclo_context(m);
    std::vector<Rat> c(ctx.degree);
    for (auto& x : c) x = rng.small_rational();
    return Scalar::from_coeffs(m, std::move(c));
}

Vec random_vec(SplitMix64& rng, const SpacePtr& s) {
    Vec v = zero_vec(s);
    for (auto& c : v.coords) c = Scalar::rational(s->cyclo_order, rng.small_rational());
    return v;
}

CheckOutcome scalar_field_axioms(SplitMix64& rng) {
    for (unsigned m : {1u, 2u, 3u, 4u, 6u, 12u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Scalar a = random_scalar(rng, m);
            const Scalar b = random_scalar(rng, m);
            const Scalar c = random_scalar(rng, m);
            if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c) ||
                a * (b + c) != a * b + a * c)
                return CheckOutcome::failed(Witness{{"m=" + std::to_string(m)}, a.str(), b.str()});
            if (!b.is_zero() && (a * b) / b != a)
                return CheckOutcome::failed(
                    Witness{{"m=" + std::to_string(m)}, ((a * b) / b).str(), a.str()});
        }
    }
    return CheckOutcome::passed();
}

CheckOutcome scalar_literal_roundtrip(SplitMix64& rng) {
    for (unsigned m : {1u, 2u, 4u, 6u, 12u}) {
        for (int trial = 0; trial < 30; ++trial) {
            const Scalar s = random_scalar(rng, m);
            if (parse_scalar(m, s.str()) != s)
                return CheckOutcome::failed(Witness{{"m=" + std::to_string(m)}, s.str(),
                                                    parse_scalar(m, s.str()).str()});
        }
    }
    return CheckOutcome::passed();
}

CheckOutcome root_embedding(SplitMix64&) {
    for (unsigned m : {2u, 3u, 4u, 6u, 12u})
        for (unsigned j = 0; j < m; ++j)
            for (unsigned k = 0; k < m; ++k)
                if ((RootOfUnity(m, j) * RootOfUnity(m, k)).to_scalar() !=
                    RootOfUnity(m, j).to_scalar() * RootOfUnity(m, k).to_scalar())
                    return CheckOutcome::failed(Witness{
                        {"m=" + std::to_string(m), "j=" + std::to_string(j),
                         "k=" + std::to_string(k)},
                        "embed(j)*embed(k)", "embed(j+k)"});
    return CheckOutcome::passed();
}

CheckOutcome bicharacter_identities(SplitMix64&) {
    const std::vector<Bicharacter> family = {
        Bicharacter::trivial(),
        Bicharacter::super_sign(),
        Bicharacter::make(GradingGroup{{2, 2}}, 2, {{1, 0}, {0, 1}}),
        Bicharacter::make(GradingGroup{{2, 2}}, 2, {{0, 1}, {1, 0}}),
        Bicharacter::make(GradingGroup{{3, 3}}, 3, {{0, 1}, {2, 0}}),
        Bicharacter::make(GradingGroup{{6}}, 6, {{3}}),
    };
    for (const auto& b : family) {
        if (!b.validate().ok)
            return CheckOutcome::failed(Witness{{}, "validate", "pass"});
        const auto degrees = all_degrees(b.group);
        for (const auto& al : degrees)
            for (const auto& be : degrees) {
                if (b.eval_scalar(al, be) * b.eval_scalar(be, al) != Scalar::one(b.order))
                    return CheckOutcome::failed(
                        Witness{{degree_str(al), degree_str(be)}, "eps(a,b)eps(b,a)", "1"});
                for (const auto& ga : degrees)
                    if (b.eval_scalar(al, degree_add(b.group, be, ga)) !=
                        b.eval_scalar(al, be) * b.eval_scalar(al, ga))
                        return CheckOutcome::failed(Witness{
                            {degree_str(al), degree_str(be), degree_str(ga)},
                            "eps(a,b+c)", "eps(a,b)eps(a,c)"});
            }
    }
    return CheckOutcome::passed();
}

SpacePtr random_space(SplitMix64& rng, size_t max_dim) {
    const std::vector<std::pair<GradingGroup, unsigned>> groups = {
        {GradingGroup::trivial(), 1}, {GradingGroup{{2}}, 2}, {GradingGroup{{2, 2}}, 2}};
    const auto& [g, m] = groups[rng.below(groups.size())];
    const auto degrees = all_degrees(g);
    const size_t dim = 1 + rng.below(max_dim);
    std::vector<std::pair<std::string, Degree>> basis;
    for (size_t i = 0; i < dim; ++i)
        basis.emplace_back("b" + std::to_string(i), degrees[rng.below(degrees.size())]);
    return make_space(m, g, std::move(basis));
}

CheckOutcome map_component_roundtrip(SplitMix64& rng, size_t max_dim) {
    for (int trial = 0; trial < 25; ++trial) {
        const SpacePtr s = random_space(rng, max_dim);
        std::vector<std::vector<Scalar>> mat(
            s->dim(), std::vector<Scalar>(s->dim(), Scalar::zero(s->cyclo_order)));
        for (auto& row : mat)
            for (auto& x : row) x = random_scalar(rng, s->cyclo_order);
        const GradedMap f = make_map(s, s, mat);
        GradedMap sum = zero_map(s, s);
        for (const auto& [d, part] : homogeneous_map_components(f)) {
            if (detect_shift(part) != d)
                return CheckOutcome::failed(Witness{{degree_str(d)}, "component shift", "d"});
            sum = sum + part;
        }
        if (sum != f) return CheckOutcome::failed(Witness{{}, "sum of components", "original"});
    }
    return CheckOutcome::passed();
}

CheckOutcome double_annihilator(SplitMix64& rng, size_t max_dim) {
    for (int trial = 0; trial < 15; ++trial) {
        const SpacePtr s = random_space(rng, std::min<size_t>(max_dim, 4));
        const auto degrees = s->support();
        std::vector<Vec> gens;
        for (int i = 0; i < 2; ++i) {
            const Degree d = degrees[rng.below(degrees.size())];
            Vec v = zero_vec(s);
            for (size_t idx : s->component(d))
                v.coords[idx] = Scalar::rational(s->cyclo_order, rng.small_rational());
            gens.push_back(v);
        }
        const Subspace w = span(s, gens);
        if (!w.graded) return CheckOutcome::failed(Witness{{}, "graded", "true"});
        if (null_space_of_endos(s, annihilator_endos(s, w)) != w)
            return CheckOutcome::failed(Witness{{}, "(W^0)^0", "W"});
    }
    return CheckOutcome::passed();
}

CheckOutcome echelon_canonicity(SplitMix64& rng, size_t max_dim) {
    for (int trial = 0; trial < 20; ++trial) {
        const SpacePtr s = random_space(rng, max_dim);
        std::vector<Vec> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_vec(rng, s));
        const Subspace a = span(s, gens);
        std::reverse(gens.begin(), gens.end());
        if (span(s, gens) != a)
            return CheckOutcome::failed(Witness{{}, "reversed-generator span", "span"});
    }
    return CheckOutcome::passed();
}

CheckOutcome morphism_associativity(SplitMix64& rng) {
    const TwoTermAlgebra t = two_term_from_omni(fixture_super_dim2(), Bicharacter::super_sign());
    const auto degrees = all_degrees(t.v0->group);
    for (int trial = 0; trial < 20; ++trial) {
        const Degree d = degrees[rng.below(degrees.size())];
        Vec x = zero_vec(t.v0);
        for (size_t i : t.v0->component(d))
            x.coords[i] = Scalar::rational(2, rng.small_rational());
        auto lift = [&](const Degree& dd) {
            Vec h = zero_vec(t.v1);
            for (size_t i : t.v1->component(dd))
                h.coords[i] = Scalar::rational(2, rng.small_rational());
            return h;
        };
        const Morphism2 f{x, lift(d)};
        const Morphism2 g{morphism_target(t, f), lift(d)};
        const Morphism2 h{morphism_target(t, g), lift(d)};
        if (compose2(t, compose2(t, f, g), h) != compose2(t, f, compose2(t, g, h)))
            return CheckOutcome::failed(Witness{{degree_str(d)}, "(h.g).f", "h.(g.f)"});
    }
    return CheckOutcome::passed();
}

CheckOutcome j1_eps_j2(SplitMix64&) {
    const std::vector<ColorAlgebra> fixtures = {fixture_gl11(), fixture_gl11_broken(),
                                                fixture_sl2(), fixture_color_so3()};
    for (const auto& a : fixtures) {
        const size_t n = a.space->dim();
        const auto& dg = a.space->degrees;
        for (size_t i = 0; i < n; ++i) {
            const Vec x = basis_vec(a.space, i);
            for (size_t j = 0; j < n; ++j) {
                const Vec y = basis_vec(a.space, j);
                for (size_t k = 0; k < n; ++k) {
                    const Vec z = basis_vec(a.space, k);
                    const Vec j1 = a.bichar.eval_scalar(dg[k], dg[i]) *
                                       a.eval(a.eval(x, y), z) +
                                   a.bichar.eval_scalar(dg[i], dg[j]) *
                                       a.eval(a.eval(y, z), x) +
                                   a.bichar.eval_scalar(dg[j], dg[k]) *
                                       a.eval(a.eval(z, x), y);
                    const Vec j2 = a.eval(a.eval(x, y), z) - a.eval(x, a.eval(y, z)) +
                                   a.bichar.eval_scalar(dg[i], dg[j]) *
                                       a.eval(y, a.eval(x, z));
                    if (j1 != a.bichar.eval_scalar(dg[k], dg[i]) * j2)
                        return CheckOutcome::failed(
                            Witness{{a.space->names[i], a.space->names[j], a.space->names[k]},
                                    j1.str(), "eps(z,x)*J2"});
                }
            }
        }
    }
    return CheckOutcome::passed();
}

CheckOutcome semidirect_lie(SplitMix64&) {
    const ColorAlgebra gl = fixture_gl11();
    const Representation taut =
        tautological_representation(fixture_super_dim2(), Bicharacter::super_sign());
    if (!check_lie_color(semidirect_product(taut.algebra, taut)).ok())
        return CheckOutcome::failed(Witness{{}, "gl(V) x| V", "Lie"});
    if (!check_lie_color(semidirect_product(gl, adjoint_representation(gl))).ok())
        return CheckOutcome::failed(Witness{{}, "gl11 x| gl11", "Lie"});
    return CheckOutcome::passed();
}

} // namespace

Report run_suite(uint64_t seed, size_t max_dim) {
    Report rep;
    rep.command = "suite";
    rep.seed = seed;
    rep.input_digest = digest_of("suite:" + std::to_string(seed));
    SplitMix64 rng(seed);
    rep.add("scalar-field-axioms", scalar_field_axioms(rng));
    rep.add("scalar-literal-roundtrip", scalar_literal_roundtrip(rng));
    rep.add("root-embedding", root_embedding(rng));
    rep.add("bicharacter-identities", bicharacter_identities(rng));
    rep.add("map-component-roundtrip", map_component_roundtrip(rng, max_dim));
    rep.add("double-annihilator", double_annihilator(rng, max_dim));
    rep.add("echelon-canonicity", echelon_canonicity(rng, max_dim));
    rep.add("morphism-associativity", morphism_associativity(rng));
    rep.add("j1-eps-j2", j1_eps_j2(rng));
    rep.add("semidirect-lie", semidirect_lie(rng));
    return rep;
}

} // namespace colorlie
