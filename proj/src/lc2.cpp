#include "colorlie/lc2.hpp"

namespace colorlie {

Vec morphism_target(const TwoTermAlgebra& t, const Morphism2& f) {
    return f.src + t.d.apply(f.lift);
}

Morphism2 identity_morphism(const TwoTermAlgebra& t, const Vec& x) {
    require_same_space(t.v0, x.space, "identity morphism object");
    return Morphism2{x, zero_vec(t.v1)};
}

namespace {

Morphism2 ident(const TwoTermAlgebra& t, const Vec& x) {
    return Morphism2{x, zero_vec(t.v1)};
}

} // namespace

Morphism2 compose2(const TwoTermAlgebra& t, const Morphism2& f, const Morphism2& g) {
    if (morphism_target(t, f) != g.src)
        fail("NonComposable", "target of the first morphism differs from the source "
                              "of the second");
    return Morphism2{f.src, f.lift + g.lift};
}

Morphism2 bracket_functor(const TwoTermAlgebra& t, const Morphism2& f, const Morphism2& g) {
    Morphism2 out;
    out.src = t.l2_00.eval(f.src, g.src);
    out.lift = t.l2a(f.src, g.lift) + t.l2b(f.lift, g.src) +
               t.l2a(t.d.apply(f.lift), g.lift);
    return out;
}

Morphism2 jacobiator(const TwoTermAlgebra& t, const Vec& x, const Vec& y, const Vec& z) {
    for (const Vec* v : {&x, &y, &z})
        if (!v->is_zero() && !v->homogeneous_degree())
            fail("NotHomogeneous", "the Jacobiator is defined on homogeneous objects");
    return Morphism2{t.l2_00.eval(t.l2_00.eval(x, y), z), t.l3v(x, y, z)};
}

namespace {

[[noreturn]] void propagate_axiom_failure(char axiom, const Witness& w) {
    std::string tuple;
    for (const auto& nm : w.tuple) tuple += (tuple.empty() ? "" : ", ") + nm;
    fail("AxiomFailure", std::string("axiom (") + axiom + ") fails at (" + tuple +
                             "): " + w.lhs + " != " + w.rhs);
}

} // namespace

JacobiatorReport check_jacobiator_identity(const TwoTermAlgebra& t) {
    const AxiomReport axioms = check_axioms(t);
    for (char c : {'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'})
        if (!axioms.axioms.at(c).ok()) propagate_axiom_failure(c, *axioms.axioms.at(c).witness);

    JacobiatorReport rep;
    rep.coherence = CheckOutcome::passed();
    rep.common_target = CheckOutcome::passed();
    const size_t n = t.v0->dim();
    const auto& dg = t.v0->degrees;
    auto eps = [&](const Degree& a, const Degree& b) { return t.bichar.eval_scalar(a, b); };
    auto br = [&](const Vec& a, const Vec& b) { return t.l2_00.eval(a, b); };

    for (size_t wi = 0; wi < n && rep.coherence.ok() && rep.common_target.ok(); ++wi) {
        const Vec w = basis_vec(t.v0, wi);
        for (size_t xi = 0; xi < n && rep.coherence.ok() && rep.common_target.ok(); ++xi) {
            const Vec x = basis_vec(t.v0, xi);
            const Degree dwx = degree_add(t.v0->group, dg[wi], dg[xi]);
            for (size_t yi = 0; yi < n && rep.coherence.ok() && rep.common_target.ok(); ++yi) {
                const Vec y = basis_vec(t.v0, yi);
                const Degree dxy = degree_add(t.v0->group, dg[xi], dg[yi]);
                for (size_t zi = 0; zi < n; ++zi) {
                    const Vec z = basis_vec(t.v0, zi);
                    const Degree dyz = degree_add(t.v0->group, dg[yi], dg[zi]);

                    // right-hand path of the diagram
                    const Morphism2 r1 = jacobiator(t, br(w, x), y, z);
                    const Morphism2 r2 =
                        ident(t, br(br(w, x), br(y, z))) +
                        eps(dg[yi], dg[zi]) *
                            bracket_functor(t, jacobiator(t, w, x, z), ident(t, y));
                    const Morphism2 r3 =
                        jacobiator(t, w, x, br(y, z)) +
                        eps(dg[yi], dg[zi]) * jacobiator(t, w, br(x, z), y) +
                        eps(dxy, dg[zi]) * jacobiator(t, br(w, z), x, y);
                    const Morphism2 side1 = compose2(t, compose2(t, r1, r2), r3);

                    // left-hand path
                    const Morphism2 l1 =
                        bracket_functor(t, jacobiator(t, w, x, y), ident(t, z));
                    const Morphism2 l2 =
                        jacobiator(t, w, br(x, y), z) +
                        eps(dg[xi], dg[yi]) * jacobiator(t, br(w, y), x, z);
                    const Morphism2 l3 =
                        bracket_functor(t, ident(t, w), jacobiator(t, x, y, z)) +
                        eps(dxy, dg[zi]) * ident(t, br(br(w, z), br(x, y))) +
                        eps(dg[xi], dg[yi]) * ident(t, br(br(w, y), br(x, z))) +
                        eps(dg[xi], dyz) *
                            bracket_functor(t, jacobiator(t, w, y, z), ident(t, x));
                    const Morphism2 side2 = compose2(t, compose2(t, l1, l2), l3);

                    std::vector<std::string> tuple = {t.v0->names[wi], t.v0->names[xi],
                                                      t.v0->names[yi], t.v0->names[zi]};
                    if (!(side1 == side2)) {
                        rep.coherence = CheckOutcome::failed(
                            Witness{tuple, side1.lift.str(), side2.lift.str()});
                        break;
                    }

                    // the displayed common target P = Q
                    const Vec p = br(w, br(x, br(y, z))) +
                                  eps(dg[yi], dg[zi]) * br(w, br(br(x, z), y)) +
                                  eps(dxy, dg[zi]) * br(br(w, z), br(x, y)) +
                                  eps(dg[xi], dg[yi]) * br(br(w, y), br(x, z)) +
                                  eps(dg[xi], dg[yi]) * eps(dg[xi], dg[zi]) *
                                      br(br(w, br(y, z)), x) +
                                  eps(dg[xi], dg[yi]) * eps(dg[xi], dg[zi]) *
                                      eps(dg[yi], dg[zi]) * br(br(br(w, z), y), x);
                    const Vec q = br(w, br(x, br(y, z))) +
                                  eps(dg[xi], dyz) * br(br(w, br(y, z)), x) +
                                  eps(dg[yi], dg[zi]) * br(w, br(br(x, z), y)) +
                                  eps(dg[yi], dg[zi]) *
                                      eps(degree_add(t.v0->group, dg[xi], dg[zi]), dg[yi]) *
                                      br(br(w, y), br(x, z)) +
                                  eps(dg[yi], dg[zi]) * eps(dg[xi], dg[zi]) *
                                      br(br(w, z), br(x, y)) +
                                  eps(dg[yi], dg[zi]) * eps(dg[xi], dg[zi]) *
                                      eps(dg[xi], dg[yi]) * br(br(br(w, z), y), x);
                    const Vec target1 = morphism_target(t, side1);
                    if (!(p == q && target1 == p && morphism_target(t, side2) == p)) {
                        rep.common_target =
                            CheckOutcome::failed(Witness{tuple, target1.str(), p.str()});
                        break;
                    }
                }
            }
        }
    }
    return rep;
}

TwoTermAlgebra lc2_roundtrip(const TwoTermAlgebra& t) {
    const size_t n0 = t.v0->dim(), n1 = t.v1->dim();

    // d' = target restricted to ker(s) = V1.
    std::vector<std::vector<Scalar>> dmat(n0,
                                          std::vector<Scalar>(n1, Scalar::zero(t.v0->cyclo_order)));
    for (size_t j = 0; j < n1; ++j) {
        const Morphism2 h{zero_vec(t.v0), basis_vec(t.v1, j)};
        const Vec target = morphism_target(t, h);
        for (size_t r = 0; r < n0; ++r) dmat[r][j] = target.coords[r];
    }

    // l2 on objects and on object x lift pairs, through the functor.
    BracketTable l2_00 = BracketTable::zero(t.v0);
    for (size_t i = 0; i < n0; ++i)
        for (size_t j = 0; j < n0; ++j)
            l2_00.value[i][j] =
                bracket_functor(t, ident(t, basis_vec(t.v0, i)), ident(t, basis_vec(t.v0, j)))
                    .src.coords;

    std::vector<Entry01> l01;
    for (size_t i = 0; i < n0; ++i) {
        for (size_t j = 0; j < n1; ++j) {
            const Morphism2 m = bracket_functor(t, ident(t, basis_vec(t.v0, i)),
                                                Morphism2{zero_vec(t.v0), basis_vec(t.v1, j)});
            for (size_t k = 0; k < n1; ++k)
                if (!m.lift.coords[k].is_zero()) l01.push_back(Entry01{i, j, k, m.lift.coords[k]});
        }
    }

    std::vector<Entry3> l3e;
    for (size_t i = 0; i < n0; ++i)
        for (size_t j = 0; j < n0; ++j)
            for (size_t k = 0; k < n0; ++k) {
                const Morphism2 jac = jacobiator(t, basis_vec(t.v0, i), basis_vec(t.v0, j),
                                                 basis_vec(t.v0, k));
                for (size_t l = 0; l < n1; ++l)
                    if (!jac.lift.coords[l].is_zero())
                        l3e.push_back(Entry3{i, j, k, l, jac.lift.coords[l]});
            }

    return make_two_term(t.v0, t.v1, t.bichar, make_map(t.v1, t.v0, std::move(dmat)),
                         std::move(l2_00), l01, l3e);
}

} // namespace colorlie
