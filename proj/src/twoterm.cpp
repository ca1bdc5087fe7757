#include "colorlie/twoterm.hpp"

namespace colorlie {

Vec TwoTermAlgebra::l2a(const Vec& x, const Vec& h) const {
    require_same_space(v0, x.space, "l2 first argument");
    require_same_space(v1, h.space, "l2 second argument");
    Vec out = zero_vec(v1);
    for (size_t i = 0; i < x.coords.size(); ++i) {
        if (x.coords[i].is_zero()) continue;
        for (size_t j = 0; j < h.coords.size(); ++j) {
            if (h.coords[j].is_zero()) continue;
            const Scalar c = x.coords[i] * h.coords[j];
            for (size_t k = 0; k < out.coords.size(); ++k)
                if (!l2_01[i][j][k].is_zero()) out.coords[k] += c * l2_01[i][j][k];
        }
    }
    return out;
}

Vec TwoTermAlgebra::l2b(const Vec& h, const Vec& x) const {
    Vec out = zero_vec(v1);
    for (const auto& [dh, hp] : h.homogeneous_parts())
        for (const auto& [dx, xp] : x.homogeneous_parts())
            out -= bichar.eval_scalar(dh, dx) * l2a(xp, hp);
    return out;
}

Vec TwoTermAlgebra::l3v(const Vec& x, const Vec& y, const Vec& z) const {
    require_same_space(v0, x.space, "l3 argument");
    require_same_space(v0, y.space, "l3 argument");
    require_same_space(v0, z.space, "l3 argument");
    Vec out = zero_vec(v1);
    for (size_t i = 0; i < x.coords.size(); ++i) {
        if (x.coords[i].is_zero()) continue;
        for (size_t j = 0; j < y.coords.size(); ++j) {
            if (y.coords[j].is_zero()) continue;
            const Scalar cij = x.coords[i] * y.coords[j];
            for (size_t k = 0; k < z.coords.size(); ++k) {
                if (z.coords[k].is_zero()) continue;
                const Scalar c = cij * z.coords[k];
                for (size_t l = 0; l < out.coords.size(); ++l)
                    if (!l3[i][j][k][l].is_zero()) out.coords[l] += c * l3[i][j][k][l];
            }
        }
    }
    return out;
}

TwoTermAlgebra make_two_term(const SpacePtr& v0, const SpacePtr& v1, const Bicharacter& b,
                             GradedMap d, BracketTable l2_00,
                             const std::vector<Entry01>& l2_01_entries,
                             const std::vector<Entry3>& l3_entries) {
    require_compatible(v0, b);
    require_compatible(v1, b);
    require_same_space(d.domain, v1, "d domain");
    require_same_space(d.codomain, v0, "d codomain");
    if (!d.is_zero() && (!d.shift || !degree_is_zero(*d.shift)))
        fail("ShiftMismatch", "d must be grade-preserving");
    require_same_space(l2_00.space, v0, "l2 on V0 x V0");

    TwoTermAlgebra t;
    t.v0 = v0;
    t.v1 = v1;
    t.bichar = b;
    t.d = std::move(d);
    t.l2_00 = std::move(l2_00);
    const size_t n0 = v0->dim(), n1 = v1->dim();
    const Scalar zero = Scalar::zero(v0->cyclo_order);
    t.l2_01.assign(n0, std::vector<std::vector<Scalar>>(n1, std::vector<Scalar>(n1, zero)));
    for (const auto& e : l2_01_entries) {
        if (e.i >= n0 || e.j >= n1 || e.k >= n1)
            fail("InvalidConstants", "l2_01 index out of range");
        t.l2_01[e.i][e.j][e.k] += e.coeff;
    }
    t.l3.assign(n0, std::vector<std::vector<std::vector<Scalar>>>(
                        n0, std::vector<std::vector<Scalar>>(n0, std::vector<Scalar>(n1, zero))));
    for (const auto& e : l3_entries) {
        if (e.i >= n0 || e.j >= n0 || e.k >= n0 || e.l >= n1)
            fail("InvalidConstants", "l3 index out of range");
        t.l3[e.i][e.j][e.k][e.l] += e.coeff;
    }

    // Every structure map must be G-degree-additive; the eps factors in the
    // axioms are undefined otherwise.
    for (size_t i = 0; i < n0; ++i) {
        for (size_t j = 0; j < n0; ++j) {
            const Degree dij = degree_add(v0->group, v0->degrees[i], v0->degrees[j]);
            for (size_t k = 0; k < n0; ++k)
                if (!t.l2_00.value[i][j][k].is_zero() && v0->degrees[k] != dij)
                    fail("NotGraded", "l2 on V0 x V0 is not degree-additive");
            for (size_t k = 0; k < n0; ++k) {
                const Degree dijk = degree_add(v0->group, dij, v0->degrees[k]);
                for (size_t l = 0; l < n1; ++l)
                    if (!t.l3[i][j][k][l].is_zero() && v1->degrees[l] != dijk)
                        fail("NotGraded", "l3 is not degree-additive");
            }
        }
        for (size_t j = 0; j < n1; ++j) {
            const Degree dij = degree_add(v0->group, v0->degrees[i], v1->degrees[j]);
            for (size_t k = 0; k < n1; ++k)
                if (!t.l2_01[i][j][k].is_zero() && v1->degrees[k] != dij)
                    fail("NotGraded", "l2 on V0 x V1 is not degree-additive");
        }
    }
    return t;
}

namespace {

// delta l3(x,y,z,w) of axiom (i), in the form equivalent to the Jacobiator
// coherence law; the omni construction satisfies this form exhaustively,
// which fixes the sign conventions.
Vec axiom_i_value(const TwoTermAlgebra& t, size_t xi, size_t yi, size_t zi, size_t wi) {
    const auto& dg = t.v0->degrees;
    auto eps = [&](const Degree& a, const Degree& b) { return t.bichar.eval_scalar(a, b); };
    const Vec x = basis_vec(t.v0, xi), y = basis_vec(t.v0, yi), z = basis_vec(t.v0, zi),
              w = basis_vec(t.v0, wi);
    const Degree dzw = degree_add(t.v0->group, dg[zi], dg[wi]);
    const Degree dyz = degree_add(t.v0->group, dg[yi], dg[zi]);
    auto br = [&](const Vec& a, const Vec& b) { return t.l2_00.eval(a, b); };

    Vec acc = t.l2a(x, t.l3v(y, z, w));
    acc += eps(dg[yi], dzw) * t.l2b(t.l3v(x, z, w), y);
    acc += t.l2b(t.l3v(x, y, z), w);
    acc -= eps(dg[zi], dg[wi]) * t.l2b(t.l3v(x, y, w), z);
    acc += t.l3v(x, br(y, z), w);
    acc += eps(dg[yi], dg[zi]) * t.l3v(br(x, z), y, w);
    acc -= t.l3v(br(x, y), z, w);
    acc -= t.l3v(x, y, br(z, w));
    acc -= eps(dg[zi], dg[wi]) * t.l3v(x, br(y, w), z);
    acc -= eps(dyz, dg[wi]) * t.l3v(br(x, w), y, z);
    return acc;
}

std::vector<std::string> names4(const TwoTermAlgebra& t, size_t a, size_t b, size_t c,
                                size_t d) {
    return {t.v0->names[a], t.v0->names[b], t.v0->names[c], t.v0->names[d]};
}

} // namespace

AxiomReport check_axioms(const TwoTermAlgebra& t, HForm h_form) {
    if (h_form == HForm::as_printed)
        fail("UnboundSymbol",
             "axiom (h) as printed reads eps(y,h)[[x,z],h]; the symbol z is not "
             "bound by the quantifier (x, y, h) and the expression cannot be "
             "evaluated -- use the corrected form");

    AxiomReport rep;
    const size_t n0 = t.v0->dim(), n1 = t.v1->dim();
    const auto& d0 = t.v0->degrees;
    const auto& d1 = t.v1->degrees;
    auto eps = [&](const Degree& a, const Degree& b) { return t.bichar.eval_scalar(a, b); };

    // (a) skewness of l2 on V0.
    rep.axioms['a'] = CheckOutcome::passed();
    for (size_t i = 0; i < n0 && rep.axioms['a'].ok(); ++i) {
        for (size_t j = 0; j < n0; ++j) {
            const Vec lhs = t.l2_00.eval_basis(i, j);
            const Vec rhs = -(eps(d0[i], d0[j]) * t.l2_00.eval_basis(j, i));
            if (lhs != rhs) {
                rep.axioms['a'] = CheckOutcome::failed(
                    Witness{{t.v0->names[i], t.v0->names[j]}, lhs.str(), rhs.str()});
                break;
            }
        }
    }
    // (b) and (c) hold by representation: l2 on V1 x V0 is defined through
    // skewness and l2 on V1 x V1 is not stored.
    rep.axioms['b'] = CheckOutcome::passed();
    rep.axioms['c'] = CheckOutcome::passed();

    // (d) total eps-skewness of l3 under adjacent transpositions.
    rep.axioms['d'] = CheckOutcome::passed();
    for (size_t i = 0; i < n0 && rep.axioms['d'].ok(); ++i) {
        for (size_t j = 0; j < n0 && rep.axioms['d'].ok(); ++j) {
            for (size_t k = 0; k < n0; ++k) {
                const Vec base = Vec{t.v1, t.l3[i][j][k]};
                const Vec swap12 = Vec{t.v1, t.l3[j][i][k]};
                const Vec swap23 = Vec{t.v1, t.l3[i][k][j]};
                const Vec want12 = -(eps(d0[i], d0[j]) * base);
                const Vec want23 = -(eps(d0[j], d0[k]) * base);
                if (swap12 != want12 || swap23 != want23) {
                    const bool first = swap12 != want12;
                    rep.axioms['d'] = CheckOutcome::failed(
                        Witness{{t.v0->names[i], t.v0->names[j], t.v0->names[k]},
                                first ? swap12.str() : swap23.str(),
                                first ? want12.str() : want23.str()});
                    break;
                }
            }
        }
    }

    // (e) d[x,h] = [x,dh].
    rep.axioms['e'] = CheckOutcome::passed();
    for (size_t i = 0; i < n0 && rep.axioms['e'].ok(); ++i) {
        for (size_t j = 0; j < n1; ++j) {
            const Vec lhs = t.d.apply(Vec{t.v1, t.l2_01[i][j]});
            const Vec rhs = t.l2_00.eval(basis_vec(t.v0, i), t.d.apply(basis_vec(t.v1, j)));
            if (lhs != rhs) {
                rep.axioms['e'] = CheckOutcome::failed(
                    Witness{{t.v0->names[i], t.v1->names[j]}, lhs.str(), rhs.str()});
                break;
            }
        }
    }

    // (f) [dh,k] = [h,dk].
    rep.axioms['f'] = CheckOutcome::passed();
    for (size_t j = 0; j < n1 && rep.axioms['f'].ok(); ++j) {
        for (size_t k = 0; k < n1; ++k) {
            const Vec lhs = t.l2a(t.d.apply(basis_vec(t.v1, j)), basis_vec(t.v1, k));
            const Vec rhs = t.l2b(basis_vec(t.v1, j), t.d.apply(basis_vec(t.v1, k)));
            if (lhs != rhs) {
                rep.axioms['f'] = CheckOutcome::failed(
                    Witness{{t.v1->names[j], t.v1->names[k]}, lhs.str(), rhs.str()});
                break;
            }
        }
    }

    // (g) d l3(x,y,z) = -[[x,y],z] + [x,[y,z]] + eps(y,z)[[x,z],y].
    rep.axioms['g'] = CheckOutcome::passed();
    for (size_t i = 0; i < n0 && rep.axioms['g'].ok(); ++i) {
        const Vec x = basis_vec(t.v0, i);
        for (size_t j = 0; j < n0 && rep.axioms['g'].ok(); ++j) {
            const Vec y = basis_vec(t.v0, j);
            for (size_t k = 0; k < n0; ++k) {
                const Vec z = basis_vec(t.v0, k);
                const Vec lhs = t.d.apply(Vec{t.v1, t.l3[i][j][k]});
                const Vec rhs = -t.l2_00.eval(t.l2_00.eval(x, y), z) +
                                t.l2_00.eval(x, t.l2_00.eval(y, z)) +
                                eps(d0[j], d0[k]) * t.l2_00.eval(t.l2_00.eval(x, z), y);
                if (lhs != rhs) {
                    rep.axioms['g'] = CheckOutcome::failed(
                        Witness{{t.v0->names[i], t.v0->names[j], t.v0->names[k]}, lhs.str(),
                                rhs.str()});
                    break;
                }
            }
        }
    }

    // (h) corrected: l3(x,y,dh) = -[[x,y],h] + [x,[y,h]] + eps(y,|h|)[[x,h],y].
    rep.axioms['h'] = CheckOutcome::passed();
    for (size_t i = 0; i < n0 && rep.axioms['h'].ok(); ++i) {
        const Vec x = basis_vec(t.v0, i);
        for (size_t j = 0; j < n0 && rep.axioms['h'].ok(); ++j) {
            const Vec y = basis_vec(t.v0, j);
            for (size_t k = 0; k < n1; ++k) {
                const Vec h = basis_vec(t.v1, k);
                const Vec lhs = t.l3v(x, y, t.d.apply(h));
                const Vec rhs = -t.l2a(t.l2_00.eval(x, y), h) + t.l2a(x, t.l2a(y, h)) +
                                eps(d0[j], d1[k]) * t.l2b(t.l2a(x, h), y);
                if (lhs != rhs) {
                    rep.axioms['h'] = CheckOutcome::failed(
                        Witness{{t.v0->names[i], t.v0->names[j], t.v1->names[k]}, lhs.str(),
                                rhs.str()});
                    break;
                }
            }
        }
    }

    // (i) the quartic coherence of l3.
    rep.axioms['i'] = CheckOutcome::passed();
    const Vec zero1 = zero_vec(t.v1);
    for (size_t i = 0; i < n0 && rep.axioms['i'].ok(); ++i)
        for (size_t j = 0; j < n0 && rep.axioms['i'].ok(); ++j)
            for (size_t k = 0; k < n0 && rep.axioms['i'].ok(); ++k)
                for (size_t l = 0; l < n0; ++l) {
                    const Vec val = axiom_i_value(t, i, j, k, l);
                    if (!val.is_zero()) {
                        rep.axioms['i'] = CheckOutcome::failed(
                            Witness{names4(t, i, j, k, l), val.str(), zero1.str()});
                        break;
                    }
                }
    return rep;
}

TwoTermAlgebra two_term_from_omni(const SpacePtr& v, const Bicharacter& b) {
    const OmniAlgebra o = make_omni(v, b);
    const size_t ne = o.e_dim(), n = o.v_dim(), ng = o.gl_dim();
    const unsigned m = v->cyclo_order;

    std::vector<std::vector<Scalar>> dmat(ne, std::vector<Scalar>(n, Scalar::zero(m)));
    for (size_t i = 0; i < n; ++i) dmat[ng + i][i] = Scalar::one(m);
    GradedMap d = make_map(o.v, o.e, std::move(dmat));

    std::vector<Entry01> l01;
    for (size_t p = 0; p < ne; ++p) {
        for (size_t j = 0; j < n; ++j) {
            const Vec val =
                vec_part(o, omni_bracket(o, basis_vec(o.e, p), embed_vec(o, basis_vec(o.v, j))));
            for (size_t k = 0; k < n; ++k)
                if (!val.coords[k].is_zero()) l01.push_back(Entry01{p, j, k, val.coords[k]});
        }
    }

    std::vector<Entry3> l3e;
    for (size_t p = 0; p < ne; ++p) {
        for (size_t q = 0; q < ne; ++q) {
            for (size_t r = 0; r < ne; ++r) {
                const Scalar eps = o.bichar.eval_scalar(o.e->degrees[r], o.e->degrees[p]);
                const Vec val =
                    omni_T(o, basis_vec(o.e, p), basis_vec(o.e, q), basis_vec(o.e, r));
                for (size_t l = 0; l < n; ++l)
                    if (!val.coords[l].is_zero())
                        l3e.push_back(Entry3{p, q, r, l, -(eps * val.coords[l])});
            }
        }
    }

    return make_two_term(o.e, o.v, b, std::move(d), o.bracket, l01, l3e);
}

SkeletalQuadruple to_quadruple(const TwoTermAlgebra& t) {
    if (!t.d.is_zero()) fail("NotSkeletal", "d must vanish for the skeletal correspondence");
    SkeletalQuadruple q;
    q.g = ColorAlgebra{t.v0, t.bichar, t.l2_00};
    q.rho = Representation{q.g, t.v1, {}};
    const size_t n0 = t.v0->dim(), n1 = t.v1->dim();
    for (size_t i = 0; i < n0; ++i) {
        std::vector<std::vector<Scalar>> mat(n1,
                                             std::vector<Scalar>(n1, Scalar::zero(t.v1->cyclo_order)));
        for (size_t j = 0; j < n1; ++j)
            for (size_t k = 0; k < n1; ++k) mat[k][j] = t.l2_01[i][j][k];
        q.rho.action.push_back(make_map(t.v1, t.v1, std::move(mat)));
    }
    q.cocycle = t.l3;
    return q;
}

TwoTermAlgebra from_quadruple(const SkeletalQuadruple& q) {
    const SpacePtr v0 = q.g.space;
    const SpacePtr v1 = q.rho.module;
    std::vector<Entry01> l01;
    for (size_t i = 0; i < v0->dim(); ++i)
        for (size_t j = 0; j < v1->dim(); ++j)
            for (size_t k = 0; k < v1->dim(); ++k)
                if (!q.rho.action[i].mat[k][j].is_zero())
                    l01.push_back(Entry01{i, j, k, q.rho.action[i].mat[k][j]});
    std::vector<Entry3> l3e;
    for (size_t i = 0; i < v0->dim(); ++i)
        for (size_t j = 0; j < v0->dim(); ++j)
            for (size_t k = 0; k < v0->dim(); ++k)
                for (size_t l = 0; l < v1->dim(); ++l)
                    if (!q.cocycle[i][j][k][l].is_zero())
                        l3e.push_back(Entry3{i, j, k, l, q.cocycle[i][j][k][l]});
    return make_two_term(v0, v1, q.g.bichar, zero_map(v1, v0), q.g.bracket, l01, l3e);
}

CheckOutcome check_cocycle(const SkeletalQuadruple& q) {
    return check_axioms(from_quadruple(q)).axioms.at('i');
}

TwoTermAlgebra string_from_quadratic(const QuadraticForm& q) {
    if (!check_quadratic(q).ok())
        fail("NotQuadratic", "the string construction needs a quadratic Lie color algebra");
    const SpacePtr v0 = q.algebra.space;
    const SpacePtr v1 =
        make_space(v0->cyclo_order, v0->group, {{"c", degree_zero(v0->group)}});
    std::vector<Entry3> l3e;
    for (size_t i = 0; i < v0->dim(); ++i)
        for (size_t j = 0; j < v0->dim(); ++j)
            for (size_t k = 0; k < v0->dim(); ++k) {
                const Scalar val =
                    eval_form(q, q.algebra.bracket.eval_basis(i, j), basis_vec(v0, k));
                if (!val.is_zero()) l3e.push_back(Entry3{i, j, k, 0, val});
            }
    return make_two_term(v0, v1, q.algebra.bichar, zero_map(v1, v0), q.algebra.bracket, {},
                         l3e);
}

CrossedVerdict check_crossed_module(const CrossedModule& c) {
    if (!check_lie_color(c.g).ok())
        fail("NotLie", "crossed module source g must be a Lie color algebra");
    if (!check_lie_color(c.h).ok())
        fail("NotLie", "crossed module source h must be a Lie color algebra");
    Representation rep{c.g, c.h.space, c.action};
    if (!check_representation(rep).ok())
        fail("CrossedAxiomFailure", "the action of g on h is not a representation");
    require_same_space(c.phi.domain, c.h.space, "phi domain");
    require_same_space(c.phi.codomain, c.g.space, "phi codomain");
    if (!c.phi.is_zero() && (!c.phi.shift || !degree_is_zero(*c.phi.shift)))
        fail("ShiftMismatch", "phi must be grade-preserving");

    CrossedVerdict out;
    const size_t nh = c.h.space->dim(), ng = c.g.space->dim();

    out.phi_homomorphism = CheckOutcome::passed();
    for (size_t i = 0; i < nh && out.phi_homomorphism.ok(); ++i) {
        for (size_t j = 0; j < nh; ++j) {
            const Vec lhs = c.phi.apply(c.h.bracket.eval_basis(i, j));
            const Vec rhs = c.g.bracket.eval(c.phi.apply(basis_vec(c.h.space, i)),
                                             c.phi.apply(basis_vec(c.h.space, j)));
            if (lhs != rhs) {
                out.phi_homomorphism = CheckOutcome::failed(
                    Witness{{c.h.space->names[i], c.h.space->names[j]}, lhs.str(), rhs.str()});
                break;
            }
        }
    }

    out.equivariance = CheckOutcome::passed();
    for (size_t i = 0; i < ng && out.equivariance.ok(); ++i) {
        for (size_t j = 0; j < nh; ++j) {
            const Vec lhs = c.phi.apply(c.action[i].apply(basis_vec(c.h.space, j)));
            const Vec rhs = c.g.bracket.eval(basis_vec(c.g.space, i),
                                             c.phi.apply(basis_vec(c.h.space, j)));
            if (lhs != rhs) {
                out.equivariance = CheckOutcome::failed(
                    Witness{{c.g.space->names[i], c.h.space->names[j]}, lhs.str(), rhs.str()});
                break;
            }
        }
    }

    out.peiffer = CheckOutcome::passed();
    for (size_t i = 0; i < nh && out.peiffer.ok(); ++i) {
        for (size_t j = 0; j < nh; ++j) {
            const Vec lhs = act(rep, c.phi.apply(basis_vec(c.h.space, i)),
                                basis_vec(c.h.space, j));
            const Vec rhs = c.h.bracket.eval_basis(i, j);
            if (lhs != rhs) {
                out.peiffer = CheckOutcome::failed(
                    Witness{{c.h.space->names[i], c.h.space->names[j]}, lhs.str(), rhs.str()});
                break;
            }
        }
    }
    return out;
}

CrossedModule strict_to_crossed(const TwoTermAlgebra& t) {
    for (const auto& plane : t.l3)
        for (const auto& row : plane)
            for (const auto& cell : row)
                for (const auto& c : cell)
                    if (!c.is_zero())
                        fail("NotStrict", "l3 must vanish for the crossed-module correspondence");
    const AxiomReport rep = check_axioms(t);
    if (!rep.ok()) fail("NotStrict", "the 2-term data fails its axiom sweep");

    CrossedModule c;
    c.g = ColorAlgebra{t.v0, t.bichar, t.l2_00};
    BracketTable hb = BracketTable::zero(t.v1);
    const size_t n1 = t.v1->dim();
    for (size_t i = 0; i < n1; ++i) {
        for (size_t j = 0; j < n1; ++j) {
            const Vec val = t.l2a(t.d.apply(basis_vec(t.v1, i)), basis_vec(t.v1, j));
            hb.value[i][j] = val.coords;
        }
    }
    c.h = ColorAlgebra{t.v1, t.bichar, hb};
    c.phi = t.d;
    for (size_t i = 0; i < t.v0->dim(); ++i) {
        std::vector<std::vector<Scalar>> mat(n1,
                                             std::vector<Scalar>(n1, Scalar::zero(t.v1->cyclo_order)));
        for (size_t j = 0; j < n1; ++j)
            for (size_t k = 0; k < n1; ++k) mat[k][j] = t.l2_01[i][j][k];
        c.action.push_back(make_map(t.v1, t.v1, std::move(mat)));
    }

    const CrossedVerdict v = check_crossed_module(c);
    if (!v.ok()) {
        const Witness* w = !v.phi_homomorphism.ok() ? &*v.phi_homomorphism.witness
                           : !v.equivariance.ok()   ? &*v.equivariance.witness
                                                    : &*v.peiffer.witness;
        fail("CrossedAxiomFailure", "crossed module identity fails at (" + w->tuple[0] + ", " +
                                        w->tuple[1] + "): " + w->lhs + " != " + w->rhs);
    }
    return c;
}

TwoTermAlgebra crossed_to_strict(const CrossedModule& c) {
    std::vector<Entry01> l01;
    for (size_t i = 0; i < c.g.space->dim(); ++i)
        for (size_t j = 0; j < c.h.space->dim(); ++j)
            for (size_t k = 0; k < c.h.space->dim(); ++k)
                if (!c.action[i].mat[k][j].is_zero())
                    l01.push_back(Entry01{i, j, k, c.action[i].mat[k][j]});
    return make_two_term(c.g.space, c.h.space, c.g.bichar, c.phi, c.g.bracket, l01, {});
}

CrossedModule inner_derivation_module(const ColorAlgebra& g) {
    if (!check_lie_color(g).ok()) fail("NotLie", "inner derivations need a Lie color algebra");
    const OmniAlgebra o = make_omni(g.space, g.bichar);
    const DerivationsResult dr = derivations(o, g.bracket);
    const auto& der_basis = dr.der.homogeneous_basis;
    const SpacePtr der_space = pattern_space(o.glv, der_basis, "D");

    // bracket constants of Der inside gl(g-space)
    BracketTable der_table = BracketTable::zero(der_space);
    for (size_t a = 0; a < der_basis.size(); ++a) {
        for (size_t b = 0; b < der_basis.size(); ++b) {
            const GradedMap br = color_bracket(g.bichar, vec_to_endo(g.space, der_basis[a]),
                                               vec_to_endo(g.space, der_basis[b]));
            const auto mu = coordinates_in(der_basis, endo_to_vec(o.glv, br));
            if (!mu) fail("InternalError", "Der is not closed under the bracket");
            der_table.value[a][b] = *mu;
        }
    }
    ColorAlgebra der_alg{der_space, g.bichar, der_table};

    std::vector<Vec> inner;
    for (size_t i = 0; i < g.space->dim(); ++i)
        inner.push_back(endo_to_vec(o.glv, adjoint_endo(o, g.bracket, i)));
    const Subspace inn = span(o.glv, inner);
    const auto& inn_basis = inn.homogeneous_basis;
    const SpacePtr inn_space = pattern_space(o.glv, inn_basis, "I");
    BracketTable inn_table = BracketTable::zero(inn_space);
    for (size_t a = 0; a < inn_basis.size(); ++a) {
        for (size_t b = 0; b < inn_basis.size(); ++b) {
            const GradedMap br = color_bracket(g.bichar, vec_to_endo(g.space, inn_basis[a]),
                                               vec_to_endo(g.space, inn_basis[b]));
            const auto mu = coordinates_in(inn_basis, endo_to_vec(o.glv, br));
            if (!mu) fail("InternalError", "Inn is not closed under the bracket");
            inn_table.value[a][b] = *mu;
        }
    }
    ColorAlgebra inn_alg{inn_space, g.bichar, inn_table};

    // phi: Inn -> Der, the inclusion in the chosen bases.
    std::vector<std::vector<Scalar>> phi_mat(
        der_basis.size(), std::vector<Scalar>(inn_basis.size(), Scalar::zero(g.space->cyclo_order)));
    for (size_t b = 0; b < inn_basis.size(); ++b) {
        const auto mu = coordinates_in(der_basis, inn_basis[b]);
        if (!mu) fail("InternalError", "Inn is not inside Der");
        for (size_t a = 0; a < der_basis.size(); ++a) phi_mat[a][b] = (*mu)[a];
    }

    // D |> ad_x = ad_{Dx}: realize each inn basis vector as ad of a
    // homogeneous element, apply D, and flatten back.
    std::vector<std::vector<Scalar>> ad_columns; // flatten(ad_{e_t}) as columns
    const size_t n = g.space->dim();
    std::vector<std::vector<Scalar>> ad_system(n * n,
                                               std::vector<Scalar>(n, Scalar::zero(g.space->cyclo_order)));
    for (size_t t = 0; t < n; ++t) {
        const Vec flat = endo_to_vec(o.glv, adjoint_endo(o, g.bracket, t));
        for (size_t p = 0; p < n * n; ++p) ad_system[p][t] = flat.coords[p];
    }
    std::vector<Vec> inn_preimage;
    for (const auto& ib : inn_basis) {
        const auto sol = solve_linear(ad_system, ib.coords, g.space->cyclo_order, n);
        if (!sol) fail("InternalError", "inner derivation without a source element");
        Vec x = make_vec(g.space, *sol);
        const auto deg = ib.homogeneous_degree();
        if (deg) x = x.component(*deg);
        inn_preimage.push_back(x);
    }
    CrossedModule out{inn_alg, der_alg, {}, {}};
    out.g = der_alg;
    out.h = inn_alg;
    out.phi = make_map(inn_space, der_space, std::move(phi_mat));
    for (size_t a = 0; a < der_basis.size(); ++a) {
        const GradedMap dmap = vec_to_endo(g.space, der_basis[a]);
        std::vector<std::vector<Scalar>> mat(
            inn_basis.size(), std::vector<Scalar>(inn_basis.size(), Scalar::zero(g.space->cyclo_order)));
        for (size_t b = 0; b < inn_basis.size(); ++b) {
            const Vec dx = dmap.apply(inn_preimage[b]);
            // ad_{Dx}
            Vec ad_dx = zero_vec(o.glv);
            for (size_t t = 0; t < n; ++t)
                if (!dx.coords[t].is_zero())
                    ad_dx += dx.coords[t] * endo_to_vec(o.glv, adjoint_endo(o, g.bracket, t));
            const auto mu = coordinates_in(inn_basis, ad_dx);
            if (!mu) fail("InternalError", "the derivation action leaves Inn");
            for (size_t a2 = 0; a2 < inn_basis.size(); ++a2) mat[a2][b] = (*mu)[a2];
        }
        out.action.push_back(make_map(inn_space, inn_space, std::move(mat)));
    }
    return out;
}

} // namespace colorlie
