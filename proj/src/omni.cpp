#include "colorlie/omni.hpp"

#include <set>

namespace colorlie {

OmniAlgebra make_omni(const SpacePtr& v, const Bicharacter& b) {
    require_compatible(v, b);
    OmniAlgebra o;
    o.v = v;
    o.bichar = b;
    o.glv = end_space(v);
    o.gl = gl_bracket(v, b);

    const size_t n = v->dim();
    const size_t ng = n * n;
    std::set<std::string> glnames(o.glv->names.begin(), o.glv->names.end());
    bool collision = false;
    for (const auto& nm : v->names) collision = collision || glnames.count(nm);
    std::vector<std::pair<std::string, Degree>> basis;
    for (size_t p = 0; p < ng; ++p) basis.emplace_back(o.glv->names[p], o.glv->degrees[p]);
    for (size_t i = 0; i < n; ++i)
        basis.emplace_back(collision ? "v." + v->names[i] : v->names[i], v->degrees[i]);
    o.e = make_space(v->cyclo_order, v->group, std::move(basis));

    const Scalar one = Scalar::one(v->cyclo_order);
    const Scalar half = Scalar::rational(v->cyclo_order, Rat(1, 2));
    o.circ = BracketTable::zero(o.e);
    o.bracket = BracketTable::zero(o.e);
    o.pairing = BracketTable::zero(o.e);

    // gl x gl block: the color commutator, shared by circ and bracket.
    for (size_t p = 0; p < ng; ++p) {
        for (size_t q = 0; q < ng; ++q) {
            for (size_t r = 0; r < ng; ++r) {
                const Scalar& c = o.gl.bracket.value[p][q][r];
                if (c.is_zero()) continue;
                o.circ.value[p][q][r] = c;
                o.bracket.value[p][q][r] = c;
            }
        }
    }
    // gl x V and V x gl blocks. E_ab e_j = delta_bj e_a.
    for (size_t a = 0; a < n; ++a) {
        for (size_t bcol = 0; bcol < n; ++bcol) {
            const size_t p = a * n + bcol;
            const size_t j = bcol;
            o.circ.value[p][ng + j][ng + a] += one;
            o.bracket.value[p][ng + j][ng + a] += half;
            o.pairing.value[p][ng + j][ng + a] += half;
            // V(i) against gl(p): -(1/2) eps(x, A) A x  /  +(1/2) eps(x, A) A x
            const size_t i = bcol; // A e_i nonzero only for i = bcol
            const Scalar eps =
                b.eval_scalar(v->degrees[i], o.glv->degrees[p]);
            o.bracket.value[ng + i][p][ng + a] -= half * eps;
            o.pairing.value[ng + i][p][ng + a] += half * eps;
        }
    }
    return o;
}

GradedMap endo_part(const OmniAlgebra& o, const Vec& e) {
    require_same_space(o.e, e.space, "omni element space");
    const size_t n = o.v_dim();
    std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(n, Scalar::zero(o.v->cyclo_order)));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) mat[a][b] = e.coords[a * n + b];
    return make_map(o.v, o.v, std::move(mat));
}

Vec vec_part(const OmniAlgebra& o, const Vec& e) {
    require_same_space(o.e, e.space, "omni element space");
    Vec out = zero_vec(o.v);
    const size_t ng = o.gl_dim();
    for (size_t i = 0; i < o.v_dim(); ++i) out.coords[i] = e.coords[ng + i];
    return out;
}

Vec embed_endo(const OmniAlgebra& o, const GradedMap& a) {
    require_same_space(o.v, a.domain, "endomorphism domain");
    require_same_space(o.v, a.codomain, "endomorphism codomain");
    Vec out = zero_vec(o.e);
    const size_t n = o.v_dim();
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) out.coords[r * n + c] = a.mat[r][c];
    return out;
}

Vec embed_vec(const OmniAlgebra& o, const Vec& x) {
    require_same_space(o.v, x.space, "vector part space");
    Vec out = zero_vec(o.e);
    const size_t ng = o.gl_dim();
    for (size_t i = 0; i < o.v_dim(); ++i) out.coords[ng + i] = x.coords[i];
    return out;
}

Vec omni_join(const OmniAlgebra& o, const GradedMap& a, const Vec& x) {
    return embed_endo(o, a) + embed_vec(o, x);
}

Subspace gl_block(const OmniAlgebra& o) {
    std::vector<Vec> gens;
    for (size_t p = 0; p < o.gl_dim(); ++p) gens.push_back(basis_vec(o.e, p));
    return span(o.e, gens);
}

Subspace v_block(const OmniAlgebra& o) {
    std::vector<Vec> gens;
    for (size_t i = 0; i < o.v_dim(); ++i) gens.push_back(basis_vec(o.e, o.gl_dim() + i));
    return span(o.e, gens);
}

Vec omni_circ(const OmniAlgebra& o, const Vec& e1, const Vec& e2) {
    return o.circ.eval(e1, e2);
}

Vec omni_bracket(const OmniAlgebra& o, const Vec& e1, const Vec& e2) {
    return o.bracket.eval(e1, e2);
}

Vec omni_pairing(const OmniAlgebra& o, const Vec& e1, const Vec& e2) {
    return vec_part(o, o.pairing.eval(e1, e2));
}

Vec omni_T(const OmniAlgebra& o, const Vec& e1, const Vec& e2, const Vec& e3) {
    const Scalar third = Scalar::rational(o.v->cyclo_order, Rat(1, 3));
    Vec out = zero_vec(o.v);
    for (const auto& [d1, p1] : e1.homogeneous_parts()) {
        for (const auto& [d2, p2] : e2.homogeneous_parts()) {
            for (const auto& [d3, p3] : e3.homogeneous_parts()) {
                Vec term = o.bichar.eval_scalar(d3, d1) *
                               omni_pairing(o, omni_bracket(o, p1, p2), p3) +
                           o.bichar.eval_scalar(d1, d2) *
                               omni_pairing(o, omni_bracket(o, p2, p3), p1) +
                           o.bichar.eval_scalar(d2, d3) *
                               omni_pairing(o, omni_bracket(o, p3, p1), p2);
                out += third * term;
            }
        }
    }
    return out;
}

Vec omni_J1(const OmniAlgebra& o, const Vec& e1, const Vec& e2, const Vec& e3) {
    Vec out = zero_vec(o.e);
    for (const auto& [d1, p1] : e1.homogeneous_parts()) {
        for (const auto& [d2, p2] : e2.homogeneous_parts()) {
            for (const auto& [d3, p3] : e3.homogeneous_parts()) {
                out += o.bichar.eval_scalar(d3, d1) *
                           omni_bracket(o, omni_bracket(o, p1, p2), p3) +
                       o.bichar.eval_scalar(d1, d2) *
                           omni_bracket(o, omni_bracket(o, p2, p3), p1) +
                       o.bichar.eval_scalar(d2, d3) *
                           omni_bracket(o, omni_bracket(o, p3, p1), p2);
            }
        }
    }
    return out;
}

Subspace orth_complement(const OmniAlgebra& o, const Subspace& l) {
    if (!same_space(l.ambient, o.e)) fail("AmbientMismatch", "orthogonal complement in E");
    if (!l.graded) fail("NotGraded", "orthogonal complement needs a graded subspace");
    const size_t dim_e = o.e_dim();
    const size_t n = o.v_dim();
    std::vector<std::vector<Scalar>> eqs;
    for (const auto& lb : l.homogeneous_basis) {
        std::vector<Vec> paired;
        paired.reserve(dim_e);
        for (size_t k = 0; k < dim_e; ++k)
            paired.push_back(omni_pairing(o, basis_vec(o.e, k), lb));
        for (size_t i = 0; i < n; ++i) {
            std::vector<Scalar> eq(dim_e, Scalar::zero(o.v->cyclo_order));
            for (size_t k = 0; k < dim_e; ++k) eq[k] = paired[k].coords[i];
            eqs.push_back(std::move(eq));
        }
    }
    return span_rows(o.e, kernel_rows(eqs, o.v->cyclo_order, dim_e));
}

DiracVerdict is_dirac(const OmniAlgebra& o, const Subspace& l) {
    if (!same_space(l.ambient, o.e)) fail("AmbientMismatch", "Dirac test in E");
    if (!l.graded) fail("NotGraded", "Dirac test needs a graded subspace");
    DiracVerdict v;

    v.isotropic = CheckOutcome::passed();
    for (size_t i = 0; i < l.homogeneous_basis.size() && v.isotropic.ok(); ++i) {
        for (size_t j = 0; j < l.homogeneous_basis.size(); ++j) {
            const Vec p =
                omni_pairing(o, l.homogeneous_basis[i], l.homogeneous_basis[j]);
            if (!p.is_zero()) {
                v.isotropic = CheckOutcome::failed(
                    Witness{{l.homogeneous_basis[i].str(), l.homogeneous_basis[j].str()},
                            p.str(), "0"});
                break;
            }
        }
    }
    if (!v.isotropic.ok()) {
        v.maximal = CheckOutcome::skip();
        v.closed = CheckOutcome::skip();
        return v;
    }

    const Subspace perp = orth_complement(o, l);
    if (perp == l) {
        v.maximal = CheckOutcome::passed();
    } else {
        v.maximal = CheckOutcome::failed(Witness{{},
                                                 "dim L = " + std::to_string(l.dim()),
                                                 "dim L^perp = " + std::to_string(perp.dim())});
        v.closed = CheckOutcome::skip();
        return v;
    }

    v.closed = CheckOutcome::passed();
    for (size_t i = 0; i < l.homogeneous_basis.size() && v.closed.ok(); ++i) {
        for (size_t j = 0; j < l.homogeneous_basis.size(); ++j) {
            const Vec br =
                omni_bracket(o, l.homogeneous_basis[i], l.homogeneous_basis[j]);
            if (!l.contains(br)) {
                v.closed = CheckOutcome::failed(
                    Witness{{l.homogeneous_basis[i].str(), l.homogeneous_basis[j].str()},
                            br.str(), "element of L"});
                break;
            }
        }
    }
    return v;
}

GradedMap adjoint_endo(const OmniAlgebra& o, const BracketTable& omega, size_t basis_index) {
    require_same_space(o.v, omega.space, "adjoint of a bracket on V");
    const size_t n = o.v_dim();
    std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(n, Scalar::zero(o.v->cyclo_order)));
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) mat[k][j] = omega.value[basis_index][j][k];
    return make_map(o.v, o.v, std::move(mat));
}

namespace {

void require_graded_skew(const OmniAlgebra& o, const BracketTable& omega) {
    const size_t n = o.v_dim();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const Degree target = degree_add(o.v->group, o.v->degrees[i], o.v->degrees[j]);
            for (size_t k = 0; k < n; ++k)
                if (!omega.value[i][j][k].is_zero() && o.v->degrees[k] != target)
                    fail("NotGraded", "omega is not degree-additive");
            const Scalar eps = o.bichar.eval_scalar(o.v->degrees[i], o.v->degrees[j]);
            for (size_t k = 0; k < n; ++k)
                if (!(omega.value[i][j][k] + eps * omega.value[j][i][k]).is_zero())
                    fail("NotSkew", "omega fails eps-skew symmetry at (" +
                                        o.v->names[i] + ", " + o.v->names[j] + ")");
        }
    }
}

} // namespace

Subspace graph_of_adjoint(const OmniAlgebra& o, const BracketTable& omega) {
    require_graded_skew(o, omega);
    std::vector<Vec> gens;
    for (size_t i = 0; i < o.v_dim(); ++i)
        gens.push_back(omni_join(o, adjoint_endo(o, omega, i), basis_vec(o.v, i)));
    return span(o.e, gens);
}

namespace {

// Element of L whose V part equals x (x homogeneous); returns the
// degree-|x| homogeneous component, so the endo part is homogeneous too.
Vec lift_through(const OmniAlgebra& o, const Subspace& l, const Vec& x) {
    const size_t ng = o.gl_dim();
    std::vector<std::vector<Scalar>> eqs;
    std::vector<Scalar> rhs;
    for (size_t r = 0; r < o.v_dim(); ++r) {
        std::vector<Scalar> eq(l.dim(), Scalar::zero(o.v->cyclo_order));
        for (size_t s = 0; s < l.dim(); ++s) eq[s] = l.rows[s][ng + r];
        eqs.push_back(std::move(eq));
        rhs.push_back(x.coords[r]);
    }
    const auto sol = solve_linear(eqs, rhs, o.v->cyclo_order, l.dim());
    if (!sol)
        fail("InternalError",
             "maximal isotropic subspace has no lift for a null-space vector; "
             "this would falsify the characteristic-pair lemma");
    Vec lift = zero_vec(o.e);
    for (size_t s = 0; s < l.dim(); ++s)
        lift += (*sol)[s] * Vec{o.e, l.rows[s]};
    const auto deg = x.homogeneous_degree();
    if (!deg) fail("NotHomogeneous", "lift target must be homogeneous");
    return lift.component(*deg);
}

} // namespace

CharacteristicPair characteristic_pair(const OmniAlgebra& o, const Subspace& l) {
    if (!same_space(l.ambient, o.e)) fail("AmbientMismatch", "characteristic pair in E");
    if (!l.graded) fail("NotGraded", "characteristic pair needs a graded subspace");
    // Precondition: maximal isotropic.
    {
        bool isotropic = true;
        for (size_t i = 0; i < l.homogeneous_basis.size() && isotropic; ++i)
            for (size_t j = 0; j < l.homogeneous_basis.size() && isotropic; ++j)
                isotropic =
                    omni_pairing(o, l.homogeneous_basis[i], l.homogeneous_basis[j]).is_zero();
        if (!isotropic || !(orth_complement(o, l) == l))
            fail("NotMaximalIsotropic", "characteristic pair needs L = L^perp");
    }

    CharacteristicPair cp;
    const size_t ng = o.gl_dim();

    const Subspace d_in_e = intersect(l, gl_block(o));
    std::vector<std::vector<Scalar>> drows;
    for (const auto& row : d_in_e.rows)
        drows.push_back(std::vector<Scalar>(row.begin(), row.begin() + long(ng)));
    cp.d = span_rows(o.glv, std::move(drows));
    cp.d0 = null_space_of_endos(o.v, cp.d);

    for (const auto& x : cp.d0.homogeneous_basis)
        cp.pi.push_back(endo_part(o, lift_through(o, l, x)));

    // (1) D is a subalgebra of gl(V).
    cp.subalgebra = CheckOutcome::passed();
    for (size_t i = 0; i < cp.d.homogeneous_basis.size() && cp.subalgebra.ok(); ++i) {
        for (size_t j = 0; j < cp.d.homogeneous_basis.size(); ++j) {
            const GradedMap xi = vec_to_endo(o.v, cp.d.homogeneous_basis[i]);
            const GradedMap xj = vec_to_endo(o.v, cp.d.homogeneous_basis[j]);
            const GradedMap br = color_bracket(o.bichar, xi, xj);
            if (!cp.d.contains(endo_to_vec(o.glv, br))) {
                cp.subalgebra = CheckOutcome::failed(
                    Witness{{cp.d.homogeneous_basis[i].str(), cp.d.homogeneous_basis[j].str()},
                            endo_to_vec(o.glv, br).str(), "element of D"});
                break;
            }
        }
    }

    // (3) pi(x, y) in D0.
    const auto& d0b = cp.d0.homogeneous_basis;
    cp.pi_closed = CheckOutcome::passed();
    for (size_t s = 0; s < d0b.size() && cp.pi_closed.ok(); ++s) {
        for (size_t t = 0; t < d0b.size(); ++t) {
            const Vec val = cp.pi[s].apply(d0b[t]);
            if (!cp.d0.contains(val)) {
                cp.pi_closed = CheckOutcome::failed(
                    Witness{{d0b[s].str(), d0b[t].str()}, val.str(), "element of D0"});
                break;
            }
        }
    }

    // (2) pi(pi(x,y)) - [pi(x), pi(y)] in D, on pairs where pi(x,y) stays in D0.
    cp.pi_curvature = CheckOutcome::passed();
    for (size_t s = 0; s < d0b.size() && cp.pi_curvature.ok(); ++s) {
        for (size_t t = 0; t < d0b.size(); ++t) {
            const Vec val = cp.pi[s].apply(d0b[t]);
            if (!cp.d0.contains(val)) continue; // reported by (3)
            GradedMap pi_val = zero_map(o.v, o.v);
            if (!val.is_zero()) {
                const auto mu = coordinates_in(d0b, val);
                if (!mu) fail("InternalError", "D0 coordinates for a member vector");
                for (size_t u = 0; u < d0b.size(); ++u) pi_val = pi_val + (*mu)[u] * cp.pi[u];
            }
            const GradedMap commutator = color_bracket(o.bichar, cp.pi[s], cp.pi[t]);
            const GradedMap defect = pi_val - commutator;
            if (!cp.d.contains(endo_to_vec(o.glv, defect))) {
                cp.pi_curvature = CheckOutcome::failed(
                    Witness{{d0b[s].str(), d0b[t].str()}, endo_to_vec(o.glv, defect).str(),
                            "element of D"});
                break;
            }
        }
    }
    return cp;
}

SpacePtr pattern_space(const SpacePtr& ambient, const std::vector<Vec>& homogeneous_basis,
                       const std::string& prefix) {
    std::vector<std::pair<std::string, Degree>> basis;
    for (size_t i = 0; i < homogeneous_basis.size(); ++i) {
        require_same_space(ambient, homogeneous_basis[i].space, "pattern space basis");
        const auto deg = homogeneous_basis[i].homogeneous_degree();
        if (!deg) fail("NotHomogeneous", "pattern space needs homogeneous basis vectors");
        basis.emplace_back(prefix + std::to_string(i), *deg);
    }
    return make_space(ambient->cyclo_order, ambient->group, std::move(basis));
}

Subspace dirac_from_lie(const OmniAlgebra& o, const std::vector<Vec>& w_basis,
                        const BracketTable& bracket_w) {
    if (bracket_w.space->dim() != w_basis.size())
        fail("ShapeMismatch", "bracket constants must match the basis size");
    const ColorAlgebra wa{bracket_w.space, o.bichar, bracket_w};
    if (!check_lie_color(wa).ok())
        fail("NotLie", "the input bracket is not a Lie color structure");

    const Subspace w = span(o.v, w_basis);
    if (w.dim() != w_basis.size())
        fail("InvalidConstants", "basis vectors of W are linearly dependent");
    if (!w.graded) fail("NotGraded", "W must be a graded subspace");

    // Pivot columns of the homogeneous echelon basis give the graded
    // complement; ad extends by zero across it.
    const auto& hb = w.homogeneous_basis;
    std::vector<size_t> pivots;
    for (const auto& hv : hb) {
        size_t p = 0;
        while (p < hv.coords.size() && hv.coords[p].is_zero()) ++p;
        pivots.push_back(p);
    }

    const size_t n = o.v_dim();
    std::vector<Vec> gens;
    for (size_t i = 0; i < w_basis.size(); ++i) {
        std::vector<std::vector<Scalar>> mat(n,
                                             std::vector<Scalar>(n, Scalar::zero(o.v->cyclo_order)));
        for (size_t t = 0; t < n; ++t) {
            // project e_t onto W along the echelon complement
            Vec proj = zero_vec(o.v);
            for (size_t s = 0; s < hb.size(); ++s) {
                const Scalar c = basis_vec(o.v, t).coords[pivots[s]];
                if (!c.is_zero()) proj += c * hb[s];
            }
            if (proj.is_zero()) continue;
            const auto mu = coordinates_in(w_basis, proj);
            if (!mu) fail("InternalError", "projection left the span of W");
            Vec image = zero_vec(o.v);
            for (size_t j = 0; j < w_basis.size(); ++j) {
                if ((*mu)[j].is_zero()) continue;
                for (size_t k = 0; k < w_basis.size(); ++k) {
                    const Scalar& c = bracket_w.value[i][j][k];
                    if (!c.is_zero()) image += ((*mu)[j] * c) * w_basis[k];
                }
            }
            for (size_t r = 0; r < n; ++r) mat[r][t] = image.coords[r];
        }
        gens.push_back(omni_join(o, make_map(o.v, o.v, std::move(mat)), w_basis[i]));
    }

    const Subspace d = annihilator_endos(o.v, w);
    for (const auto& drow : d.rows) {
        Vec g = zero_vec(o.e);
        for (size_t p = 0; p < o.gl_dim(); ++p) g.coords[p] = drow[p];
        gens.push_back(std::move(g));
    }
    return span(o.e, gens);
}

BracketTable recovered_bracket(const OmniAlgebra& o, const Subspace& l,
                               const std::vector<Vec>& w_basis, const SpacePtr& w_space) {
    BracketTable out = BracketTable::zero(w_space);
    std::vector<GradedMap> pi;
    for (const auto& x : w_basis) pi.push_back(endo_part(o, lift_through(o, l, x)));
    for (size_t i = 0; i < w_basis.size(); ++i) {
        for (size_t j = 0; j < w_basis.size(); ++j) {
            const Vec val = pi[i].apply(w_basis[j]);
            const auto mu = coordinates_in(w_basis, val);
            if (!mu)
                fail("InvalidConstants",
                     "recovered bracket does not close on the given basis");
            out.value[i][j] = *mu;
        }
    }
    return out;
}

InducedLie lie_from_dirac(const OmniAlgebra& o, const Subspace& l) {
    const DiracVerdict dv = is_dirac(o, l);
    if (!dv.ok()) fail("NotDirac", "lie-from-dirac needs a Dirac structure");
    const CharacteristicPair cp = characteristic_pair(o, l);
    InducedLie out;
    out.basis_in_v = cp.d0.homogeneous_basis;
    out.space = pattern_space(o.v, out.basis_in_v, "w");
    out.algebra = ColorAlgebra{out.space, o.bichar,
                               recovered_bracket(o, l, out.basis_in_v, out.space)};
    return out;
}

// ---------------------------------------------------------------------------
// Derivations

namespace {

// Pattern constraints: force D[r][s] = 0 unless deg(r) = deg(s) + delta.
void add_shift_pattern(const OmniAlgebra& o, const Degree& delta,
                       std::vector<std::vector<Scalar>>& eqs) {
    const size_t n = o.v_dim();
    const Scalar one = Scalar::one(o.v->cyclo_order);
    const Scalar zero = Scalar::zero(o.v->cyclo_order);
    for (size_t r = 0; r < n; ++r) {
        for (size_t s = 0; s < n; ++s) {
            if (degree_sub(o.v->group, o.v->degrees[r], o.v->degrees[s]) == delta) continue;
            std::vector<Scalar> eq(n * n, zero);
            eq[r * n + s] = one;
            eqs.push_back(std::move(eq));
        }
    }
}

} // namespace

DerivationsResult derivations(const OmniAlgebra& o, const BracketTable& omega) {
    require_same_space(o.v, omega.space, "derivations of a bracket on V");
    if (!check_lie_color(ColorAlgebra{o.v, o.bichar, omega}).ok())
        fail("NotLie", "derivations need a Lie color bracket");

    const size_t n = o.v_dim();
    const unsigned m = o.v->cyclo_order;
    const Scalar zero = Scalar::zero(m);
    DerivationsResult out;
    out.der = zero_subspace(o.glv);
    out.normalizer = zero_subspace(o.glv);

    // Route 1: D(omega(b_i,b_j)) = omega(D b_i, b_j) + eps(delta, b_i) omega(b_i, D b_j).
    for (const Degree& delta : all_degrees(o.v->group)) {
        std::vector<std::vector<Scalar>> eqs;
        for (size_t i = 0; i < n; ++i) {
            const Scalar eps = o.bichar.eval_scalar(delta, o.v->degrees[i]);
            for (size_t j = 0; j < n; ++j) {
                const auto& w = omega.value[i][j]; // omega(b_i, b_j)
                for (size_t k = 0; k < n; ++k) {
                    std::vector<Scalar> eq(n * n, zero);
                    for (size_t b = 0; b < n; ++b)
                        if (!w[b].is_zero()) eq[k * n + b] += w[b];
                    for (size_t a = 0; a < n; ++a) {
                        if (!omega.value[a][j][k].is_zero())
                            eq[a * n + i] -= omega.value[a][j][k];
                        if (!omega.value[i][a][k].is_zero())
                            eq[a * n + j] -= eps * omega.value[i][a][k];
                    }
                    eqs.push_back(std::move(eq));
                }
            }
        }
        add_shift_pattern(o, delta, eqs);
        out.der = subspace_sum(out.der, span_rows(o.glv, kernel_rows(eqs, m, n * n)));
    }

    // Route 2: D o (ad x + x) stays in F_omega, expressed through the
    // annihilator functionals of the graph.
    const Subspace f = graph_of_adjoint(o, omega);
    const auto funcs = annihilator_functionals(f);
    const size_t ng = o.gl_dim();
    std::vector<GradedMap> ad;
    for (size_t i = 0; i < n; ++i) ad.push_back(adjoint_endo(o, omega, i));
    for (const Degree& delta : all_degrees(o.v->group)) {
        std::vector<std::vector<Scalar>> eqs;
        for (const auto& phi : funcs) {
            for (size_t i = 0; i < n; ++i) {
                const Scalar eps = o.bichar.eval_scalar(delta, o.v->degrees[i]);
                std::vector<Scalar> eq(n * n, zero);
                // phi_gl . (D A_i - eps A_i D) + phi_V . (D b_i)
                for (size_t r = 0; r < n; ++r) {
                    for (size_t s = 0; s < n; ++s) {
                        Scalar c = zero;
                        for (size_t col = 0; col < n; ++col) {
                            if (!phi[r * n + col].is_zero())
                                c += phi[r * n + col] * ad[i].mat[s][col];
                        }
                        Scalar c2 = zero;
                        for (size_t rr = 0; rr < n; ++rr) {
                            if (!phi[rr * n + s].is_zero())
                                c2 += phi[rr * n + s] * ad[i].mat[rr][r];
                        }
                        eq[r * n + s] += c - eps * c2;
                    }
                    eq[r * n + i] += phi[ng + r];
                }
                eqs.push_back(std::move(eq));
            }
        }
        add_shift_pattern(o, delta, eqs);
        out.normalizer =
            subspace_sum(out.normalizer, span_rows(o.glv, kernel_rows(eqs, m, n * n)));
    }

    out.spaces_equal =
        out.der == out.normalizer
            ? CheckOutcome::passed()
            : CheckOutcome::failed(Witness{{},
                                           "dim Der = " + std::to_string(out.der.dim()),
                                           "dim N = " + std::to_string(out.normalizer.dim())});

    out.closure = CheckOutcome::passed();
    const auto& db = out.der.homogeneous_basis;
    for (size_t i = 0; i < db.size() && out.closure.ok(); ++i) {
        for (size_t j = 0; j < db.size(); ++j) {
            const GradedMap br = color_bracket(o.bichar, vec_to_endo(o.v, db[i]),
                                               vec_to_endo(o.v, db[j]));
            if (!out.der.contains(endo_to_vec(o.glv, br))) {
                out.closure = CheckOutcome::failed(
                    Witness{{db[i].str(), db[j].str()}, endo_to_vec(o.glv, br).str(),
                            "element of Der"});
                break;
            }
        }
    }
    return out;
}

bool is_derivation(const OmniAlgebra& o, const BracketTable& omega, const GradedMap& d) {
    require_same_space(o.v, d.domain, "derivation candidate domain");
    require_same_space(o.v, d.codomain, "derivation candidate codomain");
    const size_t n = o.v_dim();
    for (const auto& [delta, comp] : homogeneous_map_components(d)) {
        for (size_t i = 0; i < n; ++i) {
            const Scalar eps = o.bichar.eval_scalar(delta, o.v->degrees[i]);
            for (size_t j = 0; j < n; ++j) {
                const Vec lhs = comp.apply(Vec{o.v, omega.value[i][j]});
                const Vec rhs =
                    omega.eval(comp.apply(basis_vec(o.v, i)), basis_vec(o.v, j)) +
                    eps * omega.eval(basis_vec(o.v, i), comp.apply(basis_vec(o.v, j)));
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

} // namespace colorlie
