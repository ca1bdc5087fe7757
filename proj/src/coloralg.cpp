#include "colorlie/coloralg.hpp"

#include <set>

namespace colorlie {

BracketTable BracketTable::zero(const SpacePtr& s) {
    BracketTable t;
    t.space = s;
    const size_t n = s->dim();
    t.value.assign(n, std::vector<std::vector<Scalar>>(
                          n, std::vector<Scalar>(n, Scalar::zero(s->cyclo_order))));
    return t;
}

BracketTable BracketTable::from_entries(const SpacePtr& s,
                                        const std::vector<BracketEntry>& entries) {
    BracketTable t = zero(s);
    const size_t n = s->dim();
    for (const auto& e : entries) {
        if (e.i >= n || e.j >= n || e.k >= n)
            fail("InvalidConstants", "structure constant index out of range");
        if (e.coeff.order() != s->cyclo_order)
            fail("OrderMismatch", "structure constant in the wrong cyclotomic field");
        t.value[e.i][e.j][e.k] += e.coeff;
    }
    return t;
}

std::vector<BracketEntry> BracketTable::to_entries() const {
    std::vector<BracketEntry> out;
    const size_t n = space->dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (!value[i][j][k].is_zero())
                    out.push_back(BracketEntry{i, j, k, value[i][j][k]});
    return out;
}

Vec BracketTable::eval(const Vec& x, const Vec& y) const {
    require_same_space(space, x.space, "bracket argument space");
    require_same_space(space, y.space, "bracket argument space");
    Vec out = zero_vec(space);
    const size_t n = space->dim();
    for (size_t i = 0; i < n; ++i) {
        if (x.coords[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (y.coords[j].is_zero()) continue;
            const Scalar c = x.coords[i] * y.coords[j];
            for (size_t k = 0; k < n; ++k)
                if (!value[i][j][k].is_zero()) out.coords[k] += c * value[i][j][k];
        }
    }
    return out;
}

void require_compatible(const SpacePtr& space, const Bicharacter& b) {
    if (!(space->group == b.group))
        fail("GroupMismatch", "bicharacter group differs from the space grading group");
    if (space->cyclo_order != b.order)
        fail("OrderMismatch", "bicharacter order differs from the scalar field order");
}

namespace {

CheckOutcome check_graded_table(const ColorAlgebra& a) {
    const size_t n = a.space->dim();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const Degree target =
                degree_add(a.space->group, a.space->degrees[i], a.space->degrees[j]);
            for (size_t k = 0; k < n; ++k) {
                if (a.bracket.value[i][j][k].is_zero()) continue;
                if (a.space->degrees[k] != target) {
                    Vec bad = zero_vec(a.space);
                    bad.coords[k] = a.bracket.value[i][j][k];
                    return CheckOutcome::failed(
                        Witness{{a.space->names[i], a.space->names[j]}, bad.str(), "0"});
                }
            }
        }
    }
    return CheckOutcome::passed();
}

} // namespace

LieVerdict check_lie_color(const ColorAlgebra& a) {
    require_compatible(a.space, a.bichar);
    LieVerdict v;
    const size_t n = a.space->dim();
    const auto& deg = a.space->degrees;
    const auto& names = a.space->names;

    v.graded = check_graded_table(a);

    v.skew = CheckOutcome::passed();
    for (size_t i = 0; i < n && v.skew.ok(); ++i) {
        for (size_t j = 0; j < n; ++j) {
            const Scalar eps = a.bichar.eval_scalar(deg[i], deg[j]);
            const Vec lhs = a.bracket.eval_basis(i, j);
            const Vec rhs = -(eps * a.bracket.eval_basis(j, i));
            if (lhs != rhs) {
                v.skew = CheckOutcome::failed(Witness{{names[i], names[j]}, lhs.str(), rhs.str()});
                break;
            }
        }
    }

    v.jacobi_j1 = CheckOutcome::passed();
    v.jacobi_j2 = CheckOutcome::passed();
    const Vec zero = zero_vec(a.space);
    for (size_t i = 0; i < n && (v.jacobi_j1.ok() || v.jacobi_j2.ok()); ++i) {
        const Vec x = basis_vec(a.space, i);
        for (size_t j = 0; j < n; ++j) {
            const Vec y = basis_vec(a.space, j);
            for (size_t k = 0; k < n; ++k) {
                const Vec z = basis_vec(a.space, k);
                if (v.jacobi_j1.ok()) {
                    const Vec j1 = a.bichar.eval_scalar(deg[k], deg[i]) *
                                       a.eval(a.eval(x, y), z) +
                                   a.bichar.eval_scalar(deg[i], deg[j]) *
                                       a.eval(a.eval(y, z), x) +
                                   a.bichar.eval_scalar(deg[j], deg[k]) *
                                       a.eval(a.eval(z, x), y);
                    if (!j1.is_zero())
                        v.jacobi_j1 = CheckOutcome::failed(
                            Witness{{names[i], names[j], names[k]}, j1.str(), zero.str()});
                }
                if (v.jacobi_j2.ok()) {
                    const Vec j2 = a.eval(a.eval(x, y), z) - a.eval(x, a.eval(y, z)) +
                                   a.bichar.eval_scalar(deg[i], deg[j]) *
                                       a.eval(y, a.eval(x, z));
                    if (!j2.is_zero())
                        v.jacobi_j2 = CheckOutcome::failed(
                            Witness{{names[i], names[j], names[k]}, j2.str(), zero.str()});
                }
                if (!v.jacobi_j1.ok() && !v.jacobi_j2.ok()) break;
            }
            if (!v.jacobi_j1.ok() && !v.jacobi_j2.ok()) break;
        }
    }
    return v;
}

LeibnizVerdict check_leibniz(const ColorAlgebra& a) {
    require_compatible(a.space, a.bichar);
    LeibnizVerdict v;
    v.graded = check_graded_table(a);
    if (!v.graded.ok()) {
        v.leibniz = CheckOutcome::skip();
        return v;
    }
    v.leibniz = CheckOutcome::passed();
    const size_t n = a.space->dim();
    const auto& deg = a.space->degrees;
    for (size_t i = 0; i < n; ++i) {
        const Vec x = basis_vec(a.space, i);
        for (size_t j = 0; j < n; ++j) {
            const Vec y = basis_vec(a.space, j);
            const Scalar eps = a.bichar.eval_scalar(deg[i], deg[j]);
            for (size_t k = 0; k < n; ++k) {
                const Vec z = basis_vec(a.space, k);
                const Vec lhs = a.eval(x, a.eval(y, z));
                const Vec rhs = a.eval(a.eval(x, y), z) + eps * a.eval(y, a.eval(x, z));
                if (lhs != rhs) {
                    v.leibniz = CheckOutcome::failed(
                        Witness{{a.space->names[i], a.space->names[j], a.space->names[k]},
                                lhs.str(), rhs.str()});
                    return v;
                }
            }
        }
    }
    return v;
}

ColorAlgebra gl_bracket(const SpacePtr& v, const Bicharacter& b) {
    require_compatible(v, b);
    const size_t n = v->dim();
    const SpacePtr ev = end_space(v);
    ColorAlgebra out{ev, b, BracketTable::zero(ev)};
    // [E_ab, E_cd] = delta_bc E_ad - eps(E_ab, E_cd) delta_da E_cb
    for (size_t ai = 0; ai < n; ++ai) {
        for (size_t bi = 0; bi < n; ++bi) {
            const size_t p = ai * n + bi;
            for (size_t ci = 0; ci < n; ++ci) {
                for (size_t di = 0; di < n; ++di) {
                    const size_t q = ci * n + di;
                    if (bi == ci)
                        out.bracket.value[p][q][ai * n + di] += Scalar::one(v->cyclo_order);
                    if (di == ai) {
                        const Scalar eps = b.eval_scalar(ev->degrees[p], ev->degrees[q]);
                        out.bracket.value[p][q][ci * n + bi] -= eps;
                    }
                }
            }
        }
    }
    return out;
}

GradedMap color_bracket(const Bicharacter& b, const GradedMap& f, const GradedMap& g) {
    if (!f.shift || !g.shift)
        fail("NotHomogeneous", "color bracket needs homogeneous maps");
    const Scalar eps = b.eval_scalar(*f.shift, *g.shift);
    return compose(f, g) - eps * compose(g, f);
}

Vec act(const Representation& r, const Vec& x, const Vec& v) {
    require_same_space(r.algebra.space, x.space, "representation argument space");
    require_same_space(r.module, v.space, "representation module space");
    Vec out = zero_vec(r.module);
    for (size_t i = 0; i < x.coords.size(); ++i) {
        if (x.coords[i].is_zero()) continue;
        out += x.coords[i] * r.action[i].apply(v);
    }
    return out;
}

void validate_action_shifts(const Representation& r) {
    if (r.action.size() != r.algebra.space->dim())
        fail("ShapeMismatch", "one action map per algebra basis vector required");
    for (size_t i = 0; i < r.action.size(); ++i) {
        const auto& f = r.action[i];
        require_same_space(f.domain, r.module, "action map domain");
        require_same_space(f.codomain, r.module, "action map codomain");
        if (f.is_zero()) continue;
        if (!f.shift || *f.shift != r.algebra.space->degrees[i])
            fail("ShiftMismatch", "rho(" + r.algebra.space->names[i] +
                                      ") is not homogeneous of the basis degree");
    }
}

RepVerdict check_representation(const Representation& r) {
    validate_action_shifts(r);
    RepVerdict out;
    out.identity = CheckOutcome::passed();
    const size_t n = r.algebra.space->dim();
    const auto& deg = r.algebra.space->degrees;
    for (size_t i = 0; i < n; ++i) {
        const Vec x = basis_vec(r.algebra.space, i);
        for (size_t j = 0; j < n; ++j) {
            const Vec y = basis_vec(r.algebra.space, j);
            const Scalar eps = r.algebra.bichar.eval_scalar(deg[i], deg[j]);
            const Vec xy = r.algebra.eval(x, y);
            for (size_t k = 0; k < r.module->dim(); ++k) {
                const Vec v = basis_vec(r.module, k);
                const Vec lhs = act(r, xy, v);
                const Vec rhs = act(r, x, act(r, y, v)) - eps * act(r, y, act(r, x, v));
                if (lhs != rhs) {
                    out.identity = CheckOutcome::failed(
                        Witness{{r.algebra.space->names[i], r.algebra.space->names[j],
                                 r.module->names[k]},
                                lhs.str(), rhs.str()});
                    return out;
                }
            }
        }
    }
    return out;
}

Representation adjoint_representation(const ColorAlgebra& a) {
    Representation r{a, a.space, {}};
    const size_t n = a.space->dim();
    for (size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Scalar>> mat(n,
                                             std::vector<Scalar>(n, Scalar::zero(a.space->cyclo_order)));
        for (size_t j = 0; j < n; ++j) {
            const Vec col = a.bracket.eval_basis(i, j);
            for (size_t k = 0; k < n; ++k) mat[k][j] = col.coords[k];
        }
        r.action.push_back(make_map(a.space, a.space, std::move(mat)));
    }
    return r;
}

Representation tautological_representation(const SpacePtr& v, const Bicharacter& b) {
    const ColorAlgebra gl = gl_bracket(v, b);
    Representation r{gl, v, {}};
    const size_t n = v->dim();
    for (size_t a = 0; a < n; ++a) {
        for (size_t c = 0; c < n; ++c) {
            std::vector<std::vector<Scalar>> mat(
                n, std::vector<Scalar>(n, Scalar::zero(v->cyclo_order)));
            mat[a][c] = Scalar::one(v->cyclo_order);
            r.action.push_back(make_map(v, v, std::move(mat)));
        }
    }
    return r;
}

ColorAlgebra semidirect_product(const ColorAlgebra& g, const Representation& r) {
    validate_action_shifts(r);
    require_same_space(g.space, r.algebra.space, "semidirect product algebra space");
    const size_t ng = g.space->dim();
    const size_t nv = r.module->dim();
    const unsigned m = g.space->cyclo_order;

    std::vector<std::pair<std::string, Degree>> basis;
    std::set<std::string> gnames(g.space->names.begin(), g.space->names.end());
    bool collision = false;
    for (const auto& nm : r.module->names) collision = collision || gnames.count(nm);
    for (size_t i = 0; i < ng; ++i) {
        basis.emplace_back(collision ? "g." + g.space->names[i] : g.space->names[i],
                           g.space->degrees[i]);
    }
    for (size_t i = 0; i < nv; ++i) {
        basis.emplace_back(collision ? "m." + r.module->names[i] : r.module->names[i],
                           r.module->degrees[i]);
    }
    const SpacePtr sum = make_space(m, g.space->group, std::move(basis));

    ColorAlgebra out{sum, g.bichar, BracketTable::zero(sum)};
    for (size_t i = 0; i < ng; ++i) {
        for (size_t j = 0; j < ng; ++j) {
            const Vec val = g.bracket.eval_basis(i, j);
            for (size_t k = 0; k < ng; ++k) out.bracket.value[i][j][k] = val.coords[k];
        }
        for (size_t j = 0; j < nv; ++j) {
            const Vec val = r.action[i].apply(basis_vec(r.module, j));
            for (size_t k = 0; k < nv; ++k) out.bracket.value[i][ng + j][ng + k] = val.coords[k];
        }
    }
    for (size_t i = 0; i < nv; ++i) {
        for (size_t j = 0; j < ng; ++j) {
            const Scalar eps =
                g.bichar.eval_scalar(r.module->degrees[i], g.space->degrees[j]);
            const Vec val = r.action[j].apply(basis_vec(r.module, i));
            for (size_t k = 0; k < nv; ++k)
                out.bracket.value[ng + i][j][ng + k] = -(eps * val.coords[k]);
        }
    }
    return out;
}

Scalar eval_form(const QuadraticForm& q, const Vec& x, const Vec& y) {
    require_same_space(q.algebra.space, x.space, "quadratic form argument");
    require_same_space(q.algebra.space, y.space, "quadratic form argument");
    Scalar out = Scalar::zero(q.algebra.space->cyclo_order);
    for (size_t i = 0; i < x.coords.size(); ++i) {
        if (x.coords[i].is_zero()) continue;
        for (size_t j = 0; j < y.coords.size(); ++j) {
            if (y.coords[j].is_zero()) continue;
            out += x.coords[i] * y.coords[j] * q.gram[i][j];
        }
    }
    return out;
}

QuadraticVerdict check_quadratic(const QuadraticForm& q) {
    const SpacePtr s = q.algebra.space;
    const size_t n = s->dim();
    if (q.gram.size() != n) fail("ShapeMismatch", "gram matrix must be dim x dim");
    for (const auto& row : q.gram)
        if (row.size() != n) fail("ShapeMismatch", "gram matrix must be dim x dim");

    QuadraticVerdict v;
    const auto& deg = s->degrees;

    v.eps_symmetric = CheckOutcome::passed();
    for (size_t i = 0; i < n && v.eps_symmetric.ok(); ++i) {
        for (size_t j = 0; j < n; ++j) {
            const Scalar rhs = q.algebra.bichar.eval_scalar(deg[i], deg[j]) * q.gram[j][i];
            if (q.gram[i][j] != rhs) {
                v.eps_symmetric = CheckOutcome::failed(
                    Witness{{s->names[i], s->names[j]}, q.gram[i][j].str(), rhs.str()});
                break;
            }
        }
    }

    std::vector<std::vector<Scalar>> copy = q.gram;
    const size_t rank = rref_in_place(copy);
    v.nondegenerate = rank == n
                          ? CheckOutcome::passed()
                          : CheckOutcome::failed(Witness{{}, "rank " + std::to_string(rank),
                                                         "rank " + std::to_string(n)});

    v.invariant = CheckOutcome::passed();
    for (size_t i = 0; i < n && v.invariant.ok(); ++i) {
        const Vec x = basis_vec(s, i);
        for (size_t j = 0; j < n && v.invariant.ok(); ++j) {
            const Vec y = basis_vec(s, j);
            for (size_t k = 0; k < n; ++k) {
                const Vec z = basis_vec(s, k);
                const Scalar lhs = eval_form(q, q.algebra.eval(x, y), z);
                const Scalar rhs = eval_form(q, x, q.algebra.eval(y, z));
                if (lhs != rhs) {
                    v.invariant = CheckOutcome::failed(
                        Witness{{s->names[i], s->names[j], s->names[k]}, lhs.str(), rhs.str()});
                    break;
                }
            }
        }
    }

    v.graded_pairing = CheckOutcome::passed();
    for (size_t i = 0; i < n && v.graded_pairing.ok(); ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (q.gram[i][j].is_zero()) continue;
            if (!degree_is_zero(degree_add(s->group, deg[i], deg[j]))) {
                v.graded_pairing = CheckOutcome::failed(
                    Witness{{s->names[i], s->names[j]}, q.gram[i][j].str(), "0"});
                break;
            }
        }
    }
    return v;
}

} // namespace colorlie
