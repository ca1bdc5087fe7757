#include "colorlie/gvs.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace colorlie {

std::vector<size_t> GradedSpace::component(const Degree& d) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < degrees.size(); ++i)
        if (degrees[i] == d) out.push_back(i);
    return out;
}

std::vector<Degree> GradedSpace::support() const {
    std::set<Degree> s(degrees.begin(), degrees.end());
    return std::vector<Degree>(s.begin(), s.end());
}

SpacePtr make_space(unsigned cyclo_order, GradingGroup group,
                    std::vector<std::pair<std::string, Degree>> basis) {
    if (cyclo_order == 0) fail("InvalidOrder", "cyclotomic order must be >= 1");
    validate_group(group);
    auto s = std::make_shared<GradedSpace>();
    s->cyclo_order = cyclo_order;
    s->group = std::move(group);
    std::set<std::string> seen;
    for (auto& [name, deg] : basis) {
        if (!seen.insert(name).second)
            fail("SchemaError", "duplicate basis name '" + name + "'");
        if (deg.residues.size() != s->group.rank())
            fail("GroupMismatch", "degree of basis vector '" + name + "'");
        for (size_t i = 0; i < deg.residues.size(); ++i)
            if (deg.residues[i] >= s->group.cyclic_orders[i])
                fail("GroupMismatch", "degree residue out of range for '" + name + "'");
        s->names.push_back(name);
        s->degrees.push_back(deg);
    }
    return s;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->cyclo_order == b->cyclo_order && a->group == b->group && a->names == b->names &&
           a->degrees == b->degrees;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* what) {
    if (!same_space(a, b)) fail("SpaceMismatch", what);
}

// ---------------------------------------------------------------------------
// Vec

bool Vec::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<Degree> Vec::homogeneous_degree() const {
    std::optional<Degree> deg;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        if (!deg) {
            deg = space->degrees[i];
        } else if (*deg != space->degrees[i]) {
            return std::nullopt;
        }
    }
    return deg;
}

std::vector<std::pair<Degree, Vec>> Vec::homogeneous_parts() const {
    std::map<Degree, Vec> parts;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        const Degree& d = space->degrees[i];
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, zero_vec(space)).first;
        it->second.coords[i] = coords[i];
    }
    return std::vector<std::pair<Degree, Vec>>(parts.begin(), parts.end());
}

Vec Vec::component(const Degree& d) const {
    Vec out = zero_vec(space);
    for (size_t i = 0; i < coords.size(); ++i)
        if (space->degrees[i] == d) out.coords[i] = coords[i];
    return out;
}

std::string Vec::str() const {
    std::string out;
    bool first = true;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        std::string piece;
        const std::string lit = coords[i].str();
        bool negative_joined = false;
        if (lit == "1") {
            piece = space->names[i];
        } else if (lit == "-1") {
            piece = space->names[i];
            negative_joined = true;
        } else if (coords[i].is_rational()) {
            Rat q = coords[i].rational_value();
            if (q < 0) {
                Rat a = -q;
                a.canonicalize();
                piece = rat_str(a) + "*" + space->names[i];
                negative_joined = true;
            } else {
                piece = lit + "*" + space->names[i];
            }
        } else {
            piece = "(" + lit + ")*" + space->names[i];
        }
        if (first) {
            out = (negative_joined ? "-" : "") + piece;
            first = false;
        } else {
            out += (negative_joined ? " - " : " + ") + piece;
        }
    }
    return first ? "0" : out;
}

Vec Vec::operator-() const {
    Vec out = *this;
    for (auto& c : out.coords) c = -c;
    return out;
}

Vec operator+(const Vec& a, const Vec& b) {
    require_same_space(a.space, b.space, "vector addition across different spaces");
    Vec out = a;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

Vec operator-(const Vec& a, const Vec& b) { return a + (-b); }

Vec operator*(const Scalar& c, const Vec& v) {
    Vec out = v;
    for (auto& x : out.coords) x *= c;
    return out;
}

bool Vec::operator==(const Vec& b) const {
    return same_space(space, b.space) && coords == b.coords;
}

Vec zero_vec(const SpacePtr& s) {
    return Vec{s, std::vector<Scalar>(s->dim(), Scalar::zero(s->cyclo_order))};
}

Vec basis_vec(const SpacePtr& s, size_t i) {
    if (i >= s->dim()) fail("InvalidConstants", "basis index out of range");
    Vec v = zero_vec(s);
    v.coords[i] = Scalar::one(s->cyclo_order);
    return v;
}

Vec make_vec(const SpacePtr& s, std::vector<Scalar> coords) {
    if (coords.size() != s->dim()) fail("ShapeMismatch", "vector length differs from dimension");
    for (const auto& c : coords)
        if (c.order() != s->cyclo_order)
            fail("OrderMismatch", "vector coordinate in the wrong cyclotomic field");
    return Vec{s, std::move(coords)};
}

// ---------------------------------------------------------------------------
// GradedMap

Vec GradedMap::apply(const Vec& v) const {
    require_same_space(domain, v.space, "map applied to a vector from another space");
    Vec out = zero_vec(codomain);
    for (size_t r = 0; r < mat.size(); ++r)
        for (size_t c = 0; c < v.coords.size(); ++c)
            if (!mat[r][c].is_zero() && !v.coords[c].is_zero())
                out.coords[r] += mat[r][c] * v.coords[c];
    return out;
}

bool GradedMap::is_zero() const {
    for (const auto& row : mat)
        for (const auto& c : row)
            if (!c.is_zero()) return false;
    return true;
}

GradedMap GradedMap::operator-() const {
    GradedMap out = *this;
    for (auto& row : out.mat)
        for (auto& c : row) c = -c;
    return out;
}

GradedMap operator+(const GradedMap& f, const GradedMap& g) {
    require_same_space(f.domain, g.domain, "map addition: domain mismatch");
    require_same_space(f.codomain, g.codomain, "map addition: codomain mismatch");
    GradedMap out = f;
    for (size_t r = 0; r < out.mat.size(); ++r)
        for (size_t c = 0; c < out.mat[r].size(); ++c) out.mat[r][c] += g.mat[r][c];
    out.shift = detect_shift(out);
    return out;
}

GradedMap operator-(const GradedMap& f, const GradedMap& g) { return f + (-g); }

GradedMap operator*(const Scalar& c, const GradedMap& f) {
    GradedMap out = f;
    for (auto& row : out.mat)
        for (auto& x : row) x *= c;
    out.shift = detect_shift(out);
    return out;
}

bool GradedMap::operator==(const GradedMap& g) const {
    return same_space(domain, g.domain) && same_space(codomain, g.codomain) && mat == g.mat;
}

GradedMap zero_map(const SpacePtr& dom, const SpacePtr& cod) {
    GradedMap f;
    f.domain = dom;
    f.codomain = cod;
    f.mat.assign(cod->dim(), std::vector<Scalar>(dom->dim(), Scalar::zero(dom->cyclo_order)));
    f.shift = degree_zero(dom->group);
    return f;
}

GradedMap identity_map(const SpacePtr& s) {
    GradedMap f = zero_map(s, s);
    for (size_t i = 0; i < s->dim(); ++i) f.mat[i][i] = Scalar::one(s->cyclo_order);
    f.shift = degree_zero(s->group);
    return f;
}

GradedMap make_map(const SpacePtr& dom, const SpacePtr& cod,
                   std::vector<std::vector<Scalar>> mat) {
    if (dom->cyclo_order != cod->cyclo_order || !(dom->group == cod->group))
        fail("ShapeMismatch", "map between spaces over different fields or groups");
    if (mat.size() != cod->dim()) fail("ShapeMismatch", "map has wrong number of rows");
    for (const auto& row : mat)
        if (row.size() != dom->dim()) fail("ShapeMismatch", "map has wrong number of columns");
    GradedMap f;
    f.domain = dom;
    f.codomain = cod;
    f.mat = std::move(mat);
    f.shift = detect_shift(f);
    return f;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    require_same_space(f.domain, g.codomain, "composition: inner spaces differ");
    GradedMap out = zero_map(g.domain, f.codomain);
    for (size_t r = 0; r < f.mat.size(); ++r)
        for (size_t k = 0; k < g.mat.size(); ++k)
            if (!f.mat[r][k].is_zero())
                for (size_t c = 0; c < g.domain->dim(); ++c)
                    if (!g.mat[k][c].is_zero()) out.mat[r][c] += f.mat[r][k] * g.mat[k][c];
    if (f.shift && g.shift)
        out.shift = degree_add(f.domain->group, *f.shift, *g.shift);
    else
        out.shift = detect_shift(out);
    return out;
}

std::optional<Degree> detect_shift(const GradedMap& f) {
    std::optional<Degree> delta;
    for (size_t r = 0; r < f.mat.size(); ++r) {
        for (size_t c = 0; c < f.mat[r].size(); ++c) {
            if (f.mat[r][c].is_zero()) continue;
            Degree d = degree_sub(f.domain->group, f.codomain->degrees[r], f.domain->degrees[c]);
            if (!delta) {
                delta = d;
            } else if (*delta != d) {
                return std::nullopt;
            }
        }
    }
    if (!delta) return degree_zero(f.domain->group);
    return delta;
}

std::vector<std::pair<Degree, GradedMap>> homogeneous_map_components(const GradedMap& f) {
    std::map<Degree, GradedMap> parts;
    for (size_t r = 0; r < f.mat.size(); ++r) {
        for (size_t c = 0; c < f.mat[r].size(); ++c) {
            if (f.mat[r][c].is_zero()) continue;
            Degree d = degree_sub(f.domain->group, f.codomain->degrees[r], f.domain->degrees[c]);
            auto it = parts.find(d);
            if (it == parts.end()) it = parts.emplace(d, zero_map(f.domain, f.codomain)).first;
            it->second.mat[r][c] = f.mat[r][c];
        }
    }
    std::vector<std::pair<Degree, GradedMap>> out;
    for (auto& [d, g] : parts) {
        g.shift = d;
        out.emplace_back(d, std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Echelon machinery

size_t rref_in_place(std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return 0;
    const size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t pivot = rows.size();
        for (size_t p = r; p < rows.size(); ++p) {
            if (!rows[p][c].is_zero()) {
                pivot = p;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const Scalar inv = rows[r][c].inv();
        for (size_t j = c; j < ncols; ++j) rows[r][j] = inv * rows[r][j];
        for (size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][c].is_zero()) continue;
            const Scalar factor = rows[q][c];
            for (size_t j = c; j < ncols; ++j) rows[q][j] -= factor * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return r;
}

namespace {

size_t pivot_col(const std::vector<Scalar>& row) {
    for (size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) return j;
    return row.size();
}

Subspace finish_subspace(const SpacePtr& ambient, std::vector<std::vector<Scalar>> rows) {
    rref_in_place(rows);
    Subspace s;
    s.ambient = ambient;
    s.rows = std::move(rows);

    // Graded iff the span of all homogeneous components of the basis rows has
    // the same dimension as the span itself.
    std::map<Degree, std::vector<std::vector<Scalar>>> by_degree;
    std::vector<std::vector<Scalar>> parts;
    for (const auto& row : s.rows) {
        std::map<Degree, std::vector<Scalar>> comp;
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i].is_zero()) continue;
            const Degree& d = ambient->degrees[i];
            auto it = comp.find(d);
            if (it == comp.end())
                it = comp.emplace(d, std::vector<Scalar>(row.size(),
                                                         Scalar::zero(ambient->cyclo_order)))
                         .first;
            it->second[i] = row[i];
        }
        for (auto& [d, v] : comp) {
            parts.push_back(v);
            by_degree[d].push_back(std::move(v));
        }
    }
    const size_t parts_rank = rref_in_place(parts);
    s.graded = (parts_rank == s.rows.size());
    if (s.graded) {
        for (auto& [d, block] : by_degree) {
            rref_in_place(block);
            for (auto& row : block) s.homogeneous_basis.push_back(Vec{ambient, row});
        }
    }
    return s;
}

} // namespace

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

Vec Subspace::reduce(const Vec& v) const {
    require_same_space(ambient, v.space, "membership test in a different ambient space");
    Vec out = v;
    for (const auto& row : rows) {
        const size_t p = pivot_col(row);
        if (p == row.size() || out.coords[p].is_zero()) continue;
        const Scalar factor = out.coords[p];
        for (size_t j = p; j < row.size(); ++j) out.coords[j] -= factor * row[j];
    }
    return out;
}

std::vector<Vec> Subspace::basis_vectors() const {
    std::vector<Vec> out;
    for (const auto& row : rows) out.push_back(Vec{ambient, row});
    return out;
}

bool Subspace::operator==(const Subspace& b) const {
    return same_space(ambient, b.ambient) && rows == b.rows;
}

Subspace span(const SpacePtr& ambient, const std::vector<Vec>& generators) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& v : generators) {
        require_same_space(ambient, v.space, "span generator from a different space");
        rows.push_back(v.coords);
    }
    return finish_subspace(ambient, std::move(rows));
}

Subspace span_rows(const SpacePtr& ambient, std::vector<std::vector<Scalar>> rows) {
    for (const auto& row : rows)
        if (row.size() != ambient->dim())
            fail("ShapeMismatch", "span row length differs from ambient dimension");
    return finish_subspace(ambient, std::move(rows));
}

Subspace zero_subspace(const SpacePtr& ambient) { return finish_subspace(ambient, {}); }

Subspace full_subspace(const SpacePtr& ambient) {
    std::vector<std::vector<Scalar>> rows;
    for (size_t i = 0; i < ambient->dim(); ++i) rows.push_back(basis_vec(ambient, i).coords);
    return finish_subspace(ambient, std::move(rows));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (!same_space(a.ambient, b.ambient)) fail("AmbientMismatch", "sum of subspaces");
    std::vector<std::vector<Scalar>> rows = a.rows;
    rows.insert(rows.end(), b.rows.begin(), b.rows.end());
    return finish_subspace(a.ambient, std::move(rows));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (!same_space(a.ambient, b.ambient)) fail("AmbientMismatch", "intersection of subspaces");
    const size_t n = a.ambient->dim();
    const Scalar zero = Scalar::zero(a.ambient->cyclo_order);
    // Zassenhaus: rows [v | v] for v in A, [w | 0] for w in B; after
    // elimination the rows with zero left half carry a basis of the
    // intersection in the right half.
    std::vector<std::vector<Scalar>> big;
    for (const auto& v : a.rows) {
        std::vector<Scalar> row(2 * n, zero);
        for (size_t i = 0; i < n; ++i) row[i] = row[n + i] = v[i];
        big.push_back(std::move(row));
    }
    for (const auto& w : b.rows) {
        std::vector<Scalar> row(2 * n, zero);
        for (size_t i = 0; i < n; ++i) row[i] = w[i];
        big.push_back(std::move(row));
    }
    rref_in_place(big);
    std::vector<std::vector<Scalar>> inter;
    for (const auto& row : big) {
        bool left_zero = true;
        for (size_t i = 0; i < n && left_zero; ++i) left_zero = row[i].is_zero();
        if (left_zero)
            inter.push_back(std::vector<Scalar>(row.begin() + long(n), row.end()));
    }
    return finish_subspace(a.ambient, std::move(inter));
}

std::vector<std::vector<Scalar>> kernel_rows(const std::vector<std::vector<Scalar>>& mat,
                                             unsigned cyclo_order, size_t ncols) {
    std::vector<std::vector<Scalar>> eqs = mat;
    rref_in_place(eqs);
    std::vector<size_t> pivots;
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& row : eqs) {
        const size_t p = pivot_col(row);
        pivots.push_back(p);
        if (p < ncols) is_pivot[p] = true;
    }
    std::vector<std::vector<Scalar>> out;
    const Scalar zero = Scalar::zero(cyclo_order);
    for (size_t j = 0; j < ncols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Scalar> x(ncols, zero);
        x[j] = Scalar::one(cyclo_order);
        for (size_t r = 0; r < eqs.size(); ++r)
            if (pivots[r] < ncols) x[pivots[r]] = -eqs[r][j];
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::vector<Scalar>>& mat,
                                                const std::vector<Scalar>& rhs,
                                                unsigned cyclo_order, size_t ncols) {
    if (mat.size() != rhs.size()) fail("ShapeMismatch", "solve_linear rhs length");
    std::vector<std::vector<Scalar>> aug = mat;
    for (size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
    rref_in_place(aug);
    const Scalar zero = Scalar::zero(cyclo_order);
    std::vector<Scalar> x(ncols, zero);
    for (const auto& row : aug) {
        const size_t p = pivot_col(row);
        if (p == row.size()) continue;
        if (p == ncols) return std::nullopt; // pivot in the rhs column
        x[p] = row[ncols];
    }
    return x;
}

std::optional<std::vector<Scalar>> coordinates_in(const std::vector<Vec>& basis,
                                                  const Vec& target) {
    std::vector<std::vector<Scalar>> eqs;
    std::vector<Scalar> rhs;
    const unsigned m = target.space->cyclo_order;
    for (size_t r = 0; r < target.coords.size(); ++r) {
        std::vector<Scalar> eq(basis.size(), Scalar::zero(m));
        for (size_t t = 0; t < basis.size(); ++t) eq[t] = basis[t].coords[r];
        eqs.push_back(std::move(eq));
        rhs.push_back(target.coords[r]);
    }
    return solve_linear(eqs, rhs, m, basis.size());
}

Subspace kernel(const GradedMap& f) {
    return finish_subspace(f.domain,
                           kernel_rows(f.mat, f.domain->cyclo_order, f.domain->dim()));
}

Subspace image(const GradedMap& f) {
    std::vector<std::vector<Scalar>> cols;
    for (size_t j = 0; j < f.domain->dim(); ++j) {
        std::vector<Scalar> col(f.codomain->dim(), Scalar::zero(f.codomain->cyclo_order));
        for (size_t r = 0; r < f.codomain->dim(); ++r) col[r] = f.mat[r][j];
        cols.push_back(std::move(col));
    }
    return finish_subspace(f.codomain, std::move(cols));
}

Subspace preimage(const GradedMap& f, const Subspace& w) {
    if (!same_space(f.codomain, w.ambient)) fail("AmbientMismatch", "preimage target space");
    const auto funcs = annihilator_functionals(w);
    std::vector<std::vector<Scalar>> conditions;
    for (const auto& phi : funcs) {
        std::vector<Scalar> cond(f.domain->dim(), Scalar::zero(f.domain->cyclo_order));
        for (size_t j = 0; j < f.domain->dim(); ++j)
            for (size_t k = 0; k < f.codomain->dim(); ++k)
                if (!phi[k].is_zero() && !f.mat[k][j].is_zero()) cond[j] += phi[k] * f.mat[k][j];
        conditions.push_back(std::move(cond));
    }
    return finish_subspace(f.domain,
                           kernel_rows(conditions, f.domain->cyclo_order, f.domain->dim()));
}

std::vector<std::vector<Scalar>> annihilator_functionals(const Subspace& s) {
    return kernel_rows(s.rows, s.ambient->cyclo_order, s.ambient->dim());
}

// ---------------------------------------------------------------------------
// End(V)

SpacePtr end_space(const SpacePtr& v) {
    std::vector<std::pair<std::string, Degree>> basis;
    const size_t n = v->dim();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            basis.emplace_back("E_" + std::to_string(a) + "_" + std::to_string(b),
                               degree_sub(v->group, v->degrees[a], v->degrees[b]));
    return make_space(v->cyclo_order, v->group, std::move(basis));
}

GradedMap vec_to_endo(const SpacePtr& v, const Vec& e) {
    const size_t n = v->dim();
    if (e.coords.size() != n * n)
        fail("ShapeMismatch", "endomorphism vector has wrong length");
    std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(n, Scalar::zero(v->cyclo_order)));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) mat[a][b] = e.coords[a * n + b];
    return make_map(v, v, std::move(mat));
}

Vec endo_to_vec(const SpacePtr& endv, const GradedMap& f) {
    require_same_space(f.domain, f.codomain, "flattening a non-endomorphism");
    const size_t n = f.domain->dim();
    if (endv->dim() != n * n) fail("ShapeMismatch", "End(V) space dimension mismatch");
    Vec out = zero_vec(endv);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) out.coords[a * n + b] = f.mat[a][b];
    return out;
}

Subspace null_space_of_endos(const SpacePtr& v, const Subspace& d) {
    const size_t n = v->dim();
    if (d.ambient->dim() != n * n)
        fail("AmbientMismatch", "null space input is not a subspace of End(V)");
    std::vector<std::vector<Scalar>> eqs;
    for (const auto& row : d.rows) {
        for (size_t a = 0; a < n; ++a) {
            std::vector<Scalar> eq(row.begin() + long(a * n), row.begin() + long(a * n + n));
            eqs.push_back(std::move(eq));
        }
    }
    return finish_subspace(v, kernel_rows(eqs, v->cyclo_order, n));
}

Subspace annihilator_endos(const SpacePtr& v, const Subspace& w) {
    const size_t n = v->dim();
    if (!same_space(v, w.ambient)) fail("AmbientMismatch", "annihilator input space");
    std::vector<std::vector<Scalar>> eqs;
    const Scalar zero = Scalar::zero(v->cyclo_order);
    for (const auto& wrow : w.rows) {
        for (size_t a = 0; a < n; ++a) {
            std::vector<Scalar> eq(n * n, zero);
            for (size_t b = 0; b < n; ++b) eq[a * n + b] = wrow[b];
            eqs.push_back(std::move(eq));
        }
    }
    return finish_subspace(end_space(v), kernel_rows(eqs, v->cyclo_order, n * n));
}

} // namespace colorlie
