#include "colorlie/fixtures.hpp"

#include "colorlie/twoterm.hpp"

namespace colorlie {

SpacePtr fixture_super_dim2() {
    GradingGroup z2{{2}};
    return make_space(2, z2, {{"e0", make_degree(z2, {0})}, {"e1", make_degree(z2, {1})}});
}

ColorAlgebra fixture_gl11() {
    return gl_bracket(fixture_super_dim2(), Bicharacter::super_sign());
}

ColorAlgebra fixture_gl11_broken() {
    ColorAlgebra a = fixture_gl11();
    // [E_0_0, E_0_1] += E_0_1 with the eps-skew mirror, so the bracket stays
    // graded and skew but loses Jacobi.
    const Scalar one = Scalar::one(2);
    a.bracket.value[0][1][1] += one;
    a.bracket.value[1][0][1] -=
        a.bichar.eval_scalar(a.space->degrees[1], a.space->degrees[0]) * one;
    return a;
}

ColorAlgebra fixture_sl2() {
    GradingGroup g = GradingGroup::trivial();
    const SpacePtr s = make_space(
        1, g, {{"e", degree_zero(g)}, {"f", degree_zero(g)}, {"h", degree_zero(g)}});
    const Scalar one = Scalar::one(1), two = Scalar::integer(1, 2);
    std::vector<BracketEntry> entries = {
        {0, 1, 2, one},  {1, 0, 2, -one}, {2, 0, 0, two},
        {0, 2, 0, -two}, {2, 1, 1, -two}, {1, 2, 1, two},
    };
    return ColorAlgebra{s, Bicharacter::trivial(), BracketTable::from_entries(s, entries)};
}

QuadraticForm fixture_sl2_killing() {
    QuadraticForm q{fixture_sl2(), {}};
    q.gram.assign(3, std::vector<Scalar>(3, Scalar::zero(1)));
    q.gram[0][1] = q.gram[1][0] = Scalar::integer(1, 4);
    q.gram[2][2] = Scalar::integer(1, 8);
    return q;
}

QuadraticForm fixture_gl11_supertrace() {
    QuadraticForm q{fixture_gl11(), {}};
    const Scalar one = Scalar::one(2);
    q.gram.assign(4, std::vector<Scalar>(4, Scalar::zero(2)));
    q.gram[0][0] = one;  // str(E00 E00)
    q.gram[1][2] = one;  // str(E01 E10)
    q.gram[2][1] = -one; // str(E10 E01)
    q.gram[3][3] = -one; // str(E11 E11)
    return q;
}

ColorAlgebra fixture_color_so3() {
    GradingGroup g{{2, 2}};
    const Bicharacter b = Bicharacter::make(g, 2, {{0, 1}, {1, 0}});
    const SpacePtr s = make_space(2, g,
                                  {{"A", make_degree(g, {1, 0})},
                                   {"B", make_degree(g, {0, 1})},
                                   {"C", make_degree(g, {1, 1})}});
    ColorAlgebra a{s, b, BracketTable::zero(s)};
    const Scalar one = Scalar::one(2);
    // [A,B] = C, [B,C] = A, [C,A] = B, mirrors filled through skewness.
    auto set_pair = [&](size_t i, size_t j, size_t k) {
        a.bracket.value[i][j][k] = one;
        a.bracket.value[j][i][k] = -(b.eval_scalar(s->degrees[j], s->degrees[i]) * one);
    };
    set_pair(0, 1, 2);
    set_pair(1, 2, 0);
    set_pair(2, 0, 1);
    return a;
}

BracketTable fixture_heisenberg_super() {
    const SpacePtr v = fixture_super_dim2();
    return BracketTable::from_entries(v, {{1, 1, 0, Scalar::one(2)}});
}

BracketTable fixture_broken_super() {
    const SpacePtr v = fixture_super_dim2();
    const Scalar one = Scalar::one(2);
    return BracketTable::from_entries(v, {{0, 1, 1, one}, {1, 0, 1, -one}, {1, 1, 0, one}});
}

TwoTermAlgebra fixture_broken_l3() {
    TwoTermAlgebra t = string_from_quadratic(fixture_gl11_supertrace());
    const Scalar one = Scalar::one(2);
    auto eps = [&](size_t a, size_t b) {
        return t.bichar.eval_scalar(t.v0->degrees[a], t.v0->degrees[b]);
    };
    auto add = [&](size_t a, size_t b, size_t c, const Scalar& val) {
        t.l3[a][b][c][0] += val;
    };
    // eps-skew orbit of tau(E_0_0, E_0_1, E_1_0) = 1
    add(0, 1, 2, one);
    add(1, 0, 2, -(eps(0, 1) * one));
    add(0, 2, 1, -(eps(1, 2) * one));
    add(1, 2, 0, eps(0, 1) * eps(0, 2) * one);
    add(2, 0, 1, eps(1, 2) * eps(0, 2) * one);
    add(2, 1, 0, -(eps(0, 1) * eps(0, 2) * eps(1, 2) * one));
    return t;
}

namespace {

Json group_to_json(const GradingGroup& g) {
    return Json{{"cyclic_orders", g.cyclic_orders}};
}

Json bichar_to_json(const Bicharacter& b) {
    return Json{{"exponents", b.exponents}};
}

Json header(const SpacePtr& s, const Bicharacter& b) {
    return Json{{"cyclotomic_order", s->cyclo_order},
                {"group", group_to_json(s->group)},
                {"bicharacter", bichar_to_json(b)}};
}

Json algebra_file(const ColorAlgebra& a) {
    Json out = header(a.space, a.bichar);
    out["space"] = space_to_json(a.space);
    out["bracket"] = bracket_to_json(a.bracket);
    return out;
}

Json subspace_rows_json(const Subspace& s) {
    Json rows = Json::array();
    for (const auto& row : s.rows) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(c.str());
        rows.push_back(r);
    }
    return rows;
}

} // namespace

std::vector<std::string> fixture_names() {
    return {"abelian-z2-dim2", "gl11",          "broken-jacobi",      "sl2-killing",
            "color-so3",       "omni-super-dim2", "heisenberg-super", "broken-super",
            "two-term-omni-super", "two-term-string-sl2", "broken-l3", "inn-der-gl11"};
}

Json fixture_file(const std::string& name) {
    if (name == "abelian-z2-dim2") {
        const SpacePtr v = fixture_super_dim2();
        Json out = header(v, Bicharacter::super_sign());
        out["space"] = space_to_json(v);
        out["bracket"] = Json{{"entries", Json::array()}};
        return out;
    }
    if (name == "gl11") {
        const ColorAlgebra gl = fixture_gl11();
        Json out = algebra_file(gl);
        Json gram = Json::array();
        for (const auto& row : fixture_gl11_supertrace().gram) {
            Json r = Json::array();
            for (const auto& c : row) r.push_back(c.str());
            gram.push_back(r);
        }
        out["quadratic"] = Json{{"gram", gram}};
        Json maps = Json::array();
        for (const auto& a : adjoint_representation(gl).action)
            maps.push_back(matrix_to_json(a.mat));
        out["representation"] = Json{{"module", space_to_json(gl.space)}, {"maps", maps}};
        return out;
    }
    if (name == "broken-jacobi") return algebra_file(fixture_gl11_broken());
    if (name == "sl2-killing") {
        Json out = algebra_file(fixture_sl2());
        Json gram = Json::array();
        for (const auto& row : fixture_sl2_killing().gram) {
            Json r = Json::array();
            for (const auto& c : row) r.push_back(c.str());
            gram.push_back(r);
        }
        out["quadratic"] = Json{{"gram", gram}};
        return out;
    }
    if (name == "color-so3") return algebra_file(fixture_color_so3());
    if (name == "omni-super-dim2") {
        const SpacePtr v = fixture_super_dim2();
        Json out = header(v, Bicharacter::super_sign());
        out["space"] = space_to_json(v);
        return out;
    }
    if (name == "heisenberg-super" || name == "broken-super") {
        const SpacePtr v = fixture_super_dim2();
        const Bicharacter b = Bicharacter::super_sign();
        const BracketTable w =
            name == "heisenberg-super" ? fixture_heisenberg_super() : fixture_broken_super();
        Json out = header(v, b);
        out["space"] = space_to_json(v);
        out["bracket"] = bracket_to_json(w);
        const OmniAlgebra o = make_omni(v, b);
        Json subs = Json::array();
        subs.push_back(Json{{"name", "L"},
                            {"vectors", subspace_rows_json(graph_of_adjoint(o, w))}});
        subs.push_back(Json{{"name", "glV"}, {"vectors", subspace_rows_json(gl_block(o))}});
        subs.push_back(Json{{"name", "V"}, {"vectors", subspace_rows_json(v_block(o))}});
        out["subspaces"] = subs;
        if (name == "heisenberg-super") {
            Json vectors = Json::array();
            for (size_t i = 0; i < v->dim(); ++i) {
                Json r = Json::array();
                for (const auto& c : basis_vec(v, i).coords) r.push_back(c.str());
                vectors.push_back(r);
            }
            out["w_subalgebra"] = Json{{"vectors", vectors}, {"bracket", bracket_to_json(w)}};
        }
        return out;
    }
    if (name == "two-term-omni-super") {
        const SpacePtr v = fixture_super_dim2();
        const Bicharacter b = Bicharacter::super_sign();
        Json out = header(v, b);
        out["two_term"] = two_term_to_json(two_term_from_omni(v, b));
        return out;
    }
    if (name == "two-term-string-sl2") {
        const TwoTermAlgebra t = string_from_quadratic(fixture_sl2_killing());
        Json out = header(t.v0, t.bichar);
        out["two_term"] = two_term_to_json(t);
        return out;
    }
    if (name == "broken-l3") {
        const TwoTermAlgebra t = fixture_broken_l3();
        Json out = header(t.v0, t.bichar);
        out["two_term"] = two_term_to_json(t);
        return out;
    }
    if (name == "inn-der-gl11") {
        const CrossedModule c = inner_derivation_module(fixture_gl11());
        Json out = header(c.g.space, c.g.bichar);
        out["crossed_module"] = crossed_to_json(c);
        return out;
    }
    fail("UnknownFixture", "no fixture named '" + name + "'");
}

} // namespace colorlie
