#include "colorlie/algfile.hpp"

namespace colorlie {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    fail("SchemaError", where + ": " + what);
}

const Json& field(const Json& j, const char* name, const std::string& where) {
    auto it = j.find(name);
    if (it == j.end()) schema_error(where, std::string("missing field '") + name + "'");
    return *it;
}

unsigned uint_field(const Json& j, const char* name, const std::string& where) {
    const Json& v = field(j, name, where);
    if (!v.is_number_unsigned()) schema_error(where, std::string(name) + " must be a nonnegative integer");
    return v.get<unsigned>();
}

std::vector<std::vector<Scalar>> parse_matrix(unsigned m, const Json& j, size_t rows,
                                              size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        schema_error(where, "expected a matrix with " + std::to_string(rows) + " rows");
    std::vector<std::vector<Scalar>> out;
    for (const auto& jrow : j) {
        if (!jrow.is_array() || jrow.size() != cols)
            schema_error(where, "expected rows of length " + std::to_string(cols));
        std::vector<Scalar> row;
        for (const auto& cell : jrow) row.push_back(scalar_from_json(m, cell));
        out.push_back(std::move(row));
    }
    return out;
}

// A map is either a plain matrix or {"matrix": ..., "shift": [..]}.
GradedMap parse_map(const AlgebraFile& f, const Json& j, const SpacePtr& dom,
                    const SpacePtr& cod, const std::string& where) {
    const Json* mat = &j;
    std::optional<Degree> declared;
    if (j.is_object()) {
        mat = &field(j, "matrix", where);
        if (j.contains("shift")) {
            const Json& sh = j["shift"];
            if (!sh.is_array()) schema_error(where, "shift must be an array of residues");
            std::vector<long> raw;
            for (const auto& c : sh) raw.push_back(c.get<long>());
            declared = make_degree(f.group, raw);
        }
    }
    GradedMap out = make_map(dom, cod,
                             parse_matrix(f.cyclotomic_order, *mat, cod->dim(), dom->dim(), where));
    if (declared && !out.is_zero() && (!out.shift || *out.shift != *declared))
        fail("ShiftMismatch", where + ": declared shift differs from the matrix support");
    return out;
}

SpacePtr parse_space(const AlgebraFile& f, const Json& j, const std::string& where) {
    const Json& basis = field(j, "basis", where);
    if (!basis.is_array()) schema_error(where, "basis must be an array");
    std::vector<std::pair<std::string, Degree>> entries;
    for (const auto& b : basis) {
        const Json& nm = field(b, "name", where);
        if (!nm.is_string()) schema_error(where, "basis names must be strings");
        const Json& deg = field(b, "degree", where);
        if (!deg.is_array()) schema_error(where, "degrees must be arrays of residues");
        std::vector<long> raw;
        for (const auto& c : deg) raw.push_back(c.get<long>());
        entries.emplace_back(nm.get<std::string>(), make_degree(f.group, raw));
    }
    return make_space(f.cyclotomic_order, f.group, std::move(entries));
}

std::vector<BracketEntry> parse_bracket_entries(unsigned m, const Json& j,
                                                const std::string& where) {
    const Json& entries = field(j, "entries", where);
    if (!entries.is_array()) schema_error(where, "entries must be an array");
    std::vector<BracketEntry> out;
    for (const auto& e : entries) {
        BracketEntry be;
        be.i = uint_field(e, "i", where);
        be.j = uint_field(e, "j", where);
        be.k = uint_field(e, "k", where);
        be.coeff = scalar_from_json(m, field(e, "coeff", where));
        out.push_back(std::move(be));
    }
    return out;
}

ColorAlgebra parse_algebra_section(const AlgebraFile& f, const Json& j,
                                   const std::string& where) {
    ColorAlgebra out;
    out.space = parse_space(f, field(j, "space", where), where + ".space");
    out.bichar = f.bichar;
    out.bracket = BracketTable::from_entries(
        out.space, parse_bracket_entries(f.cyclotomic_order, field(j, "bracket", where),
                                         where + ".bracket"));
    return out;
}

} // namespace

Scalar scalar_from_json(unsigned m, const Json& j) {
    if (j.is_string()) return parse_scalar(m, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::integer(m, j.get<long>());
    fail("ParseError", "scalar literals must be strings or integers, got " + j.dump());
}

AlgebraFile parse_algebra_file(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail("ParseError", e.what());
    }
    if (!j.is_object()) fail("SchemaError", "top level must be an object");

    AlgebraFile f;
    f.cyclotomic_order = uint_field(j, "cyclotomic_order", "top level");
    if (f.cyclotomic_order == 0) fail("SchemaError", "cyclotomic_order must be >= 1");

    {
        const Json& g = field(j, "group", "top level");
        const Json& orders = field(g, "cyclic_orders", "group");
        if (!orders.is_array() || orders.empty())
            fail("SchemaError", "group.cyclic_orders must be a nonempty array");
        for (const auto& o : orders) {
            if (!o.is_number_unsigned() || o.get<unsigned>() == 0)
                fail("SchemaError", "cyclic orders must be positive integers");
            f.group.cyclic_orders.push_back(o.get<unsigned>());
        }
    }

    {
        const Json& b = field(j, "bicharacter", "top level");
        const Json& exps = field(b, "exponents", "bicharacter");
        std::vector<std::vector<long>> raw;
        if (!exps.is_array()) fail("SchemaError", "bicharacter.exponents must be a matrix");
        for (const auto& row : exps) {
            std::vector<long> r;
            for (const auto& c : row) {
                if (!c.is_number_integer()) fail("SchemaError", "exponents must be integers");
                r.push_back(c.get<long>());
            }
            raw.push_back(std::move(r));
        }
        f.bichar = Bicharacter::make(f.group, f.cyclotomic_order, raw);
    }

    if (j.contains("space")) f.space = parse_space(f, j["space"], "space");

    if (j.contains("bracket")) {
        if (!f.space) fail("SchemaError", "bracket section needs a space section");
        f.bracket = BracketTable::from_entries(
            f.space, parse_bracket_entries(f.cyclotomic_order, j["bracket"], "bracket"));
    }

    if (j.contains("representation")) {
        if (!f.space) fail("SchemaError", "representation section needs a space section");
        const Json& r = j["representation"];
        AlgebraFile::RepSection rep;
        rep.module = parse_space(f, field(r, "module", "representation"), "representation.module");
        const Json& maps = field(r, "maps", "representation");
        if (!maps.is_array() || maps.size() != f.space->dim())
            fail("SchemaError", "representation.maps needs one matrix per algebra basis vector");
        for (const auto& mj : maps)
            rep.maps.push_back(parse_map(f, mj, rep.module, rep.module, "representation.maps"));
        f.representation = std::move(rep);
    }

    if (j.contains("quadratic")) {
        if (!f.space) fail("SchemaError", "quadratic section needs a space section");
        f.quadratic_gram =
            parse_matrix(f.cyclotomic_order, field(j["quadratic"], "gram", "quadratic"),
                         f.space->dim(), f.space->dim(), "quadratic.gram");
    }

    if (j.contains("two_term")) {
        const Json& tt = j["two_term"];
        const SpacePtr v0 = parse_space(f, field(tt, "v0", "two_term"), "two_term.v0");
        const SpacePtr v1 = parse_space(f, field(tt, "v1", "two_term"), "two_term.v1");
        GradedMap d = parse_map(f, field(tt, "d", "two_term"), v1, v0, "two_term.d");
        BracketTable l2_00 = BracketTable::from_entries(
            v0, parse_bracket_entries(f.cyclotomic_order, field(tt, "l2_00", "two_term"),
                                      "two_term.l2_00"));
        std::vector<Entry01> l01;
        if (tt.contains("l2_01")) {
            const Json& entries = field(tt["l2_01"], "entries", "two_term.l2_01");
            for (const auto& e : entries) {
                Entry01 en;
                en.i = uint_field(e, "i", "two_term.l2_01");
                en.j = uint_field(e, "j", "two_term.l2_01");
                en.k = uint_field(e, "k", "two_term.l2_01");
                en.coeff = scalar_from_json(f.cyclotomic_order, field(e, "coeff", "two_term.l2_01"));
                l01.push_back(std::move(en));
            }
        }
        std::vector<Entry3> l3e;
        if (tt.contains("l3")) {
            const Json& entries = field(tt["l3"], "entries", "two_term.l3");
            for (const auto& e : entries) {
                Entry3 en;
                en.i = uint_field(e, "i", "two_term.l3");
                en.j = uint_field(e, "j", "two_term.l3");
                en.k = uint_field(e, "k", "two_term.l3");
                en.l = uint_field(e, "l", "two_term.l3");
                en.coeff = scalar_from_json(f.cyclotomic_order, field(e, "coeff", "two_term.l3"));
                l3e.push_back(std::move(en));
            }
        }
        f.two_term = make_two_term(v0, v1, f.bichar, std::move(d), std::move(l2_00), l01, l3e);
    }

    if (j.contains("crossed_module")) {
        const Json& cm = j["crossed_module"];
        CrossedModule c;
        c.g = parse_algebra_section(f, field(cm, "g", "crossed_module"), "crossed_module.g");
        c.h = parse_algebra_section(f, field(cm, "h", "crossed_module"), "crossed_module.h");
        c.phi = parse_map(f, field(cm, "phi", "crossed_module"), c.h.space, c.g.space,
                          "crossed_module.phi");
        const Json& action = field(cm, "action", "crossed_module");
        if (!action.is_array() || action.size() != c.g.space->dim())
            fail("SchemaError", "crossed_module.action needs one matrix per g basis vector");
        for (const auto& mj : action)
            c.action.push_back(parse_map(f, mj, c.h.space, c.h.space, "crossed_module.action"));
        f.crossed_module = std::move(c);
    }

    if (j.contains("subspaces")) {
        const Json& subs = j["subspaces"];
        if (!subs.is_array()) fail("SchemaError", "subspaces must be an array");
        for (const auto& s : subs) {
            const Json& nm = field(s, "name", "subspaces");
            const Json& vecs = field(s, "vectors", "subspaces");
            std::vector<std::vector<Scalar>> rows;
            for (const auto& v : vecs) {
                std::vector<Scalar> row;
                for (const auto& c : v) row.push_back(scalar_from_json(f.cyclotomic_order, c));
                rows.push_back(std::move(row));
            }
            f.subspaces.emplace_back(nm.get<std::string>(), std::move(rows));
        }
    }

    if (j.contains("w_subalgebra")) {
        if (!f.space) fail("SchemaError", "w_subalgebra needs a space section");
        const Json& ws = j["w_subalgebra"];
        AlgebraFile::WSection w;
        const Json& vecs = field(ws, "vectors", "w_subalgebra");
        for (const auto& v : vecs) {
            if (!v.is_array() || v.size() != f.space->dim())
                fail("SchemaError", "w_subalgebra vectors must have the space dimension");
            std::vector<Scalar> row;
            for (const auto& c : v) row.push_back(scalar_from_json(f.cyclotomic_order, c));
            w.basis.push_back(make_vec(f.space, std::move(row)));
        }
        const SpacePtr ws_space = pattern_space(f.space, w.basis, "w");
        w.bracket = BracketTable::from_entries(
            ws_space, parse_bracket_entries(f.cyclotomic_order, field(ws, "bracket", "w_subalgebra"),
                                            "w_subalgebra.bracket"));
        f.w_subalgebra = std::move(w);
    }

    return f;
}

ColorAlgebra AlgebraFile::algebra() const {
    if (!space) fail("SchemaError", "this command needs a space section");
    if (!bracket) fail("SchemaError", "this command needs a bracket section");
    return ColorAlgebra{space, bichar, *bracket};
}

QuadraticForm AlgebraFile::quadratic() const {
    if (!quadratic_gram) fail("SchemaError", "this command needs a quadratic section");
    return QuadraticForm{algebra(), *quadratic_gram};
}

Representation AlgebraFile::rep() const {
    if (!representation) fail("SchemaError", "this command needs a representation section");
    return Representation{algebra(), representation->module, representation->maps};
}

// ---------------------------------------------------------------------------
// Serialization

Json space_to_json(const SpacePtr& s) {
    Json basis = Json::array();
    for (size_t i = 0; i < s->dim(); ++i) {
        Json deg = Json::array();
        for (unsigned r : s->degrees[i].residues) deg.push_back(r);
        basis.push_back(Json{{"name", s->names[i]}, {"degree", deg}});
    }
    return Json{{"basis", basis}};
}

Json matrix_to_json(const std::vector<std::vector<Scalar>>& mat) {
    Json out = Json::array();
    for (const auto& row : mat) {
        Json jrow = Json::array();
        for (const auto& c : row) jrow.push_back(c.str());
        out.push_back(jrow);
    }
    return out;
}

Json bracket_to_json(const BracketTable& t) {
    Json entries = Json::array();
    for (const auto& e : t.to_entries())
        entries.push_back(Json{{"i", e.i}, {"j", e.j}, {"k", e.k}, {"coeff", e.coeff.str()}});
    return Json{{"entries", entries}};
}

Json two_term_to_json(const TwoTermAlgebra& t) {
    Json l01 = Json::array();
    for (size_t i = 0; i < t.v0->dim(); ++i)
        for (size_t jdx = 0; jdx < t.v1->dim(); ++jdx)
            for (size_t k = 0; k < t.v1->dim(); ++k)
                if (!t.l2_01[i][jdx][k].is_zero())
                    l01.push_back(Json{{"i", i}, {"j", jdx}, {"k", k},
                                       {"coeff", t.l2_01[i][jdx][k].str()}});
    Json l3 = Json::array();
    for (size_t i = 0; i < t.v0->dim(); ++i)
        for (size_t jdx = 0; jdx < t.v0->dim(); ++jdx)
            for (size_t k = 0; k < t.v0->dim(); ++k)
                for (size_t l = 0; l < t.v1->dim(); ++l)
                    if (!t.l3[i][jdx][k][l].is_zero())
                        l3.push_back(Json{{"i", i},
                                          {"j", jdx},
                                          {"k", k},
                                          {"l", l},
                                          {"coeff", t.l3[i][jdx][k][l].str()}});
    return Json{{"v0", space_to_json(t.v0)},
                {"v1", space_to_json(t.v1)},
                {"d", matrix_to_json(t.d.mat)},
                {"l2_00", bracket_to_json(t.l2_00)},
                {"l2_01", Json{{"entries", l01}}},
                {"l3", Json{{"entries", l3}}}};
}

Json crossed_to_json(const CrossedModule& c) {
    Json action = Json::array();
    for (const auto& a : c.action) action.push_back(matrix_to_json(a.mat));
    return Json{{"g", Json{{"space", space_to_json(c.g.space)},
                           {"bracket", bracket_to_json(c.g.bracket)}}},
                {"h", Json{{"space", space_to_json(c.h.space)},
                           {"bracket", bracket_to_json(c.h.bracket)}}},
                {"phi", matrix_to_json(c.phi.mat)},
                {"action", action}};
}

} // namespace colorlie
