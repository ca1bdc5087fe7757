#include "colorlie/grading.hpp"

namespace colorlie {

size_t GradingGroup::size() const {
    size_t n = 1;
    for (unsigned o : cyclic_orders) n *= o;
    return n;
}

void validate_group(const GradingGroup& g) {
    if (g.cyclic_orders.empty())
        fail("SchemaError", "grading group needs at least one cyclic factor");
    for (unsigned o : g.cyclic_orders)
        if (o == 0) fail("SchemaError", "cyclic order 0 in grading group");
}

Degree degree_zero(const GradingGroup& g) {
    return Degree{std::vector<unsigned>(g.rank(), 0)};
}

Degree make_degree(const GradingGroup& g, const std::vector<long>& raw) {
    if (raw.size() != g.rank())
        fail("GroupMismatch", "degree has " + std::to_string(raw.size()) +
                                  " components, group rank is " + std::to_string(g.rank()));
    Degree d;
    d.residues.resize(g.rank());
    for (size_t i = 0; i < g.rank(); ++i) {
        long n = long(g.cyclic_orders[i]);
        long r = raw[i] % n;
        if (r < 0) r += n;
        d.residues[i] = unsigned(r);
    }
    return d;
}

namespace {

void check_member(const GradingGroup& g, const Degree& a) {
    if (a.residues.size() != g.rank())
        fail("GroupMismatch", "degree rank differs from group rank");
    for (size_t i = 0; i < g.rank(); ++i)
        if (a.residues[i] >= g.cyclic_orders[i])
            fail("GroupMismatch", "degree residue out of range");
}

} // namespace

Degree degree_add(const GradingGroup& g, const Degree& a, const Degree& b) {
    check_member(g, a);
    check_member(g, b);
    Degree d;
    d.residues.resize(g.rank());
    for (size_t i = 0; i < g.rank(); ++i)
        d.residues[i] = (a.residues[i] + b.residues[i]) % g.cyclic_orders[i];
    return d;
}

Degree degree_neg(const GradingGroup& g, const Degree& a) {
    check_member(g, a);
    Degree d;
    d.residues.resize(g.rank());
    for (size_t i = 0; i < g.rank(); ++i)
        d.residues[i] = (g.cyclic_orders[i] - a.residues[i]) % g.cyclic_orders[i];
    return d;
}

Degree degree_sub(const GradingGroup& g, const Degree& a, const Degree& b) {
    return degree_add(g, a, degree_neg(g, b));
}

bool degree_is_zero(const Degree& a) {
    for (unsigned r : a.residues)
        if (r != 0) return false;
    return true;
}

std::vector<Degree> all_degrees(const GradingGroup& g) {
    std::vector<Degree> out;
    out.reserve(g.size());
    Degree current = degree_zero(g);
    while (true) {
        out.push_back(current);
        size_t i = g.rank();
        while (i > 0) {
            --i;
            if (++current.residues[i] < g.cyclic_orders[i]) break;
            current.residues[i] = 0;
            if (i == 0) return out;
        }
        if (g.rank() == 0) return out;
    }
}

std::string degree_str(const Degree& d) {
    std::string out = "(";
    for (size_t i = 0; i < d.residues.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d.residues[i]);
    }
    return out + ")";
}

Bicharacter Bicharacter::make(GradingGroup g, unsigned m,
                              const std::vector<std::vector<long>>& raw) {
    validate_group(g);
    if (m == 0) fail("InvalidOrder", "cyclotomic order must be >= 1");
    const size_t k = g.rank();
    if (raw.size() != k)
        fail("DimensionMismatch", "bicharacter exponent matrix must be " +
                                      std::to_string(k) + "x" + std::to_string(k));
    Bicharacter b;
    b.group = std::move(g);
    b.order = m;
    b.exponents.resize(k);
    for (size_t i = 0; i < k; ++i) {
        if (raw[i].size() != k)
            fail("DimensionMismatch", "bicharacter exponent matrix must be square");
        b.exponents[i].resize(k);
        for (size_t j = 0; j < k; ++j) {
            long r = raw[i][j] % long(m);
            if (r < 0) r += m;
            b.exponents[i][j] = unsigned(r);
        }
    }
    return b;
}

Bicharacter Bicharacter::trivial(unsigned m) {
    return make(GradingGroup::trivial(), m, {{0}});
}

Bicharacter Bicharacter::super_sign() {
    return make(GradingGroup{{2}}, 2, {{1}});
}

BicharVerdict Bicharacter::validate() const {
    BicharVerdict v;
    const size_t k = group.rank();
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if ((exponents[i][j] + exponents[j][i]) % order != 0) {
                v.ok = false;
                v.violations.push_back("symmetry: E[" + std::to_string(i) + "][" +
                                       std::to_string(j) + "] + E[" + std::to_string(j) +
                                       "][" + std::to_string(i) + "] != 0 mod " +
                                       std::to_string(order));
            }
            if ((size_t(group.cyclic_orders[i]) * exponents[i][j]) % order != 0) {
                v.ok = false;
                v.violations.push_back("well-definedness: n_" + std::to_string(i) + "*E[" +
                                       std::to_string(i) + "][" + std::to_string(j) +
                                       "] != 0 mod " + std::to_string(order));
            }
            if ((size_t(group.cyclic_orders[j]) * exponents[i][j]) % order != 0) {
                v.ok = false;
                v.violations.push_back("well-definedness: n_" + std::to_string(j) + "*E[" +
                                       std::to_string(i) + "][" + std::to_string(j) +
                                       "] != 0 mod " + std::to_string(order));
            }
        }
    }
    return v;
}

RootOfUnity Bicharacter::eval(const Degree& a, const Degree& b) const {
    check_member(group, a);
    check_member(group, b);
    size_t e = 0;
    for (size_t i = 0; i < group.rank(); ++i) {
        if (a.residues[i] == 0) continue;
        for (size_t j = 0; j < group.rank(); ++j)
            e += size_t(a.residues[i]) * exponents[i][j] % order * b.residues[j] % order;
    }
    return RootOfUnity(order, long(e % order));
}

Scalar Bicharacter::eval_scalar(const Degree& a, const Degree& b) const {
    return eval(a, b).to_scalar();
}

} // namespace colorlie
