#pragma once

#include <string>
#include <vector>

#include "colorlie/cyclotomic.hpp"

namespace colorlie {

/// Finite abelian group presented as Z_{n1} x ... x Z_{nk}. The trivial
/// group is (1).
struct GradingGroup {
    std::vector<unsigned> cyclic_orders;

    static GradingGroup trivial() { return GradingGroup{{1}}; }

    size_t rank() const { return cyclic_orders.size(); }
    size_t size() const;

    bool operator==(const GradingGroup&) const = default;
};

void validate_group(const GradingGroup& g);

/// Element of a grading group: componentwise residues 0 <= a_i < n_i.
struct Degree {
    std::vector<unsigned> residues;

    bool operator==(const Degree&) const = default;
    bool operator<(const Degree& b) const { return residues < b.residues; }
};

Degree degree_zero(const GradingGroup& g);
Degree make_degree(const GradingGroup& g, const std::vector<long>& raw);
Degree degree_add(const GradingGroup& g, const Degree& a, const Degree& b);
Degree degree_neg(const GradingGroup& g, const Degree& a);
Degree degree_sub(const GradingGroup& g, const Degree& a, const Degree& b);
bool degree_is_zero(const Degree& a);
/// All group elements in lexicographic order.
std::vector<Degree> all_degrees(const GradingGroup& g);
std::string degree_str(const Degree& d);

struct BicharVerdict {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Bicharacter given by a generator exponent matrix E mod m:
/// eps(alpha, beta) = zeta_m ^ (alpha^T E beta).
struct Bicharacter {
    GradingGroup group;
    unsigned order = 1;
    std::vector<std::vector<unsigned>> exponents; // rank x rank, entries in [0, m)

    static Bicharacter make(GradingGroup g, unsigned m,
                            const std::vector<std::vector<long>>& raw);
    /// Trivial group, epsilon == 1.
    static Bicharacter trivial(unsigned m = 1);
    /// G = Z_2, m = 2, E = [[1]]: the super sign.
    static Bicharacter super_sign();

    /// Symmetry and well-definedness congruences; biadditivity holds by
    /// construction for the exponent-matrix form.
    BicharVerdict validate() const;

    RootOfUnity eval(const Degree& a, const Degree& b) const;
    Scalar eval_scalar(const Degree& a, const Degree& b) const;

    bool operator==(const Bicharacter&) const = default;
};

} // namespace colorlie
