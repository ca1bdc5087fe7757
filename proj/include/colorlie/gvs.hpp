#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/grading.hpp"

namespace colorlie {

/// Finite-dimensional G-graded vector space over Q(zeta_m) with a fixed
/// ordered basis of named homogeneous vectors.
struct GradedSpace {
    unsigned cyclo_order = 1;
    GradingGroup group;
    std::vector<std::string> names;
    std::vector<Degree> degrees;

    size_t dim() const { return names.size(); }
    /// Indices of basis vectors of the given degree.
    std::vector<size_t> component(const Degree& d) const;
    /// Distinct degrees present, sorted.
    std::vector<Degree> support() const;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

SpacePtr make_space(unsigned cyclo_order, GradingGroup group,
                    std::vector<std::pair<std::string, Degree>> basis);
bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* what);

struct Vec {
    SpacePtr space;
    std::vector<Scalar> coords;

    bool is_zero() const;
    /// Degree of a nonzero homogeneous vector; nullopt for 0 or mixed.
    std::optional<Degree> homogeneous_degree() const;
    /// Nonzero homogeneous parts, sorted by degree.
    std::vector<std::pair<Degree, Vec>> homogeneous_parts() const;
    /// Projection onto one degree component.
    Vec component(const Degree& d) const;
    /// Human-readable linear combination of basis names.
    std::string str() const;

    Vec operator-() const;
    friend Vec operator+(const Vec& a, const Vec& b);
    friend Vec operator-(const Vec& a, const Vec& b);
    friend Vec operator*(const Scalar& c, const Vec& v);
    Vec& operator+=(const Vec& b) { return *this = *this + b; }
    Vec& operator-=(const Vec& b) { return *this = *this - b; }
    bool operator==(const Vec& b) const;
    bool operator!=(const Vec& b) const { return !(*this == b); }
};

Vec zero_vec(const SpacePtr& s);
Vec basis_vec(const SpacePtr& s, size_t i);
Vec make_vec(const SpacePtr& s, std::vector<Scalar> coords);

/// Linear map with dense codomain-dim x domain-dim matrix; `shift` is set
/// when the map is homogeneous: it sends degree-a vectors into degree-(a+shift).
struct GradedMap {
    SpacePtr domain;
    SpacePtr codomain;
    std::vector<std::vector<Scalar>> mat;
    std::optional<Degree> shift;

    Vec apply(const Vec& v) const;
    bool is_zero() const;

    GradedMap operator-() const;
    friend GradedMap operator+(const GradedMap& f, const GradedMap& g);
    friend GradedMap operator-(const GradedMap& f, const GradedMap& g);
    friend GradedMap operator*(const Scalar& c, const GradedMap& f);
    bool operator==(const GradedMap& g) const;
    bool operator!=(const GradedMap& g) const { return !(*this == g); }
};

GradedMap zero_map(const SpacePtr& dom, const SpacePtr& cod);
GradedMap identity_map(const SpacePtr& s);
GradedMap make_map(const SpacePtr& dom, const SpacePtr& cod,
                   std::vector<std::vector<Scalar>> mat);
/// f after g; shifts add when both are present.
GradedMap compose(const GradedMap& f, const GradedMap& g);
/// Shift delta such that all entries live on deg(row) = deg(col) + delta,
/// if one exists (the zero map detects as shift 0).
std::optional<Degree> detect_shift(const GradedMap& f);
/// Unique decomposition f = sum of homogeneous maps, sorted by shift;
/// zero components are omitted. Spec op requires domain == codomain.
std::vector<std::pair<Degree, GradedMap>> homogeneous_map_components(const GradedMap& f);

/// Subspace in canonical reduced row echelon form. `graded` is set iff the
/// space is spanned by homogeneous vectors; the homogeneous basis is then
/// the per-degree echelon basis, concatenated in degree order.
struct Subspace {
    SpacePtr ambient;
    std::vector<std::vector<Scalar>> rows;
    bool graded = false;
    std::vector<Vec> homogeneous_basis;

    size_t dim() const { return rows.size(); }
    bool contains(const Vec& v) const;
    /// Reduce v against the echelon rows; zero iff v is a member.
    Vec reduce(const Vec& v) const;
    std::vector<Vec> basis_vectors() const;
    bool operator==(const Subspace& b) const;
    bool operator!=(const Subspace& b) const { return !(*this == b); }
};

Subspace span(const SpacePtr& ambient, const std::vector<Vec>& generators);
Subspace span_rows(const SpacePtr& ambient, std::vector<std::vector<Scalar>> rows);
Subspace zero_subspace(const SpacePtr& ambient);
Subspace full_subspace(const SpacePtr& ambient);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Null space of f, as a subspace of the domain.
Subspace kernel(const GradedMap& f);
Subspace image(const GradedMap& f);
/// {v : f(v) in w}.
Subspace preimage(const GradedMap& f, const Subspace& w);

/// Row basis of {phi : phi . v = 0 for every v in the row space}.
std::vector<std::vector<Scalar>> annihilator_functionals(const Subspace& s);
/// Row basis of the null space of an arbitrary matrix (solves M x = 0).
std::vector<std::vector<Scalar>> kernel_rows(const std::vector<std::vector<Scalar>>& mat,
                                             unsigned cyclo_order, size_t ncols);
/// One particular solution of M x = rhs (free variables set to 0), or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::vector<Scalar>>& mat,
                                                const std::vector<Scalar>& rhs,
                                                unsigned cyclo_order, size_t ncols);
/// Coordinates of `target` in the given list of vectors, or nullopt when it
/// lies outside their span.
std::optional<std::vector<Scalar>> coordinates_in(const std::vector<Vec>& basis,
                                                  const Vec& target);
/// Reduced row echelon form; returns the rank. Rows end up sorted by pivot.
size_t rref_in_place(std::vector<std::vector<Scalar>>& rows);

/// End(V) with the induced grading: basis E_a_b of degree deg(a) - deg(b),
/// flattened row-major (index a * dim + b).
SpacePtr end_space(const SpacePtr& v);
GradedMap vec_to_endo(const SpacePtr& v, const Vec& e);
Vec endo_to_vec(const SpacePtr& endv, const GradedMap& f);

/// {x in V : X(x) = 0 for all X in d}, d a subspace of End(V).
Subspace null_space_of_endos(const SpacePtr& v, const Subspace& d);
/// {X in End(V) : X(w) = 0 for all w in W}, as a subspace of End(V).
Subspace annihilator_endos(const SpacePtr& v, const Subspace& w);

} // namespace colorlie
