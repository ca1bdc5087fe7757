#pragma once

#include "colorlie/check.hpp"
#include "colorlie/gvs.hpp"

namespace colorlie {

struct BracketEntry {
    size_t i = 0, j = 0, k = 0;
    Scalar coeff;
};

/// Dense table of a bilinear operation space x space -> space:
/// value[i][j] = coordinates of [b_i, b_j].
struct BracketTable {
    SpacePtr space;
    std::vector<std::vector<std::vector<Scalar>>> value;

    static BracketTable zero(const SpacePtr& s);
    static BracketTable from_entries(const SpacePtr& s, const std::vector<BracketEntry>& entries);
    std::vector<BracketEntry> to_entries() const;

    Vec eval_basis(size_t i, size_t j) const { return Vec{space, value[i][j]}; }
    /// Bilinear extension to arbitrary vectors.
    Vec eval(const Vec& x, const Vec& y) const;

    bool operator==(const BracketTable& b) const {
        return same_space(space, b.space) && value == b.value;
    }
};

/// A graded space with a bilinear bracket given by structure constants.
/// Also used for Leibniz-type (non-skew) operations.
struct ColorAlgebra {
    SpacePtr space;
    Bicharacter bichar;
    BracketTable bracket;

    Vec eval(const Vec& x, const Vec& y) const { return bracket.eval(x, y); }
};

void require_compatible(const SpacePtr& space, const Bicharacter& b);

struct LieVerdict {
    CheckOutcome graded;
    CheckOutcome skew;
    CheckOutcome jacobi_j1;
    CheckOutcome jacobi_j2;

    bool ok() const {
        return graded.ok() && skew.ok() && jacobi_j1.ok() && jacobi_j2.ok();
    }
};

/// Full defining sweep: gradedness, eps-skewness, and both forms of the eps-Jacobi
/// identity, each checked independently over all basis tuples.
LieVerdict check_lie_color(const ColorAlgebra& a);

struct LeibnizVerdict {
    CheckOutcome graded;
    CheckOutcome leibniz;

    bool ok() const { return graded.ok() && leibniz.ok(); }
};

/// x o (y o z) = (x o y) o z + eps(x,y) y o (x o z); skewness not required.
LeibnizVerdict check_leibniz(const ColorAlgebra& a);

/// The color commutator algebra on End(V): [f,g] = fg - eps(f,g) gf.
ColorAlgebra gl_bracket(const SpacePtr& v, const Bicharacter& b);

/// Color commutator of two homogeneous graded maps.
GradedMap color_bracket(const Bicharacter& b, const GradedMap& f, const GradedMap& g);

struct Representation {
    ColorAlgebra algebra;
    SpacePtr module;
    std::vector<GradedMap> action; // one map per algebra basis vector
};

/// rho(x)v extended bilinearly.
Vec act(const Representation& r, const Vec& x, const Vec& v);
/// Throws ShiftMismatch unless every rho(b_i) is homogeneous of shift deg(b_i).
void validate_action_shifts(const Representation& r);

struct RepVerdict {
    CheckOutcome identity;

    bool ok() const { return identity.ok(); }
};

/// rho([x,y])v = rho(x)(rho(y)v) - eps(x,y) rho(y)(rho(x)v) on all basis pairs
/// and module basis vectors.
RepVerdict check_representation(const Representation& r);

/// The adjoint action of an algebra on itself.
Representation adjoint_representation(const ColorAlgebra& a);
/// gl(V) acting tautologically on V.
Representation tautological_representation(const SpacePtr& v, const Bicharacter& b);

/// Bracket on g + V: [x+u, y+v] = [x,y] + x|>v - eps(x,y) y|>u.
/// Basis: the algebra basis followed by the module basis.
ColorAlgebra semidirect_product(const ColorAlgebra& g, const Representation& r);

struct QuadraticForm {
    ColorAlgebra algebra;
    std::vector<std::vector<Scalar>> gram; // B(b_i, b_j)
};

Scalar eval_form(const QuadraticForm& q, const Vec& x, const Vec& y);

struct QuadraticVerdict {
    CheckOutcome eps_symmetric;
    CheckOutcome nondegenerate;
    CheckOutcome invariant;
    CheckOutcome graded_pairing;

    bool ok() const {
        return eps_symmetric.ok() && nondegenerate.ok() && invariant.ok() &&
               graded_pairing.ok();
    }
};

/// B(x,y) = eps(x,y)B(y,x), invertible gram, B([x,y],z) = B(x,[y,z]), and
/// B(V_a, V_b) = 0 unless a + b = 0.
QuadraticVerdict check_quadratic(const QuadraticForm& q);

} // namespace colorlie
