#pragma once

#include "colorlie/coloralg.hpp"

namespace colorlie {

/// The omni-Lie color algebra E = gl(V) + V. Elements are vectors over the
/// combined space `e` (first dim(V)^2 coordinates = End(V) row-major, then V).
/// The circle operation, skew bracket and V-valued pairing are precomputed as
/// bilinear tables over the homogeneous basis of E; pairing values are stored
/// embedded in the V block of E.
struct OmniAlgebra {
    SpacePtr v;
    Bicharacter bichar;
    SpacePtr glv; // end_space(v)
    SpacePtr e;   // gl(V) + V
    ColorAlgebra gl;
    BracketTable circ;    // (A+x) o (B+y) = [A,B] + Ay
    BracketTable bracket; // [A,B] + (Ay - eps(x,y)Bx)/2
    BracketTable pairing; // (Ay + eps(x,y)Bx)/2, in the V block

    size_t gl_dim() const { return glv->dim(); }
    size_t v_dim() const { return v->dim(); }
    size_t e_dim() const { return e->dim(); }
};

OmniAlgebra make_omni(const SpacePtr& v, const Bicharacter& b);

/// Split and join between E and its two blocks.
GradedMap endo_part(const OmniAlgebra& o, const Vec& e);
Vec vec_part(const OmniAlgebra& o, const Vec& e);
Vec omni_join(const OmniAlgebra& o, const GradedMap& a, const Vec& x);
Vec embed_endo(const OmniAlgebra& o, const GradedMap& a);
Vec embed_vec(const OmniAlgebra& o, const Vec& x);
/// gl(V) and V as subspaces of E.
Subspace gl_block(const OmniAlgebra& o);
Subspace v_block(const OmniAlgebra& o);

Vec omni_circ(const OmniAlgebra& o, const Vec& e1, const Vec& e2);
Vec omni_bracket(const OmniAlgebra& o, const Vec& e1, const Vec& e2);
/// V-valued.
Vec omni_pairing(const OmniAlgebra& o, const Vec& e1, const Vec& e2);

/// The homotopy term pairing the skew bracket cyclically, V-valued,
/// extended trilinearly over
/// homogeneous parts.
Vec omni_T(const OmniAlgebra& o, const Vec& e1, const Vec& e2, const Vec& e3);
/// The Jacobiator J1 of the skew bracket, E-valued, extended trilinearly.
Vec omni_J1(const OmniAlgebra& o, const Vec& e1, const Vec& e2, const Vec& e3);

/// {e : <e, l> = 0 for all l in L}; L must be graded.
Subspace orth_complement(const OmniAlgebra& o, const Subspace& l);

struct DiracVerdict {
    CheckOutcome isotropic;
    CheckOutcome maximal;
    CheckOutcome closed;

    bool ok() const { return isotropic.ok() && maximal.ok() && closed.ok(); }
};

/// isotropic -> maximal -> closed, short-circuiting at the first failure.
DiracVerdict is_dirac(const OmniAlgebra& o, const Subspace& l);

/// ad_omega(x) in gl(V) for a bilinear table omega on V.
GradedMap adjoint_endo(const OmniAlgebra& o, const BracketTable& omega, size_t basis_index);
/// F_omega = span{ad_omega(b_i) + b_i}; omega must be graded and eps-skew.
Subspace graph_of_adjoint(const OmniAlgebra& o, const BracketTable& omega);

struct CharacteristicPair {
    Subspace d;  // L intersect gl(V), inside End(V)
    Subspace d0; // null space of d, inside V
    /// pi on the homogeneous basis of d0, recovered from L (defined mod d).
    std::vector<GradedMap> pi;
    CheckOutcome subalgebra;   // (1) [D, D] in D
    CheckOutcome pi_curvature; // (2) pi(pi(x,y)) - [pi(x),pi(y)] in D
    CheckOutcome pi_closed;    // (3) pi(x,y) in D0

    bool ok() const { return subalgebra.ok() && pi_curvature.ok() && pi_closed.ok(); }
};

/// The (D, pi) presentation of a maximal isotropic L, with its three
/// closure conditions.
CharacteristicPair characteristic_pair(const OmniAlgebra& o, const Subspace& l);

/// A space presenting a list of homogeneous vectors as a named basis.
SpacePtr pattern_space(const SpacePtr& ambient, const std::vector<Vec>& homogeneous_basis,
                       const std::string& prefix);

/// L = W^0 + F_{ad} for a Lie color bracket on the span of w_basis;
/// constants are relative to w_basis. Throws NotLie when the bracket fails.
Subspace dirac_from_lie(const OmniAlgebra& o, const std::vector<Vec>& w_basis,
                        const BracketTable& bracket_w);

struct InducedLie {
    SpacePtr space;              // fresh space named over the d0 basis
    std::vector<Vec> basis_in_v; // the homogeneous basis of D0 inside V
    ColorAlgebra algebra;
};

/// The Lie color algebra on D0 carried by a Dirac structure.
InducedLie lie_from_dirac(const OmniAlgebra& o, const Subspace& l);

/// The bracket a Dirac structure induces on a given homogeneous basis of D0;
/// used for exact roundtrip comparisons against input constants.
BracketTable recovered_bracket(const OmniAlgebra& o, const Subspace& l,
                               const std::vector<Vec>& w_basis, const SpacePtr& w_space);

struct DerivationsResult {
    Subspace der;        // solutions of the derivation identity, in End(V)
    Subspace normalizer; // N(F_omega) via circle-invariance of the graph
    CheckOutcome spaces_equal;
    CheckOutcome closure; // [Der, Der] subset of Der

    bool ok() const { return spaces_equal.ok() && closure.ok(); }
};

/// Der(V) and N(F_omega) by two independent linear solves.
DerivationsResult derivations(const OmniAlgebra& o, const BracketTable& omega);

/// Direct sweep of D([x,y]) = [Dx,y] + eps(D,x)[x,Dy] over the homogeneous
/// components of d.
bool is_derivation(const OmniAlgebra& o, const BracketTable& omega, const GradedMap& d);

} // namespace colorlie
