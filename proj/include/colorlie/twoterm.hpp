#pragma once

#include <map>

#include "colorlie/omni.hpp"

namespace colorlie {

/// Which form of axiom (h) to evaluate. The printed form contains a free
/// variable and cannot be evaluated; selecting it is reported as an
/// UnboundSymbol error. The corrected form replaces the unbound term with
/// eps(y,|h|)[[x,h],y], which is what the naturality computation forces.
enum class HForm { corrected, as_printed };

struct Entry01 {
    size_t i = 0; // v0 index
    size_t j = 0; // v1 index
    size_t k = 0; // v1 index
    Scalar coeff;
};

struct Entry3 {
    size_t i = 0, j = 0, k = 0; // v0 indices
    size_t l = 0;               // v1 index
    Scalar coeff;
};

/// 2-term color L-infinity data (d, l2, l3) on V1 -> V0. l2 on V1 x V0 is
/// determined by skewness and l2 on V1 x V1 vanishes, so only the V0 x V0 and
/// V0 x V1 blocks are stored.
struct TwoTermAlgebra {
    SpacePtr v0, v1;
    Bicharacter bichar;
    GradedMap d;        // v1 -> v0, shift 0
    BracketTable l2_00; // v0 x v0 -> v0
    std::vector<std::vector<std::vector<Scalar>>> l2_01;              // [i][j] -> v1 coords
    std::vector<std::vector<std::vector<std::vector<Scalar>>>> l3;    // [i][j][k] -> v1 coords

    /// l2 on V0 x V1, bilinear.
    Vec l2a(const Vec& x, const Vec& h) const;
    /// l2 on V1 x V0 via [h,x] = -eps(h,x)[x,h], bilinear over parts.
    Vec l2b(const Vec& h, const Vec& x) const;
    /// l3, trilinear.
    Vec l3v(const Vec& x, const Vec& y, const Vec& z) const;

    bool operator==(const TwoTermAlgebra& t) const {
        return same_space(v0, t.v0) && same_space(v1, t.v1) && bichar == t.bichar &&
               d == t.d && l2_00 == t.l2_00 && l2_01 == t.l2_01 && l3 == t.l3;
    }
};

TwoTermAlgebra make_two_term(const SpacePtr& v0, const SpacePtr& v1, const Bicharacter& b,
                             GradedMap d, BracketTable l2_00,
                             const std::vector<Entry01>& l2_01_entries,
                             const std::vector<Entry3>& l3_entries);

struct AxiomReport {
    std::map<char, CheckOutcome> axioms; // keys 'a'..'i'

    bool ok() const {
        for (const auto& [k, v] : axioms)
            if (!v.ok()) return false;
        return true;
    }
};

/// Sweeps the defining axioms (a)-(i) exhaustively over basis tuples. Throws
/// UnboundSymbol when the as-printed (h) is requested.
AxiomReport check_axioms(const TwoTermAlgebra& t, HForm h_form = HForm::corrected);

/// The omni construction: V0 = gl(V)+V, V1 = V, d = inclusion,
/// l2 = skew bracket, l3 = -eps(z,x) T.
TwoTermAlgebra two_term_from_omni(const SpacePtr& v, const Bicharacter& b);

struct SkeletalQuadruple {
    ColorAlgebra g;
    Representation rho;
    std::vector<std::vector<std::vector<std::vector<Scalar>>>> cocycle; // g^3 -> module
};

/// Skeletal presentation as (algebra, module, cocycle); requires d = 0.
SkeletalQuadruple to_quadruple(const TwoTermAlgebra& t);
TwoTermAlgebra from_quadruple(const SkeletalQuadruple& q);
/// The 3-cocycle condition = axiom (i) at d = 0.
CheckOutcome check_cocycle(const SkeletalQuadruple& q);

/// String construction over a quadratic Lie color algebra:
/// V1 = K in degree 0, d = 0, l3(x,y,z) = B([x,y],z).
TwoTermAlgebra string_from_quadratic(const QuadraticForm& q);

struct CrossedModule {
    ColorAlgebra g, h;
    GradedMap phi;                 // h -> g, shift 0
    std::vector<GradedMap> action; // one map on h per g basis vector
};

struct CrossedVerdict {
    CheckOutcome phi_homomorphism;
    CheckOutcome equivariance; // phi(x |> h) = [x, phi(h)]_g
    CheckOutcome peiffer;      // phi(h) |> k = [h, k]_h

    bool ok() const { return phi_homomorphism.ok() && equivariance.ok() && peiffer.ok(); }
};

/// The two crossed-module identities. Preconditions (g, h Lie, action a
/// representation) are
/// enforced first and propagate their own errors.
CrossedVerdict check_crossed_module(const CrossedModule& c);

/// Crossed-module presentation of strict data; requires l3 = 0 and a
/// passing axiom sweep.
CrossedModule strict_to_crossed(const TwoTermAlgebra& t);
TwoTermAlgebra crossed_to_strict(const CrossedModule& c);

/// The Inn(g) -> Der(g) crossed module of a Lie color algebra.
CrossedModule inner_derivation_module(const ColorAlgebra& g);

} // namespace colorlie
