#pragma once

#include "colorlie/twoterm.hpp"

namespace colorlie {

/// Morphism of the color 2-vector space attached to V1 -> V0: a pair (x, h)
/// with source x and target x + dh.
struct Morphism2 {
    Vec src;  // in V0
    Vec lift; // in V1

    bool operator==(const Morphism2& g) const { return src == g.src && lift == g.lift; }
    bool operator!=(const Morphism2& g) const { return !(*this == g); }

    friend Morphism2 operator+(const Morphism2& f, const Morphism2& g) {
        return Morphism2{f.src + g.src, f.lift + g.lift};
    }
    friend Morphism2 operator*(const Scalar& c, const Morphism2& f) {
        return Morphism2{c * f.src, c * f.lift};
    }
};

Vec morphism_target(const TwoTermAlgebra& t, const Morphism2& f);
Morphism2 identity_morphism(const TwoTermAlgebra& t, const Vec& x);

/// f followed by g: (x,h) then (x+dh, k) = (x, h+k). NonComposable unless
/// the target of f equals the source of g.
Morphism2 compose2(const TwoTermAlgebra& t, const Morphism2& f, const Morphism2& g);

/// [(x,h),(y,k)] = (l2(x,y), l2(x,k) + l2(h,y) + l2(dh,k)).
Morphism2 bracket_functor(const TwoTermAlgebra& t, const Morphism2& f, const Morphism2& g);

/// J_{x,y,z} = ([[x,y],z], l3(x,y,z)) for homogeneous objects.
Morphism2 jacobiator(const TwoTermAlgebra& t, const Vec& x, const Vec& y, const Vec& z);

struct JacobiatorReport {
    CheckOutcome coherence;     // both composite paths agree as morphisms
    CheckOutcome common_target; // the displayed targets P and Q agree with both paths

    bool ok() const { return coherence.ok() && common_target.ok(); }
};

/// The Jacobiator identity on all V0 basis quadruples (w,x,y,z), composed as
/// actual morphisms along both paths of the coherence diagram. Requires
/// axioms (a)-(h); their failure propagates as an error.
JacobiatorReport check_jacobiator_identity(const TwoTermAlgebra& t);

/// Forward to the bracket functor and Jacobiator, backward through
/// ker(s) -> V0; returns the rebuilt 2-term data (equal to the input when the
/// correspondence is exact).
TwoTermAlgebra lc2_roundtrip(const TwoTermAlgebra& t);

} // namespace colorlie
