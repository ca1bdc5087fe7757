#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "colorlie/errors.hpp"

namespace colorlie {

using Rat = mpq_class;
using Int = mpz_class;

unsigned euler_phi(unsigned m);

/// Coefficients of the m-th cyclotomic polynomial, ascending powers.
/// Integer, monic, degree euler_phi(m).
std::vector<Int> cyclotomic_polynomial(unsigned m);

/// Precomputed reduction data for Q(zeta_m), built once per order and shared.
struct CycloContext {
    unsigned order = 1;
    unsigned degree = 1; // euler_phi(order)
    std::vector<Int> minimal_poly;
    // power_tail[j] = coefficients of x^(degree+j) reduced mod the minimal
    // polynomial, j = 0 .. degree-2. Empty when degree == 1.
    std::vector<std::vector<Rat>> power_tail;
};

const CycloContext& cyclo_context(unsigned m);

/// An exact element of Q(zeta_m) in the power basis 1, z, ..., z^(phi(m)-1),
/// always kept reduced mod the m-th cyclotomic polynomial. Equality is
/// field-wise identity of the representation.
class Scalar {
public:
    Scalar() : order_(1), coeffs_(1, Rat(0)) {}

    static Scalar zero(unsigned m);
    static Scalar one(unsigned m);
    static Scalar rational(unsigned m, const Rat& q);
    static Scalar integer(unsigned m, long n);
    /// zeta_m^k (k taken mod m).
    static Scalar root(unsigned m, long k);
    /// From raw power-basis coefficients of any length (reduced here).
    static Scalar from_coeffs(unsigned m, std::vector<Rat> raw);

    unsigned order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rat rational_value() const;

    Scalar operator-() const;
    Scalar inv() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    bool operator==(const Scalar& b) const {
        return order_ == b.order_ && coeffs_ == b.coeffs_;
    }
    bool operator!=(const Scalar& b) const { return !(*this == b); }

    /// Canonical literal, e.g. "1/2*z^3 - 1" -> printed as "-1 + 1/2*z^3".
    std::string str() const;

private:
    Scalar(unsigned m, std::vector<Rat> reduced)
        : order_(m), coeffs_(std::move(reduced)) {}

    unsigned order_;
    std::vector<Rat> coeffs_;
};

/// zeta_m^exponent as a formal pair; multiplicative in the exponent.
struct RootOfUnity {
    unsigned order = 1;
    unsigned exponent = 0;

    RootOfUnity() = default;
    RootOfUnity(unsigned m, long k);

    Scalar to_scalar() const { return Scalar::root(order, exponent); }
    RootOfUnity inverse() const { return RootOfUnity(order, -long(exponent)); }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    bool operator==(const RootOfUnity& b) const {
        return order == b.order && exponent == b.exponent;
    }
};

/// Parses the scalar literal grammar: sum of terms `q`, `q*z^k`, `z^k`, `z`,
/// with rational q written `a` or `a/b`. Throws ParseError on bad input.
Scalar parse_scalar(unsigned m, const std::string& text);

std::string rat_str(const Rat& q);

} // namespace colorlie
