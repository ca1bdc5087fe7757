#include "colorlie/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace colorlie {

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Dense integer polynomials, ascending powers, trailing zeros trimmed.
using IPoly = std::vector<Int>;

void itrim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor.
IPoly idiv_exact(IPoly num, const IPoly& den) {
    itrim(num);
    IPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    while (num.size() >= den.size()) {
        const size_t shift = num.size() - den.size();
        Int c = num.back();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        itrim(num);
    }
    if (!num.empty()) fail("InternalError", "inexact cyclotomic division");
    return q;
}

} // namespace

std::vector<Int> cyclotomic_polynomial(unsigned m) {
    if (m == 0) fail("InvalidOrder", "cyclotomic order must be >= 1");
    static std::map<unsigned, IPoly> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;

    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, over the divisors of m.
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d != 0 || memo.count(d)) continue;
        IPoly num(d + 1, Int(0)); // x^d - 1
        num[0] = -1;
        num[d] = 1;
        for (unsigned e = 1; e < d; ++e) {
            if (d % e == 0) num = idiv_exact(std::move(num), memo.at(e));
        }
        memo[d] = std::move(num);
    }
    return memo.at(m);
}

const CycloContext& cyclo_context(unsigned m) {
    if (m == 0) fail("InvalidOrder", "cyclotomic order must be >= 1");
    static std::map<unsigned, CycloContext> contexts;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = contexts.find(m);
    if (it != contexts.end()) return it->second;

    CycloContext ctx;
    ctx.order = m;
    ctx.minimal_poly = cyclotomic_polynomial(m);
    ctx.degree = unsigned(ctx.minimal_poly.size() - 1);

    // power_tail[j] = x^(degree+j) reduced, enough rows to cover products of
    // two reduced elements (top power 2*degree-2), and at least one row.
    const unsigned rows = ctx.degree >= 2 ? ctx.degree - 1 : 1;
    std::vector<Rat> row(ctx.degree, Rat(0));
    for (unsigned i = 0; i < ctx.degree; ++i) row[i] = Rat(-ctx.minimal_poly[i]);
    ctx.power_tail.push_back(row);
    for (unsigned j = 1; j < rows; ++j) {
        std::vector<Rat> next(ctx.degree, Rat(0));
        const Rat top = row[ctx.degree - 1];
        for (unsigned i = 0; i + 1 < ctx.degree; ++i) next[i + 1] = row[i];
        if (top != 0) {
            for (unsigned i = 0; i < ctx.degree; ++i)
                next[i] += top * Rat(-ctx.minimal_poly[i]);
        }
        row = std::move(next);
        ctx.power_tail.push_back(row);
    }

    auto [pos, inserted] = contexts.emplace(m, std::move(ctx));
    return pos->second;
}

namespace {

std::vector<Rat> reduce_coeffs(const CycloContext& ctx, std::vector<Rat> raw) {
    std::vector<Rat> out(ctx.degree, Rat(0));
    const size_t n = raw.size();
    for (size_t i = 0; i < n && i < ctx.degree; ++i) out[i] = raw[i];
    for (size_t i = ctx.degree; i < n; ++i) {
        if (raw[i] == 0) continue;
        const size_t j = i - ctx.degree;
        if (j >= ctx.power_tail.size())
            fail("InternalError", "cyclotomic reduction out of range");
        for (unsigned k = 0; k < ctx.degree; ++k)
            out[k] += raw[i] * ctx.power_tail[j][k];
    }
    for (auto& c : out) c.canonicalize();
    return out;
}

// Rational polynomials for inversion only.
using QPoly = std::vector<Rat>;

int qdeg(const QPoly& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly qsub_scaled(QPoly a, const QPoly& b, const Rat& c, size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    for (auto& x : a) x.canonicalize();
    return a;
}

// (quotient, remainder) with nonzero divisor.
std::pair<QPoly, QPoly> qdivmod(QPoly num, const QPoly& den) {
    const int dd = qdeg(den);
    QPoly q(num.size(), Rat(0));
    int dn = qdeg(num);
    while (dn >= dd) {
        Rat c = num[dn] / den[dd];
        c.canonicalize();
        q[dn - dd] = c;
        num = qsub_scaled(std::move(num), den, c, size_t(dn - dd));
        dn = qdeg(num);
    }
    return {q, num};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    QPoly out(a.size() + b.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    for (auto& c : out) c.canonicalize();
    return out;
}

} // namespace

Scalar Scalar::zero(unsigned m) {
    const auto& ctx = cyclo_context(m);
    return Scalar(m, std::vector<Rat>(ctx.degree, Rat(0)));
}

Scalar Scalar::one(unsigned m) { return rational(m, Rat(1)); }

Scalar Scalar::rational(unsigned m, const Rat& q) {
    const auto& ctx = cyclo_context(m);
    std::vector<Rat> c(ctx.degree, Rat(0));
    c[0] = q;
    c[0].canonicalize();
    return Scalar(m, std::move(c));
}

Scalar Scalar::integer(unsigned m, long n) { return rational(m, Rat(n)); }

Scalar Scalar::root(unsigned m, long k) {
    if (m == 0) fail("InvalidOrder", "cyclotomic order must be >= 1");
    long e = k % long(m);
    if (e < 0) e += m;
    std::vector<Rat> c(size_t(e) + 1, Rat(0));
    c[size_t(e)] = 1;
    return from_coeffs(m, std::move(c));
}

Scalar Scalar::from_coeffs(unsigned m, std::vector<Rat> raw) {
    const auto& ctx = cyclo_context(m);
    while (!raw.empty() && raw.back() == 0) raw.pop_back();
    if (raw.size() > size_t(ctx.degree) + ctx.power_tail.size()) {
        // Powers beyond the precomputed tail: fold down one step at a time.
        std::vector<Rat> acc(ctx.degree, Rat(0));
        std::vector<Rat> power(ctx.degree, Rat(0));
        power[0] = 1;
        for (size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != 0)
                for (unsigned t = 0; t < ctx.degree; ++t) acc[t] += raw[i] * power[t];
            std::vector<Rat> shifted(ctx.degree + 1, Rat(0));
            for (unsigned t = 0; t < ctx.degree; ++t) shifted[t + 1] = power[t];
            power = reduce_coeffs(ctx, std::move(shifted));
        }
        for (auto& c : acc) c.canonicalize();
        return Scalar(m, std::move(acc));
    }
    return Scalar(m, reduce_coeffs(ctx, std::move(raw)));
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat Scalar::rational_value() const {
    if (!is_rational()) fail("InternalError", "scalar is not rational");
    return coeffs_[0];
}

Scalar Scalar::operator-() const {
    std::vector<Rat> c = coeffs_;
    for (auto& x : c) x = -x;
    return Scalar(order_, std::move(c));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.order_ != b.order_)
        fail("OrderMismatch", "scalars of order " + std::to_string(a.order_) +
                                  " and " + std::to_string(b.order_));
    std::vector<Rat> c = a.coeffs_;
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] += b.coeffs_[i];
        c[i].canonicalize();
    }
    return Scalar(a.order_, std::move(c));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.order_ != b.order_)
        fail("OrderMismatch", "scalars of order " + std::to_string(a.order_) +
                                  " and " + std::to_string(b.order_));
    const auto& ctx = cyclo_context(a.order_);
    std::vector<Rat> conv(2 * size_t(ctx.degree), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Scalar(a.order_, reduce_coeffs(ctx, std::move(conv)));
}

Scalar Scalar::inv() const {
    if (is_zero()) fail("InversionOfZero", "cannot invert 0 in Q(zeta_m)");
    const auto& ctx = cyclo_context(order_);
    if (ctx.degree == 1) {
        Rat r = Rat(1) / coeffs_[0];
        r.canonicalize();
        return rational(order_, r);
    }
    // Extended Euclid against the minimal polynomial; it is irreducible over
    // Q, so the gcd with any nonzero reduced element is a nonzero constant.
    QPoly r0(ctx.minimal_poly.size());
    for (size_t i = 0; i < ctx.minimal_poly.size(); ++i) r0[i] = Rat(ctx.minimal_poly[i]);
    QPoly r1(coeffs_.begin(), coeffs_.end());
    QPoly u0{Rat(0)}, u1{Rat(1)};
    while (qdeg(r1) > 0) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly u2 = qsub_scaled(u0, qmul(q, u1), Rat(1), 0);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (qdeg(r1) != 0) fail("InternalError", "minimal polynomial not coprime to element");
    const Rat c = r1[0];
    std::vector<Rat> out(ctx.degree, Rat(0));
    for (size_t i = 0; i < u1.size() && i < ctx.degree; ++i) {
        out[i] = u1[i] / c;
        out[i].canonicalize();
    }
    return Scalar(order_, std::move(out));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

std::string rat_str(const Rat& q) { return q.get_str(); }

std::string Scalar::str() const {
    std::string out;
    bool first = true;
    for (size_t p = 0; p < coeffs_.size(); ++p) {
        const Rat& q = coeffs_[p];
        if (q == 0) continue;
        const bool neg = q < 0;
        Rat a = neg ? Rat(-q) : q;
        a.canonicalize();
        std::string piece;
        if (p == 0) {
            piece = rat_str(a);
        } else {
            std::string zs = (p == 1) ? "z" : "z^" + std::to_string(p);
            piece = (a == 1) ? zs : rat_str(a) + "*" + zs;
        }
        if (first) {
            out = (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return first ? "0" : out;
}

RootOfUnity::RootOfUnity(unsigned m, long k) {
    if (m == 0) fail("InvalidOrder", "root of unity order must be >= 1");
    order = m;
    long e = k % long(m);
    if (e < 0) e += m;
    exponent = unsigned(e);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    if (a.order != b.order)
        fail("OrderMismatch", "roots of unity of different order");
    return RootOfUnity(a.order, long(a.exponent) + long(b.exponent));
}

namespace {

struct LiteralParser {
    const std::string& text;
    size_t pos = 0;

    explicit LiteralParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void error(const std::string& what) {
        fail("ParseError", "scalar literal '" + text + "' at position " +
                               std::to_string(pos) + ": " + what);
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            error("expected a number");
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::string digits = text.substr(start, pos - start);
        if (digits.size() > 18) error("number too large");
        return std::stoul(digits);
    }

    // term := rational ['*' z ['^' k]] | z ['^' k] ; returns (coefficient, power)
    std::pair<Rat, unsigned long> parse_term() {
        Rat coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            unsigned long num = parse_uint();
            unsigned long den = 1;
            if (peek() == '/') {
                ++pos;
                den = parse_uint();
                if (den == 0) error("zero denominator");
            }
            coeff = Rat(long(num), long(den));
            coeff.canonicalize();
            have_coeff = true;
            if (peek() == '*') {
                ++pos;
                if (peek() != 'z') error("expected z after *");
            } else {
                return {coeff, 0};
            }
        }
        if (peek() == 'z') {
            ++pos;
            unsigned long power = 1;
            if (peek() == '^') {
                ++pos;
                power = parse_uint();
            }
            return {coeff, power};
        }
        if (have_coeff) return {coeff, 0};
        error("expected a term");
    }
};

} // namespace

Scalar parse_scalar(unsigned m, const std::string& text) {
    LiteralParser p(text);
    if (p.eof()) fail("ParseError", "empty scalar literal");
    Scalar acc = Scalar::zero(m);
    int sign = 1;
    if (p.peek() == '-') {
        sign = -1;
        ++p.pos;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    while (true) {
        auto [coeff, power] = p.parse_term();
        Rat signed_coeff = sign < 0 ? Rat(-coeff) : coeff;
        signed_coeff.canonicalize();
        acc += Scalar::rational(m, signed_coeff) * Scalar::root(m, long(power % m));
        if (p.eof()) break;
        char c = p.peek();
        if (c == '+') {
            sign = 1;
            ++p.pos;
        } else if (c == '-') {
            sign = -1;
            ++p.pos;
        } else {
            p.error("expected + or -");
        }
        if (p.eof()) p.error("dangling sign");
    }
    return acc;
}

} // namespace colorlie
