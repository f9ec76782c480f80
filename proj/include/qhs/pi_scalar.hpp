#ifndef QHS_PI_SCALAR_HPP
#define QHS_PI_SCALAR_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhs {

using Int = mpz_class;
using Rat = mpq_class;

/// Laurent polynomial over Z in one variable q: c[0]*q^lo + c[1]*q^(lo+1) + ...
/// Invariant: empty coefficient vector means zero; otherwise c.front() != 0
/// and c.back() != 0.
struct Laurent {
    int lo = 0;
    std::vector<Int> c;

    Laurent() = default;
    static Laurent zero() { return Laurent{}; }
    static Laurent one() { return of_int(1); }
    static Laurent of_int(const Int& n);
    static Laurent q_power(int n);
    static Laurent monomial(const Int& coeff, int n);

    bool is_zero() const { return c.empty(); }
    int degree() const;      // highest exponent; zero polynomial -> throws
    int low_degree() const;  // lowest exponent
    Int coeff(int n) const;
    void normalize();  // strip zero ends, fix lo

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    bool operator==(const Laurent& o) const { return (lo == o.lo && c == o.c) || (is_zero() && o.is_zero()); }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent shifted(int k) const;  // * q^k
    Laurent scaled(const Int& n) const;

    Int content() const;                  // gcd of coefficients, >= 0
    Laurent primitive_part() const;       // this / (content * q^lo), lowest exponent 0
    Int eval_at_one() const;
};

/// Exact division in Z[q, q^-1]; nullopt if b does not divide a.
std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b);

/// gcd up to units +-q^k, returned with lowest exponent 0 and positive leading
/// coefficient. gcd(0, b) = normalized b.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

/// Element of Z^pi[q, q^-1] where pi^2 = 1: even + pi * odd.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Laurent& even, const Laurent& odd) : ev_(even), od_(odd) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Laurent::one(), Laurent::zero()); }
    static Scalar pi() { return Scalar(Laurent::zero(), Laurent::one()); }
    static Scalar of_int(const Int& n) { return Scalar(Laurent::of_int(n), Laurent::zero()); }
    static Scalar q_power(int n) { return Scalar(Laurent::q_power(n), Laurent::zero()); }
    static Scalar monomial(const Int& coeff, bool odd, int n);
    /// pi^e for a parity bit e.
    static Scalar pi_power(int e) { return (e % 2) ? pi() : one(); }

    const Laurent& even_part() const { return ev_; }
    const Laurent& odd_part() const { return od_; }

    bool is_zero() const { return ev_.is_zero() && od_.is_zero(); }
    bool is_one() const { return *this == one(); }
    bool pi_free() const { return od_.is_zero(); }

    Scalar operator-() const { return Scalar(-ev_, -od_); }
    Scalar operator+(const Scalar& o) const { return Scalar(ev_ + o.ev_, od_ + o.od_); }
    Scalar operator-(const Scalar& o) const { return Scalar(ev_ - o.ev_, od_ - o.od_); }
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    bool operator==(const Scalar& o) const { return ev_ == o.ev_ && od_ == o.od_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // arbitrary total order for map keys

    Scalar conjugate() const { return Scalar(ev_, -od_); }  // pi -> -pi
    Scalar shifted(int k) const { return Scalar(ev_.shifted(k), od_.shifted(k)); }
    Scalar scaled(const Int& n) const { return Scalar(ev_.scaled(n), od_.scaled(n)); }
    /// Evaluate pi -> sign (+1 or -1); result is pi-free.
    Scalar specialize(int sign) const;

    /// Term map exponent -> (even, odd) with no (0,0) entries.
    std::map<int, std::pair<Int, Int>> terms() const;

    std::string to_string() const;
    static Scalar parse(const std::string& s);

private:
    Laurent ev_, od_;
};

/// Element of Q(q)^pi with a pi-free denominator, kept reduced:
/// gcd(num.even, num.odd, den) is a unit, den has lowest exponent 0 and
/// positive leading coefficient.
class RationalScalar {
public:
    RationalScalar() : num_(Scalar::zero()), den_(Laurent::one()) {}
    RationalScalar(Scalar num, Laurent den);
    explicit RationalScalar(const Scalar& s) : num_(s), den_(Laurent::one()) {}

    static RationalScalar zero() { return RationalScalar(); }
    static RationalScalar one() { return RationalScalar(Scalar::one()); }
    static RationalScalar of_int(const Int& n) { return RationalScalar(Scalar::of_int(n)); }
    static RationalScalar of_rat(const Rat& r);

    const Scalar& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_ == Laurent::one(); }

    RationalScalar operator-() const;
    RationalScalar operator+(const RationalScalar& o) const;
    RationalScalar operator-(const RationalScalar& o) const;
    RationalScalar operator*(const RationalScalar& o) const;
    RationalScalar operator/(const RationalScalar& o) const;
    RationalScalar& operator+=(const RationalScalar& o) { *this = *this + o; return *this; }
    RationalScalar& operator-=(const RationalScalar& o) { *this = *this - o; return *this; }
    RationalScalar& operator*=(const RationalScalar& o) { *this = *this * o; return *this; }

    bool operator==(const RationalScalar& o) const;
    bool operator!=(const RationalScalar& o) const { return !(*this == o); }

    RationalScalar inverse() const;
    RationalScalar specialize(int sign) const;

    std::string to_string() const;
    static RationalScalar parse(const std::string& s);

private:
    Scalar num_;
    Laurent den_;
    void reduce();
};

/// Truncated (q, pi)-dimension series: coefficients for exponents <= order.
class DimSeries {
public:
    explicit DimSeries(int order) : order_(order) {}

    static DimSeries zero(int order) { return DimSeries(order); }
    static DimSeries from_scalar(const Scalar& s, int order);

    int order() const { return order_; }
    /// Lowest exponent with nonzero coefficient; for the zero series returns
    /// order() + 1.
    int low() const;
    bool is_zero() const { return c_.empty(); }

    void add_term(int n, const Int& even, const Int& odd);
    std::pair<Int, Int> coeff(int n) const;
    const std::map<int, std::pair<Int, Int>>& coeffs() const { return c_; }

    DimSeries operator+(const DimSeries& o) const;
    DimSeries operator-(const DimSeries& o) const;
    DimSeries operator*(const DimSeries& o) const;
    DimSeries scaled(const Scalar& s) const;  // multiply by a Laurent scalar, order shrinks accordingly
    DimSeries truncated(int order) const;

    /// Equality demands identical truncation order.
    bool operator==(const DimSeries& o) const;
    bool operator!=(const DimSeries& o) const { return !(*this == o); }

    DimSeries specialize(int sign) const;
    std::string to_string() const;

private:
    int order_;
    std::map<int, std::pair<Int, Int>> c_;  // no (0,0) entries
    void strip();
};

// --- quantum integers -------------------------------------------------------

/// [n] with q_i = q^r and sign pi^p:
/// ((pi^p q^r)^n - q^(-rn)) / (pi^p q^r - q^(-r)), expanded exactly.
Scalar quantum_int(int n, int r, int p);
Scalar quantum_factorial(int n, int r, int p);
/// [n choose k]; throws std::domain_error unless 0 <= k <= n.
Scalar quantum_binom(int n, int k, int r, int p);

/// a*n*p(i)*p(j) + a*(a-1)/2 * p(i) mod 2.
int parity_exponent(long a, int i_parity, int j_parity, long n);

/// 1/x with pi-free denominator via conjugate multiplication.
/// Throws std::domain_error if x is zero or a zero divisor.
RationalScalar invert(const Scalar& x);

/// Power series expansion of x to order N. Coefficients must come out
/// integral; otherwise throws std::domain_error naming the obstructing
/// exponent.
DimSeries series_expand(const RationalScalar& x, int order);

}  // namespace qhs

#endif
