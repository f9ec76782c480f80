#include "qhs/pi_scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qhs {

// --- Laurent ----------------------------------------------------------------

Laurent Laurent::of_int(const Int& n) {
    Laurent r;
    if (n != 0) r.c.push_back(n);
    return r;
}

Laurent Laurent::q_power(int n) {
    Laurent r;
    r.lo = n;
    r.c.push_back(1);
    return r;
}

Laurent Laurent::monomial(const Int& coeff, int n) {
    Laurent r;
    if (coeff != 0) {
        r.lo = n;
        r.c.push_back(coeff);
    }
    return r;
}

int Laurent::degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return lo + static_cast<int>(c.size()) - 1;
}

int Laurent::low_degree() const {
    if (is_zero()) throw std::domain_error("low_degree of zero polynomial");
    return lo;
}

Int Laurent::coeff(int n) const {
    if (n < lo || n >= lo + static_cast<int>(c.size())) return 0;
    return c[n - lo];
}

void Laurent::normalize() {
    size_t b = 0, e = c.size();
    while (b < e && c[b] == 0) ++b;
    while (e > b && c[e - 1] == 0) --e;
    if (b == e) {
        c.clear();
        lo = 0;
        return;
    }
    lo += static_cast<int>(b);
    c = std::vector<Int>(c.begin() + b, c.begin() + e);
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int nlo = std::min(lo, o.lo);
    int nhi = std::max(degree(), o.degree());
    Laurent r;
    r.lo = nlo;
    r.c.assign(nhi - nlo + 1, 0);
    for (size_t i = 0; i < c.size(); ++i) r.c[lo - nlo + i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[o.lo - nlo + i] += o.c[i];
    r.normalize();
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    if (is_zero() || o.is_zero()) return Laurent();
    Laurent r;
    r.lo = lo + o.lo;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.normalize();
    return r;
}

Laurent Laurent::shifted(int k) const {
    if (is_zero()) return *this;
    Laurent r = *this;
    r.lo += k;
    return r;
}

Laurent Laurent::scaled(const Int& n) const {
    if (n == 0) return Laurent();
    Laurent r = *this;
    for (auto& x : r.c) x *= n;
    return r;
}

Int Laurent::content() const {
    Int g = 0;
    for (const auto& x : c) g = gcd(g, x);
    return g;
}

Laurent Laurent::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    if (c.back() < 0) g = -g;
    Laurent r;
    r.lo = 0;
    r.c.reserve(c.size());
    for (const auto& x : c) r.c.push_back(x / g);
    return r;
}

Int Laurent::eval_at_one() const {
    Int s = 0;
    for (const auto& x : c) s += x;
    return s;
}

std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Laurent();
    Laurent rem = a;
    Laurent quo;
    quo.lo = a.lo - b.lo;
    if (static_cast<int>(a.c.size()) < static_cast<int>(b.c.size())) return std::nullopt;
    quo.c.assign(a.c.size() - b.c.size() + 1, 0);
    const Int& lead = b.c.back();
    while (!rem.is_zero() && rem.c.size() >= b.c.size()) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.c.back().get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        int pos = rem.degree() - b.degree() - quo.lo;
        quo.c[pos] = q;
        rem = rem - b.shifted(rem.degree() - b.degree()).scaled(q);
    }
    if (!rem.is_zero()) return std::nullopt;
    quo.normalize();
    return quo;
}

namespace {

// Pseudo-remainder of primitive polynomials (lowest exponent 0).
Laurent pseudo_rem(Laurent a, const Laurent& b) {
    const Int& lead = b.c.back();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Int la = a.c.back();
        a = a.scaled(lead) - b.shifted(a.degree() - b.degree()).scaled(la);
    }
    return a;
}

}  // namespace

Laurent laurent_gcd(const Laurent& a0, const Laurent& b0) {
    auto canon = [](const Laurent& x) { return x.primitive_part().scaled(x.content()); };
    if (a0.is_zero()) return b0.is_zero() ? Laurent() : canon(b0);
    if (b0.is_zero()) return canon(a0);
    Int cont = gcd(a0.content(), b0.content());
    Laurent a = a0.primitive_part();
    Laurent b = b0.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Laurent r = pseudo_rem(a, b);
        a = b;
        b = r.is_zero() ? Laurent() : r.primitive_part();
    }
    // a is primitive with lowest exponent 0 and positive leading coefficient
    return a.scaled(cont);
}

// --- Scalar -----------------------------------------------------------------

Scalar Scalar::monomial(const Int& coeff, bool odd, int n) {
    return odd ? Scalar(Laurent::zero(), Laurent::monomial(coeff, n))
               : Scalar(Laurent::monomial(coeff, n), Laurent::zero());
}

Scalar Scalar::operator*(const Scalar& o) const {
    // (a + pi b)(c + pi d) = (ac + bd) + pi (ad + bc)
    return Scalar(ev_ * o.ev_ + od_ * o.od_, ev_ * o.od_ + od_ * o.ev_);
}

bool Scalar::operator<(const Scalar& o) const {
    auto key = [](const Laurent& l) { return std::make_pair(l.lo, l.c); };
    auto cmp_l = [&](const Laurent& x, const Laurent& y) {
        if (x.lo != y.lo) return x.lo < y.lo;
        return x.c < y.c;
    };
    if (ev_ != o.ev_) return cmp_l(ev_, o.ev_);
    (void)key;
    return cmp_l(od_, o.od_);
}

Scalar Scalar::specialize(int sign) const {
    return Scalar(sign >= 0 ? ev_ + od_ : ev_ - od_, Laurent::zero());
}

std::map<int, std::pair<Int, Int>> Scalar::terms() const {
    std::map<int, std::pair<Int, Int>> m;
    for (size_t i = 0; i < ev_.c.size(); ++i)
        if (ev_.c[i] != 0) m[ev_.lo + static_cast<int>(i)].first = ev_.c[i];
    for (size_t i = 0; i < od_.c.size(); ++i)
        if (od_.c[i] != 0) m[od_.lo + static_cast<int>(i)].second = od_.c[i];
    return m;
}

// Canonical rendering: exponents ascending, even part before odd part.
// Monomials look like 3, P, 3P, q, q^-2, 2*q^3, P*q, 2P*q^-1.
std::string Scalar::to_string() const {
    auto m = terms();
    if (m.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Int& coeff, bool odd, int n) {
        if (coeff == 0) return;
        bool neg = coeff < 0;
        Int mag = abs(coeff);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string base;
        if (mag != 1) base = mag.get_str();
        if (odd) base += "P";
        if (n == 0) {
            out << (base.empty() ? "1" : base);
            return;
        }
        std::string qs = (n == 1) ? "q" : ("q^" + std::to_string(n));
        if (base.empty())
            out << qs;
        else if (base == "P")
            out << "P*" << qs;
        else
            out << base << "*" << qs;
    };
    for (const auto& [n, ab] : m) {
        emit(ab.first, false, n);
        emit(ab.second, true, n);
    }
    return out.str();
}

namespace {

struct ScalarParser {
    const std::string& s;
    size_t pos = 0;

    explicit ScalarParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }

    Int parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("scalar parse: expected integer at " + std::to_string(start));
        return Int(s.substr(start, pos - start));
    }

    // monomial := [digits] ['P'] ['*'? 'q' ['^' int]]   (at least one component)
    Scalar parse_monomial() {
        skip_ws();
        Int coeff = 1;
        bool have_any = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = parse_int();
            have_any = true;
        }
        bool odd = false;
        if (pos < s.size() && s[pos] == 'P') {
            odd = true;
            ++pos;
            have_any = true;
        }
        skip_ws();
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            skip_ws();
        }
        int n = 0;
        if (pos < s.size() && s[pos] == 'q') {
            ++pos;
            have_any = true;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                Int e = parse_int();
                n = static_cast<int>(e.get_si());
            } else {
                n = 1;
            }
        }
        if (!have_any) throw std::invalid_argument("scalar parse: expected monomial at " + std::to_string(pos));
        return Scalar::monomial(coeff, odd, n);
    }

    Scalar parse_sum() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = (s[pos] == '-');
            ++pos;
        }
        Scalar acc = parse_monomial();
        if (neg) acc = -acc;
        while (!eof()) {
            skip_ws();
            if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) break;
            bool minus = (s[pos] == '-');
            ++pos;
            Scalar t = parse_monomial();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& str) {
    ScalarParser p(str);
    p.skip_ws();
    if (!p.eof() && p.peek() == '0') {
        size_t save = p.pos;
        ++p.pos;
        p.skip_ws();
        if (p.pos >= p.s.size()) return Scalar::zero();
        p.pos = save;
    }
    Scalar r = p.parse_sum();
    if (!p.eof()) throw std::invalid_argument("scalar parse: trailing input at " + std::to_string(p.pos));
    return r;
}

// --- RationalScalar ---------------------------------------------------------

RationalScalar::RationalScalar(Scalar num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalScalar: zero denominator");
    reduce();
}

RationalScalar RationalScalar::of_rat(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return RationalScalar(Scalar::of_int(c.get_num()), Laurent::of_int(c.get_den()));
}

void RationalScalar::reduce() {
    if (num_.is_zero()) {
        den_ = Laurent::one();
        return;
    }
    Laurent g = laurent_gcd(laurent_gcd(num_.even_part(), num_.odd_part()), den_);
    if (!(g == Laurent::one())) {
        Laurent ne = num_.even_part().is_zero() ? Laurent() : *divide_exact(num_.even_part(), g);
        Laurent no = num_.odd_part().is_zero() ? Laurent() : *divide_exact(num_.odd_part(), g);
        num_ = Scalar(ne, no);
        den_ = *divide_exact(den_, g);
    }
    // units: pull q-shift out of the denominator, fix leading sign
    int shift = den_.low_degree();
    if (shift != 0) {
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
    }
    if (den_.c.back() < 0) {
        den_ = -den_;
        num_ = -num_;
    }
}

RationalScalar RationalScalar::operator-() const {
    RationalScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalScalar RationalScalar::operator+(const RationalScalar& o) const {
    Scalar n = num_ * Scalar(o.den_, Laurent::zero()) + o.num_ * Scalar(den_, Laurent::zero());
    return RationalScalar(n, den_ * o.den_);
}

RationalScalar RationalScalar::operator-(const RationalScalar& o) const { return *this + (-o); }

RationalScalar RationalScalar::operator*(const RationalScalar& o) const {
    return RationalScalar(num_ * o.num_, den_ * o.den_);
}

RationalScalar RationalScalar::operator/(const RationalScalar& o) const { return *this * o.inverse(); }

RationalScalar RationalScalar::inverse() const {
    if (is_zero()) throw std::domain_error("RationalScalar: division by zero");
    // 1 / (n/d) = d * conj(n) / (n * conj(n)); n * conj(n) is pi-free
    Scalar nc = num_.conjugate();
    Scalar nn = num_ * nc;
    if (!nn.pi_free()) throw std::logic_error("conjugate product not pi-free");
    if (nn.is_zero()) throw std::domain_error("RationalScalar: zero divisor is not invertible");
    return RationalScalar(Scalar(den_, Laurent::zero()) * nc, nn.even_part());
}

bool RationalScalar::operator==(const RationalScalar& o) const {
    Scalar lhs = num_ * Scalar(o.den_, Laurent::zero());
    Scalar rhs = o.num_ * Scalar(den_, Laurent::zero());
    return lhs == rhs;
}

RationalScalar RationalScalar::specialize(int sign) const {
    return RationalScalar(num_.specialize(sign), den_);
}

std::string RationalScalar::to_string() const {
    if (den_ == Laurent::one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + Scalar(den_, Laurent::zero()).to_string() + ")";
}

RationalScalar RationalScalar::parse(const std::string& str) {
    auto slash = std::string::npos;
    int depth = 0;
    for (size_t i = 0; i < str.size(); ++i) {
        if (str[i] == '(') ++depth;
        if (str[i] == ')') --depth;
        if (str[i] == '/' && depth == 0) {
            slash = i;
            break;
        }
    }
    if (slash == std::string::npos) return RationalScalar(Scalar::parse(str));
    auto strip_parens = [](std::string t) {
        size_t b = t.find_first_not_of(" \t");
        size_t e = t.find_last_not_of(" \t");
        t = t.substr(b, e - b + 1);
        if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
        return t;
    };
    Scalar n = Scalar::parse(strip_parens(str.substr(0, slash)));
    Scalar d = Scalar::parse(strip_parens(str.substr(slash + 1)));
    if (!d.pi_free()) throw std::invalid_argument("rational scalar parse: denominator must be pi-free");
    return RationalScalar(n, d.even_part());
}

// --- DimSeries ---------------------------------------------------------------

DimSeries DimSeries::from_scalar(const Scalar& s, int order) {
    DimSeries r(order);
    for (const auto& [n, ab] : s.terms()) {
        if (n > order) throw std::domain_error("from_scalar: term above truncation order");
        r.add_term(n, ab.first, ab.second);
    }
    return r;
}

int DimSeries::low() const { return c_.empty() ? order_ + 1 : c_.begin()->first; }

void DimSeries::add_term(int n, const Int& even, const Int& odd) {
    if (n > order_) return;
    auto& slot = c_[n];
    slot.first += even;
    slot.second += odd;
    if (slot.first == 0 && slot.second == 0) c_.erase(n);
}

std::pair<Int, Int> DimSeries::coeff(int n) const {
    auto it = c_.find(n);
    return it == c_.end() ? std::make_pair(Int(0), Int(0)) : it->second;
}

void DimSeries::strip() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second.first == 0 && it->second.second == 0)
            it = c_.erase(it);
        else
            ++it;
    }
}

DimSeries DimSeries::operator+(const DimSeries& o) const {
    DimSeries r(std::min(order_, o.order_));
    for (const auto& [n, ab] : c_) r.add_term(n, ab.first, ab.second);
    for (const auto& [n, ab] : o.c_) r.add_term(n, ab.first, ab.second);
    return r;
}

DimSeries DimSeries::operator-(const DimSeries& o) const {
    DimSeries r(std::min(order_, o.order_));
    for (const auto& [n, ab] : c_) r.add_term(n, ab.first, ab.second);
    for (const auto& [n, ab] : o.c_) r.add_term(n, -ab.first, -ab.second);
    return r;
}

DimSeries DimSeries::operator*(const DimSeries& o) const {
    // f known to order N1 with support >= lo1, g to N2 with support >= lo2:
    // the product is trustworthy to min(N1 + lo2, N2 + lo1).
    int lo1 = is_zero() ? 0 : low();
    int lo2 = o.is_zero() ? 0 : o.low();
    int ord = std::min(order_ + lo2, o.order_ + lo1);
    DimSeries r(ord);
    for (const auto& [n, ab] : c_)
        for (const auto& [m, cd] : o.c_) {
            if (n + m > ord) continue;
            // (a + pi b)(c + pi d)
            r.add_term(n + m, ab.first * cd.first + ab.second * cd.second,
                       ab.first * cd.second + ab.second * cd.first);
        }
    return r;
}

DimSeries DimSeries::scaled(const Scalar& s) const {
    // Exact multiplication by a Laurent polynomial; trust-order bookkeeping is
    // the same as series multiplication with the polynomial fully known.
    auto ts = s.terms();
    if (ts.empty()) return DimSeries(order_);
    int s_lo = ts.begin()->first;
    DimSeries r(order_ + s_lo);
    for (const auto& [n, ab] : c_)
        for (const auto& [m, cd] : ts) {
            r.add_term(n + m, ab.first * cd.first + ab.second * cd.second,
                       ab.first * cd.second + ab.second * cd.first);
        }
    return r;
}

DimSeries DimSeries::truncated(int order) const {
    if (order > order_) throw std::domain_error("truncated: cannot extend a series");
    DimSeries r(order);
    for (const auto& [n, ab] : c_) r.add_term(n, ab.first, ab.second);
    return r;
}

bool DimSeries::operator==(const DimSeries& o) const {
    if (order_ != o.order_) throw std::domain_error("DimSeries comparison requires identical truncation order");
    return c_ == o.c_;
}

DimSeries DimSeries::specialize(int sign) const {
    DimSeries r(order_);
    for (const auto& [n, ab] : c_)
        r.add_term(n, sign >= 0 ? Int(ab.first + ab.second) : Int(ab.first - ab.second), 0);
    return r;
}

std::string DimSeries::to_string() const {
    Scalar acc;
    for (const auto& [n, ab] : c_)
        acc += Scalar::monomial(ab.first, false, n) + Scalar::monomial(ab.second, true, n);
    return acc.to_string() + " + O(q^" + std::to_string(order_ + 1) + ")";
}

// --- quantum integers --------------------------------------------------------

Scalar quantum_int(int n, int r, int p) {
    if (n < 0) throw std::domain_error("quantum_int: n must be >= 0");
    // sum_{j=0}^{n-1} pi^(p j) q^(r (2j - n + 1))
    Scalar acc;
    for (int j = 0; j < n; ++j)
        acc += Scalar::monomial(1, (p * j) % 2 != 0, r * (2 * j - n + 1));
    return acc;
}

Scalar quantum_factorial(int n, int r, int p) {
    Scalar acc = Scalar::one();
    for (int k = 1; k <= n; ++k) acc *= quantum_int(k, r, p);
    return acc;
}

Scalar quantum_binom(int n, int k, int r, int p) {
    if (k < 0 || k > n) throw std::domain_error("quantum_binom: need 0 <= k <= n");
    // compute at both specializations and recombine; every division is exact
    auto half = [&](int sign) {
        Laurent top = quantum_factorial(n, r, p).specialize(sign).even_part();
        Laurent bot = (quantum_factorial(k, r, p) * quantum_factorial(n - k, r, p)).specialize(sign).even_part();
        auto q = divide_exact(top, bot);
        if (!q) throw std::logic_error("quantum_binom: non-exact division");
        return *q;
    };
    Laurent plus = half(+1), minus = half(-1);
    Laurent two_ev = plus + minus, two_od = plus - minus;
    auto halve = [](const Laurent& l) {
        auto h = divide_exact(l, Laurent::of_int(2));
        if (!h) throw std::logic_error("quantum_binom: recombination not integral");
        return *h;
    };
    return Scalar(halve(two_ev), halve(two_od));
}

int parity_exponent(long a, int i_parity, int j_parity, long n) {
    if (a < 0) throw std::domain_error("parity_exponent: a must be >= 0");
    long v = a * n * (i_parity % 2) * (j_parity % 2) + (a * (a - 1) / 2) * (i_parity % 2);
    return static_cast<int>(v % 2);
}

RationalScalar invert(const Scalar& x) {
    if (x.is_zero()) throw std::domain_error("invert: division by zero");
    Scalar xc = x.conjugate();
    Scalar prod = x * xc;
    if (prod.is_zero()) throw std::domain_error("invert: zero divisor is not invertible");
    return RationalScalar(xc, prod.even_part());
}

DimSeries series_expand(const RationalScalar& x, int order) {
    DimSeries out(order);
    if (x.is_zero()) return out;
    const Laurent& den = x.den();  // lowest exponent 0, nonzero constant term
    const Int& d0 = den.c.front();
    int deg = den.degree();

    auto expand_part = [&](const Laurent& numpart, std::vector<Rat>& coeffs, int& start) {
        // coefficients of numpart / den from exponent numpart.lo up to order
        coeffs.clear();
        if (numpart.is_zero()) {
            start = 0;
            return;
        }
        start = numpart.low_degree();
        int count = order - start + 1;
        if (count <= 0) return;
        coeffs.assign(count, Rat(0));
        for (int t = 0; t < count; ++t) {
            Rat acc(numpart.coeff(start + t));
            for (int s = 1; s <= std::min(t, deg); ++s) acc -= Rat(den.coeff(s)) * coeffs[t - s];
            coeffs[t] = acc / Rat(d0);
            coeffs[t].canonicalize();
        }
    };

    std::vector<Rat> evc, odc;
    int ev_start = 0, od_start = 0;
    expand_part(x.num().even_part(), evc, ev_start);
    expand_part(x.num().odd_part(), odc, od_start);
    auto require_integral = [](const Rat& v, int n) {
        if (v.get_den() != 1)
            throw std::domain_error("series_expand: non-integral coefficient " + std::string(v.get_str()) +
                                    " at exponent " + std::to_string(n));
        return v.get_num();
    };
    for (size_t t = 0; t < evc.size(); ++t)
        if (evc[t] != 0) out.add_term(ev_start + static_cast<int>(t), require_integral(evc[t], ev_start + t), 0);
    for (size_t t = 0; t < odc.size(); ++t)
        if (odc[t] != 0) out.add_term(od_start + static_cast<int>(t), 0, require_integral(odc[t], od_start + t));
    return out;
}

}  // namespace qhs
