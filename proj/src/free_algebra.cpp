#include "qhs/free_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace qhs {

FreeElement FreeElement::of_word(const Word& w) {
    FreeElement e;
    e.terms_[w] = RationalScalar::one();
    return e;
}

RationalScalar FreeElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RationalScalar::zero() : it->second;
}

void FreeElement::add(const Word& w, const RationalScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
    FreeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
    FreeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, -c);
    return r;
}

FreeElement FreeElement::operator-() const {
    FreeElement r;
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

FreeElement FreeElement::scaled(const RationalScalar& c) const {
    FreeElement r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.terms_[w] = k * c;
    return r;
}

bool FreeElement::operator==(const FreeElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (!(it->second == jt->second)) return false;
    }
    return true;
}

std::optional<Weight> FreeElement::weight(const Superdatum& d) const {
    std::optional<Weight> w;
    for (const auto& [word, c] : terms_) {
        Weight wt(d.size(), 0);
        for (int v : word) ++wt.at(v);
        if (!w)
            w = wt;
        else if (*w != wt)
            return std::nullopt;
    }
    if (!w) w = Weight(d.size(), 0);
    return w;
}

int FreeElement::parity(const Superdatum& d) const {
    if (terms_.empty()) return 0;
    return d.seq_parity(terms_.begin()->first);
}

FreeElement FreeElement::specialize(int sign) const {
    FreeElement r;
    for (const auto& [w, c] : terms_) r.add(w, c.specialize(sign));
    return r;
}

std::string FreeElement::to_string(const Superdatum& d) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        if (w.empty()) out << "*1";
        for (int v : w) out << "*h(" << d.name(v) << ")";
    }
    return out.str();
}

FreeElement mult(const FreeElement& x, const FreeElement& y) {
    FreeElement r;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            r.add(w, ca * cb);
        }
    return r;
}

void TensorElement::add(const Word& a, const Word& b, const RationalScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool TensorElement::operator==(const TensorElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (!(it->second == jt->second)) return false;
    }
    return true;
}

namespace {

int word_parity(const Superdatum& d, const Word& w) { return d.seq_parity(w); }

int weight_dot(const Superdatum& d, const Word& a, const Word& b) {
    int s = 0;
    for (int x : a)
        for (int y : b) s += d.dot(x, y);
    return s;
}

}  // namespace

TensorElement tensor_mult(const Superdatum& d, const TensorElement& A, const TensorElement& B) {
    TensorElement r;
    for (const auto& [xy, cx] : A.terms())
        for (const auto& [uv, cu] : B.terms()) {
            const Word& x2 = xy.second;
            const Word& y1 = uv.first;
            int twist_p = word_parity(d, x2) * word_parity(d, y1);
            int twist_q = -weight_dot(d, x2, y1);
            RationalScalar c = cx * cu *
                               RationalScalar(Scalar::pi_power(twist_p) * Scalar::q_power(twist_q));
            Word w1 = xy.first;
            w1.insert(w1.end(), y1.begin(), y1.end());
            Word w2 = x2;
            w2.insert(w2.end(), uv.second.begin(), uv.second.end());
            r.add(w1, w2, c);
        }
    return r;
}

TensorElement coproduct(const Superdatum& d, const FreeElement& x) {
    TensorElement out;
    for (const auto& [w, c] : x.terms()) {
        TensorElement acc;
        acc.add({}, {}, c);
        for (int letter : w) {
            TensorElement gen;
            gen.add({letter}, {}, RationalScalar::one());
            gen.add({}, {letter}, RationalScalar::one());
            acc = tensor_mult(d, acc, gen);
        }
        for (const auto& [ab, cc] : acc.terms()) out.add(ab.first, ab.second, cc);
    }
    return out;
}

FreeElement rho_component(const Superdatum& d, int i, const FreeElement& x) {
    FreeElement out;
    for (const auto& [w, c] : x.terms()) {
        // rho(i, j w') = delta_ij w' + pi^(p(i)p(j)) q^(-i.j) theta_j rho(i, w'),
        // unrolled over the positions of the letter i in w
        RationalScalar prefix = c;
        for (size_t t = 0; t < w.size(); ++t) {
            int j = w[t];
            if (j == i) {
                Word rest(w.begin(), w.begin() + t);
                rest.insert(rest.end(), w.begin() + t + 1, w.end());
                out.add(rest, prefix);
            }
            prefix = prefix * RationalScalar(Scalar::pi_power(d.parity(i) * d.parity(j)) *
                                             Scalar::q_power(-d.dot(i, j)));
        }
    }
    return out;
}

RationalScalar kappa(const Superdatum& d, int i) {
    Scalar x = Scalar::one() - Scalar::pi_power(d.parity(i)) * Scalar::q_power(2 * d.r(i));
    return invert(x);
}

RationalScalar FormCalc::words(const Word& a, const Word& b) {
    if (a.size() != b.size()) return RationalScalar::zero();
    if (a.empty()) return RationalScalar::one();
    Weight wa(d_.size(), 0), wb(d_.size(), 0);
    for (int v : a) ++wa[v];
    for (int v : b) ++wb[v];
    if (wa != wb) return RationalScalar::zero();
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    int i = a.front();
    Word rest(a.begin() + 1, a.end());
    FreeElement rb = rho_component(d_, i, FreeElement::of_word(b));
    RationalScalar acc;
    for (const auto& [w, c] : rb.terms()) acc += c * words(rest, w);
    acc = kappa(d_, i) * acc;
    memo_[key] = acc;
    return acc;
}

RationalScalar FormCalc::elements(const FreeElement& x, const FreeElement& y) {
    RationalScalar acc;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) acc += ca * cb * words(a, b);
    return acc;
}

RationalScalar form(const Superdatum& d, const FreeElement& x, const FreeElement& y) {
    FormCalc calc(d);
    return calc.elements(x, y);
}

GramMatrix gram(const Superdatum& d, const Weight& nu, int max_height, int jobs) {
    if (Superdatum::height(nu) > max_height)
        throw std::domain_error("gram: weight height exceeds the configured bound");
    GramMatrix g;
    for (const auto& s : sequences_of_weight(nu)) g.words.push_back(s);
    size_t n = g.words.size();
    g.entry.assign(n, std::vector<RationalScalar>(n));
    auto run_rows = [&](size_t lo, size_t hi) {
        FormCalc calc(d);
        for (size_t r = lo; r < hi && r < n; ++r)
            for (size_t c = 0; c < n; ++c) g.entry[r][c] = calc.words(g.words[r], g.words[c]);
    };
    if (jobs <= 1 || n < 4) {
        run_rows(0, n);
    } else {
        size_t chunk = (n + jobs - 1) / jobs;
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t)
            threads.emplace_back(run_rows, t * chunk, std::min(n, (t + 1) * chunk));
        for (auto& th : threads) th.join();
    }
    return g;
}

FreeElement serre_element(const Superdatum& d, int i, int j, int n) {
    if (!d.is_real(i)) throw std::domain_error("serre_element: first vertex must be real");
    if (i == j) throw std::invalid_argument("serre_element: need i != j");
    if (n < 1) throw std::invalid_argument("serre_element: n must be >= 1");
    int m = 1 - n * d.a(i, j);
    FreeElement out;
    for (int a = 0; a <= m; ++a) {
        int b = m - a;
        Word w;
        w.insert(w.end(), a, i);
        w.insert(w.end(), n, j);
        w.insert(w.end(), b, i);
        Scalar sign = (a % 2) ? -Scalar::one() : Scalar::one();
        sign *= Scalar::pi_power(parity_exponent(a, d.parity(i), d.parity(j), n));
        RationalScalar c = RationalScalar(sign) *
                           invert(quantum_factorial(a, d.r(i), d.parity(i)) *
                                  quantum_factorial(b, d.r(i), d.parity(i)));
        out.add(w, c);
    }
    return out;
}

FreeElement commutator_element(const Superdatum& d, int i, int j) {
    if (d.dot(i, j) != 0) throw std::domain_error("commutator_element: needs i.j = 0");
    FreeElement out;
    out.add({i, j}, RationalScalar::one());
    out.add({j, i}, -RationalScalar(Scalar::pi_power(d.parity(i) * d.parity(j))));
    return out;
}

RadicalReport radical_member(const Superdatum& d, const FreeElement& x, int max_height) {
    RadicalReport rep;
    auto nu = x.weight(d);
    if (!nu) throw std::invalid_argument("radical_member: element is not homogeneous");
    if (Superdatum::height(*nu) > max_height)
        throw std::domain_error("radical_member: weight height exceeds the configured bound");

    auto words = sequences_of_weight(*nu);
    FormCalc calc(d);
    bool all_zero = true;
    for (const auto& w : words) {
        RationalScalar p = calc.elements(FreeElement::of_word(w), x);
        if (!p.is_zero()) all_zero = false;
        rep.pairings.push_back(p);
    }
    rep.in_radical = all_zero;

    // second criterion: iterated rho components along every sequence
    bool rho_zero = true;
    for (const auto& w : words) {
        FreeElement v = x;
        for (int letter : w) v = rho_component(d, letter, v);
        if (!v.coeff({}).is_zero()) rho_zero = false;
    }
    rep.iterated_rho_agrees = (rho_zero == all_zero);
    return rep;
}

}  // namespace qhs
