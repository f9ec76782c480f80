#include "qhs/boson.hpp"

namespace qhs {

Scalar pi_sign(PiMode mode, int exponent) {
    int e = exponent % 2;
    switch (mode) {
        case PiMode::Generic: return Scalar::pi_power(e);
        case PiMode::Plus: return Scalar::one();
        case PiMode::Minus: return e ? -Scalar::one() : Scalar::one();
    }
    return Scalar::one();
}

namespace {

FreeElement lowering_op(const Superdatum& d, int i, const FreeElement& x, PiMode mode, int q_dir) {
    FreeElement out;
    for (const auto& [w, c] : x.terms()) {
        RationalScalar prefix = c;
        for (size_t t = 0; t < w.size(); ++t) {
            int j = w[t];
            if (j == i) {
                Word rest(w.begin(), w.begin() + t);
                rest.insert(rest.end(), w.begin() + t + 1, w.end());
                out.add(rest, prefix);
            }
            prefix = prefix * RationalScalar(pi_sign(mode, d.parity(i) * d.parity(j)) *
                                             Scalar::q_power(q_dir * d.r(i) * d.a(i, j)));
        }
    }
    return out;
}

}  // namespace

FreeElement e_prime(const Superdatum& d, int i, const FreeElement& x, PiMode mode) {
    return lowering_op(d, i, x, mode, -1);
}

FreeElement e_dprime(const Superdatum& d, int i, const FreeElement& x, PiMode mode) {
    return lowering_op(d, i, x, mode, +1);
}

RationalScalar boson_form(const Superdatum& d, const FreeElement& x, const FreeElement& y,
                          const std::vector<RationalScalar>& kappa_by_vertex, PiMode mode) {
    for (const auto& k : kappa_by_vertex)
        if (k.is_zero()) throw std::domain_error("boson_form: kappa values must be nonzero");
    auto wx = x.weight(d);
    auto wy = y.weight(d);
    if (!wx || !wy) throw std::invalid_argument("boson_form: arguments must be homogeneous");
    if (*wx != *wy) return RationalScalar::zero();

    // recursion on the first letter of the first argument
    std::function<RationalScalar(const Word&, const FreeElement&)> go =
        [&](const Word& a, const FreeElement& rhs) -> RationalScalar {
        if (a.empty()) return rhs.coeff({});
        int i = a.front();
        Word rest(a.begin() + 1, a.end());
        FreeElement lowered = e_prime(d, i, rhs, mode);
        RationalScalar acc;
        for (const auto& [w, c] : lowered.terms()) {
            Word ww = w;
            FreeElement single = FreeElement::of_word(ww).scaled(c);
            acc += go(rest, single);
        }
        return kappa_by_vertex.at(i) * acc;
    };
    RationalScalar acc;
    for (const auto& [a, ca] : x.terms()) acc += ca * go(a, y);
    return acc;
}

std::vector<Word> words_up_to(const Superdatum& d, int max_len) {
    std::vector<Word> out{{}};
    std::vector<Word> frontier{{}};
    for (int l = 1; l <= max_len; ++l) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (int v = 0; v < d.size(); ++v) {
                Word nw = w;
                nw.push_back(v);
                next.push_back(nw);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = next;
    }
    return out;
}

OperatorCheckReport serre_operator_identity_check(const Superdatum& d, int i, int j, int k,
                                                  int max_len, bool mutate_sign) {
    OperatorCheckReport rep;
    if (!d.is_real(i) || i == j) {
        rep.ok = false;
        rep.note = "needs a real vertex i and j != i";
        return rep;
    }
    int m = 1 - d.a(i, j);
    auto S = [&](const FreeElement& x) {
        FreeElement acc;
        for (int a = 0; a <= m; ++a) {
            int b = m - a;
            Scalar coeff = quantum_binom(m, a, d.r(i), d.parity(i)).specialize(-1);
            int sgn = (a + parity_exponent(a, d.parity(i), d.parity(j), 1)) % 2;
            if (mutate_sign && a == 1) sgn ^= 1;
            if (sgn) coeff = -coeff;
            FreeElement v = x;
            for (int t = 0; t < b; ++t) v = e_prime(d, i, v);
            v = e_prime(d, j, v);
            for (int t = 0; t < a; ++t) v = e_prime(d, i, v);
            acc = acc + v.scaled(RationalScalar(coeff));
        }
        return acc;
    };
    Scalar factor = pi_sign(PiMode::Minus, (m * d.parity(i) + d.parity(j)) * d.parity(k)) *
                    Scalar::q_power(-m * d.dot(k, i) - d.dot(k, j));
    for (const auto& w : words_up_to(d, max_len)) {
        Word fkw = {k};
        fkw.insert(fkw.end(), w.begin(), w.end());
        FreeElement lhs = S(FreeElement::of_word(fkw));
        FreeElement rhs = mult(FreeElement::generator(k), S(FreeElement::of_word(w)))
                              .scaled(RationalScalar(factor));
        if (!(lhs == rhs)) {
            rep.ok = false;
            rep.witness = w;
            rep.note = "serre operator does not intertwine f_k";
            return rep;
        }
    }
    return rep;
}

OperatorCheckReport commutation_check(const Superdatum& d, int i, int j, int max_len) {
    OperatorCheckReport rep;
    Scalar factor = pi_sign(PiMode::Minus, d.parity(i) * d.parity(j)) * Scalar::q_power(d.dot(i, j));
    for (const auto& w : words_up_to(d, max_len)) {
        FreeElement x = FreeElement::of_word(w);
        FreeElement lhs = e_prime(d, i, e_dprime(d, j, x));
        FreeElement rhs = e_dprime(d, j, e_prime(d, i, x)).scaled(RationalScalar(factor));
        if (!(lhs == rhs)) {
            rep.ok = false;
            rep.witness = w;
            rep.note = "e' e'' commutation fails";
            return rep;
        }
    }
    return rep;
}

Scalar binomial_alternating_sum(int m, int i_parity, int j_parity, int r) {
    if (m < 1) throw std::domain_error("binomial_alternating_sum: m >= 1");
    Scalar acc;
    for (int a = 0; a <= m; ++a) {
        int b = m - a;
        Scalar term = quantum_binom(m, a, r, i_parity).specialize(-1);
        term = term * Scalar::q_power(r * b * (m - 1));
        int sgn = (a + parity_exponent(a, i_parity, j_parity, 1) + b * i_parity * j_parity) % 2;
        if (sgn) term = -term;
        acc += term;
    }
    return acc;
}

int parity_congruence_residue(int a, int b, int m, int i_parity, int j_parity) {
    int v = parity_exponent(a, i_parity, j_parity, 1) + (b - 1) * i_parity +
            parity_exponent(a + 1, i_parity, j_parity, 1) + (m - 1) * i_parity + i_parity * j_parity;
    return ((v % 2) + 2) % 2;
}

}  // namespace qhs
