#include "qhs/ktheory.hpp"

#include <algorithm>
#include <functional>

#include "qhs/linalg.hpp"

namespace qhs {

namespace {

Word seq_to_word(const Seq& s) { return Word(s.begin(), s.end()); }

int weight_parity(const Superdatum& d, const Weight& w) {
    int p = 0;
    for (int v = 0; v < d.size(); ++v) p += d.parity(v) * w[v];
    return p & 1;
}

int weight_dot(const Superdatum& d, const Weight& a, const Weight& b) {
    int s = 0;
    for (int x = 0; x < d.size(); ++x)
        for (int y = 0; y < d.size(); ++y) s += a[x] * b[y] * d.dot(x, y);
    return s;
}

/// left-multiply by the dot at position p (target side), cheap on normal forms
QhsaElement lmul_dot(const Superdatum& d, int p, const QhsaElement& e) {
    QhsaElement out;
    for (const auto& [sym, c] : e.terms()) {
        Seq tgt = sym.target();
        int sign = 0;
        for (int l = 0; l < p; ++l) sign ^= (d.parity(tgt[p]) & d.parity(tgt[l]) & sym.u[l]) & 1;
        BasisSymbol ns = sym;
        ns.u[p] += 1;
        out.add(ns, sign ? Rat(-c) : c);
    }
    return out;
}

QhsaElement lmul_dots(const Superdatum& d, const std::vector<int>& u, const QhsaElement& e) {
    QhsaElement out = e;
    for (int p = static_cast<int>(u.size()); p-- > 0;)
        for (int s = 0; s < u[p]; ++s) out = lmul_dot(d, p, out);
    return out;
}

}  // namespace

PairingReport pairing_check(const Superdatum& d, const Weight& nu, const Seq& iseq, const Seq& jseq,
                            int order) {
    PairingReport rep;
    rep.nu = nu;
    rep.iseq = iseq;
    rep.jseq = jseq;
    rep.order = order;
    rep.lhs = graded_dim(d, nu, iseq, jseq, order);
    RationalScalar value =
        form(d, FreeElement::of_word(seq_to_word(iseq)), FreeElement::of_word(seq_to_word(jseq)));
    rep.rhs = series_expand(value, order);
    rep.ok = (rep.lhs == rep.rhs);
    return rep;
}

DimSeries idempotent_trunc_dim(const Superdatum& d, const QTable& qt, const Weight& nu,
                               const Seq& kseq, const QhsaElement& e, int order) {
    if (e.is_zero()) throw std::invalid_argument("idempotent_trunc_dim: zero element");
    if (!(mult(d, qt, e, e) == e))
        throw std::invalid_argument("idempotent_trunc_dim: element is not idempotent");
    Seq eseq = e.terms().begin()->first.source;
    for (const auto& [s, c] : e.terms())
        if (s.source != eseq || s.target() != eseq)
            throw std::invalid_argument("idempotent_trunc_dim: idempotent must sit in one block");
    if (d.weight_of(eseq) != nu || d.weight_of(kseq) != nu)
        throw std::invalid_argument("idempotent_trunc_dim: weight mismatch");

    // precompute tau_w * e once per permutation
    auto perms = perms_mapping(eseq, kseq);
    std::vector<std::pair<Perm, QhsaElement>> tau_e;
    std::vector<int> word_deg;
    int dmin = 0;
    for (const auto& w : perms) {
        BasisSymbol s;
        s.source = eseq;
        s.word = staircase_word(w);
        s.u.assign(eseq.size(), 0);
        tau_e.push_back({w, mult(d, qt, QhsaElement::of_symbol(s), e)});
        word_deg.push_back(symbol_degree(d, s));
        dmin = std::min(dmin, word_deg.back());
    }

    DimSeries out(order);
    for (int deg = dmin; deg <= order; ++deg) {
        // rows: symbols of this degree, split by parity
        std::map<BasisSymbol, size_t> columns;
        std::vector<std::vector<Rat>> even_rows, odd_rows;
        for (size_t t = 0; t < tau_e.size(); ++t) {
            int residual = deg - word_deg[t];
            if (residual < 0) continue;
            // enumerate u with sum 2 r(kseq[p]) u_p = residual
            std::vector<int> u(kseq.size(), 0);
            std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
                if (pos == kseq.size()) {
                    if (left != 0) return;
                    QhsaElement img = lmul_dots(d, u, tau_e[t].second);
                    int par = 0;
                    {
                        BasisSymbol probe;
                        probe.source = eseq;
                        probe.word = staircase_word(tau_e[t].first);
                        probe.u = u;
                        par = symbol_parity(d, probe);
                    }
                    std::vector<std::pair<size_t, Rat>> entries;
                    for (const auto& [s, c] : img.terms()) {
                        auto it = columns.find(s);
                        size_t idx;
                        if (it == columns.end()) {
                            idx = columns.size();
                            columns[s] = idx;
                        } else {
                            idx = it->second;
                        }
                        entries.push_back({idx, c});
                    }
                    std::vector<Rat> row(columns.size(), Rat(0));
                    for (auto& [idx, c] : entries) {
                        if (idx >= row.size()) row.resize(columns.size(), Rat(0));
                        row[idx] += c;
                    }
                    (par ? odd_rows : even_rows).push_back(std::move(row));
                    return;
                }
                int step = 2 * d.r(kseq[pos]);
                for (int x = 0; step * x <= left; ++x) {
                    u[pos] = x;
                    rec(pos + 1, left - step * x);
                }
                u[pos] = 0;
            };
            rec(0, residual);
        }
        size_t width = columns.size();
        for (auto& r : even_rows) r.resize(width, Rat(0));
        for (auto& r : odd_rows) r.resize(width, Rat(0));
        int re = even_rows.empty() ? 0 : rank_rational(even_rows);
        int ro = odd_rows.empty() ? 0 : rank_rational(odd_rows);
        // specialization ranks recombine as ((r+ + r-)/2, (r+ - r-)/2)
        int rplus = re + ro, rminus = re - ro;
        if ((rplus + rminus) % 2 != 0 || (rplus - rminus) % 2 != 0)
            throw std::runtime_error("idempotent_trunc_dim: non-integral recombination");
        out.add_term(deg, (rplus + rminus) / 2, (rplus - rminus) / 2);
    }
    return out;
}

QhsaElement induced_serre_idempotent(const Superdatum& d, int i, int j, int a, int n, int b) {
    int total = a + n + b;
    Seq s;
    s.insert(s.end(), a, i);
    s.insert(s.end(), n, j);
    s.insert(s.end(), b, i);
    Perm p = perm_identity(total);
    for (int t = 0; t < a; ++t) p[t] = a - 1 - t;
    for (int t = 0; t < b; ++t) p[a + n + t] = a + n + (b - 1 - t);
    BasisSymbol sym;
    sym.source = s;
    sym.word = staircase_word(p);
    sym.u.assign(total, 0);
    for (int t = 0; t < a; ++t) sym.u[t] = a - 1 - t;
    for (int t = 0; t < b; ++t) sym.u[a + n + t] = b - 1 - t;
    Rat c(1);
    if (d.parity(i) == 1) {
        auto binom3 = [](long x) { return x * (x - 1) * (x - 2) / 6; };
        if ((binom3(a) + binom3(b)) % 2) c = -1;
    }
    return QhsaElement::of_symbol(sym, c);
}

SerreCatReport serre_categorified_check(const Superdatum& d, const QTable& qt, int i, int j, int n,
                                        int order) {
    SerreCatReport rep;
    if (!d.is_real(i) || i == j) throw std::invalid_argument("serre_categorified_check: bad pair");
    int m = 1 - n * d.a(i, j);
    rep.m = m;
    Weight nu(d.size(), 0);
    nu[i] = m;
    nu[j] = n;
    for (const auto& kseq : sequences_of_weight(nu)) {
        DimSeries lhs(order), rhs(order);
        for (int a = 0; a <= m; ++a) {
            QhsaElement e = induced_serre_idempotent(d, i, j, a, n, m - a);
            DimSeries dim = idempotent_trunc_dim(d, qt, nu, kseq, e, order);
            int shift = (a * (a - 1) / 2 + (m - a) * (m - a - 1) / 2) * d.r(i);
            int par = parity_exponent(a, d.parity(i), d.parity(j), n);
            DimSeries piece = dim.scaled(Scalar::monomial(1, par != 0, shift)).truncated(order);
            if (a % 2 == 0)
                lhs = lhs + piece;
            else
                rhs = rhs + piece;
        }
        if (!(lhs == rhs)) {
            rep.ok = false;
            rep.failures.push_back(seq_to_string(d, kseq) + ": " + lhs.to_string() +
                                   " != " + rhs.to_string());
        }
    }
    return rep;
}

DimSeries projective_dim(const Superdatum& d, const Weight& nu, const Seq& wseq, int order) {
    DimSeries acc(order);
    for (const auto& kseq : sequences_of_weight(nu)) acc = acc + graded_dim(d, nu, kseq, wseq, order);
    return acc;
}

MackeyReport mackey_dim_check(const Superdatum& d, const Weight& nu, const Weight& nu2,
                              const Weight& mu, const Weight& mu2, const Seq& iseq, const Seq& jseq,
                              int order) {
    Weight total(d.size(), 0);
    for (int v = 0; v < d.size(); ++v) total[v] = nu[v] + nu2[v];
    for (int v = 0; v < d.size(); ++v)
        if (total[v] != mu[v] + mu2[v])
            throw std::invalid_argument("mackey_dim_check: incompatible weights");
    if (d.weight_of(iseq) != mu || d.weight_of(jseq) != mu2)
        throw std::invalid_argument("mackey_dim_check: sequences do not match the weights");

    // generous working order: coset words and twists can dip below zero degree
    int maxdot = 0;
    for (int x = 0; x < d.size(); ++x)
        for (int y = 0; y < d.size(); ++y) maxdot = std::max(maxdot, std::abs(d.dot(x, y)));
    int ht = Superdatum::height(total);
    int work = order + 3 * ht * ht * maxdot;

    MackeyReport rep;
    Seq source = iseq;
    source.insert(source.end(), jseq.begin(), jseq.end());
    DimSeries lhs(work);
    for (const auto& k1 : sequences_of_weight(nu))
        for (const auto& k2 : sequences_of_weight(nu2)) {
            Seq target = k1;
            target.insert(target.end(), k2.begin(), k2.end());
            lhs = lhs + graded_dim(d, total, target, source, work);
        }

    DimSeries rhs(work);
    // lambda ranges over weights with nu - lambda, mu2 - lambda,
    // nu2 + lambda - mu2 all effective
    std::vector<Weight> lambdas;
    Weight lam(d.size(), 0);
    std::function<void(int)> enumerate = [&](int v) {
        if (v == d.size()) {
            lambdas.push_back(lam);
            return;
        }
        int hi = std::min(nu[v], mu2[v]);
        int lo = std::max(0, mu2[v] - nu2[v]);
        for (int x = lo; x <= hi; ++x) {
            lam[v] = x;
            enumerate(v + 1);
        }
        lam[v] = 0;
    };
    enumerate(0);

    // shuffle splittings of a sequence into a left part of a given weight
    auto splittings = [&](const Seq& s, const Weight& left_weight) {
        struct Split {
            Seq left, right;
            int deg = 0, par = 0;
        };
        std::vector<Split> out;
        int nlen = static_cast<int>(s.size());
        for (std::uint32_t mask = 0; mask < (1u << nlen); ++mask) {
            Weight lw(d.size(), 0);
            for (int t = 0; t < nlen; ++t)
                if ((mask >> t) & 1u) ++lw[s[t]];
            if (lw != left_weight) continue;
            Split sp;
            for (int t = 0; t < nlen; ++t)
                ((mask >> t) & 1u ? sp.left : sp.right).push_back(s[t]);
            // crossings: right-colored strand before a left-colored strand
            for (int t1 = 0; t1 < nlen; ++t1)
                for (int t2 = t1 + 1; t2 < nlen; ++t2)
                    if (!((mask >> t1) & 1u) && ((mask >> t2) & 1u)) {
                        sp.deg -= d.dot(s[t1], s[t2]);
                        sp.par += d.parity(s[t1]) * d.parity(s[t2]);
                    }
            out.push_back(std::move(sp));
        }
        return out;
    };

    for (const auto& lambda : lambdas) {
        Weight numl(d.size(), 0), rest(d.size(), 0);
        for (int v = 0; v < d.size(); ++v) {
            numl[v] = nu[v] - lambda[v];
            rest[v] = nu2[v] + lambda[v] - mu2[v];
        }
        Weight mu2ml(d.size(), 0);
        for (int v = 0; v < d.size(); ++v) mu2ml[v] = mu2[v] - lambda[v];
        int twist_par = weight_parity(d, lambda) * weight_parity(d, rest);
        int twist_deg = -weight_dot(d, lambda, rest);
        Scalar twist = Scalar::monomial(1, twist_par % 2 != 0, twist_deg);
        DimSeries lam_acc(work);
        for (const auto& s1 : splittings(iseq, numl))  // mu = (nu-l) + (nu2+l-mu2)
            for (const auto& s2 : splittings(jseq, lambda)) {
                Seq first = s1.left;
                first.insert(first.end(), s2.left.begin(), s2.left.end());
                Seq second = s1.right;
                second.insert(second.end(), s2.right.begin(), s2.right.end());
                Scalar coset = Scalar::monomial(1, (s1.par + s2.par) % 2 != 0, s1.deg + s2.deg);
                DimSeries piece =
                    projective_dim(d, nu, first, work) * projective_dim(d, nu2, second, work);
                lam_acc = lam_acc + piece.scaled(coset);
            }
        rhs = rhs + lam_acc.scaled(twist);
    }

    rep.lhs = lhs.truncated(order);
    rep.rhs = rhs.truncated(order);
    rep.ok = (rep.lhs == rep.rhs);
    return rep;
}

}  // namespace qhs
