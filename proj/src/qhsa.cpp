#include "qhs/qhsa.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>

#include "qhs/linalg.hpp"

namespace qhs {

BasisSymbol BasisSymbol::idempotent(const Seq& s) {
    BasisSymbol b;
    b.source = s;
    b.u.assign(s.size(), 0);
    return b;
}

int symbol_degree(const Superdatum& d, const BasisSymbol& s) {
    int deg = 0;
    Seq tgt = s.target();
    for (size_t k = 0; k < tgt.size(); ++k) deg += 2 * d.r(tgt[k]) * s.u[k];
    for (auto [a, b] : crossings(s.perm())) deg -= d.dot(s.source[a], s.source[b]);
    return deg;
}

int symbol_parity(const Superdatum& d, const BasisSymbol& s) {
    int p = 0;
    Seq tgt = s.target();
    for (size_t k = 0; k < tgt.size(); ++k) p += d.parity(tgt[k]) * s.u[k];
    for (auto [a, b] : crossings(s.perm())) p += d.parity(s.source[a]) * d.parity(s.source[b]);
    return p & 1;
}

QhsaElement QhsaElement::of_symbol(const BasisSymbol& s, const Rat& c) {
    QhsaElement e;
    e.add(s, c);
    return e;
}

QhsaElement QhsaElement::idempotent(const Seq& s) { return of_symbol(BasisSymbol::idempotent(s)); }

QhsaElement QhsaElement::dot(const Seq& s, int k) {
    BasisSymbol b = BasisSymbol::idempotent(s);
    b.u.at(k) = 1;
    return of_symbol(b);
}

QhsaElement QhsaElement::crossing(const Seq& s, int k) {
    BasisSymbol b = BasisSymbol::idempotent(s);
    if (k < 0 || k + 1 >= b.strands()) throw std::invalid_argument("crossing: index out of range");
    b.word = {k};
    return of_symbol(b);
}

Rat QhsaElement::coeff(const BasisSymbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rat(0) : it->second;
}

void QhsaElement::add(const BasisSymbol& s, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_[s] = c;
        return;
    }
    it->second += c;
    it->second.canonicalize();
    if (it->second == 0) terms_.erase(it);
}

QhsaElement QhsaElement::operator+(const QhsaElement& o) const {
    QhsaElement r = *this;
    for (const auto& [s, c] : o.terms_) r.add(s, c);
    return r;
}

QhsaElement QhsaElement::operator-(const QhsaElement& o) const {
    QhsaElement r = *this;
    for (const auto& [s, c] : o.terms_) r.add(s, -c);
    return r;
}

QhsaElement QhsaElement::operator-() const {
    QhsaElement r = *this;
    for (auto& [s, c] : r.terms_) c = -c;
    return r;
}

QhsaElement QhsaElement::scaled(const Rat& c) const {
    QhsaElement r;
    if (c == 0) return r;
    for (const auto& [s, v] : terms_) {
        Rat w = v * c;
        w.canonicalize();
        r.terms_[s] = w;
    }
    return r;
}

std::optional<std::pair<int, int>> QhsaElement::bidegree(const Superdatum& d) const {
    std::optional<std::pair<int, int>> bd;
    for (const auto& [s, c] : terms_) {
        std::pair<int, int> cur{symbol_degree(d, s), symbol_parity(d, s)};
        if (!bd)
            bd = cur;
        else if (*bd != cur)
            return std::nullopt;
    }
    if (!bd) bd = std::make_pair(0, 0);
    return bd;
}

// --- straightening ----------------------------------------------------------

namespace {

struct GLite {
    bool is_dot;
    int pos;
};

struct RawTerm {
    Rat coeff;
    Seq source;
    std::vector<GLite> gens;
};

struct Straightener {
    const Superdatum& d;
    const QTable& qt;
    std::deque<RawTerm> work;
    QhsaElement out;
    Seq current_root;  // source of the element being folded; spawns end here

    Straightener(const Superdatum& dd, const QTable& q) : d(dd), qt(q) {}

    static std::vector<GLite> symbol_string(const BasisSymbol& s) {
        std::vector<GLite> gens;
        for (size_t p = 0; p < s.u.size(); ++p)
            for (int t = 0; t < s.u[p]; ++t) gens.push_back({true, static_cast<int>(p)});
        for (int k : s.word) gens.push_back({false, k});
        return gens;
    }

    // deviation terms of the braid move: dot strings at strands m, m+1, m+2
    // of the slice, from the coefficient table of the equal real outer pair
    std::vector<std::pair<std::vector<GLite>, Rat>> braid_deviation(const Seq& slice, int m) {
        std::vector<std::pair<std::vector<GLite>, Rat>> out_terms;
        int i = slice[m], j = slice[m + 1];
        if (slice[m + 2] != i || !d.is_real(i) || i == j) return out_terms;
        if (d.parity(i) == 0) {
            for (const auto& t : qt.get(i, j))
                for (int rr = 0; rr + 1 <= t.a; ++rr) {
                    int ss = t.a - 1 - rr;
                    std::vector<GLite> g;
                    for (int s = 0; s < rr; ++s) g.push_back({true, m});
                    for (int s = 0; s < ss; ++s) g.push_back({true, m + 2});
                    for (int s = 0; s < t.b; ++s) g.push_back({true, m + 1});
                    out_terms.push_back({g, Rat(t.t)});
                }
        } else {
            Rat sgn = d.parity(j) ? Rat(-1) : Rat(1);
            for (const auto& t : qt.get(i, j))
                for (int rr = 0; 2 * rr + 2 <= t.a; ++rr) {
                    int ss = (t.a - 2) / 2 - rr;
                    for (int lead : {0, 1}) {
                        std::vector<GLite> g;
                        g.push_back({true, lead == 0 ? m : m + 2});
                        for (int s = 0; s < 2 * rr; ++s) g.push_back({true, m});
                        for (int s = 0; s < 2 * ss; ++s) g.push_back({true, m + 2});
                        for (int s = 0; s < t.b; ++s) g.push_back({true, m + 1});
                        out_terms.push_back({g, lead == 0 ? Rat(sgn * t.t) : Rat(-sgn * t.t)});
                    }
                }
        }
        return out_terms;
    }

    // replay a move sequence on the word of an in-progress term, spawning
    // deviation terms; returns the accumulated sign. word_source is the label
    // below the word being rewritten; spawn_source is the label below the full
    // spawned string (word letters followed by `pending`).
    Rat replay_moves(const std::vector<CoxMove>& moves, CoxWord& word, const Seq& word_source,
                     const std::vector<int>& u, const Rat& coeff,
                     const std::vector<GLite>& pending) {
        Rat sign(1);
        for (const auto& mv : moves) {
            // slice below the move site
            Seq slice = word_source;
            size_t bound = (mv.kind == CoxMove::Comm) ? mv.pos + 2 : mv.pos + 3;
            for (size_t t = word.size(); t-- > bound;) std::swap(slice[word[t]], slice[word[t] + 1]);
            if (mv.kind == CoxMove::Comm) {
                int a = word[mv.pos], b = word[mv.pos + 1];
                int eps = d.parity(slice[a]) * d.parity(slice[a + 1]) * d.parity(slice[b]) *
                          d.parity(slice[b + 1]);
                if (eps) sign = -sign;
            } else {
                int a = word[mv.pos];
                int m = std::min(a, word[mv.pos + 1]);
                auto devs = braid_deviation(slice, m);
                Rat dir = (a < word[mv.pos + 1]) ? Rat(1) : Rat(-1);
                for (const auto& [dots, c] : devs) {
                    RawTerm rt;
                    rt.coeff = coeff * sign * dir * c;
                    rt.source = current_root;
                    for (size_t p = 0; p < u.size(); ++p)
                        for (int s = 0; s < u[p]; ++s) rt.gens.push_back({true, static_cast<int>(p)});
                    for (int t = 0; t < mv.pos; ++t) rt.gens.push_back({false, word[t]});
                    for (const auto& g : dots) rt.gens.push_back(g);
                    for (size_t t = mv.pos + 3; t < word.size(); ++t) rt.gens.push_back({false, word[t]});
                    rt.gens.insert(rt.gens.end(), pending.begin(), pending.end());
                    work.push_back(std::move(rt));
                }
            }
            apply_move(word, mv);
        }
        return sign;
    }

    // right-multiply a canonical symbol by a dot at position k of its source
    void rmul_dot(const BasisSymbol& sym, const Rat& coeff, int k,
                  const std::vector<GLite>& pending) {
        Rat sign(1);
        int p = k;
        Seq slice = sym.source;
        const CoxWord& w = sym.word;
        for (size_t t = w.size(); t-- > 0;) {
            int j = w[t];
            int i1 = slice[j], i2 = slice[j + 1];
            if (p != j && p != j + 1) {
                if (d.parity(slice[p]) && d.parity(i1) && d.parity(i2)) sign = -sign;
            } else {
                bool at_j = (p == j);
                if (i1 == i2 && d.is_real(i1)) {
                    // even real: tau x_k = x_(k+1) tau + 1, tau x_(k+1) = x_k tau - 1
                    // odd real:  tau x_k = -x_(k+1) tau + 1, tau x_(k+1) = -x_k tau + 1
                    Rat unit_coeff = (d.parity(i1) == 0 && !at_j) ? Rat(-1) : Rat(1);
                    RawTerm rt;
                    rt.coeff = coeff * sign * unit_coeff;
                    rt.source = current_root;
                    for (size_t pp = 0; pp < sym.u.size(); ++pp)
                        for (int s = 0; s < sym.u[pp]; ++s) rt.gens.push_back({true, static_cast<int>(pp)});
                    for (size_t s = 0; s < w.size(); ++s)
                        if (s != t) rt.gens.push_back({false, w[s]});
                    rt.gens.insert(rt.gens.end(), pending.begin(), pending.end());
                    work.push_back(std::move(rt));
                    if (d.parity(i1)) sign = -sign;  // through-term sign, odd case
                } else if (d.parity(i1) && d.parity(i2)) {
                    sign = -sign;
                }
                p = at_j ? j + 1 : j;
            }
            std::swap(slice[j], slice[j + 1]);  // move up through this crossing
        }
        // merge the dot into the exponent block on the target side
        Seq tgt = slice;
        BasisSymbol ns = sym;
        for (size_t l = p + 1; l < ns.u.size(); ++l)
            if (d.parity(tgt[p]) && d.parity(tgt[l]) && (ns.u[l] & 1)) sign = -sign;
        ns.u[p] += 1;
        emit(ns, coeff * sign, pending);
    }

    // right-multiply a canonical symbol by the crossing at position k; the
    // product's source is swap(sym.source, k)
    void rmul_cross(const BasisSymbol& sym, const Rat& coeff, int k,
                    const std::vector<GLite>& pending) {
        Seq nsource = sym.source;
        std::swap(nsource[k], nsource[k + 1]);
        int n = sym.strands();
        CoxWord neww = sym.word;
        neww.push_back(k);
        Perm np = perm_of_word(neww, n);
        if (perm_length(np) == static_cast<int>(neww.size())) {
            CoxWord target_word = staircase_word(np);
            auto moves = connect_words(neww, target_word);
            CoxWord cur = neww;
            Rat sign = replay_moves(moves, cur, nsource, sym.u, coeff, pending);
            BasisSymbol ns;
            ns.source = nsource;
            ns.word = cur;
            ns.u = sym.u;
            emit(ns, coeff * sign, pending);
        } else {
            // bring a copy of the letter to the back, then contract tau^2;
            // deviation branches spawned along the way still owe the appended
            // crossing
            CoxWord v;
            auto moves = moves_to_back(sym.word, k, &v);
            CoxWord cur = sym.word;
            std::vector<GLite> pending_with_k;
            pending_with_k.push_back({false, k});
            pending_with_k.insert(pending_with_k.end(), pending.begin(), pending.end());
            Rat sign = replay_moves(moves, cur, sym.source, sym.u, coeff, pending_with_k);
            // cur now ends with letter k; the appended crossing doubles it
            int i1 = nsource[k], i2 = nsource[k + 1];
            if (i1 == i2) return;  // tau^2 = 0
            for (const auto& t : qt.get(i1, i2)) {
                RawTerm rt;
                rt.coeff = coeff * sign * Rat(t.t);
                rt.source = current_root;
                for (size_t pp = 0; pp < sym.u.size(); ++pp)
                    for (int s = 0; s < sym.u[pp]; ++s) rt.gens.push_back({true, static_cast<int>(pp)});
                for (size_t s = 0; s + 1 < cur.size(); ++s) rt.gens.push_back({false, cur[s]});
                for (int s = 0; s < t.a; ++s) rt.gens.push_back({true, k});
                for (int s = 0; s < t.b; ++s) rt.gens.push_back({true, k + 1});
                rt.gens.insert(rt.gens.end(), pending.begin(), pending.end());
                work.push_back(std::move(rt));
            }
        }
    }

    // continue the left-to-right fold of `pending` over a canonical symbol
    void emit(const BasisSymbol& sym, const Rat& coeff, const std::vector<GLite>& pending) {
        if (coeff == 0) return;
        if (pending.empty()) {
            Rat c = coeff;
            c.canonicalize();
            out.add(sym, c);
            return;
        }
        GLite g = pending.front();
        std::vector<GLite> rest(pending.begin() + 1, pending.end());
        if (g.is_dot)
            rmul_dot(sym, coeff, g.pos, rest);
        else
            rmul_cross(sym, coeff, g.pos, rest);
    }

    // drain the work queue: each raw term folds from the unit symbol over the
    // string's top label
    void drain() {
        while (!work.empty()) {
            RawTerm rt = std::move(work.front());
            work.pop_front();
            current_root = rt.source;
            Seq top = rt.source;
            for (size_t t = rt.gens.size(); t-- > 0;)
                if (!rt.gens[t].is_dot) std::swap(top[rt.gens[t].pos], top[rt.gens[t].pos + 1]);
            BasisSymbol unit;
            unit.source = top;
            unit.u.assign(rt.source.size(), 0);
            emit(unit, rt.coeff, rt.gens);
        }
    }
};

}  // namespace

QhsaElement mult(const Superdatum& d, const QTable& qt, const QhsaElement& a, const QhsaElement& b) {
    Straightener st(d, qt);
    for (const auto& [sb, cb] : b.terms()) {
        Seq btarget = sb.target();
        for (const auto& [sa, ca] : a.terms()) {
            if (sa.source != btarget) continue;
            // seed directly from symbol a; only b's letters need folding
            st.current_root = sb.source;
            st.emit(sa, ca * cb, Straightener::symbol_string(sb));
        }
    }
    st.drain();
    return st.out;
}

namespace {

CliffordPoly act_symbol(const Superdatum& d, const QTable& qt, const GammaTable& gm,
                        const BasisSymbol& sym, const CliffordPoly& f) {
    CliffordPoly v = f;
    Seq slice = sym.source;
    for (size_t t = sym.word.size(); t-- > 0;) {
        v = act(d, qt, gm, Gen{Gen::Cross, sym.word[t], slice}, v);
        std::swap(slice[sym.word[t]], slice[sym.word[t] + 1]);
    }
    for (size_t p = sym.u.size(); p-- > 0;)
        for (int s = 0; s < sym.u[p]; ++s)
            v = act(d, qt, gm, Gen{Gen::Dot, static_cast<int>(p), slice}, v);
    return v;
}

}  // namespace

CliffordPoly act_on_poly(const Superdatum& d, const QTable& qt, const GammaTable& gm,
                         const QhsaElement& a, const CliffordPoly& f) {
    CliffordPoly acc(d, f.label());
    bool first = true;
    for (const auto& [sym, c] : a.terms()) {
        if (sym.source != f.label()) continue;
        CliffordPoly scaledv = act_symbol(d, qt, gm, sym, f).scaled(Rat(c));
        acc = first ? scaledv : acc + scaledv;
        first = false;
    }
    return acc;
}

PolySum act_on_poly_sum(const Superdatum& d, const QTable& qt, const GammaTable& gm,
                        const QhsaElement& a, const PolySum& f) {
    PolySum out;
    for (const auto& [lab, comp] : f) {
        if (comp.is_zero()) continue;
        for (const auto& [sym, c] : a.terms()) {
            if (sym.source != lab) continue;
            CliffordPoly v = act_symbol(d, qt, gm, sym, comp).scaled(Rat(c));
            if (v.is_zero()) continue;
            auto it = out.find(v.label());
            if (it == out.end())
                out[v.label()] = v;
            else
                it->second = it->second + v;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

DimSeries graded_dim(const Superdatum& d, const Weight& nu, const Seq& target, const Seq& source,
                     int order) {
    if (d.weight_of(target) != nu || d.weight_of(source) != nu)
        throw std::invalid_argument("graded_dim: sequences must have the stated weight");
    Scalar omega_part;
    for (const auto& p : perms_mapping(source, target)) {
        int deg = 0, par = 0;
        for (auto [a, b] : crossings(p)) {
            deg -= d.dot(source[a], source[b]);
            par += d.parity(source[a]) * d.parity(source[b]);
        }
        omega_part += Scalar::monomial(1, par % 2 != 0, deg);
    }
    if (omega_part.is_zero()) return DimSeries(order);
    int dmin = omega_part.terms().begin()->first;
    DimSeries acc = DimSeries::from_scalar(Scalar::one(), order - std::min(dmin, 0));
    for (int v : source) {
        Scalar den = Scalar::one() - Scalar::pi_power(d.parity(v)) * Scalar::q_power(2 * d.r(v));
        acc = acc * series_expand(invert(den), order - std::min(dmin, 0));
    }
    return acc.scaled(omega_part).truncated(order);
}

QhsaElement e_idempotent(const Superdatum& d, int i, int n) {
    if (!d.is_real(i)) throw std::domain_error("e_idempotent: vertex must be real");
    if (n < 1) throw std::invalid_argument("e_idempotent: n must be >= 1");
    BasisSymbol s;
    s.source = Seq(n, i);
    s.u.assign(n, 0);
    for (int k = 0; k < n; ++k) s.u[k] = n - 1 - k;
    s.word = staircase_word(perm_longest(n));
    Rat c(1);
    if (d.parity(i) == 1) {
        long binom3 = static_cast<long>(n) * (n - 1) * (n - 2) / 6;
        if (binom3 % 2) c = -1;
    }
    return QhsaElement::of_symbol(s, c);
}

bool center_probe(const Superdatum& d, const QTable& qt, int i, int n, const QhsaElement& candidate) {
    Seq s(n, i);
    for (int k = 0; k < n; ++k) {
        QhsaElement g = QhsaElement::dot(s, k);
        if (mult(d, qt, candidate, g) != mult(d, qt, g, candidate)) return false;
    }
    for (int k = 0; k + 1 < n; ++k) {
        QhsaElement g = QhsaElement::crossing(s, k);
        if (mult(d, qt, candidate, g) != mult(d, qt, g, candidate)) return false;
    }
    return true;
}

Rat tau_omega0_eval(const Superdatum& d, const QTable& qt, const GammaTable& gm, int i, int n) {
    Seq lab(n, i);
    // staircase dot monomial x_1^(n-1) ... x_(n-1), built right to left
    CliffordPoly f = CliffordPoly::one(d, lab);
    for (int p = n - 1; p >= 0; --p)
        for (int s = 0; s < n - 1 - p; ++s) f = act(d, qt, gm, Gen{Gen::Dot, p, lab}, f);
    CoxWord w0 = staircase_word(perm_longest(n));
    Seq slice = lab;
    for (size_t t = w0.size(); t-- > 0;) {
        f = act(d, qt, gm, Gen{Gen::Cross, w0[t], slice}, f);
        // equal letters: slice unchanged
    }
    CMonomial constant;
    constant.y.assign(n, 0);
    constant.z.assign(n, 0);
    return f.coeff(constant);
}

bool independence_check(const Superdatum& d, const QTable& qt, const GammaTable& gm, const Seq& source,
                        int ubound) {
    int n = static_cast<int>(source.size());
    // probe vectors: tau_(w') applied to the (c^p z)- and (c^p y)-staircases
    // over the label that w' carries onto `source`; the z-staircases separate
    // the imaginary crossings, the y-staircases the real ones
    std::vector<CliffordPoly> probes;
    std::vector<Perm> all = perms_mapping(Seq(n, 0), Seq(n, 0));  // all of S_n
    for (const auto& w : all) {
        Seq src = perm_apply_seq(perm_inverse(w), source);
        for (bool use_y : {false, true}) {
            CliffordPoly f = CliffordPoly::one(d, src);
            for (int p = n - 1; p >= 0; --p)
                for (int s = 0; s < n - 1 - p; ++s) {
                    CliffordPoly g = use_y ? CliffordPoly::gen_y(d, src, p)
                                           : CliffordPoly::gen_z(d, src, p);
                    CliffordPoly gf = g * f;
                    if (d.parity(src[p]) == 1) gf = CliffordPoly::gen_c(d, src, p) * gf;
                    f = gf;
                }
            CoxWord ww = staircase_word(w);
            Seq slice = src;
            for (size_t t = ww.size(); t-- > 0;) {
                f = act(d, qt, gm, Gen{Gen::Cross, ww[t], slice}, f);
                std::swap(slice[ww[t]], slice[ww[t] + 1]);
            }
            if (slice != source) throw std::logic_error("independence_check: probe label mismatch");
            probes.push_back(f);
        }
    }
    // symbols with bounded exponents, any permutation
    std::vector<BasisSymbol> symbols;
    std::vector<int> u(n, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            for (const auto& w : all) {
                BasisSymbol s;
                s.source = source;
                s.word = staircase_word(w);
                s.u = u;
                symbols.push_back(s);
            }
            return;
        }
        for (int e = 0; e <= ubound; ++e) {
            u[pos] = e;
            rec(pos + 1);
        }
        u[pos] = 0;
    };
    rec(0);
    // image matrix over (probe, label, monomial) coordinates
    std::map<std::tuple<size_t, Seq, CMonomial>, size_t> columns;
    std::vector<std::vector<Rat>> rows;
    for (const auto& sym : symbols) {
        std::vector<std::pair<std::tuple<size_t, Seq, CMonomial>, Rat>> entries;
        for (size_t pi = 0; pi < probes.size(); ++pi) {
            CliffordPoly img = act_on_poly(d, qt, gm, QhsaElement::of_symbol(sym), probes[pi]);
            for (const auto& [m, c] : img.terms())
                entries.push_back({{pi, img.label(), m}, c});
        }
        for (const auto& [key, c] : entries)
            if (!columns.count(key)) {
                size_t idx = columns.size();
                columns[key] = idx;
            }
        std::vector<Rat> row(columns.size(), Rat(0));
        for (const auto& [key, c] : entries) {
            if (columns.at(key) >= row.size()) row.resize(columns.size(), Rat(0));
            row[columns.at(key)] += c;
        }
        rows.push_back(std::move(row));
    }
    size_t width = columns.size();
    for (auto& r : rows) r.resize(width, Rat(0));
    return rank_rational(rows) == static_cast<int>(symbols.size());
}

// --- element grammar ---------------------------------------------------------

std::string print_element(const Superdatum& d, const QhsaElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, c] : e.terms()) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (mag != 1) factors.push_back(mag.get_str());
        for (size_t p = 0; p < s.u.size(); ++p) {
            if (s.u[p] == 0) continue;
            std::string f = "x(" + std::to_string(p + 1) + ")";
            if (s.u[p] > 1) f += "^" + std::to_string(s.u[p]);
            factors.push_back(f);
        }
        for (int k : s.word) factors.push_back("t(" + std::to_string(k + 1) + ")");
        std::string seq = "e(";
        for (size_t t = 0; t < s.source.size(); ++t) {
            if (t) seq += " ";
            seq += d.name(s.source[t]);
        }
        seq += ")";
        factors.push_back(seq);
        for (size_t t = 0; t < factors.size(); ++t) {
            if (t) out << " ";
            out << factors[t];
        }
    }
    return out.str();
}

namespace {

struct ElementParser {
    const Superdatum& d;
    const QTable& qt;
    const std::string& s;
    size_t pos = 0;

    ElementParser(const Superdatum& dd, const QTable& q, const std::string& str)
        : d(dd), qt(q), s(str) {}

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long integer() {
        ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("element parse: integer expected at " + std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }

    QhsaElement term() {
        ws();
        Rat coeff(1);
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            long num = integer();
            coeff = Rat(num);
            if (eat('/')) coeff /= Rat(integer());
            coeff.canonicalize();
        }
        struct Factor {
            char kind;  // 'x' or 't'
            int pos;
            int exp;
        };
        std::vector<Factor> factors;
        Seq seq;
        bool have_seq = false;
        for (;;) {
            ws();
            if (pos >= s.size()) break;
            if (s[pos] == 'x' || s[pos] == 't') {
                char kind = s[pos];
                ++pos;
                if (!eat('(')) throw std::invalid_argument("element parse: expected (");
                int idx = static_cast<int>(integer());
                if (!eat(')')) throw std::invalid_argument("element parse: expected )");
                int exp = 1;
                if (eat('^')) exp = static_cast<int>(integer());
                factors.push_back({kind, idx - 1, exp});
            } else if (s[pos] == 'e') {
                ++pos;
                if (!eat('(')) throw std::invalid_argument("element parse: expected (");
                ws();
                std::string name;
                while (pos < s.size() && s[pos] != ')') {
                    if (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == ',') {
                        if (!name.empty()) {
                            seq.push_back(d.index_of(name));
                            name.clear();
                        }
                        ++pos;
                    } else {
                        name += s[pos++];
                    }
                }
                if (!name.empty()) seq.push_back(d.index_of(name));
                if (!eat(')')) throw std::invalid_argument("element parse: expected )");
                have_seq = true;
                break;  // idempotent terminates the product
            } else {
                break;
            }
        }
        if (!have_seq) throw std::invalid_argument("element parse: every term needs a trailing e(...)");
        QhsaElement e = QhsaElement::idempotent(seq).scaled(coeff);
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            for (int r = 0; r < it->exp; ++r) {
                // decorate by the current target of e
                QhsaElement g;
                bool set = false;
                for (const auto& [sym, c] : e.terms()) {
                    Seq lab = sym.target();
                    QhsaElement cand = it->kind == 'x' ? QhsaElement::dot(lab, it->pos)
                                                       : QhsaElement::crossing(lab, it->pos);
                    if (!set) {
                        g = cand;
                        set = true;
                    } else if (!(g == cand)) {
                        throw std::invalid_argument("element parse: ambiguous generator decoration");
                    }
                }
                if (!set) return QhsaElement::zero();
                e = mult(d, qt, g, e);
            }
        }
        return e;
    }

    QhsaElement parse() {
        ws();
        if (pos < s.size() && s[pos] == '0') {
            size_t save = pos++;
            ws();
            if (pos >= s.size()) return QhsaElement::zero();
            pos = save;
        }
        bool neg = eat('-');
        if (!neg) eat('+');
        QhsaElement acc = term();
        if (neg) acc = -acc;
        for (;;) {
            ws();
            if (pos >= s.size()) break;
            if (s[pos] == '+' || s[pos] == '-') {
                bool minus = (s[pos] == '-');
                ++pos;
                QhsaElement t = term();
                acc = minus ? acc - t : acc + t;
            } else {
                throw std::invalid_argument("element parse: unexpected input at " + std::to_string(pos));
            }
        }
        return acc;
    }
};

}  // namespace

QhsaElement parse_element(const Superdatum& d, const QTable& qt, const std::string& text) {
    ElementParser p(d, qt, text);
    return p.parse();
}

}  // namespace qhs
