#include "qhs/clifford_poly.hpp"

#include <functional>
#include <sstream>
#include <thread>

namespace qhs {

CliffordPoly::CliffordPoly(const Superdatum& d, Seq label) : label_(std::move(label)) {
    par_.reserve(label_.size());
    for (int v : label_) par_.push_back(d.parity(v));
}

CliffordPoly CliffordPoly::one(const Superdatum& d, const Seq& label) {
    CliffordPoly p(d, label);
    CMonomial m;
    m.y.assign(label.size(), 0);
    m.z.assign(label.size(), 0);
    p.terms_[m] = 1;
    return p;
}

CliffordPoly CliffordPoly::monomial(const Superdatum& d, const Seq& label, const CMonomial& m,
                                    const Rat& c) {
    CliffordPoly p(d, label);
    p.add_term(m, c);
    return p;
}

CliffordPoly CliffordPoly::gen_y(const Superdatum& d, const Seq& label, int k) {
    CMonomial m;
    m.y.assign(label.size(), 0);
    m.z.assign(label.size(), 0);
    m.y.at(k) = 1;
    return monomial(d, label, m, 1);
}

CliffordPoly CliffordPoly::gen_z(const Superdatum& d, const Seq& label, int k) {
    CMonomial m;
    m.y.assign(label.size(), 0);
    m.z.assign(label.size(), 0);
    m.z.at(k) = 1;
    return monomial(d, label, m, 1);
}

CliffordPoly CliffordPoly::gen_c(const Superdatum& d, const Seq& label, int k) {
    CMonomial m;
    m.y.assign(label.size(), 0);
    m.z.assign(label.size(), 0);
    m.cset = 1u << k;
    return monomial(d, label, m, 1);
}

Rat CliffordPoly::coeff(const CMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void CliffordPoly::add_term(const CMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
        return;
    }
    it->second += c;
    it->second.canonicalize();
    if (it->second == 0) terms_.erase(it);
}

CliffordPoly CliffordPoly::operator+(const CliffordPoly& o) const {
    if (terms_.empty()) return o;
    if (!o.terms_.empty() && label_ != o.label_)
        throw std::invalid_argument("CliffordPoly: label mismatch in sum");
    CliffordPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

CliffordPoly CliffordPoly::operator-(const CliffordPoly& o) const {
    if (terms_.empty()) return -o;
    if (!o.terms_.empty() && label_ != o.label_)
        throw std::invalid_argument("CliffordPoly: label mismatch in sum");
    CliffordPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

CliffordPoly CliffordPoly::operator-() const {
    CliffordPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

CliffordPoly CliffordPoly::scaled(const Rat& c) const {
    CliffordPoly r(*this);
    if (c == 0) {
        r.terms_.clear();
        return r;
    }
    for (auto& [m, v] : r.terms_) {
        v *= c;
        v.canonicalize();
    }
    return r;
}

CliffordPoly CliffordPoly::operator*(const CliffordPoly& o) const {
    if (label_ != o.label_) throw std::invalid_argument("CliffordPoly: label mismatch in product");
    CliffordPoly r(*this);
    r.terms_.clear();
    int n = strands();
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            int sign = 0;
            // move m2's y/z block left through m1's Clifford factors
            for (int k = 0; k < n; ++k)
                if ((m1.cset >> k) & 1u)
                    if (par_[k]) sign ^= (m2.y[k] + m2.z[k]) & 1;
            CMonomial m;
            m.y.resize(n);
            m.z.resize(n);
            for (int k = 0; k < n; ++k) {
                m.y[k] = m1.y[k] + m2.y[k];
                m.z[k] = m1.z[k] + m2.z[k];
            }
            // merge Clifford factors: append m2's letters in ascending order
            std::uint32_t acc = m1.cset;
            for (int t = 0; t < n; ++t) {
                if (!((m2.cset >> t) & 1u)) continue;
                std::uint32_t greater = acc >> (t + 1);
                sign ^= __builtin_popcount(greater) & 1;
                acc ^= 1u << t;  // insert or cancel (c^2 = 1)
            }
            m.cset = acc;
            Rat c = c1 * c2;
            if (sign) c = -c;
            r.add_term(m, c);
        }
    return r;
}

std::string CliffordPoly::to_string(const Superdatum& d) const {
    (void)d;
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.get_str() << ")";
        for (size_t k = 0; k < m.y.size(); ++k)
            if (m.y[k]) out << "*y" << (k + 1) << (m.y[k] > 1 ? "^" + std::to_string(m.y[k]) : "");
        for (size_t k = 0; k < m.z.size(); ++k)
            if (m.z[k]) out << "*z" << (k + 1) << (m.z[k] > 1 ? "^" + std::to_string(m.z[k]) : "");
        for (size_t k = 0; k < m.y.size(); ++k)
            if ((m.cset >> k) & 1u) out << "*c" << (k + 1);
    }
    return out.str();
}

CliffordPoly normal_form(const Superdatum& d, const Seq& label,
                         const std::vector<std::pair<char, int>>& letters, const Rat& coeff) {
    CliffordPoly acc = CliffordPoly::one(d, label).scaled(coeff);
    for (const auto& [kind, k] : letters) {
        CliffordPoly g = kind == 'y'   ? CliffordPoly::gen_y(d, label, k)
                         : kind == 'z' ? CliffordPoly::gen_z(d, label, k)
                                       : CliffordPoly::gen_c(d, label, k);
        acc = acc * g;
    }
    return acc;
}

CliffordPoly sn_act(const Superdatum& d, int k, const CliffordPoly& f) {
    Seq lab = f.label();
    if (k < 0 || k + 1 >= static_cast<int>(lab.size()))
        throw std::invalid_argument("sn_act: index out of range");
    std::swap(lab[k], lab[k + 1]);
    CliffordPoly out(d, lab);
    for (const auto& [m, c] : f.terms()) {
        CMonomial nm = m;
        std::swap(nm.y[k], nm.y[k + 1]);
        std::swap(nm.z[k], nm.z[k + 1]);
        bool bk = (m.cset >> k) & 1u, bk1 = (m.cset >> (k + 1)) & 1u;
        nm.cset = m.cset & ~((1u << k) | (1u << (k + 1)));
        if (bk) nm.cset |= 1u << (k + 1);
        if (bk1) nm.cset |= 1u << k;
        out.add_term(nm, (bk && bk1) ? Rat(-c) : c);
    }
    return out;
}

CliffordPoly tilde_s(const Superdatum& d, int k, const CliffordPoly& f) {
    const Seq& lab = f.label();
    if (lab.at(k) != lab.at(k + 1) || d.parity(lab[k]) != 0)
        throw std::domain_error("tilde_s: needs an equal even pair of strands");
    CliffordPoly out(d, lab);
    for (const auto& [m, c] : f.terms()) {
        CMonomial nm = m;
        std::swap(nm.y[k], nm.y[k + 1]);
        out.add_term(nm, c);
    }
    return out;
}

CliffordPoly approx_s(const Superdatum& d, int k, const CliffordPoly& f) {
    const Seq& lab = f.label();
    if (lab.at(k) != lab.at(k + 1) || d.parity(lab[k]) != 0)
        throw std::domain_error("approx_s: needs an equal even pair of strands");
    CliffordPoly out(d, lab);
    for (const auto& [m, c] : f.terms()) {
        CMonomial nm = m;
        std::swap(nm.y[k], nm.y[k + 1]);
        std::swap(nm.z[k], nm.z[k + 1]);
        out.add_term(nm, c);
    }
    return out;
}

namespace {

// symbol permutation at (k, k+1) fixing the label; total sign for the c-swap
CliffordPoly symbol_swap(const Superdatum& d, int k, const CliffordPoly& f) {
    CliffordPoly out(d, f.label());
    for (const auto& [m, c] : f.terms()) {
        CMonomial nm = m;
        std::swap(nm.y[k], nm.y[k + 1]);
        std::swap(nm.z[k], nm.z[k + 1]);
        bool bk = (m.cset >> k) & 1u, bk1 = (m.cset >> (k + 1)) & 1u;
        nm.cset = m.cset & ~((1u << k) | (1u << (k + 1)));
        if (bk) nm.cset |= 1u << (k + 1);
        if (bk1) nm.cset |= 1u << k;
        out.add_term(nm, (bk && bk1) ? Rat(-c) : c);
    }
    return out;
}

// base value of the Leibniz operators on the letter at j in {k, k+1}; the
// same polynomial serves sigma and sigma'
CliffordPoly sigma_base(const Superdatum& d, const Seq& label, int k, int j) {
    CliffordPoly out(d, label);
    CMonomial unit;
    unit.y.assign(label.size(), 0);
    unit.z.assign(label.size(), 0);
    CMonomial cc = unit;
    cc.cset = (1u << k) | (1u << (k + 1));
    if (j == k) {
        out.add_term(unit, -1);
        out.add_term(cc, -1);
    } else {
        out.add_term(unit, 1);
        out.add_term(cc, -1);
    }
    return out;
}

CliffordPoly sigma_impl(const Superdatum& d, int k, const CliffordPoly& f, bool prime) {
    // Leibniz over the letters of each normal-ordered monomial; only the
    // y-letters (z-letters for the primed operator) at k, k+1 contribute.
    const Seq& lab = f.label();
    int n = static_cast<int>(lab.size());
    CliffordPoly out(d, lab);
    for (const auto& [m, c] : f.terms()) {
        const std::vector<int>& active = prime ? m.z : m.y;
        for (int j : {k, k + 1}) {
            for (int t = 0; t < active[j]; ++t) {
                // prefix: letters before this occurrence, symbol-swapped at (k, k+1)
                CMonomial pre;
                pre.y.assign(n, 0);
                pre.z.assign(n, 0);
                if (!prime) {
                    for (int v = 0; v < j; ++v) pre.y[v] = m.y[v];
                    pre.y[j] = t;
                    std::swap(pre.y[k], pre.y[k + 1]);
                } else {
                    pre.y = m.y;  // all y letters precede the z block
                    for (int v = 0; v < j; ++v) pre.z[v] = m.z[v];
                    pre.z[j] = t;
                    std::swap(pre.y[k], pre.y[k + 1]);
                    std::swap(pre.z[k], pre.z[k + 1]);
                }
                // suffix: remaining letters including the Clifford block
                CMonomial suf;
                suf.y.assign(n, 0);
                suf.z.assign(n, 0);
                suf.cset = m.cset;
                if (!prime) {
                    suf.y[j] = active[j] - 1 - t;
                    for (int v = j + 1; v < n; ++v) suf.y[v] = m.y[v];
                    suf.z = m.z;
                } else {
                    suf.z[j] = active[j] - 1 - t;
                    for (int v = j + 1; v < n; ++v) suf.z[v] = m.z[v];
                }
                CliffordPoly term = CliffordPoly::monomial(d, lab, pre, c) *
                                    sigma_base(d, lab, k, j) *
                                    CliffordPoly::monomial(d, lab, suf, 1);
                out = out + term;
            }
        }
    }
    return out;
}

}  // namespace

CliffordPoly sigma(const Superdatum& d, int k, const CliffordPoly& f) {
    return sigma_impl(d, k, f, false);
}

CliffordPoly sigma_prime(const Superdatum& d, int k, const CliffordPoly& f) {
    return sigma_impl(d, k, f, true);
}

namespace {

// (y_k^a y_(k+1)^b - y_k^b y_(k+1)^a) / (y_k - y_(k+1)) on one monomial,
// by telescoping; works verbatim for the z pair when use_z is set.
void telescope(const CMonomial& base, const Rat& c, int k, bool use_z, CliffordPoly& out) {
    const std::vector<int>& e = use_z ? base.z : base.y;
    int alpha = e[k], beta = e[k + 1];
    if (alpha == beta) return;
    int lo = std::min(alpha, beta);
    int m = std::abs(alpha - beta);
    Rat cc = (alpha > beta) ? c : Rat(-c);
    for (int t = 0; t < m; ++t) {
        CMonomial nm = base;
        if (use_z) {
            nm.z[k] = lo + t;
            nm.z[k + 1] = lo + m - 1 - t;
        } else {
            nm.y[k] = lo + t;
            nm.y[k + 1] = lo + m - 1 - t;
        }
        out.add_term(nm, cc);
    }
}

CliffordPoly half_c_diff(const Superdatum& d, const Seq& lab, int k) {
    // (c_k - c_(k+1)) / 2
    CMonomial a, b;
    a.y.assign(lab.size(), 0);
    a.z.assign(lab.size(), 0);
    b = a;
    a.cset = 1u << k;
    b.cset = 1u << (k + 1);
    CliffordPoly out(d, lab);
    out.add_term(a, Rat(1, 2));
    out.add_term(b, Rat(-1, 2));
    return out;
}

CliffordPoly dot_poly(const Superdatum& d, const Seq& lab, int k) {
    // multiplication operator of x_k = c_k^p(i_k) y_k
    CliffordPoly g = CliffordPoly::gen_y(d, lab, k);
    if (d.parity(lab.at(k)) == 1) g = CliffordPoly::gen_c(d, lab, k) * g;
    return g;
}

}  // namespace

CliffordPoly act(const Superdatum& d, const QTable& qt, const GammaTable& gm, const Gen& g,
                 const CliffordPoly& f) {
    if (f.label() != g.label) {
        Seq out_label = g.label;
        if (g.kind == Gen::Cross && g.pos + 1 < static_cast<int>(out_label.size()))
            std::swap(out_label[g.pos], out_label[g.pos + 1]);
        return CliffordPoly(d, out_label);
    }
    const Seq& lab = f.label();
    switch (g.kind) {
        case Gen::Idem: return f;
        case Gen::Dot: return dot_poly(d, lab, g.pos) * f;
        case Gen::Cross: break;
    }
    int k = g.pos;
    int i = lab.at(k), j = lab.at(k + 1);
    if (i == j) {
        if (d.is_real(i) && d.parity(i) == 0) {
            // (f - tilde_s f) / (y_k - y_(k+1))
            CliffordPoly out(d, lab);
            for (const auto& [m, c] : f.terms()) telescope(m, c, k, false, out);
            return out;
        }
        if (d.is_imaginary(i) && d.parity(i) == 0) {
            // (tilde_s f - approx_s f) / (z_k - z_(k+1)): y part swapped, then
            // a z telescope
            CliffordPoly out(d, lab);
            for (const auto& [m, c] : f.terms()) {
                CMonomial nm = m;
                std::swap(nm.y[k], nm.y[k + 1]);
                telescope(nm, c, k, true, out);
            }
            return out;
        }
        if (d.is_real(i)) return half_c_diff(d, lab, k) * sigma(d, k, f);
        return half_c_diff(d, lab, k) * sigma_prime(d, k, f);
    }
    // distinct labels: gamma-normalized swap, with the Q-correction on edges
    // oriented out of i (the edge points from the smaller vertex index)
    Seq slab = lab;
    std::swap(slab[k], slab[k + 1]);
    CliffordPoly moved = sn_act(d, k, f);
    CliffordPoly result = moved;
    if (i < j) {
        // i -> j: apply Q_ij(x_(k+1), x_k) over the swapped label
        CliffordPoly acc(d, slab);
        CliffordPoly u = dot_poly(d, slab, k + 1);
        CliffordPoly v = dot_poly(d, slab, k);
        for (const auto& t : qt.get(i, j)) {
            CliffordPoly term = moved;
            for (int s = 0; s < t.b; ++s) term = v * term;
            for (int s = 0; s < t.a; ++s) term = u * term;
            acc = acc + term.scaled(Rat(t.t));
        }
        result = acc;
    }
    if (d.parity(i) == 1 && d.parity(j) == 1) result = half_c_diff(d, slab, k) * result;
    Rat gamma = gm.get(i, j);
    return result.scaled(1 / gamma);
}

std::vector<CMonomial> monomials_up_to(int strands, int max_degree) {
    std::vector<CMonomial> out;
    std::vector<int> exps(2 * strands, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == 2 * strands) {
            CMonomial m;
            m.y.assign(exps.begin(), exps.begin() + strands);
            m.z.assign(exps.begin() + strands, exps.end());
            for (std::uint32_t cs = 0; cs < (1u << strands); ++cs) {
                m.cset = cs;
                out.push_back(m);
            }
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[pos] = e;
            rec(pos + 1, left - e);
        }
        exps[pos] = 0;
    };
    rec(0, max_degree);
    return out;
}

namespace {

using GenChain = std::vector<Gen>;

CliffordPoly apply_chain(const Superdatum& d, const QTable& qt, const GammaTable& gm,
                         const GenChain& chain, const CliffordPoly& f) {
    CliffordPoly v = f;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) v = act(d, qt, gm, *it, v);
    return v;
}

struct RelationInstance {
    std::string name;
    int k = -1, l = -1;
    // lhs, rhs as lists of (chain, rational coefficient); identity on the
    // label's module means: sum of lhs chains applied = sum of rhs chains
    std::vector<std::pair<GenChain, Rat>> lhs, rhs;
};

Gen dot(int pos, const Seq& lab) { return Gen{Gen::Dot, pos, lab}; }
Gen cross(int pos, const Seq& lab) { return Gen{Gen::Cross, pos, lab}; }

std::vector<RelationInstance> relation_instances(const Superdatum& d, const QTable& qt,
                                                 const Seq& lab) {
    std::vector<RelationInstance> out;
    int n = static_cast<int>(lab.size());
    auto swapped = [&](const Seq& s, int k) {
        Seq r = s;
        std::swap(r[k], r[k + 1]);
        return r;
    };
    // dots supercommute
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            RelationInstance ri;
            ri.name = "dot-commute";
            ri.k = k;
            ri.l = l;
            ri.lhs.push_back({{dot(k, lab), dot(l, lab)}, 1});
            int eps = d.parity(lab[k]) * d.parity(lab[l]);
            ri.rhs.push_back({{dot(l, lab), dot(k, lab)}, eps ? Rat(-1) : Rat(1)});
            out.push_back(std::move(ri));
        }
    // distant crossings supercommute
    for (int k = 0; k + 1 < n; ++k)
        for (int l = k + 2; l + 1 < n; ++l) {
            RelationInstance ri;
            ri.name = "cross-commute";
            ri.k = k;
            ri.l = l;
            ri.lhs.push_back({{cross(k, swapped(lab, l)), cross(l, lab)}, 1});
            int eps = d.parity(lab[k]) * d.parity(lab[k + 1]) * d.parity(lab[l]) * d.parity(lab[l + 1]);
            ri.rhs.push_back({{cross(l, swapped(lab, k)), cross(k, lab)}, eps ? Rat(-1) : Rat(1)});
            out.push_back(std::move(ri));
        }
    // distant dots slide through crossings
    for (int k = 0; k + 1 < n; ++k)
        for (int l = 0; l < n; ++l) {
            if (l == k || l == k + 1) continue;
            RelationInstance ri;
            ri.name = "dot-slide";
            ri.k = k;
            ri.l = l;
            ri.lhs.push_back({{dot(l, swapped(lab, k)), cross(k, lab)}, 1});
            int eps = d.parity(lab[l]) * d.parity(lab[k]) * d.parity(lab[k + 1]);
            ri.rhs.push_back({{cross(k, lab), dot(l, lab)}, eps ? Rat(-1) : Rat(1)});
            out.push_back(std::move(ri));
        }
    // crossing squares
    for (int k = 0; k + 1 < n; ++k) {
        RelationInstance ri;
        ri.name = "cross-square";
        ri.k = k;
        ri.lhs.push_back({{cross(k, swapped(lab, k)), cross(k, lab)}, 1});
        int i = lab[k], j = lab[k + 1];
        if (i != j) {
            for (const auto& t : qt.get(i, j)) {
                GenChain chain;
                for (int s = 0; s < t.a; ++s) chain.push_back(dot(k, lab));
                for (int s = 0; s < t.b; ++s) chain.push_back(dot(k + 1, lab));
                ri.rhs.push_back({chain, Rat(t.t)});
            }
        }
        out.push_back(std::move(ri));
    }
    // dots through a crossing on equal or distinct neighbours
    for (int k = 0; k + 1 < n; ++k) {
        int i = lab[k], j = lab[k + 1];
        Seq slab = swapped(lab, k);
        if (i == j && d.is_real(i) && d.parity(i) == 0) {
            RelationInstance r1;
            r1.name = "dot-cross-even";
            r1.k = k;
            r1.lhs.push_back({{cross(k, lab), dot(k, lab)}, 1});
            r1.rhs.push_back({{dot(k + 1, lab), cross(k, lab)}, 1});
            r1.rhs.push_back({{}, 1});
            out.push_back(std::move(r1));
            RelationInstance r2;
            r2.name = "dot-cross-even2";
            r2.k = k;
            r2.lhs.push_back({{dot(k, lab), cross(k, lab)}, 1});
            r2.rhs.push_back({{cross(k, lab), dot(k + 1, lab)}, 1});
            r2.rhs.push_back({{}, 1});
            out.push_back(std::move(r2));
        } else if (i == j && d.is_real(i)) {
            RelationInstance r1;
            r1.name = "dot-cross-odd";
            r1.k = k;
            r1.lhs.push_back({{cross(k, lab), dot(k, lab)}, 1});
            r1.lhs.push_back({{dot(k + 1, lab), cross(k, lab)}, 1});
            r1.rhs.push_back({{}, 1});
            out.push_back(std::move(r1));
            RelationInstance r2;
            r2.name = "dot-cross-odd2";
            r2.k = k;
            r2.lhs.push_back({{dot(k, lab), cross(k, lab)}, 1});
            r2.lhs.push_back({{cross(k, lab), dot(k + 1, lab)}, 1});
            r2.rhs.push_back({{}, 1});
            out.push_back(std::move(r2));
        } else {
            int eps = d.parity(i) * d.parity(j);
            RelationInstance r1;
            r1.name = "dot-cross-slide";
            r1.k = k;
            r1.lhs.push_back({{cross(k, lab), dot(k, lab)}, 1});
            r1.rhs.push_back({{dot(k + 1, slab), cross(k, lab)}, eps ? Rat(-1) : Rat(1)});
            out.push_back(std::move(r1));
            RelationInstance r2;
            r2.name = "dot-cross-slide2";
            r2.k = k;
            r2.lhs.push_back({{cross(k, lab), dot(k + 1, lab)}, 1});
            r2.rhs.push_back({{dot(k, slab), cross(k, lab)}, eps ? Rat(-1) : Rat(1)});
            out.push_back(std::move(r2));
        }
    }
    // braid relations with the deviation on equal real outer strands
    for (int k = 0; k + 2 < n; ++k) {
        int i = lab[k], j = lab[k + 1], i2 = lab[k + 2];
        RelationInstance ri;
        ri.name = "braid";
        ri.k = k;
        Seq s1 = swapped(lab, k);           // after cross(k)
        Seq s12 = swapped(s1, k + 1);       // after cross(k+1)
        Seq s2 = swapped(lab, k + 1);       // after cross(k+1) first
        Seq s21 = swapped(s2, k);           // then cross(k)
        ri.lhs.push_back({{cross(k, s12), cross(k + 1, s1), cross(k, lab)}, 1});
        ri.lhs.push_back({{cross(k + 1, s21), cross(k, s2), cross(k + 1, lab)}, -1});
        if (i == i2 && i != j && d.is_real(i)) {
            if (d.parity(i) == 0) {
                // sum_t t_ab (sum_{r+s=a-1} u^r w^s) v^b with u, v, w the dots
                // at k, k+1, k+2
                for (const auto& t : qt.get(i, j))
                    for (int rr = 0; rr + 1 <= t.a; ++rr) {
                        int ss = t.a - 1 - rr;
                        GenChain chain;
                        for (int s = 0; s < rr; ++s) chain.push_back(dot(k, lab));
                        for (int s = 0; s < ss; ++s) chain.push_back(dot(k + 2, lab));
                        for (int s = 0; s < t.b; ++s) chain.push_back(dot(k + 1, lab));
                        ri.rhs.push_back({chain, Rat(t.t)});
                    }
            } else {
                // (-1)^p(j) (u - w) sum_t t_ab (sum_{r+s=a/2-1} u^2r w^2s) v^b
                Rat sgn = d.parity(j) ? Rat(-1) : Rat(1);
                for (const auto& t : qt.get(i, j)) {
                    for (int rr = 0; 2 * rr + 2 <= t.a; ++rr) {
                        int ss = (t.a - 2) / 2 - rr;
                        for (int lead : {0, 1}) {
                            GenChain chain;
                            chain.push_back(dot(lead == 0 ? k : k + 2, lab));
                            for (int s = 0; s < 2 * rr; ++s) chain.push_back(dot(k, lab));
                            for (int s = 0; s < 2 * ss; ++s) chain.push_back(dot(k + 2, lab));
                            for (int s = 0; s < t.b; ++s) chain.push_back(dot(k + 1, lab));
                            ri.rhs.push_back({chain, lead == 0 ? Rat(sgn * t.t) : Rat(-sgn * t.t)});
                        }
                    }
                }
            }
        }
        out.push_back(std::move(ri));
    }
    return out;
}

}  // namespace

RelationReport verify_relations(const Superdatum& d, const QTable& qt, const GammaTable& gm,
                                const Seq& label, int max_degree, int jobs) {
    RelationReport rep;
    auto instances = relation_instances(d, qt, label);
    auto monos = monomials_up_to(static_cast<int>(label.size()), max_degree);
    std::vector<RelationReport> partial(std::max(jobs, 1));
    auto worker = [&](int tid) {
        RelationReport& r = partial[tid];
        for (size_t idx = tid; idx < instances.size(); idx += std::max(jobs, 1)) {
            const auto& ri = instances[idx];
            for (const auto& m : monos) {
                CliffordPoly f = CliffordPoly::monomial(d, label, m, 1);
                CliffordPoly lhs(d, label), rhs(d, label);
                bool first = true;
                for (const auto& [chain, c] : ri.lhs) {
                    CliffordPoly v = apply_chain(d, qt, gm, chain, f).scaled(c);
                    lhs = first ? v : lhs + v;
                    first = false;
                }
                first = true;
                for (const auto& [chain, c] : ri.rhs) {
                    CliffordPoly v = apply_chain(d, qt, gm, chain, f).scaled(c);
                    rhs = first ? v : rhs + v;
                    first = false;
                }
                ++r.checked;
                if (!(lhs == rhs)) {
                    r.ok = false;
                    r.failures.push_back({ri.name, ri.k, ri.l, label, m});
                    break;  // one witness per instance
                }
            }
        }
    };
    if (jobs <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
        for (auto& th : threads) th.join();
    }
    for (const auto& r : partial) {
        rep.checked += r.checked;
        if (!r.ok) {
            rep.ok = false;
            rep.failures.insert(rep.failures.end(), r.failures.begin(), r.failures.end());
        }
    }
    return rep;
}

RelationReport verify_relations_weight(const Superdatum& d, const QTable& qt, const GammaTable& gm,
                                       const Weight& nu, int max_degree, int jobs) {
    RelationReport rep;
    for (const auto& lab : sequences_of_weight(nu)) {
        RelationReport r = verify_relations(d, qt, gm, lab, max_degree, jobs);
        rep.checked += r.checked;
        if (!r.ok) {
            rep.ok = false;
            rep.failures.insert(rep.failures.end(), r.failures.begin(), r.failures.end());
        }
    }
    return rep;
}

}  // namespace qhs
