#ifndef QHS_PERMUTATION_HPP
#define QHS_PERMUTATION_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qhs {

/// One-line permutation on {0, ..., n-1}: p[t] = image of position t.
/// A word is a list of letters; letter k is the adjacent transposition of
/// positions (k, k+1). A word w = [k1, ..., kr] denotes s_{k1} o ... o s_{kr}
/// (function composition, rightmost applied first).
using Perm = std::vector<int>;
using CoxWord = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Perm perm_of_word(const CoxWord& w, int n) {
    Perm p = perm_identity(n);
    // fold p <- p o s_k: swap positions k, k+1 of the one-line form
    for (int k : w) std::swap(p.at(k), p.at(k + 1));
    return p;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {  // (a o b)(x) = a(b(x))
    Perm r(a.size());
    for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
}

inline Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
    return r;
}

inline int perm_length(const Perm& p) {
    int n = static_cast<int>(p.size());
    int inv = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (p[a] > p[b]) ++inv;
    return inv;
}

inline bool word_is_reduced(const CoxWord& w, int n) {
    return perm_length(perm_of_word(w, n)) == static_cast<int>(w.size());
}

inline Perm perm_longest(int n) {
    Perm p(n);
    for (int t = 0; t < n; ++t) p[t] = n - 1 - t;
    return p;
}

/// Crossing pairs of a permutation: (a, b) with a < b and p(a) > p(b).
inline std::vector<std::pair<int, int>> crossings(const Perm& p) {
    std::vector<std::pair<int, int>> out;
    int n = static_cast<int>(p.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (p[a] > p[b]) out.emplace_back(a, b);
    return out;
}

/// Canonical reduced word in staircase form: concatenated blocks
/// block(v) = [v-1, v-2, ..., m] over values v = 1, ..., n-1, where m is the
/// current position of value v. For the longest element this is
/// [0][1 0][2 1 0]...
inline CoxWord staircase_word(const Perm& p) {
    int n = static_cast<int>(p.size());
    Perm w = p;
    std::vector<CoxWord> blocks(n);
    for (int v = n - 1; v >= 1; --v) {
        int m = -1;
        for (int t = 0; t < static_cast<int>(w.size()); ++t)
            if (w[t] == v) m = t;
        CoxWord blk;
        for (int k = v - 1; k >= m; --k) blk.push_back(k);
        blocks[v] = blk;
        w.erase(w.begin() + m);
        w.insert(w.begin() + v, v);
    }
    CoxWord out;
    for (int v = 1; v < n; ++v) out.insert(out.end(), blocks[v].begin(), blocks[v].end());
    return out;
}

/// Elementary rewriting moves on words: Comm swaps two adjacent commuting
/// letters at (pos, pos+1); Braid replaces (a, b, a) by (b, a, b) at
/// (pos, pos+1, pos+2), |a - b| = 1.
struct CoxMove {
    enum Kind { Comm, Braid } kind;
    int pos;
};

inline void apply_move(CoxWord& w, const CoxMove& m) {
    if (m.kind == CoxMove::Comm) {
        std::swap(w.at(m.pos), w.at(m.pos + 1));
    } else {
        int a = w.at(m.pos), b = w.at(m.pos + 1);
        if (w.at(m.pos + 2) != a || std::abs(a - b) != 1)
            throw std::logic_error("apply_move: not a braid pattern");
        w[m.pos] = b;
        w[m.pos + 1] = a;
        w[m.pos + 2] = b;
    }
}

namespace detail {

/// Emit moves pulling letter b to the front of the reduced word segment
/// w[off..]; b must be a left descent of the segment's permutation.
inline void pull_front(CoxWord& w, int off, int b, std::vector<CoxMove>& out) {
    if (w.at(off) == b) return;
    int a = w.at(off);
    pull_front(w, off + 1, b, out);  // now w[off..] = [a, b, ...]
    if (std::abs(a - b) > 1) {
        out.push_back({CoxMove::Comm, off});
        apply_move(w, out.back());
    } else {
        pull_front(w, off + 2, a, out);  // [a, b, a, ...]
        out.push_back({CoxMove::Braid, off});
        apply_move(w, out.back());
    }
}

/// Emit moves pulling letter k to the back of the reduced word segment
/// w[..end); k must be a right descent of the segment's permutation.
inline void pull_back(CoxWord& w, int end, int k, std::vector<CoxMove>& out) {
    if (w.at(end - 1) == k) return;
    int a = w.at(end - 1);
    pull_back(w, end - 1, k, out);  // [..., k, a]
    if (std::abs(a - k) > 1) {
        out.push_back({CoxMove::Comm, end - 2});
        apply_move(w, out.back());
    } else {
        pull_back(w, end - 2, a, out);  // [..., a, k, a]
        out.push_back({CoxMove::Braid, end - 3});
        apply_move(w, out.back());
    }
}

}  // namespace detail

/// Move sequence transforming reduced word `from` into reduced word `to`
/// (words for the same permutation).
inline std::vector<CoxMove> connect_words(const CoxWord& from, const CoxWord& to) {
    if (from.size() != to.size()) throw std::invalid_argument("connect_words: length mismatch");
    std::vector<CoxMove> out;
    CoxWord w = from;
    for (size_t t = 0; t < to.size(); ++t) {
        if (w[t] == to[t]) continue;
        // to[t] is a left descent of the tail permutation
        // emit with absolute positions
        std::vector<CoxMove> moves;
        detail::pull_front(w, static_cast<int>(t), to[t], moves);
        out.insert(out.end(), moves.begin(), moves.end());
    }
    if (w != to) throw std::logic_error("connect_words: failed to connect");
    return out;
}

/// Move sequence turning reduced word w into one ending with right descent k.
inline std::vector<CoxMove> moves_to_back(const CoxWord& w, int k, CoxWord* result) {
    std::vector<CoxMove> out;
    CoxWord v = w;
    detail::pull_back(v, static_cast<int>(v.size()), k, out);
    if (result) *result = v;
    return out;
}

/// All permutations p with p(from) = to, acting on sequences by
/// (p s)_t = s_{p^{-1}(t)}: p maps position x to positions carrying the same
/// letter.
template <class SeqT>
std::vector<Perm> perms_mapping(const SeqT& from, const SeqT& to) {
    std::vector<Perm> out;
    int n = static_cast<int>(from.size());
    if (static_cast<int>(to.size()) != n) return out;
    Perm p(n, -1);
    std::vector<bool> used(n, false);
    std::vector<int> stack;
    // backtracking over positions of `from`
    std::function<void(int)> rec = [&](int x) {
        if (x == n) {
            out.push_back(p);
            return;
        }
        for (int t = 0; t < n; ++t) {
            if (used[t] || to[t] != from[x]) continue;
            used[t] = true;
            p[x] = t;
            rec(x + 1);
            used[t] = false;
        }
    };
    rec(0);
    return out;
}

/// Apply permutation to a sequence: (p s)_t = s_{p^{-1}(t)}.
template <class SeqT>
SeqT perm_apply_seq(const Perm& p, const SeqT& s) {
    SeqT out = s;
    for (size_t x = 0; x < s.size(); ++x) out[p[x]] = s[x];
    return out;
}

}  // namespace qhs

#endif
