#ifndef QHS_QHSA_HPP
#define QHS_QHSA_HPP

#include <map>
#include <string>
#include <vector>

#include "qhs/clifford_poly.hpp"
#include "qhs/datum.hpp"
#include "qhs/permutation.hpp"
#include "qhs/pi_scalar.hpp"

namespace qhs {

/// Normal-form basis symbol x_1^(u_1) ... x_n^(u_n) tau_w 1_source, with the
/// reduced word of w in staircase form and the dot exponents taken on the
/// target sequence w(source).
struct BasisSymbol {
    Seq source;
    CoxWord word;  // canonical staircase word
    std::vector<int> u;

    bool operator<(const BasisSymbol& o) const {
        if (source != o.source) return source < o.source;
        if (word != o.word) return word < o.word;
        return u < o.u;
    }
    bool operator==(const BasisSymbol& o) const {
        return source == o.source && word == o.word && u == o.u;
    }

    int strands() const { return static_cast<int>(source.size()); }
    Perm perm() const { return perm_of_word(word, strands()); }
    Seq target() const { return perm_apply_seq(perm(), source); }
    static BasisSymbol idempotent(const Seq& s);
};

/// Degree and parity of a basis symbol: dots contribute (2 r, p) per target
/// letter, crossings contribute (-i.j, p(i)p(j)) per inversion of the source.
int symbol_degree(const Superdatum& d, const BasisSymbol& s);
int symbol_parity(const Superdatum& d, const BasisSymbol& s);

/// Finitely supported rational combination of basis symbols. Coefficients
/// stay integral under the default coefficient tables; rationals only appear
/// with non-monic custom tables.
class QhsaElement {
public:
    QhsaElement() = default;

    static QhsaElement zero() { return QhsaElement(); }
    static QhsaElement of_symbol(const BasisSymbol& s, const Rat& c = 1);
    static QhsaElement idempotent(const Seq& s);
    static QhsaElement dot(const Seq& s, int k);    // x_(k+1) 1_s, 0-based k
    static QhsaElement crossing(const Seq& s, int k);  // tau 1_s

    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisSymbol, Rat>& terms() const { return terms_; }
    Rat coeff(const BasisSymbol& s) const;
    void add(const BasisSymbol& s, const Rat& c);

    QhsaElement operator+(const QhsaElement& o) const;
    QhsaElement operator-(const QhsaElement& o) const;
    QhsaElement operator-() const;
    QhsaElement scaled(const Rat& c) const;
    bool operator==(const QhsaElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const QhsaElement& o) const { return !(*this == o); }

    /// All terms share (degree, parity); nullopt on mixed grading.
    std::optional<std::pair<int, int>> bidegree(const Superdatum& d) const;

    std::string to_string(const Superdatum& d) const;

private:
    std::map<BasisSymbol, Rat> terms_;
};

/// Straightening product. The dot-through-crossing and braid conventions are
/// fixed by the representation homomorphism (see act_on_poly below):
///   tau_k x_k = x_(k+1) tau_k + 1,  x_k tau_k = tau_k x_(k+1) + 1   (even real)
///   tau_k x_k = 1 - x_(k+1) tau_k,  x_k tau_k = 1 - tau_k x_(k+1)   (odd real)
///   tau_k x_k = (-1)^(pp) x_(k+1) tau_k                             (otherwise)
/// with the braid deviation on equal real outer strands.
QhsaElement mult(const Superdatum& d, const QTable& qt, const QhsaElement& a, const QhsaElement& b);

/// Interpret an element through generator actions on the polynomial module,
/// in the fixed canonical order (crossings innermost, dots outermost). The
/// single-component form throws if the element mixes target sequences.
CliffordPoly act_on_poly(const Superdatum& d, const QTable& qt, const GammaTable& gm,
                         const QhsaElement& a, const CliffordPoly& f);

/// Element of the direct sum of the label components, for actions of elements
/// with mixed targets.
using PolySum = std::map<Seq, CliffordPoly>;
PolySum act_on_poly_sum(const Superdatum& d, const QTable& qt, const GammaTable& gm,
                        const QhsaElement& a, const PolySum& f);

/// Graded dimension series of the (target, source) block: sum over
/// permutations w with w(source) = target of pi^p q^deg(tau_w) times the dot
/// series per strand.
DimSeries graded_dim(const Superdatum& d, const Weight& nu, const Seq& target, const Seq& source,
                     int order);

/// x_1^(n-1) x_2^(n-2) ... x_(n-1) tau_(w0), with the sign (-1)^C(n,3) when
/// the vertex is odd; an idempotent for real vertices.
QhsaElement e_idempotent(const Superdatum& d, int i, int n);

/// Does the candidate commute with every dot and crossing of the one-vertex
/// algebra on n strands?
bool center_probe(const Superdatum& d, const QTable& qt, int i, int n, const QhsaElement& candidate);

/// Evaluate tau_(w0) on the staircase dot monomial through the polynomial
/// action and return the constant coefficient.
Rat tau_omega0_eval(const Superdatum& d, const QTable& qt, const GammaTable& gm, int i, int n);

/// Rank test from the faithfulness argument: images of all basis symbols with
/// dot exponents <= ubound on the probe vectors tau_(w') ((c z)-staircase)
/// must be linearly independent.
bool independence_check(const Superdatum& d, const QTable& qt, const GammaTable& gm, const Seq& source,
                        int ubound);

/// Element expression grammar over tokens e(...), x(k), t(k) with integer or
/// rational coefficients; canonical print round-trips bit-exact.
QhsaElement parse_element(const Superdatum& d, const QTable& qt, const std::string& text);
std::string print_element(const Superdatum& d, const QhsaElement& e);

}  // namespace qhs

#endif
