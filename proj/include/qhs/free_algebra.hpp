#ifndef QHS_FREE_ALGEBRA_HPP
#define QHS_FREE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhs/datum.hpp"
#include "qhs/pi_scalar.hpp"

namespace qhs {

/// Words in the free generators theta_i, indexed by vertex.
using Word = std::vector<int>;

/// Finite RationalScalar-weighted combination of words.
class FreeElement {
public:
    FreeElement() = default;

    static FreeElement zero() { return FreeElement(); }
    static FreeElement unit() { return of_word({}); }
    static FreeElement generator(int i) { return of_word({i}); }
    static FreeElement of_word(const Word& w);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, RationalScalar>& terms() const { return terms_; }
    RationalScalar coeff(const Word& w) const;

    void add(const Word& w, const RationalScalar& c);
    FreeElement operator+(const FreeElement& o) const;
    FreeElement operator-(const FreeElement& o) const;
    FreeElement operator-() const;
    FreeElement scaled(const RationalScalar& c) const;

    bool operator==(const FreeElement& o) const;
    bool operator!=(const FreeElement& o) const { return !(*this == o); }

    /// Common weight of all words, if homogeneous (the zero element is
    /// homogeneous of every weight; returns nullopt for mixed weights).
    std::optional<Weight> weight(const Superdatum& d) const;
    int parity(const Superdatum& d) const;  // of a homogeneous element

    FreeElement specialize(int sign) const;
    std::string to_string(const Superdatum& d) const;

private:
    std::map<Word, RationalScalar> terms_;
};

/// Bilinear concatenation product.
FreeElement mult(const FreeElement& x, const FreeElement& y);

/// Element of the twisted tensor square.
class TensorElement {
public:
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Word, Word>, RationalScalar>& terms() const { return terms_; }
    void add(const Word& a, const Word& b, const RationalScalar& c);
    bool operator==(const TensorElement& o) const;

private:
    std::map<std::pair<Word, Word>, RationalScalar> terms_;
};

/// Twisted product (x1 (x) x2)(y1 (x) y2) =
/// pi^(p(x2) p(y1)) q^(-|x2|.|y1|) x1 y1 (x) x2 y2.
TensorElement tensor_mult(const Superdatum& d, const TensorElement& a, const TensorElement& b);

/// Algebra map with theta_i -> theta_i (x) 1 + 1 (x) theta_i.
TensorElement coproduct(const Superdatum& d, const FreeElement& x);

/// Coefficient of theta_i (x) (.) in the coproduct; satisfies
/// rho(i, xy) = rho(i, x) y + pi^(p(i)p(x)) q^(-i.|x|) x rho(i, y).
FreeElement rho_component(const Superdatum& d, int i, const FreeElement& x);

/// kappa_i = (1 - pi^p(i) q_i^2)^{-1}, the generator self-pairing.
RationalScalar kappa(const Superdatum& d, int i);

/// The twisted bilinear form, computed by peeling the leftmost letter of the
/// first argument: {theta_i x', y} = kappa_i {x', rho(i, y)}.
RationalScalar form(const Superdatum& d, const FreeElement& x, const FreeElement& y);

/// Memoizing calculator for batches of form evaluations.
class FormCalc {
public:
    explicit FormCalc(const Superdatum& d) : d_(d) {}
    RationalScalar words(const Word& a, const Word& b);
    RationalScalar elements(const FreeElement& x, const FreeElement& y);

private:
    const Superdatum& d_;
    std::map<std::pair<Word, Word>, RationalScalar> memo_;
};

struct GramMatrix {
    std::vector<Word> words;  // lexicographic basis of the weight space
    std::vector<std::vector<RationalScalar>> entry;
};

/// Gram matrix of the form on the word basis of a weight; throws if
/// ht(weight) exceeds max_height. Rows are computed in parallel when
/// jobs > 1.
GramMatrix gram(const Superdatum& d, const Weight& nu, int max_height = 6, int jobs = 1);

/// Sum over a+b = 1 - n a_ij of (-1)^a pi^(p(a;i,j;n)) theta_i^(a) theta_j^n
/// theta_i^(b), with divided powers theta^(a) = theta^a / [a]!.
FreeElement serre_element(const Superdatum& d, int i, int j, int n);

/// theta_i theta_j - pi^(p(i)p(j)) theta_j theta_i for i.j = 0.
FreeElement commutator_element(const Superdatum& d, int i, int j);

struct RadicalReport {
    bool in_radical = false;
    std::vector<RationalScalar> pairings;  // <basis word, x> certificate
    bool iterated_rho_agrees = false;      // second criterion gives the same verdict
};

/// Membership of a homogeneous element in the radical of the form, decided by
/// the Gram pairings and cross-checked by iterated rho components along every
/// sequence of the weight.
RadicalReport radical_member(const Superdatum& d, const FreeElement& x, int max_height = 6);

}  // namespace qhs

#endif
