#ifndef QHS_CLIFFORD_POLY_HPP
#define QHS_CLIFFORD_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qhs/datum.hpp"

namespace qhs {

/// Normal-ordered monomial y^a z^b c_S with the Clifford subset S listed
/// ascending (bitmask).
struct CMonomial {
    std::vector<int> y, z;
    std::uint32_t cset = 0;

    bool operator<(const CMonomial& o) const {
        if (cset != o.cset) return cset < o.cset;
        if (y != o.y) return y < o.y;
        return z < o.z;
    }
    bool operator==(const CMonomial& o) const { return cset == o.cset && y == o.y && z == o.z; }
    int total_degree() const {
        int s = 0;
        for (int v : y) s += v;
        for (int v : z) s += v;
        return s;
    }
};

/// Element of the Clifford-polynomial superalgebra attached to one sequence
/// label: rational combinations of normal-ordered monomials. The label's
/// parities drive every sign: c_k anticommutes with y_k, z_k exactly on odd
/// strands, distinct c's anticommute, c_k^2 = 1.
class CliffordPoly {
public:
    CliffordPoly() = default;
    CliffordPoly(const Superdatum& d, Seq label);

    static CliffordPoly zero(const Superdatum& d, const Seq& label) { return CliffordPoly(d, label); }
    static CliffordPoly one(const Superdatum& d, const Seq& label);
    static CliffordPoly monomial(const Superdatum& d, const Seq& label, const CMonomial& m, const Rat& c);
    static CliffordPoly gen_y(const Superdatum& d, const Seq& label, int k);
    static CliffordPoly gen_z(const Superdatum& d, const Seq& label, int k);
    static CliffordPoly gen_c(const Superdatum& d, const Seq& label, int k);

    int strands() const { return static_cast<int>(label_.size()); }
    const Seq& label() const { return label_; }
    const std::vector<int>& strand_parities() const { return par_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<CMonomial, Rat>& terms() const { return terms_; }
    Rat coeff(const CMonomial& m) const;

    void add_term(const CMonomial& m, const Rat& c);
    CliffordPoly operator+(const CliffordPoly& o) const;
    CliffordPoly operator-(const CliffordPoly& o) const;
    CliffordPoly operator-() const;
    CliffordPoly scaled(const Rat& c) const;
    CliffordPoly operator*(const CliffordPoly& o) const;  // same label

    /// Zero elements compare equal across labels (they all represent the zero
    /// of the direct sum).
    bool operator==(const CliffordPoly& o) const {
        if (terms_.empty() && o.terms_.empty()) return true;
        return label_ == o.label_ && terms_ == o.terms_;
    }
    bool operator!=(const CliffordPoly& o) const { return !(*this == o); }

    std::string to_string(const Superdatum& d) const;

private:
    Seq label_;
    std::vector<int> par_;  // parity per strand, from the label's vertices
    std::map<CMonomial, Rat> terms_;
};

/// Normal form of a raw product of generators over a label; the product is
/// given as a list of (kind, index) with kind in {'y', 'z', 'c'}.
CliffordPoly normal_form(const Superdatum& d, const Seq& label,
                         const std::vector<std::pair<char, int>>& letters, const Rat& coeff = 1);

/// Symbol-and-label action of the adjacent transposition: relabels indices
/// k, k+1 in y, z, c and swaps the sequence entries.
CliffordPoly sn_act(const Superdatum& d, int k, const CliffordPoly& f);

/// Swap only the y indices k, k+1 (label fixed); defined for an even equal
/// pair of strands.
CliffordPoly tilde_s(const Superdatum& d, int k, const CliffordPoly& f);
/// Swap the y and z indices k, k+1 (label fixed).
CliffordPoly approx_s(const Superdatum& d, int k, const CliffordPoly& f);

/// Leibniz operators with base values on y (resp. z) letters at k, k+1.
CliffordPoly sigma(const Superdatum& d, int k, const CliffordPoly& f);
CliffordPoly sigma_prime(const Superdatum& d, int k, const CliffordPoly& f);

/// Generators of the diagram algebra acting on the polynomial module.
struct Gen {
    enum Kind { Idem, Dot, Cross } kind;
    int pos;    // 0-based strand (Dot) or crossing (Cross) index
    Seq label;  // the sequence decoration of the generator
};

/// Action of a decorated generator: zero on label mismatch; dots act by
/// c_k^p(i_k) y_k, crossings by the six-case table (divided differences,
/// Clifford halves, gamma-normalized swaps with the Q-correction on oriented
/// pairs; the edge i -> j points from the smaller vertex index to the
/// larger).
CliffordPoly act(const Superdatum& d, const QTable& qt, const GammaTable& gm, const Gen& g,
                 const CliffordPoly& f);

/// All monomials of a label with total y/z exponent degree <= max_degree and
/// arbitrary Clifford subsets.
std::vector<CMonomial> monomials_up_to(int strands, int max_degree);

struct RelationFailure {
    std::string relation;
    int k = -1, l = -1;
    Seq label;
    CMonomial witness;
};

struct RelationReport {
    bool ok = true;
    std::vector<RelationFailure> failures;
    long checked = 0;
};

/// Checks every local relation as an exact operator identity on all monomials
/// of total degree <= max_degree of the label's module.
RelationReport verify_relations(const Superdatum& d, const QTable& qt, const GammaTable& gm,
                                const Seq& label, int max_degree, int jobs = 1);

/// Convenience: run verify_relations for every sequence of the weight.
RelationReport verify_relations_weight(const Superdatum& d, const QTable& qt, const GammaTable& gm,
                                       const Weight& nu, int max_degree, int jobs = 1);

}  // namespace qhs

#endif
