#ifndef QHS_KTHEORY_HPP
#define QHS_KTHEORY_HPP

#include <string>
#include <vector>

#include "qhs/free_algebra.hpp"
#include "qhs/qhsa.hpp"

namespace qhs {

struct PairingReport {
    Weight nu;
    Seq iseq, jseq;
    int order = 0;
    DimSeries lhs{0}, rhs{0};
    bool ok = false;
    std::string convention = "identity";  // frozen sequence orientation
};

/// Compares the diagram-algebra block dimension with the series expansion of
/// the twisted bilinear form on the matching generator words.
PairingReport pairing_check(const Superdatum& d, const Weight& nu, const Seq& iseq, const Seq& jseq,
                            int order);

/// dim of the right-truncation 1_kseq R(nu) e per degree, as even/odd ranks
/// recombined into a (q, pi)-series. Verifies mult(e, e) = e first and that
/// every recombination is integral.
DimSeries idempotent_trunc_dim(const Superdatum& d, const QTable& qt, const Weight& nu,
                               const Seq& kseq, const QhsaElement& e, int order);

struct SerreCatReport {
    bool ok = true;
    int m = 0;
    std::vector<std::string> failures;  // per-sequence mismatches
};

/// Alternating-sum dimension identity for the induced divided-power
/// idempotents e_(i,a) (x) 1_(j^n) (x) e_(i,m-a), checked against every
/// sequence of the weight m i + n j.
SerreCatReport serre_categorified_check(const Superdatum& d, const QTable& qt, int i, int j, int n,
                                        int order);

struct MackeyReport {
    bool ok = false;
    DimSeries lhs{0}, rhs{0};
};

/// Graded-dimension form of the restriction-of-induction filtration for the
/// projectives attached to iseq (weight mu) and jseq (weight mu2), restricted
/// to (nu, nu2).
MackeyReport mackey_dim_check(const Superdatum& d, const Weight& nu, const Weight& nu2,
                              const Weight& mu, const Weight& mu2, const Seq& iseq, const Seq& jseq,
                              int order);

/// Total graded dimension of the projective column R(nu) 1_wseq.
DimSeries projective_dim(const Superdatum& d, const Weight& nu, const Seq& wseq, int order);

/// The n-fold induced idempotent e_(i,a) (x) 1_(j^n) (x) e_(i,b) as an element
/// on the concatenated strands.
QhsaElement induced_serre_idempotent(const Superdatum& d, int i, int j, int a, int n, int b);

}  // namespace qhs

#endif
