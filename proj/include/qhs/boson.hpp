#ifndef QHS_BOSON_HPP
#define QHS_BOSON_HPP

#include <map>
#include <string>
#include <vector>

#include "qhs/free_algebra.hpp"

namespace qhs {

/// Sign mode for the lowering operators: Generic keeps pi, Plus/Minus bake in
/// the specialization. The default throughout this module is Minus, where the
/// commutation identities are proved.
enum class PiMode { Generic, Plus, Minus };

Scalar pi_sign(PiMode mode, int exponent);

/// e'_i: e'_i(1) = 0, e'_i(f_j w) = delta_ij w + s q_i^(-a_ij) f_j e'_i(w)
/// with s = pi^(p(i)p(j)) in Generic mode and (+-1)^(p(i)p(j)) otherwise.
FreeElement e_prime(const Superdatum& d, int i, const FreeElement& x, PiMode mode = PiMode::Minus);

/// e''_i: same with q_i^(+a_ij).
FreeElement e_dprime(const Superdatum& d, int i, const FreeElement& x, PiMode mode = PiMode::Minus);

/// Twisted form with prescribed generator self-pairings:
/// <1,1> = 1, <f_i x, y> = kappa_i <x, e'_i y>; zero across distinct weights.
RationalScalar boson_form(const Superdatum& d, const FreeElement& x, const FreeElement& y,
                          const std::vector<RationalScalar>& kappa_by_vertex,
                          PiMode mode = PiMode::Minus);

struct OperatorCheckReport {
    bool ok = true;
    Word witness;      // first failing word, if any
    std::string note;  // what failed
};

/// The quantum Serre operator
/// S = sum_(a+b=m) (-1)^(a + p(a;i,j)) [m choose a]_i^- e'_i^a e'_j e'_i^b,
/// m = 1 - a_ij, intertwines left multiplication by f_k up to the factor
/// (-1)^((m p(i) + p(j)) p(k)) q_k^(-m a_ki - a_kj) on all words of length
/// <= max_len. mutate_sign flips one summand, for mutation testing.
OperatorCheckReport serre_operator_identity_check(const Superdatum& d, int i, int j, int k,
                                                  int max_len, bool mutate_sign = false);

/// e'_i e''_j = (-1)^(p(i)p(j)) q_i^(a_ij) e''_j e'_i on all words of length
/// <= max_len.
OperatorCheckReport commutation_check(const Superdatum& d, int i, int j, int max_len);

/// sum_(a+b=m) (-1)^(a + p(a;i,j) + b p(i)p(j)) q_i^(b(m-1)) [m choose a]_i^-,
/// expected to vanish identically.
Scalar binomial_alternating_sum(int m, int i_parity, int j_parity, int r);

/// p(a;i,j) + (b-1)p(i) + p(a+1;i,j) + (m-1)p(i) + p(i)p(j) mod 2.
int parity_congruence_residue(int a, int b, int m, int i_parity, int j_parity);

/// All words over the datum's vertex set with length <= max_len.
std::vector<Word> words_up_to(const Superdatum& d, int max_len);

}  // namespace qhs

#endif
