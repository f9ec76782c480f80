#ifndef QHS_DATUM_HPP
#define QHS_DATUM_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "qhs/pi_scalar.hpp"

namespace qhs {

/// Vertex index set: using Seq for sequences of vertex indices and Weight for
/// multiplicity vectors over the vertex set.
using Seq = std::vector<int>;
using Weight = std::vector<int>;

struct Vertex {
    std::string name;
    int parity = 0;  // 0 even, 1 odd
    int r = 1;       // symmetrizer
};

/// Borcherds-Cartan superdatum: parity-decorated generalized Cartan matrix
/// with symmetrizers, allowing non-positive diagonal entries.
class Superdatum {
public:
    Superdatum() = default;
    Superdatum(std::vector<Vertex> vertices, std::vector<std::vector<int>> matrix)
        : verts_(std::move(vertices)), a_(std::move(matrix)) {}

    int size() const { return static_cast<int>(verts_.size()); }
    const Vertex& vertex(int i) const { return verts_.at(i); }
    const std::string& name(int i) const { return verts_.at(i).name; }
    int parity(int i) const { return verts_.at(i).parity; }
    int r(int i) const { return verts_.at(i).r; }
    int a(int i, int j) const { return a_.at(i).at(j); }
    int dot(int i, int j) const { return r(i) * a(i, j); }  // the bilinear form i.j
    bool is_real(int i) const { return a(i, i) == 2; }
    bool is_imaginary(int i) const { return a(i, i) <= 0; }
    int index_of(const std::string& name) const;

    /// Weight of a sequence, and height of a weight.
    Weight weight_of(const Seq& s) const;
    static int height(const Weight& w);
    int seq_parity(const Seq& s) const;

private:
    static int j_self(int i) { return i; }
    std::vector<Vertex> verts_;
    std::vector<std::vector<int>> a_;
};

/// Coefficient table for the polynomials Q_ij: for every ordered pair (i, j)
/// with i != j a list of (a, b, t) with t_{i,j;a,b} = t_{j,i;b,a}.
class QTable {
public:
    struct Term {
        int a = 0, b = 0;
        Int t;
    };

    void set(int i, int j, std::vector<Term> terms) { table_[{i, j}] = std::move(terms); }
    const std::vector<Term>& get(int i, int j) const;
    bool has(int i, int j) const { return table_.count({i, j}) != 0; }

    /// Evaluate Q_ij(u, v) = sum t u^a v^b with u-powers before v-powers.
    template <class Elt, class Scale>
    Elt eval(int i, int j, const Elt& u, const Elt& v, const Elt& zero, const Elt& unit, Scale scale) const {
        const auto& ts = get(i, j);
        Elt acc = zero;
        for (const auto& t : ts) {
            Elt m = unit;
            for (int s = 0; s < t.a; ++s) m = m * u;
            for (int s = 0; s < t.b; ++s) m = m * v;
            acc = acc + scale(m, t.t);
        }
        return acc;
    }

    const std::map<std::pair<int, int>, std::vector<Term>>& entries() const { return table_; }

private:
    std::map<std::pair<int, int>, std::vector<Term>> table_;
};

/// Normalization constants gamma_ij for ordered pairs of distinct vertices.
class GammaTable {
public:
    void set(int i, int j, const Rat& v) { g_[{i, j}] = v; }
    const Rat& get(int i, int j) const;
    const std::map<std::pair<int, int>, Rat>& entries() const { return g_; }

private:
    std::map<std::pair<int, int>, Rat> g_;
};

struct ValidationReport {
    bool ok = true;
    std::string axiom;  // e.g. "(iv)"
    int i = -1, j = -1;
    std::string message;
};

/// Checks the superdatum axioms, then the Q-table and gamma-table constraints.
/// Returns the first violation found.
ValidationReport validate(const Superdatum& d, const QTable& q, const GammaTable& g);
ValidationReport validate_datum(const Superdatum& d);

/// The admissible exponent set T_ij = {(a,b) : r_i a + r_j b = -i.j, parity
/// evenness constraints}.
std::vector<std::pair<int, int>> exponent_set(const Superdatum& d, int i, int j);

/// t_{i,j;-a_ij,0} = t_{i,j;0,-a_ji} = 1, interior coefficients 0; the pair
/// table for i.j = 0 is the constant 1.
QTable default_qtable(const Superdatum& d);

/// gamma_ij = 1 when either vertex is even; for odd-odd pairs gamma_ij = 1
/// and gamma_ji = -1/2 for i < j.
GammaTable default_gamma(const Superdatum& d);

/// Structured-text (JSON) config: vertices, matrix, optional qtable/gamma
/// overrides. Unknown keys are rejected.
Superdatum load_datum_file(const std::string& path, QTable* qtable_out, GammaTable* gamma_out);
Superdatum parse_datum_json(const std::string& text, QTable* qtable_out, GammaTable* gamma_out);
std::string datum_to_json(const Superdatum& d, const QTable& q, const GammaTable& g);

/// Random valid superdatum; |I| <= 3, |a_ij| <= 4, r_i <= 3.
Superdatum random_datum(std::mt19937_64& rng);

/// Parse weights written as "i:2,j:1" against the datum's vertex names.
Weight parse_weight(const Superdatum& d, const std::string& text);
std::string weight_to_string(const Superdatum& d, const Weight& w);
std::string seq_to_string(const Superdatum& d, const Seq& s);
Seq parse_seq(const Superdatum& d, const std::string& text);

/// All sequences of a given weight, lexicographically ordered.
std::vector<Seq> sequences_of_weight(const Weight& w);

}  // namespace qhs

#endif
