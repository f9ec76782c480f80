#include "qhs/datum.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace qhs {

using nlohmann::json;

int Superdatum::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (verts_[i].name == name) return i;
    throw std::invalid_argument("unknown vertex name: " + name);
}

Weight Superdatum::weight_of(const Seq& s) const {
    Weight w(size(), 0);
    for (int v : s) ++w.at(v);
    return w;
}

int Superdatum::height(const Weight& w) {
    int h = 0;
    for (int x : w) h += x;
    return h;
}

int Superdatum::seq_parity(const Seq& s) const {
    int p = 0;
    for (int v : s) p ^= parity(v);
    return p;
}

const std::vector<QTable::Term>& QTable::get(int i, int j) const {
    auto it = table_.find({i, j});
    if (it == table_.end()) throw std::invalid_argument("QTable: pair not in table");
    return it->second;
}

const Rat& GammaTable::get(int i, int j) const {
    auto it = g_.find({i, j});
    if (it == g_.end()) throw std::invalid_argument("GammaTable: pair not in table");
    return it->second;
}

ValidationReport validate_datum(const Superdatum& d) {
    ValidationReport rep;
    auto fail = [&](const std::string& ax, int i, int j, const std::string& msg) {
        rep.ok = false;
        rep.axiom = ax;
        rep.i = i;
        rep.j = j;
        rep.message = msg;
        return rep;
    };
    int n = d.size();
    if (n == 0) return fail("(i)", -1, -1, "empty vertex set");
    for (int i = 0; i < n; ++i) {
        int aii = d.a(i, i);
        if (!(aii == 2 || (aii <= 0 && aii % 2 == 0)))
            return fail("(i)", i, i, "diagonal entry must be 2, 0, -2, -4, ...");
        if (d.r(i) <= 0) return fail("(v)", i, i, "symmetrizer must be positive");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (d.a(i, j) > 0) return fail("(ii)", i, j, "off-diagonal entry must be <= 0");
            if ((d.a(i, j) == 0) != (d.a(j, i) == 0))
                return fail("(iii)", i, j, "a_ij = 0 iff a_ji = 0 violated");
        }
    for (int i = 0; i < n; ++i)
        if (d.parity(i) == 1)
            for (int j = 0; j < n; ++j)
                if (d.a(i, j) % 2 != 0)
                    return fail("(iv)", i, j, "odd vertex requires even Cartan row");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d.r(i) * d.a(i, j) != d.r(j) * d.a(j, i))
                return fail("(v)", i, j, "symmetrizers do not symmetrize the matrix");
    return rep;
}

std::vector<std::pair<int, int>> exponent_set(const Superdatum& d, int i, int j) {
    std::vector<std::pair<int, int>> out;
    int target = -d.dot(i, j);
    if (target == 0) {
        out.emplace_back(0, 0);
        return out;
    }
    for (int a = 0; d.r(i) * a <= target; ++a) {
        int rest = target - d.r(i) * a;
        if (rest % d.r(j) != 0) continue;
        int b = rest / d.r(j);
        if (d.parity(i) == 1 && a % 2 != 0) continue;
        if (d.parity(j) == 1 && b % 2 != 0) continue;
        out.emplace_back(a, b);
    }
    return out;
}

ValidationReport validate(const Superdatum& d, const QTable& q, const GammaTable& g) {
    ValidationReport rep = validate_datum(d);
    if (!rep.ok) return rep;
    auto fail = [&](const std::string& ax, int i, int j, const std::string& msg) {
        rep.ok = false;
        rep.axiom = ax;
        rep.i = i;
        rep.j = j;
        rep.message = msg;
        return rep;
    };
    int n = d.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!q.has(i, j)) return fail("Q", i, j, "missing Q-table pair");
            auto admissible = exponent_set(d, i, j);
            Int lead = 0;
            for (const auto& t : q.get(i, j)) {
                if (std::find(admissible.begin(), admissible.end(), std::make_pair(t.a, t.b)) == admissible.end())
                    return fail("Q", i, j, "exponent pair outside the admissible set");
                // symmetry t_{i,j;a,b} = t_{j,i;b,a}
                Int mirror = 0;
                for (const auto& s : q.get(j, i))
                    if (s.a == t.b && s.b == t.a) mirror = s.t;
                if (mirror != t.t) return fail("Q", i, j, "Q-table symmetry violated");
                if (t.a == -d.a(i, j) && t.b == 0) lead = t.t;
                if (d.dot(i, j) == 0 && !(t.a == 0 && t.b == 0))
                    return fail("Q", i, j, "orthogonal pair must carry the constant table");
            }
            if (d.dot(i, j) == 0) {
                if (q.get(i, j).size() != 1 || q.get(i, j)[0].t != 1)
                    return fail("Q", i, j, "orthogonal pair must have Q = 1");
            } else if (lead == 0) {
                return fail("Q", i, j, "leading coefficient t_{i,j;-a_ij,0} must be nonzero");
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Rat gij = g.get(i, j);
            if (d.parity(i) == 1 && d.parity(j) == 1) {
                if (gij * g.get(j, i) != Rat(-1, 2))
                    return fail("gamma", i, j, "odd-odd pair needs gamma_ij * gamma_ji = -1/2");
            } else if (gij != 1) {
                return fail("gamma", i, j, "pair with an even vertex needs gamma = 1");
            }
        }
    return rep;
}

QTable default_qtable(const Superdatum& d) {
    QTable q;
    int n = d.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<QTable::Term> ts;
            if (d.dot(i, j) == 0) {
                ts.push_back({0, 0, 1});
            } else {
                ts.push_back({-d.a(i, j), 0, 1});
                ts.push_back({0, -d.a(j, i), 1});
            }
            q.set(i, j, std::move(ts));
        }
    return q;
}

GammaTable default_gamma(const Superdatum& d) {
    GammaTable g;
    int n = d.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (d.parity(i) == 1 && d.parity(j) == 1)
                g.set(i, j, i < j ? Rat(1) : Rat(-1, 2));
            else
                g.set(i, j, Rat(1));
        }
    return g;
}

namespace {

Rat parse_rat(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw std::invalid_argument("config: unknown key '" + it.key() + "' in " + where);
    }
}

}  // namespace

Superdatum parse_datum_json(const std::string& text, QTable* qtable_out, GammaTable* gamma_out) {
    json cfg = json::parse(text);
    if (!cfg.is_object()) throw std::invalid_argument("config: top level must be an object");
    reject_unknown(cfg, {"vertices", "matrix", "qtable", "gamma"}, "top level");
    if (!cfg.contains("vertices") || !cfg.contains("matrix"))
        throw std::invalid_argument("config: 'vertices' and 'matrix' are required");

    std::vector<Vertex> verts;
    for (const auto& v : cfg["vertices"]) {
        reject_unknown(v, {"name", "parity", "r"}, "vertex");
        Vertex vx;
        vx.name = v.at("name").get<std::string>();
        vx.parity = v.at("parity").get<int>();
        vx.r = v.at("r").get<int>();
        if (vx.parity != 0 && vx.parity != 1) throw std::invalid_argument("config: parity must be 0 or 1");
        verts.push_back(vx);
    }
    std::vector<std::vector<int>> mat;
    for (const auto& row : cfg["matrix"]) {
        std::vector<int> r;
        for (const auto& x : row) r.push_back(x.get<int>());
        mat.push_back(r);
    }
    if (mat.size() != verts.size())
        throw std::invalid_argument("config: matrix size does not match vertex count");
    for (const auto& r : mat)
        if (r.size() != verts.size()) throw std::invalid_argument("config: matrix must be square");

    Superdatum d(verts, mat);
    QTable q = default_qtable(d);
    GammaTable g = default_gamma(d);
    if (cfg.contains("qtable")) {
        for (const auto& entry : cfg["qtable"]) {
            reject_unknown(entry, {"i", "j", "terms"}, "qtable entry");
            int i = d.index_of(entry.at("i").get<std::string>());
            int j = d.index_of(entry.at("j").get<std::string>());
            std::vector<QTable::Term> ts;
            for (const auto& t : entry.at("terms")) {
                reject_unknown(t, {"a", "b", "t"}, "qtable term");
                ts.push_back({t.at("a").get<int>(), t.at("b").get<int>(), Int(t.at("t").get<std::string>())});
            }
            q.set(i, j, ts);
        }
    }
    if (cfg.contains("gamma")) {
        for (const auto& entry : cfg["gamma"]) {
            reject_unknown(entry, {"i", "j", "value"}, "gamma entry");
            int i = d.index_of(entry.at("i").get<std::string>());
            int j = d.index_of(entry.at("j").get<std::string>());
            g.set(i, j, parse_rat(entry.at("value").get<std::string>()));
        }
    }
    if (qtable_out) *qtable_out = q;
    if (gamma_out) *gamma_out = g;
    return d;
}

Superdatum load_datum_file(const std::string& path, QTable* qtable_out, GammaTable* gamma_out) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_datum_json(ss.str(), qtable_out, gamma_out);
}

std::string datum_to_json(const Superdatum& d, const QTable& q, const GammaTable& g) {
    json out;
    out["vertices"] = json::array();
    for (int i = 0; i < d.size(); ++i)
        out["vertices"].push_back({{"name", d.name(i)}, {"parity", d.parity(i)}, {"r", d.r(i)}});
    out["matrix"] = json::array();
    for (int i = 0; i < d.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < d.size(); ++j) row.push_back(d.a(i, j));
        out["matrix"].push_back(row);
    }
    out["qtable"] = json::array();
    for (const auto& [pair, terms] : q.entries()) {
        json ts = json::array();
        for (const auto& t : terms) ts.push_back({{"a", t.a}, {"b", t.b}, {"t", t.t.get_str()}});
        out["qtable"].push_back({{"i", d.name(pair.first)}, {"j", d.name(pair.second)}, {"terms", ts}});
    }
    out["gamma"] = json::array();
    for (const auto& [pair, v] : g.entries())
        out["gamma"].push_back({{"i", d.name(pair.first)}, {"j", d.name(pair.second)}, {"value", v.get_str()}});
    return out.dump(2);
}

Superdatum random_datum(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
    for (;;) {
        int n = pick(1, 3);
        std::vector<Vertex> verts;
        for (int i = 0; i < n; ++i) {
            Vertex v;
            v.name = std::string(1, static_cast<char>('a' + i));
            v.parity = pick(0, 1);
            v.r = pick(1, 3);
            verts.push_back(v);
        }
        std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            int diag[] = {2, 0, -2, -4};
            a[i][i] = diag[pick(0, 3)];
            if (verts[i].parity == 1 && a[i][i] % 2 != 0) a[i][i] = 2;
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                // choose the symmetric form value, then split by symmetrizers
                int l = std::lcm(verts[i].r, verts[j].r);
                int maxmult = std::min(4 * verts[i].r, 4 * verts[j].r) / l;
                int f = -l * pick(0, std::max(0, maxmult));
                int aij = f / verts[i].r, aji = f / verts[j].r;
                if (verts[i].parity == 1 && aij % 2 != 0) ok = false;
                if (verts[j].parity == 1 && aji % 2 != 0) ok = false;
                a[i][j] = aij;
                a[j][i] = aji;
            }
        if (!ok) continue;
        Superdatum d(verts, a);
        if (validate_datum(d).ok) return d;
    }
}

Weight parse_weight(const Superdatum& d, const std::string& text) {
    Weight w(d.size(), 0);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        std::string name = item.substr(0, colon);
        auto strip = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        name = strip(name);
        int mult = 1;
        if (colon != std::string::npos) mult = std::stoi(strip(item.substr(colon + 1)));
        if (mult < 0) throw std::invalid_argument("weight multiplicities must be >= 0");
        w.at(d.index_of(name)) += mult;
    }
    return w;
}

std::string weight_to_string(const Superdatum& d, const Weight& w) {
    std::string out;
    for (int i = 0; i < d.size(); ++i) {
        if (w[i] == 0) continue;
        if (!out.empty()) out += ",";
        out += d.name(i) + ":" + std::to_string(w[i]);
    }
    return out.empty() ? "0" : out;
}

std::string seq_to_string(const Superdatum& d, const Seq& s) {
    std::string out;
    for (size_t t = 0; t < s.size(); ++t) {
        if (t) out += " ";
        out += d.name(s[t]);
    }
    return out;
}

Seq parse_seq(const Superdatum& d, const std::string& text) {
    Seq s;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        // allow comma separation as well
        std::stringstream inner(tok);
        std::string piece;
        while (std::getline(inner, piece, ','))
            if (!piece.empty()) s.push_back(d.index_of(piece));
    }
    return s;
}

std::vector<Seq> sequences_of_weight(const Weight& w) {
    std::vector<Seq> out;
    Seq letters;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        for (int k = 0; k < w[i]; ++k) letters.push_back(i);
    std::sort(letters.begin(), letters.end());
    if (letters.empty()) {
        out.push_back({});
        return out;
    }
    do {
        out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

}  // namespace qhs
