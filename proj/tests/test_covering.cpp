#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qhs/free_algebra.hpp"
#include "qhs/testdata.hpp"

using namespace qhs;

namespace {

FreeElement random_homogeneous(std::mt19937_64& rng, const Superdatum& d, int ht) {
    // random combination of words of one random weight
    Weight nu(d.size(), 0);
    for (int t = 0; t < ht; ++t) ++nu[rng() % d.size()];
    auto words = sequences_of_weight(nu);
    FreeElement x;
    for (const auto& w : words)
        if (rng() % 2 == 0) x.add(w, RationalScalar::of_int(static_cast<long>(rng() % 7) - 3));
    return x;
}

}  // namespace

TEST_CASE("free multiplication") {
    FreeElement ti = FreeElement::generator(0);
    FreeElement tj = FreeElement::generator(1);
    CHECK(mult(ti, tj) == FreeElement::of_word({0, 1}));
    CHECK(mult(FreeElement::unit(), ti) == ti);
    FreeElement sum = ti + tj;
    FreeElement lhs = mult(sum, ti);
    FreeElement expect = FreeElement::of_word({0, 0}) + FreeElement::of_word({1, 0});
    CHECK(lhs == expect);
}

TEST_CASE("coproduct on generators and two-letter words") {
    for (const auto& d : bundled_data()) {
        TensorElement one = coproduct(d, FreeElement::unit());
        TensorElement e;
        e.add({}, {}, RationalScalar::one());
        CHECK(one == e);

        TensorElement ti = coproduct(d, FreeElement::generator(0));
        TensorElement expect_ti;
        expect_ti.add({0}, {}, RationalScalar::one());
        expect_ti.add({}, {0}, RationalScalar::one());
        CHECK(ti == expect_ti);

        // theta_j theta_i with i = 0, j = 1
        TensorElement co = coproduct(d, FreeElement::of_word({1, 0}));
        TensorElement expect;
        expect.add({1, 0}, {}, RationalScalar::one());
        expect.add({1}, {0}, RationalScalar::one());
        expect.add({0}, {1},
                   RationalScalar(Scalar::pi_power(d.parity(0) * d.parity(1)) *
                                  Scalar::q_power(-d.dot(0, 1))));
        expect.add({}, {1, 0}, RationalScalar::one());
        CHECK(co == expect);
    }
}

TEST_CASE("rho component") {
    for (const auto& d : bundled_data()) {
        CHECK(rho_component(d, 0, FreeElement::generator(0)) == FreeElement::unit());
        CHECK(rho_component(d, 0, FreeElement::generator(1)).is_zero());
        FreeElement x = rho_component(d, 0, FreeElement::of_word({1, 0}));
        FreeElement expect = FreeElement::generator(1).scaled(RationalScalar(
            Scalar::pi_power(d.parity(0) * d.parity(1)) * Scalar::q_power(-d.dot(0, 1))));
        CHECK(x == expect);
    }
}

TEST_CASE("rho is a twisted derivation") {
    std::mt19937_64 rng(31);
    for (const auto& d : bundled_data())
        for (int t = 0; t < 40; ++t) {
            FreeElement x = random_homogeneous(rng, d, 1 + static_cast<int>(rng() % 2));
            FreeElement y = random_homogeneous(rng, d, 1 + static_cast<int>(rng() % 2));
            auto wx = x.weight(d);
            if (!wx) continue;
            int px = x.parity(d);
            for (int i = 0; i < d.size(); ++i) {
                int dot = 0;
                for (int v = 0; v < d.size(); ++v) dot += (*wx)[v] * d.dot(i, v);
                FreeElement lhs = rho_component(d, i, mult(x, y));
                FreeElement rhs = mult(rho_component(d, i, x), y) +
                                  mult(x, rho_component(d, i, y))
                                      .scaled(RationalScalar(Scalar::pi_power(d.parity(i) * px) *
                                                             Scalar::q_power(-dot)));
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("coassociativity on words up to length 4") {
    // (rho (x) id) rho = (id (x) rho) rho, expanded through the public coproduct
    std::mt19937_64 rng(17);
    for (const auto& d : bundled_data()) {
        for (int t = 0; t < 25; ++t) {
            int len = static_cast<int>(rng() % 5);
            Word w;
            for (int s = 0; s < len; ++s) w.push_back(static_cast<int>(rng() % d.size()));
            TensorElement co = coproduct(d, FreeElement::of_word(w));
            std::map<std::tuple<Word, Word, Word>, RationalScalar> lhs, rhs;
            auto addto = [](auto& m, const Word& a, const Word& b, const Word& c, const RationalScalar& v) {
                auto key = std::make_tuple(a, b, c);
                auto it = m.find(key);
                if (it == m.end())
                    m[key] = v;
                else {
                    it->second += v;
                    if (it->second.is_zero()) m.erase(it);
                }
            };
            for (const auto& [ab, c] : co.terms()) {
                TensorElement left = coproduct(d, FreeElement::of_word(ab.first));
                for (const auto& [uv, c2] : left.terms()) addto(lhs, uv.first, uv.second, ab.second, c * c2);
                TensorElement right = coproduct(d, FreeElement::of_word(ab.second));
                for (const auto& [uv, c2] : right.terms()) addto(rhs, ab.first, uv.first, uv.second, c * c2);
            }
            CHECK(lhs.size() == rhs.size());
            for (const auto& [k, v] : lhs) {
                auto it = rhs.find(k);
                REQUIRE(it != rhs.end());
                CHECK(v == it->second);
            }
        }
    }
}

TEST_CASE("form base cases and two-letter values") {
    for (const auto& d : bundled_data()) {
        CHECK(form(d, FreeElement::unit(), FreeElement::unit()) == RationalScalar::one());
        for (int i = 0; i < d.size(); ++i)
            CHECK(form(d, FreeElement::generator(i), FreeElement::generator(i)) == kappa(d, i));
        // weight mismatch
        CHECK(form(d, FreeElement::generator(0), FreeElement::generator(1)).is_zero());
        CHECK(form(d, FreeElement::generator(0), FreeElement::of_word({0, 0})).is_zero());
        // {theta_i theta_j, theta_j theta_i} = pi^(pp) q^(-i.j) kappa_i kappa_j
        int i = 0, j = 1;
        RationalScalar lhs = form(d, FreeElement::of_word({i, j}), FreeElement::of_word({j, i}));
        RationalScalar expect = kappa(d, i) * kappa(d, j) *
                                RationalScalar(Scalar::pi_power(d.parity(i) * d.parity(j)) *
                                               Scalar::q_power(-d.dot(i, j)));
        CHECK(lhs == expect);
    }
}

TEST_CASE("form agrees with the coproduct-pairing oracle, ht <= 4") {
    std::mt19937_64 rng(61);
    for (const auto& d : bundled_data())
        for (int t = 0; t < 30; ++t) {
            int ht = 1 + static_cast<int>(rng() % 4);
            FreeElement x = random_homogeneous(rng, d, ht);
            FreeElement y = random_homogeneous(rng, d, ht);
            CHECK(form(d, x, y) == oracle::form_by_coproduct(d, x, y));
        }
}

TEST_CASE("form is symmetric on random homogeneous pairs, ht <= 4") {
    std::mt19937_64 rng(62);
    for (const auto& d : bundled_data())
        for (int t = 0; t < 30; ++t) {
            int ht = 1 + static_cast<int>(rng() % 4);
            FreeElement x = random_homogeneous(rng, d, ht);
            FreeElement y = random_homogeneous(rng, d, ht);
            CHECK(form(d, x, y) == form(d, y, x));
        }
}

TEST_CASE("axiom: form(x, yz) equals pairing of coproduct(x) against y (x) z") {
    std::mt19937_64 rng(63);
    for (const auto& d : bundled_data())
        for (int t = 0; t < 25; ++t) {
            FreeElement x = random_homogeneous(rng, d, 1 + static_cast<int>(rng() % 3));
            FreeElement y = random_homogeneous(rng, d, 1 + static_cast<int>(rng() % 2));
            FreeElement z = random_homogeneous(rng, d, 1 + static_cast<int>(rng() % 2));
            RationalScalar lhs = form(d, x, mult(y, z));
            RationalScalar rhs;
            FormCalc calc(d);
            TensorElement cox = coproduct(d, x);
            for (const auto& [ab, c] : cox.terms())
                rhs += c * calc.elements(FreeElement::of_word(ab.first), y) *
                       calc.elements(FreeElement::of_word(ab.second), z);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("gram examples") {
    Superdatum d = datum_rank3_mixed();
    SUBCASE("single letter") {
        for (int i = 0; i < d.size(); ++i) {
            Weight nu(d.size(), 0);
            nu[i] = 1;
            auto g = gram(d, nu);
            REQUIRE(g.words.size() == 1);
            CHECK(g.entry[0][0] == kappa(d, i));
        }
    }
    SUBCASE("orthogonal pair m + o") {
        Weight nu{0, 1, 1};
        auto g = gram(d, nu);
        REQUIRE(g.words.size() == 2);
        int m = 1, o = 2;
        RationalScalar kk = kappa(d, m) * kappa(d, o);
        RationalScalar twisted = kk * RationalScalar(Scalar::pi_power(d.parity(m) * d.parity(o)));
        // words in lexicographic order: (m o), (o m)
        CHECK(g.entry[0][0] == kk);
        CHECK(g.entry[0][1] == twisted);
        CHECK(g.entry[1][0] == twisted);
        CHECK(g.entry[1][1] == kk);
    }
    SUBCASE("bound enforced") { CHECK_THROWS_AS(gram(d, Weight{7, 0, 0}, 6), std::domain_error); }
    SUBCASE("parallel rows match sequential") {
        Weight nu{2, 1, 0};
        auto g1 = gram(d, nu, 6, 1);
        auto g2 = gram(d, nu, 6, 4);
        REQUIRE(g1.words == g2.words);
        for (size_t r = 0; r < g1.words.size(); ++r)
            for (size_t c = 0; c < g1.words.size(); ++c) CHECK(g1.entry[r][c] == g2.entry[r][c]);
    }
}

TEST_CASE("gram of 2i for an even real vertex, frozen from the recursion") {
    Superdatum d = datum_rank2_even();
    auto g = gram(d, Weight{2, 0});
    REQUIRE(g.words.size() == 1);
    RationalScalar k = kappa(d, 0);
    RationalScalar expect = k * k * RationalScalar(Scalar::one() + Scalar::q_power(-2));
    CHECK(g.entry[0][0] == expect);
    CHECK(g.entry[0][0] == oracle::form_by_coproduct(d, FreeElement::of_word({0, 0}),
                                                     FreeElement::of_word({0, 0})));
}

TEST_CASE("serre elements lie in the radical; ordinary vectors do not") {
    SUBCASE("rank2 super datum: i odd real, a_ij = -2, n = 1") {
        Superdatum d = datum_rank2_super();
        FreeElement s = serre_element(d, 0, 1, 1);
        auto rep = radical_member(d, s);
        CHECK(rep.in_radical);
        CHECK(rep.iterated_rho_agrees);
    }
    SUBCASE("rank2 even datum: both orders, n = 1") {
        Superdatum d = datum_rank2_even();
        for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
            auto rep = radical_member(d, serre_element(d, i, j, 1));
            CHECK(rep.in_radical);
            CHECK(rep.iterated_rho_agrees);
        }
    }
    SUBCASE("orthogonal commutator") {
        Superdatum d = datum_rank3_mixed();
        auto rep = radical_member(d, commutator_element(d, 1, 2));
        CHECK(rep.in_radical);
        CHECK(rep.iterated_rho_agrees);
    }
    SUBCASE("zero element and generators") {
        Superdatum d = datum_rank2_even();
        CHECK(radical_member(d, FreeElement::zero()).in_radical);
        for (int i = 0; i < d.size(); ++i) {
            auto rep = radical_member(d, FreeElement::generator(i));
            CHECK_FALSE(rep.in_radical);
            CHECK(rep.iterated_rho_agrees);
        }
    }
}

TEST_CASE("higher serre elements n = 2 in the radical where ht fits") {
    Superdatum d = datum_rank2_even();  // 1 - 2 a_ij = 3, ht = 5
    auto rep = radical_member(d, serre_element(d, 0, 1, 2));
    CHECK(rep.in_radical);
    CHECK(rep.iterated_rho_agrees);
}

TEST_CASE("serre element expansion for a_ij = -1, even real") {
    Superdatum d = datum_rank2_even();
    FreeElement s = serre_element(d, 0, 1, 1);
    RationalScalar inv2 = invert(quantum_int(2, 1, 0));
    CHECK(s.coeff({0, 0, 1}) == inv2);
    CHECK(s.coeff({0, 1, 0}) == -RationalScalar::one());
    CHECK(s.coeff({1, 0, 0}) == inv2);
}

TEST_CASE("kappa specializations") {
    Superdatum d = datum_rank2_super();  // p(i) = 1, r_i = 1
    RationalScalar k = kappa(d, 0);
    RationalScalar plus = k.specialize(+1);
    RationalScalar minus = k.specialize(-1);
    CHECK(plus == RationalScalar(Scalar::one(), Laurent::one() - Laurent::q_power(2)));
    CHECK(minus == RationalScalar(Scalar::one(), Laurent::one() + Laurent::q_power(2)));
    Superdatum de = datum_rank2_even();
    CHECK(kappa(de, 0).specialize(+1) == kappa(de, 0).specialize(-1));
}

TEST_CASE("radical two-way check on random elements") {
    std::mt19937_64 rng(64);
    for (const auto& d : bundled_data())
        for (int t = 0; t < 20; ++t) {
            FreeElement x = random_homogeneous(rng, d, 1 + static_cast<int>(rng() % 3));
            auto rep = radical_member(d, x);
            CHECK(rep.iterated_rho_agrees);
        }
}
