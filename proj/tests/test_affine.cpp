#include "affwhit/affine.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace affwhit;
using namespace affwhit::affine;
using roots::RootDatum;

TEST_SUITE("affine") {

TEST_CASE("bracket examples") {
    AffineAlgebra alg(RootDatum(2, {}));
    const auto e = alg.parse_generator("X[a1]");
    const auto f = alg.parse_generator("X[-a1]");
    const Generator e3 = Generator::loop(e.basis, 3);
    CHECK(alg.bracket(Generator::derivation(), e3) == AffineElement(e3, 3));
    const auto r = alg.bracket(Generator::loop(e.basis, 2), Generator::loop(f.basis, -2));
    CHECK(r == AffineElement(Generator::loop(roots::Basis::cartan(1), 0)) + AffineElement(Generator::central(), 8));
    CHECK(alg.render(r) == "H[1]@t^0 + 8*c");
    CHECK(alg.bracket(Generator::central(), Generator::derivation()).is_zero());
}

TEST_CASE("loop nilradical membership") {
    AffineAlgebra alg(RootDatum(2, {}));
    CHECK(alg.in_loop_nilradical(alg.parse_generator("X[a1]@t^-7")));
    CHECK_FALSE(alg.in_loop_nilradical(alg.parse_generator("H[1]@t^0")));
    CHECK_FALSE(alg.in_loop_nilradical(Generator::derivation()));
    CHECK_FALSE(alg.in_loop_nilradical(alg.parse_generator("X[-a1]@t^2")));
}

TEST_CASE("generator literals round trip") {
    AffineAlgebra alg(RootDatum(3, {}));
    for (const auto& b : alg.datum().basis())
        for (int e : {-3, 0, 5}) {
            const auto g = Generator::loop(b, e);
            CHECK(alg.parse_generator(alg.render(g)) == g);
        }
    CHECK(alg.parse_generator("c") == Generator::central());
    CHECK(alg.parse_generator("d") == Generator::derivation());
    CHECK_THROWS_AS(alg.parse_generator("Y[a1]"), ParseError);
    CHECK_THROWS_AS(alg.parse_generator("H[3]"), ParseError);
    CHECK_THROWS_AS(alg.parse_generator("X[a1]@t"), ParseError);
    CHECK(parse_cocycle("literal") == Cocycle::literal);
    CHECK_THROWS_AS(parse_cocycle("kac"), ParseError);
}

TEST_CASE("antisymmetry and Jacobi with the standard cocycle") {
    std::mt19937 rng(3);
    for (int n : {2, 3}) {
        AffineAlgebra alg(RootDatum(n, {}), Cocycle::standard);
        for (int k = 0; k < 1000; ++k) {
            const auto a = testing::random_generator(rng, alg.datum(), 4, true);
            const auto b = testing::random_generator(rng, alg.datum(), 4, true);
            const auto c = testing::random_generator(rng, alg.datum(), 4, true);
            CHECK(testing::antisymmetric(alg, a, b));
            CHECK(testing::jacobi_holds(alg, a, b, c));
        }
    }
}

TEST_CASE("the factor-free cocycle breaks Jacobi") {
    AffineAlgebra alg(RootDatum(2, {}), Cocycle::literal);
    const auto e = alg.parse_generator("X[a1]@t^1");
    const auto f = alg.parse_generator("X[-a1]@t^1");
    const auto h = alg.parse_generator("H[1]@t^-2");
    CHECK_FALSE(testing::jacobi_holds(alg, e, f, h));
}

TEST_CASE("loop algebra without c and d") {
    std::mt19937 rng(4);
    for (int n : {2, 3}) {
        AffineAlgebra alg(RootDatum(n, {}), Cocycle::none);
        for (int k = 0; k < 300; ++k) {
            const auto a = testing::random_generator(rng, alg.datum(), 4, false);
            const auto b = testing::random_generator(rng, alg.datum(), 4, false);
            const auto c = testing::random_generator(rng, alg.datum(), 4, false);
            CHECK(testing::jacobi_holds(alg, a, b, c));
            AffineElement expected;
            const auto fin = alg.datum().bracket(a.basis, b.basis);
            for (const auto& [basis, x] : fin.terms())
                expected.add(Generator::loop(basis, a.exp + b.exp), x);
            CHECK(alg.bracket(a, b) == expected);
        }
    }
}

TEST_CASE("the loop nilradical is a subalgebra without central terms") {
    for (const std::set<int>& levi : {std::set<int>{}, std::set<int>{1}, std::set<int>{2}}) {
        AffineAlgebra alg(RootDatum(3, levi));
        for (const auto& a : alg.datum().nil_roots())
            for (const auto& b : alg.datum().nil_roots())
                for (int i = -3; i <= 3; ++i)
                    for (int j = -3; j <= 3; ++j) {
                        const auto x = Generator::loop(alg.datum().basis_of(a), i);
                        const auto y = Generator::loop(alg.datum().basis_of(b), j);
                        const auto br = alg.bracket(x, y);
                        for (const auto& [g, c] : br.terms()) CHECK(alg.in_loop_nilradical(g));
                    }
    }
}

}
