#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace sl2pf;
using namespace sl2pf::testutil;

TEST_CASE("field construction") {
    auto f = f3();
    CHECK(f->p() == 3);
    CHECK(f->q() == 3);

    auto ext = Field::make(3, 2, {1, 0, 1});  // x^2 + 1
    CHECK(ext->q() == 9);
    CHECK(f9()->modulus() == std::vector<long>{1, 0, 1});  // default search finds x^2 + 1

    CHECK_THROWS_AS(Field::make(2, 1), Error);
    CHECK_THROWS_AS(Field::make(9, 1), Error);
    CHECK_THROWS_AS(Field::make(3, 2, {2, 0, 1}), Error);  // x^2 + 2 = (x+1)(x+2)
}

TEST_CASE("field table sanity") {
    for (auto f : {f3(), f5(), f9()}) {
        const Field& F = *f;
        for (long a = 0; a < F.q(); ++a) {
            Fq x = static_cast<Fq>(a);
            CHECK(F.add(x, F.neg(x)) == 0);
            if (x != 0) {
                CHECK(F.mul(x, F.inv(x)) == 1);
                CHECK(F.pow(x, F.q() - 1) == 1);  // Fermat
            }
            auto r = F.sqrt(F.mul(x, x));
            REQUIRE(r.has_value());
            CHECK(F.mul(*r, *r) == F.mul(x, x));
        }
    }
}

TEST_CASE("poly arithmetic examples over F3") {
    auto f = f3();
    CHECK(P(f, "T+1") * P(f, "T+2") == P(f, "T^2+2"));
    auto [q, r] = divrem(P(f, "T^2+2"), P(f, "T+1"));
    CHECK(q == P(f, "T+2"));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(exact_div(P(f, "T^2+2"), P(f, "T")), Error);

    CHECK(poly_gcd(P(f, "T^2+2"), P(f, "T+1")) == P(f, "T+1"));
    CHECK(poly_gcd(P(f, "2*T+2"), Poly::zero(f)) == P(f, "T+1"));  // monic(f)
    auto xg = poly_xgcd(P(f, "T"), P(f, "T+1"));
    CHECK(xg.d.is_one());
    CHECK(xg.s * P(f, "T") + xg.t * P(f, "T+1") == Poly::one(f));
}

TEST_CASE("powmod and poly_pow examples") {
    auto f = f3();
    CHECK(powmod(P(f, "T+1"), 4, P(f, "T^2+1")) == P(f, "2"));
    CHECK(powmod(P(f, "T^2+T"), 0, P(f, "T^3+T+1")).is_one());
    CHECK(powmod(P(f, "T"), 2, P(f, "T^2+1")) == P(f, "2"));

    CHECK(poly_pow(P(f, "T+1"), 2) == P(f, "T^2+2*T+1"));
    CHECK(poly_pow(P(f, "T^2+2*T"), 0).is_one());
    CHECK(poly_pow(P(f, "2*T"), 3) == P(f, "2*T^3"));
}

TEST_CASE("constant_part") {
    auto f = f3();
    CHECK(P(f, "2").constant_part() == 2);
    CHECK(Poly::zero(f).constant_part() == 0);
    CHECK_THROWS_AS(P(f, "T").constant_part(), Error);
}

TEST_CASE("ring axioms on random triples") {
    for (auto f : {f3(), f9()}) {
        Rng rng(42);
        for (int i = 0; i < 1000; ++i) {
            Poly a = Poly::random_at_most(f, 6, rng);
            Poly b = Poly::random_at_most(f, 6, rng);
            Poly c = Poly::random_at_most(f, 6, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("divrem round-trip and xgcd Bezout on random pairs") {
    for (auto f : {f3(), f5(), f9()}) {
        Rng rng(7);
        for (int i = 0; i < 400; ++i) {
            Poly a = Poly::random_at_most(f, 12, rng);
            Poly g = Poly::random_exact_degree(f, 1 + static_cast<int>(rng.below(6)), rng);
            auto [q, r] = divrem(a, g);
            CHECK(a == q * g + r);
            CHECK(r.degree() < g.degree());
            if (!a.is_zero()) {
                auto xg = poly_xgcd(a, g);
                CHECK(xg.s * a + xg.t * g == xg.d);
                CHECK(xg.d.is_monic());
                CHECK(divrem(a, xg.d).second.is_zero());
                CHECK(divrem(g, xg.d).second.is_zero());
            }
        }
    }
}

TEST_CASE("powmod agrees with the unreduced-power oracle") {
    for (auto f : {f3(), f9()}) {
        Rng rng(11);
        for (int i = 0; i < 200; ++i) {
            Poly base = Poly::random_at_most(f, 4, rng);
            Poly mod = Poly::random_exact_degree(f, 1 + static_cast<int>(rng.below(4)), rng);
            unsigned long e = rng.below(33);
            CHECK(powmod(base, e, mod) == divrem(poly_pow(base, e), mod).second);
        }
    }
}

TEST_CASE("Frobenius identity (f+g)^p = f^p + g^p") {
    for (auto f : {f3(), f5(), f9()}) {
        Rng rng(13);
        unsigned long p = static_cast<unsigned long>(f->p());
        for (int i = 0; i < 100; ++i) {
            Poly a = Poly::random_at_most(f, 5, rng);
            Poly b = Poly::random_at_most(f, 5, rng);
            CHECK(poly_pow(a + b, p) == poly_pow(a, p) + poly_pow(b, p));
        }
    }
}

TEST_CASE("multiplication matches the schoolbook reference across sizes") {
    for (auto f : {f3(), f9()}) {
        Rng rng(17);
        for (int deg : {1, 10, 31, 32, 33, 100, 257, 1000}) {
            Poly a = Poly::random_exact_degree(f, deg, rng);
            Poly b = Poly::random_exact_degree(f, deg + static_cast<int>(rng.below(20)), rng);
            CHECK(a * b == poly_mul_reference(a, b));
        }
    }
}

TEST_CASE("ModCtx reduction agrees with divrem") {
    for (auto f : {f3(), f9()}) {
        Rng rng(19);
        for (int i = 0; i < 200; ++i) {
            Poly mod = Poly::random_exact_degree(f, 1 + static_cast<int>(rng.below(12)), rng);
            Poly a = Poly::random_at_most(f, 30, rng);
            ModCtx ctx(mod);
            CHECK(ctx.reduce(a) == divrem(a, mod).second);
        }
    }
}

TEST_CASE("parser/printer round-trip") {
    for (auto f : {f3(), f5(), f9()}) {
        Rng rng(23);
        for (int i = 0; i < 300; ++i) {
            Poly a = Poly::random_at_most(f, 8, rng);
            CHECK(Poly::parse(f, a.to_string()) == a);
        }
    }
    auto f = f3();
    CHECK(P(f, " 2*T^3 + T + 1 ") == P(f, "2*T^3+T+1"));
    CHECK(P(f, "0").is_zero());
    CHECK_THROWS_AS(P(f, "T^"), Error);
    CHECK_THROWS_AS(P(f, ""), Error);
    auto e = f9();
    CHECK(P(e, "[1,2]*T^2+[0,1]").to_string() == "[1,2]*T^2+[0,1]");
}

TEST_CASE("poly_sqrt") {
    for (auto f : {f3(), f5(), f9()}) {
        Rng rng(29);
        for (int i = 0; i < 200; ++i) {
            Poly r = Poly::random_at_most(f, 5, rng);
            auto s = poly_sqrt(r * r);
            REQUIRE(s.has_value());
            CHECK(*s * *s == r * r);
        }
    }
    auto f = f3();
    CHECK_FALSE(poly_sqrt(P(f, "T")).has_value());
    CHECK_FALSE(poly_sqrt(P(f, "T^2+1")).has_value());
}

TEST_CASE("degree bookkeeping") {
    auto f = f3();
    CHECK(Poly::zero(f).degree() == Poly::kNegInfDeg);
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        Poly a = Poly::random_exact_degree(f, static_cast<int>(rng.below(8)), rng);
        Poly b = Poly::random_exact_degree(f, static_cast<int>(rng.below(8)), rng);
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}
