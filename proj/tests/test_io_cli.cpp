#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2pf/decompose.hpp"
#include "sl2pf/io.hpp"
#include "sl2pf/random_sl2.hpp"
#include "test_util.hpp"

using namespace sl2pf;
using namespace sl2pf::testutil;

TEST_CASE("matrix JSON round-trip") {
    for (auto f : {f3(), f9()}) {
        Rng rng(1);
        for (int i = 0; i < 25; ++i) {
            auto r = random_sl2(f, rng, {6, 3, 8});
            std::string j = matrix_to_json(r.matrix);
            Mat2 back = matrix_from_json_text(j);
            CHECK(back == r.matrix);
            CHECK(back.field().same(*f));
        }
    }
}

TEST_CASE("matrix JSON errors") {
    CHECK_THROWS_AS(matrix_from_json_text("{"), Error);
    CHECK_THROWS_AS(matrix_from_json_text(R"({"v":2,"field":{"p":3,"n":1},"matrix":[["0","0"],["0","0"]]})"),
                    Error);
    CHECK_THROWS_AS(matrix_from_json_text(R"({"v":1,"field":{"p":3,"n":1},"matrix":[["1","0"]]})"),
                    Error);
    CHECK_THROWS_AS(matrix_from_json_text(R"({"v":1,"matrix":[["1","0"],["0","1"]]})"), Error);
}

TEST_CASE("certificate JSON round-trip") {
    for (auto f : {f3(), f5(), f9()}) {
        Rng rng(3);
        auto r = random_sl2(f, rng, {6, 2, f->n() > 1 ? 1 : 2});
        DecomposeOptions o;
        o.seed = 99;
        auto res = decompose(r.matrix, o);
        std::string j = certificate_to_json(res.certificate);
        Certificate back = certificate_from_json_text(j);
        CHECK(back == res.certificate);
        CHECK(omega_eval(back) == r.matrix);
        // serialization is stable
        CHECK(certificate_to_json(back) == j);
    }
}

TEST_CASE("certificate JSON validation") {
    auto f = f3();
    std::string j = certificate_to_json(Certificate::identity(f));
    CHECK_THROWS_AS(certificate_from_json_text(j.substr(0, j.size() / 2)), Error);

    // quintuple violating det M1 = 1 must be rejected with the invariant error
    std::string bad = j;
    auto pos = bad.find(R"("quintuple":["0","0","0","0","0"])");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, std::string(R"("quintuple":["0","0","0","0","0"])").size(),
                R"("quintuple":["1","1","1","1","1"])");
    try {
        certificate_from_json_text(bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::QuintupleNotSL2);
    }
}

TEST_CASE("field JSON carries the extension modulus") {
    auto f9p = f9();
    std::string j = field_to_json(*f9p);
    FieldPtr back = field_from_json_text(j);
    CHECK(back->same(*f9p));
}
