#include <doctest.h>

#include "evolab/errors.hpp"
#include "evolab/field.hpp"

using namespace evolab;

namespace {
const FieldSpec q = FieldSpec::rationals();
Scalar r(long a, long b = 1) { return Scalar(q, mpq_class(a, b)); }
}  // namespace

TEST_CASE("prime field arithmetic") {
    const auto f = FieldSpec::prime(5);
    CHECK((Scalar(f, 3) + Scalar(f, 4)).residue() == 2);
    CHECK((-Scalar(f, 1)).residue() == 4);
    CHECK((Scalar(f, 2) * Scalar(f, 4)).residue() == 3);
    CHECK((Scalar(f, 1) - Scalar(f, 3)).residue() == 3);
    CHECK(Scalar(f, -7).residue() == 3);
    CHECK(Scalar(f, 2).inv().residue() == 3);
    CHECK_THROWS_AS(Scalar(FieldSpec::prime(7), 0).inv(), DivisionByZero);
}

TEST_CASE("rational arithmetic") {
    CHECK(r(1, 2) + r(1, 3) == r(5, 6));
    CHECK(r(-3, 4).inv() == r(-4, 3));
    CHECK(r(2, 4).to_string() == "1/2");
    CHECK(r(6, 3).to_string() == "2");
    CHECK(r(-1, 3).to_string() == "-1/3");
    CHECK_THROWS_AS(r(0).inv(), DivisionByZero);
    CHECK(r(4, 9).sqrt() == r(2, 3));
    CHECK_FALSE(r(2).sqrt().has_value());
    CHECK_FALSE(r(-1).sqrt().has_value());
}

TEST_CASE("square roots over GF(p) return the smaller root") {
    const auto f5 = FieldSpec::prime(5);
    CHECK(Scalar(f5, 4).sqrt()->residue() == 2);
    CHECK((-Scalar(f5, 1)).sqrt()->residue() == 2);
    CHECK_FALSE((-Scalar(FieldSpec::prime(3), 1)).sqrt().has_value());
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 41L, 97L}) {
        const auto f = FieldSpec::prime(p);
        for (long a = 0; a < p; ++a) {
            long smallest = -1;
            for (long x = 0; x < p && smallest < 0; ++x) {
                if (x * x % p == a) smallest = x;
            }
            const auto s = Scalar(f, a).sqrt();
            if (smallest < 0) {
                CHECK_FALSE(s.has_value());
            } else {
                REQUIRE(s.has_value());
                CHECK(s->residue() == smallest);
            }
        }
    }
}

TEST_CASE("scalar enumeration") {
    auto nz = all_nonzero_scalars(FieldSpec::prime(3));
    REQUIRE(nz.size() == 2);
    CHECK(nz[0].residue() == 1);
    CHECK(nz[1].residue() == 2);
    CHECK(all_nonzero_scalars(FieldSpec::prime(5)).size() == 4);
    CHECK(all_scalars(FieldSpec::prime(7)).size() == 7);
    CHECK_THROWS_AS(all_nonzero_scalars(q), InfiniteFieldError);
}

TEST_CASE("field specs") {
    CHECK_THROWS_AS(FieldSpec::prime(4), InvalidArgument);
    CHECK_THROWS_AS(FieldSpec::prime(1), InvalidArgument);
    CHECK_THROWS_AS(FieldSpec::prime(2).require_char_ne_2("test"), CharacteristicTwoError);
    CHECK_NOTHROW(FieldSpec::prime(3).require_char_ne_2("test"));
    CHECK_THROWS_AS(Scalar(FieldSpec::prime(3), 1) + Scalar(FieldSpec::prime(5), 1), MixedFieldError);
    CHECK_THROWS_AS(Scalar(q, 1) + Scalar(FieldSpec::prime(5), 1), MixedFieldError);
}

TEST_CASE("parsing") {
    CHECK(Scalar::parse(q, "-3/4") == r(-3, 4));
    CHECK(Scalar::parse(q, "6/4") == r(3, 2));
    CHECK_THROWS_AS(Scalar::parse(q, "6/-4"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(FieldSpec::prime(5), "1/2"), ParseError);
    CHECK(Scalar::parse(q, "12") == r(12));
    CHECK(Scalar::parse(FieldSpec::prime(7), "-1").residue() == 6);
    CHECK_THROWS_AS(Scalar::parse(q, "abc"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, ""), ParseError);
}

TEST_CASE("field axioms on random residues") {
    const auto f = FieldSpec::prime(13);
    for (long a = 0; a < 13; ++a) {
        for (long b = 0; b < 13; ++b) {
            const Scalar x(f, a), y(f, b);
            CHECK(x * y == y * x);
            CHECK((x + y) - y == x);
            if (b != 0) CHECK((x / y) * y == x);
        }
    }
}
