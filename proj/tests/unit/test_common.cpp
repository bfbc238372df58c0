#include <cmath>
#include <complex>

#include <doctest.h>

#include "core/common.hpp"

using tfa::cplx;
using tfa::imod;
using tfa::unit_phase;

TEST_CASE("imod reduces into [0, m) for either sign") {
    CHECK(imod(0, 5) == 0);
    CHECK(imod(7, 5) == 2);
    CHECK(imod(-1, 5) == 4);
    CHECK(imod(-10, 5) == 0);
    CHECK(imod(-11, 5) == 4);
    CHECK(imod(123456789, 1) == 0);
}

TEST_CASE("unit_phase hits the axes exactly") {
    CHECK(unit_phase(0, 4) == cplx(1.0, 0.0));
    CHECK(unit_phase(4, 4) == cplx(1.0, 0.0));
    CHECK(unit_phase(-8, 4) == cplx(1.0, 0.0));

    // Quarter turns are exact for every denominator they divide.
    CHECK(unit_phase(1, 4) == cplx(0.0, 1.0));
    CHECK(unit_phase(2, 4) == cplx(-1.0, 0.0));
    CHECK(unit_phase(3, 4) == cplx(0.0, -1.0));
    CHECK(unit_phase(3, 12) == cplx(0.0, 1.0));
    CHECK(unit_phase(6, 12) == cplx(-1.0, 0.0));
    CHECK(unit_phase(-3, 12) == cplx(0.0, -1.0));
    CHECK(unit_phase(1, 2) == cplx(-1.0, 0.0));
}

TEST_CASE("unit_phase depends only on the residue of the numerator") {
    for (std::int64_t den : {1, 2, 3, 7, 12, 360}) {
        for (std::int64_t num = -3 * den; num <= 3 * den; ++num) {
            const cplx a = unit_phase(num, den);
            const cplx b = unit_phase(num + den, den);
            const cplx c = unit_phase(num - 7 * den, den);
            CHECK(a == b);  // bitwise: both reduce to the same angle
            CHECK(a == c);
            CHECK(std::abs(a) == doctest::Approx(1.0).epsilon(1e-15));
        }
    }
}

TEST_CASE("unit_phase matches the naive exponential") {
    for (std::int64_t den : {5, 8, 13}) {
        for (std::int64_t num = 0; num < den; ++num) {
            const cplx got = unit_phase(num, den);
            const cplx want = std::polar(1.0, 2.0 * 3.14159265358979323846 *
                                                  static_cast<double>(num) /
                                                  static_cast<double>(den));
            CHECK(std::abs(got - want) < 1e-14);
        }
    }
}

TEST_CASE("fmt_double uses 17 significant digits and round-trips") {
    CHECK(tfa::fmt_double(0.0) == "0");
    CHECK(tfa::fmt_double(1.0) == "1");
    CHECK(tfa::fmt_double(-2.5) == "-2.5");
    const double x = 0.1 + 0.2;
    const std::string s = tfa::fmt_double(x);
    CHECK(std::stod(s) == x);
    CHECK(tfa::fmt_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("error hierarchy is catchable as the base type") {
    CHECK_THROWS_AS(throw tfa::InvalidArgument("x"), tfa::Error);
    CHECK_THROWS_AS(throw tfa::DomainMismatch("x"), tfa::Error);
    CHECK_THROWS_AS(throw tfa::NotExtremal("x"), tfa::Error);
    CHECK_THROWS_AS(throw tfa::NumericallyAmbiguous("x"), tfa::Error);
    CHECK_THROWS_AS(throw tfa::InconsistentTable("x"), tfa::Error);
    CHECK_THROWS_AS(throw tfa::ParseError("x"), tfa::Error);
}
