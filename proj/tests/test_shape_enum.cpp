#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nrt/shape_enum.hpp"
#include "test_support.hpp"

using namespace nrt;
using namespace nrt::testing;

namespace {

std::mt19937 rng(9092025);

MultiPoly p3(const std::string& text) { return MultiPoly::parse(text, 3); }

// Exhaustive MacWilliams check at one parameter set: the directly computed
// dual enumerator must equal the Theta transform for EVERY linear code.
size_t brute_force_macwilliams(uint32_t q, uint32_t n, uint32_t s) {
    size_t checked = 0;
    for_each_code(q, n, s, [&](const NrtCode& c) {
        ShapeEnumerator h = shape_enumerator(c);
        ShapeEnumerator lhs = shape_enumerator(dual_code(c));
        ShapeEnumerator rhs = macwilliams_transform(h, q, c.size());
        REQUIRE(lhs == rhs);
        ++checked;
    });
    return checked;
}

}  // namespace

TEST_CASE("shape enumerators of the worked codes") {
    CHECK(shape_enumerator(c11()).poly == p3("z0 + z2"));
    CHECK(shape_enumerator(c12()).poly == p3("z0 + z1"));
    CHECK(shape_enumerator(c21()).poly == p3("z0^2 + z1^2 + 2*z2^2"));
    CHECK(shape_enumerator(c33()).poly == p3("z0^3 + 4*z2^3 + 3*z1^2*z0"));
}

TEST_CASE("enumerator is homogeneous of degree n with coefficient sum q^k") {
    for (int trial = 0; trial < 60; ++trial) {
        uint32_t q = (trial % 2) ? 2 : 3;
        std::uniform_int_distribution<uint32_t> nd(1, 3), sd(1, 3), rows(0, 4);
        uint32_t n = nd(rng), s = sd(rng);
        NrtCode c = random_code(rng, q, n, s, rows(rng));
        ShapeEnumerator h = shape_enumerator(c);
        CHECK(h.poly.is_homogeneous());
        CHECK(h.poly.total_degree() == static_cast<int>(n));
        CHECK(h.poly.coeff_sum().to_rational().to_integer() == c.size());
    }
}

TEST_CASE("theta matrix values") {
    ThetaMatrix t22 = theta_matrix(2, 2);
    CHECK(t22.a == std::vector<std::vector<Int>>{{1, 1, 2}, {1, 1, -2}, {1, -1, 0}});

    // s = 1 is the classical binary Hamming kernel
    ThetaMatrix t12 = theta_matrix(1, 2);
    CHECK(t12.a == std::vector<std::vector<Int>>{{1, 1}, {1, -1}});

    // q = 3: entries q^{k-1}(q-1) and -q^{k-1}
    ThetaMatrix t23 = theta_matrix(2, 3);
    CHECK(t23.a == std::vector<std::vector<Int>>{{1, 2, 6}, {1, 2, -3}, {1, -1, 0}});
}

TEST_CASE("macwilliams transform worked examples") {
    // H = z0+z1 (C_{1,2}, |C| = 2): self-dual fixed point
    ShapeEnumerator h12 = shape_enumerator(c12());
    CHECK(macwilliams_transform(h12, 2, Int(2)).poly == p3("z0 + z1"));

    // zero code in M_{1,2}: transform of z0 is the full-space enumerator
    ShapeEnumerator hz = shape_enumerator(zero_code(2, 1, 2));
    CHECK(macwilliams_transform(hz, 2, Int(1)).poly == p3("z0 + z1 + 2*z2"));

    // and back: the full space maps to the zero code
    ShapeEnumerator hfull = shape_enumerator(dual_code(zero_code(2, 1, 2)));
    CHECK(macwilliams_transform(hfull, 2, Int(4)).poly == p3("z0"));
}

TEST_CASE("macwilliams transform rejects fractional output") {
    ShapeEnumerator h = shape_enumerator(c12());
    CHECK_THROWS_AS(macwilliams_transform(h, 2, Int(4)), std::domain_error);  // wrong |C|
}

TEST_CASE("macwilliams identity, brute force over every code") {
    CHECK(brute_force_macwilliams(2, 1, 2) == 5);
    CHECK(brute_force_macwilliams(2, 2, 2) == 67);
    CHECK(brute_force_macwilliams(2, 1, 3) == 16);
    CHECK(brute_force_macwilliams(3, 1, 2) == 6);
    // wider and taller shapes exercise Theta_4 and the s = 1 Hamming kernel
    CHECK(brute_force_macwilliams(2, 1, 4) == 67);
    CHECK(brute_force_macwilliams(2, 2, 1) == 5);
}

TEST_CASE("transform is an involution") {
    for_each_code(2, 2, 2, [&](const NrtCode& c) {
        ShapeEnumerator h = shape_enumerator(c);
        ShapeEnumerator once = macwilliams_transform(h, 2, c.size());
        Int dual_size = ipow(Int(2), c.length() - c.k());
        CHECK(macwilliams_transform(once, 2, dual_size) == h);
    });
}

TEST_CASE("self-dual enumerators are fixed by the normalized T substitution") {
    DenseMatrix t = normalized_T(2);
    size_t self_dual_count = 0;
    for_each_code_of_dim(2, 2, 2, 2, [&](const NrtCode& c) {
        if (!is_self_dual(c)) return;
        ++self_dual_count;
        ShapeEnumerator h = shape_enumerator(c);
        CHECK(substitute_linear(h.poly, t) == h.poly);
        CHECK(macwilliams_transform(h, 2, c.size()) == h);
    });
    CHECK(self_dual_count == 15);
}

TEST_CASE("theta properties hold for s = 1..8") {
    for (uint32_t s = 1; s <= 8; ++s) {
        ThetaReport rep = verify_theta_properties(s);
        INFO("s = ", s);
        CHECK(rep.all_ok());
    }
    CHECK_THROWS_AS(verify_theta_properties(2, 3), std::invalid_argument);
}

TEST_CASE("theta spot values") {
    ThetaReport r2 = verify_theta_properties(2);
    CHECK(r2.trace == 2);
    CHECK(r2.det == -8);
    CHECK(r2.spectrum.r1 == 2);
    CHECK(r2.spectrum.r2 == 1);
    CHECK(r2.spectrum.beta1 == QuadElement(2));

    ThetaReport r3 = verify_theta_properties(3);
    CHECK(r3.trace == 0);
    CHECK(r3.det == 64);  // (-1)^2 * 2^6
    CHECK(r3.spectrum.r1 == 2);
    CHECK(r3.spectrum.r2 == 2);
    CHECK(r3.spectrum.beta1 == QuadElement(Rational(0), Rational(2)));  // 2^{3/2} = 2*sqrt2

    // s = 1: Theta^2 = 2I directly
    DenseMatrix t1 = theta_matrix(1, 2).dense();
    CHECK(t1 * t1 == DenseMatrix::identity(2).scale(QuadElement(2)));
}

TEST_CASE("normalized T") {
    DenseMatrix t2 = normalized_T(2);
    CHECK(t2.at(0, 0) == QuadElement(Rational(1, 2)));
    CHECK(t2.at(0, 2) == QuadElement(1));
    CHECK(t2.at(1, 2) == QuadElement(-1));
    CHECK(t2.at(2, 1) == QuadElement(Rational(-1, 2)));
    CHECK(t2.at(2, 2) == QuadElement(0));

    // s = 1: entries sqrt2/2
    DenseMatrix t1 = normalized_T(1);
    QuadElement half_sqrt2(Rational(0), Rational(1, 2));
    CHECK(t1.at(0, 0) == half_sqrt2);
    CHECK(t1.at(1, 1) == -half_sqrt2);

    for (uint32_t s = 1; s <= 6; ++s) {
        DenseMatrix t = normalized_T(s);
        CHECK(t * t == DenseMatrix::identity(s + 1));
    }
}
