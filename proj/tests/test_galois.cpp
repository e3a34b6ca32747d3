#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "soc/galois.hpp"

#include <cstdint>
#include <vector>

using namespace soc;

TEST_CASE("default moduli are the least irreducible polynomials") {
    // Re-derive the table entry by exhaustive search.
    for (int m = 1; m <= 16; ++m) {
        uint64_t least = 0;
        for (uint64_t c = 0; c < (1ull << m); ++c) {
            uint64_t f = (1ull << m) | c;
            if (poly_irreducible(f)) {
                least = f;
                break;
            }
        }
        CHECK(default_modulus(m) == least);
    }
}

TEST_CASE("field_make basics") {
    Field f2(1);
    CHECK(f2.q() == 2);

    Field f4(2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus() == 0x7);  // x^2+x+1, the only irreducible quadratic

    // Independent irreducibility check for x^4+x+1: no roots, no
    // quadratic factor.
    uint64_t quartic = 0x13;
    CHECK(poly_mod(quartic, 0b10) != 0);   // root 0
    CHECK(poly_mod(quartic, 0b11) != 0);   // root 1
    CHECK(poly_mod(quartic, 0b111) != 0);  // the irreducible quadratic
    Field f16(4, quartic);
    CHECK(f16.q() == 16);

    CHECK_THROWS_AS(Field(0), std::invalid_argument);
    CHECK_THROWS_AS(Field(25), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 0b101), std::invalid_argument);  // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(Field(3, 0x7), std::invalid_argument);    // degree mismatch
}

TEST_CASE("arithmetic in GF(4) and GF(16)") {
    Field f4(2);
    const uint32_t w = 2;  // x
    CHECK(f4.mul(w, w) == 3);  // w^2 = w+1 forced by the modulus

    Field f16(4);
    for (uint32_t a = 0; a < 16; ++a) CHECK(f16.add(a, a) == 0);
    for (uint32_t a = 1; a < 16; ++a) CHECK(f16.mul(f16.inv(a), a) == 1);
    CHECK_THROWS_AS(f16.inv(0), std::domain_error);

    // pow agrees with repeated multiplication.
    for (uint32_t a = 1; a < 16; ++a) {
        uint32_t acc = 1;
        for (int e = 0; e < 6; ++e) {
            CHECK(f16.pow(a, static_cast<uint64_t>(e)) == acc);
            acc = f16.mul(acc, a);
        }
    }
}

TEST_CASE("trace values and properties") {
    Field f4(2);
    CHECK(f4.trace(0) == 0);
    CHECK(f4.trace(2) == 1);  // w + w^2 = 1

    Field f16(4);
    CHECK(f16.trace(1) == 0);  // four copies of 1 in char 2

    // GF(2)-linearity, exhaustive on GF(16).
    for (uint32_t a = 0; a < 16; ++a)
        for (uint32_t b = 0; b < 16; ++b)
            CHECK(f16.trace(a ^ b) == (f16.trace(a) ^ f16.trace(b)));

    // Frobenius invariance for all q <= 256.
    for (int m = 1; m <= 8; ++m) {
        Field f(m);
        for (uint32_t a = 0; a < f.q(); ++a)
            CHECK(f.trace(f.mul(a, a)) == f.trace(a));
    }
}

TEST_CASE("coords and from_coords") {
    Field f4(2);
    Basis b(f4, {2, 3});  // {w, w^2}
    CHECK(b.coords(0) == 0);
    CHECK(b.coords(1) == 0b11);  // 1 = w + w^2

    Field f16(4);
    Basis pb = polynomial_basis(f16);
    for (uint32_t a = 0; a < 16; ++a) CHECK(pb.from_coords(pb.coords(a)) == a);
    Basis sd = self_dual_basis(f16);
    for (uint32_t a = 0; a < 16; ++a) CHECK(sd.from_coords(sd.coords(a)) == a);

    CHECK_THROWS_AS(Basis(f4, {1, 1}), std::invalid_argument);  // dependent
}

TEST_CASE("dual basis") {
    Field f4(2);
    Basis b(f4, {1, 2});  // {1, w}
    Basis d = dual_basis(b);
    CHECK(d.elements() == std::vector<uint32_t>{3, 1});  // {w^2, 1}

    // Kronecker-delta cross products, exhaustive for m <= 8.
    for (int m = 1; m <= 8; ++m) {
        Field f(m);
        Basis pb = polynomial_basis(f);
        Basis db = dual_basis(pb);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                CHECK(f.trace(f.mul(pb.element(i), db.element(j))) == (i == j ? 1 : 0));
        // Involution.
        CHECK(dual_basis(db).elements() == pb.elements());
    }

    // Dual of a self-dual basis is itself.
    Basis sd = self_dual_basis(Field(4));
    CHECK(dual_basis(sd).elements() == sd.elements());
}

TEST_CASE("self-dual basis") {
    Field f2(1);
    CHECK(self_dual_basis(f2).elements() == std::vector<uint32_t>{1});

    Field f4(2);
    Basis sd4 = self_dual_basis(f4);
    CHECK(sd4.elements() == std::vector<uint32_t>{2, 3});  // {w, w^2}
    CHECK(sd4.gram_is_identity());

    for (int m = 2; m <= 12; m += 2) {
        Basis sd = self_dual_basis(Field(m));
        CHECK(sd.gram_is_identity());
    }
    // Odd extension degrees work as well.
    for (int m = 3; m <= 9; m += 2) CHECK(self_dual_basis(Field(m)).gram_is_identity());

    // Determinism.
    CHECK(self_dual_basis(Field(6)).elements() == self_dual_basis(Field(6)).elements());
}

TEST_CASE("self-dual coordinates turn the trace form into the dot product") {
    for (int m = 1; m <= 8; ++m) {
        Field f(m);
        Basis sd = self_dual_basis(f);
        for (uint32_t a = 0; a < f.q(); ++a)
            for (uint32_t b = 0; b < f.q(); ++b) {
                int dot = __builtin_parity(sd.coords(a) & sd.coords(b));
                CHECK(f.trace(f.mul(a, b)) == dot);
            }
    }
}

TEST_CASE("hex serialization") {
    CHECK(element_to_hex(0) == "0");
    CHECK(element_to_hex(10) == "a");
    CHECK(element_to_hex(255) == "ff");
    CHECK(element_from_hex("ff") == 255);
    CHECK(element_from_hex("A") == 10);
    CHECK_THROWS_AS(element_from_hex("xyz"), std::invalid_argument);
}
