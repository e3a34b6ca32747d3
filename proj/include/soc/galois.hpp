#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace soc {

// Degree of a GF(2) polynomial encoded with bit i = coefficient of x^i.
// deg(0) = -1 by convention.
int poly_degree(uint64_t f);

// Remainder of f modulo g over GF(2).
uint64_t poly_mod(uint64_t f, uint64_t g);

// Exhaustive factor check: true iff f has no divisor of degree
// 1..deg(f)/2. Intended for deg(f) <= 24.
bool poly_irreducible(uint64_t f);

// Lexicographically least irreducible polynomial of degree m over GF(2),
// from a fixed table (1 <= m <= 24).
uint64_t default_modulus(int m);

// The binary extension field GF(2^m), 1 <= m <= 24. Elements are plain
// uint32_t values below q = 2^m; bit i is the coefficient of x^i in the
// polynomial basis, so the hex serialization of an element is just its
// value. Immutable and freely copyable.
class Field {
public:
    explicit Field(int m);
    Field(int m, uint64_t modulus);

    int m() const { return m_; }
    uint32_t q() const { return q_; }
    uint64_t modulus() const { return mod_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;            // throws on a == 0
    uint32_t pow(uint32_t a, uint64_t e) const;

    // Absolute trace Tr(a) = a + a^2 + ... + a^(2^(m-1)), in {0,1}.
    int trace(uint32_t a) const;

    bool operator==(const Field& o) const { return m_ == o.m_ && mod_ == o.mod_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    void check_element(uint32_t a) const;

    int m_;
    uint32_t q_;
    uint64_t mod_;
};

// An ordered GF(2)-basis of a Field, with its trace Gram matrix and the
// change-of-basis data needed to move between basis coordinates and the
// polynomial representation.
class Basis {
public:
    Basis(const Field& f, std::vector<uint32_t> elems);

    const Field& field() const { return field_; }
    int size() const { return static_cast<int>(elems_.size()); }
    uint32_t element(int i) const { return elems_[static_cast<size_t>(i)]; }
    const std::vector<uint32_t>& elements() const { return elems_; }

    // Row i of the Gram matrix, bit j = Tr(e_i * e_j).
    uint32_t gram_row(int i) const { return gram_[static_cast<size_t>(i)]; }
    bool gram_is_identity() const;

    // Coordinates of a in this basis, packed with bit i = coefficient of
    // e_i, and the inverse map. Mutually inverse bijections.
    uint32_t coords(uint32_t a) const;
    uint32_t from_coords(uint32_t v) const;

    bool operator==(const Basis& o) const {
        return field_ == o.field_ && elems_ == o.elems_;
    }

private:
    Field field_;
    std::vector<uint32_t> elems_;
    std::vector<uint32_t> gram_;
    std::vector<uint32_t> inv_rows_;  // rows of the inverse coordinate matrix
};

// The polynomial basis {1, x, x^2, ...} of f.
Basis polynomial_basis(const Field& f);

// The dual basis b' with Tr(e_i * e'_j) = delta_ij, computed by inverting
// the trace Gram matrix of b over GF(2).
Basis dual_basis(const Basis& b);

// A basis whose Gram matrix is the identity. Deterministic for a given
// field; exists for every GF(2^m) since the trace form is non-alternating.
Basis self_dual_basis(const Field& f);

std::string element_to_hex(uint32_t a);
uint32_t element_from_hex(const std::string& s);

}  // namespace soc
