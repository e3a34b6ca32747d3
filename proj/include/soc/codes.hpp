#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "soc/galois.hpp"
#include "soc/gf2la.hpp"

namespace soc {

// A length-n dimension-k linear code over GF(2^m), held as a full-rank
// generator matrix. Binary codes (m = 1) use bit-packed rows. claimed_d
// is a design lower bound on the minimum distance, not a verified value.
struct LinearCode {
    Field field;
    int n = 0;
    int k = 0;
    std::variant<BitMatrix, FqMatrix> gen;
    std::optional<int> claimed_d;

    bool binary() const { return field.m() == 1; }
    const BitMatrix& bits() const { return std::get<BitMatrix>(gen); }
    const FqMatrix& symbols() const { return std::get<FqMatrix>(gen); }
};

// Constructors verify that the generator has full row rank.
LinearCode make_binary_code(BitMatrix gen, std::optional<int> claimed_d = {});
LinearCode make_fq_code(FqMatrix gen, std::optional<int> claimed_d = {});

bool is_self_orthogonal(const LinearCode& c);
int min_distance(const LinearCode& c, int jobs = 1);
std::map<int, uint64_t> weight_distribution(const LinearCode& c, int jobs = 1);
LinearCode dual_code(const LinearCode& c);

// True iff every row of c2's generator lies in c1's row space.
bool contains(const LinearCode& c1, const LinearCode& c2);
bool same_code(const LinearCode& a, const LinearCode& b);

// All binary codewords of a binary code have even weight (linear in the
// rows, so checking generators suffices).
bool all_weights_even(const LinearCode& c);

// The r-th order binary Reed-Muller code of length 2^m. Generator rows
// are evaluations of the monomials of degree <= r over F_2^m; points are
// enumerated lexicographically (column j's coordinates are the bits of
// j), monomials in graded-lex order. claimed_d = 2^(m-r).
LinearCode rm_code(int r, int m);

// Genus-0 evaluation code: row i of the generator is (v_j * p_j^i) for
// i = 0..degree over the listed points, i.e. a (generalized) RS code.
struct EvaluationCodeSpec {
    Field field;
    std::vector<uint32_t> points;               // pairwise distinct
    int degree = 0;                             // 0 <= degree < |points|
    std::vector<uint32_t> multipliers;          // empty, or |points| nonzero scalars
};

LinearCode evaluation_code(const EvaluationCodeSpec& espec);

// A verified self-orthogonal [n,k] code over GF(2^{2t}): a GRS code whose
// column multipliers are chosen so the Gram matrix vanishes. Deterministic
// for a given seed; throws if no verified code is found in budget.
LinearCode self_orthogonal_outer(const Field& f, int n, int k, uint64_t seed);

}  // namespace soc
