#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "soc/codes.hpp"

namespace soc {

// Binary self-orthogonal / self-dual code counting. Printed formulas are
// evaluated exactly as published; enumeration oracles are kept separate
// so each run can report both values and an agreement flag.

// (2^(h-s)+1)(2^(h-s-1)+1)...(2+1) with h = n/2; empty product for s = h.
mpz_class lemma8_count(int n, int s);

// The recursion sigma_{n,k+1,s} = sigma_{n,k,s} (2^(n-2k)-1)/(2^(k-s+1)-1)
// from base sigma_{n,s,s} = 1. Every division is checked for exactness; a
// remainder is a formula defect and throws.
mpz_class sigma(int n, int k, int s);

// Printed closed forms for the number of [n,k] self-orthogonal codes and
// those containing a fixed even-weight vector v (v != 0, all-ones).
mpz_class count_so(int n, int k);
mpz_class count_so_containing_v(int n, int k);

// Exhaustive oracles by reduced-echelon-form enumeration, n <= 10.
mpz_class enumerate_so(int n, int k);
mpz_class enumerate_so_containing(int n, int k, uint64_t v);
mpz_class enumerate_so_containing_code(int n, int k, const std::vector<uint64_t>& gens);
mpz_class enumerate_selfdual_containing(int n, const std::vector<uint64_t>& gens);

// C(n,2) + C(n,4) + ... + C(n,2(r-1)) < (2^n - 1)/(2^k - 1), compared
// exactly. The empty sum at r = 1 always passes.
bool theorem1_holds(int n, int k, int r);

// floor(log2((2^n - 1) / (C(n,2)+...+C(n,2(r-1))))), exact.
int gv_so_dimension(int n, int r);

// Witness search for an [n,k] self-orthogonal code of distance >= d.
// Backtracking over even-weight generator candidates in ascending order
// (exhaustive for n <= 14), seeded greedy restarts beyond. Absence within
// the budget is a value, not an error. budget = 0 means the default.
std::optional<LinearCode> find_so_code(int n, int k, int d_target,
                                       uint64_t budget = 0, uint64_t seed = 1);

struct CountReport {
    std::string quantity;
    int n;
    std::optional<int> k;
    std::optional<int> s;
    mpz_class paper_value;
    std::optional<mpz_class> oracle_value;
    std::optional<bool> agrees;
};

// The canonical inputs used by reports: v = 1100...0 and the code spanned
// by s disjoint weight-2 blocks.
uint64_t canonical_even_vector(int n);
std::vector<uint64_t> canonical_so_generators(int n, int s);

std::vector<CountReport> count_reports(int n, std::optional<int> k, std::optional<int> s,
                                       bool with_oracle);
std::string count_reports_csv(const std::vector<CountReport>& reports);

}  // namespace soc
