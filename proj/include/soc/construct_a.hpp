#pragma once

#include <optional>
#include <vector>

#include "soc/codes.hpp"
#include "soc/line.hpp"

namespace soc {

// Concatenation data: an outer code over GF(2^{2t}), a binary inner code
// of dimension 2t, and the basis used to coordinate outer symbols before
// inner encoding.
struct ConcatScheme {
    LinearCode outer;
    LinearCode inner;
    Basis symbol_map;
};

// The concatenated binary [n*N, 2t*K] code: each outer symbol is encoded
// by the inner code through its symbol_map coordinates. claimed_d is the
// product of the claimed distances when both are present.
LinearCode concatenate(const ConcatScheme& scheme);

struct CodeParams {
    int n, k, d;
};

// (n*N, 2t*K, d*D) for outer (N,K,D) over a degree-2t field and inner
// (n, 2t, d). Throws when inner.k differs from the outer field degree.
CodeParams predict_params(const CodeParams& outer, int outer_field_degree,
                          const CodeParams& inner);

// R + (2t/d) delta = (2t/n)(1 - 1/(2^t - 1)).
BoundLine line_eq5(int t, int inner_n, int inner_d);

// R + 2^((m-1)/2) delta = (1/2)(1 - 1/(2^(2^(m-2)) - 1)), odd m >= 3.
BoundLine line_eq6(int m);

struct Table1Row {
    int inner_n, inner_k, inner_d, t;
    BoundLine computed;                  // from the inner parameters
    Rat printed_slope, printed_intercept;
    bool match;                          // computed equals the printed equation
    std::optional<BoundLine> d8_reading; // recomputation with d = 8, mismatched rows only
    bool d8_matches_printed = false;
};

// Recomputes every row of the published six-row table from its inner
// parameters and flags each against the printed equation.
std::vector<Table1Row> table1();

std::string table1_csv();

}  // namespace soc
