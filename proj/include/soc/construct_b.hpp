#pragma once

#include <string>
#include <vector>

#include "soc/codes.hpp"
#include "soc/line.hpp"

namespace soc {

// Expansion data for the coordinate map rho: a field of even degree 2t
// together with a self-dual basis (Gram matrix = identity, verified).
struct ExpansionScheme {
    Field field;
    Basis basis;

    ExpansionScheme(const Field& f, Basis b);
    explicit ExpansionScheme(const Field& f);  // uses self_dual_basis(f)
};

// The binary image rho(C): symbol i of a codeword occupies binary
// positions [2t*i, 2t*(i+1)) holding its basis coordinates. Produces a
// [2t*n, 2t*k] code; self-orthogonality of C carries over because the
// self-dual basis turns the trace form into the dot product.
LinearCode expand(const LinearCode& c, const ExpansionScheme& s);

// R + 2t * delta = 1 - 1/(2^t - 1), t >= 2.
BoundLine line_eq7(int t);

// delta = (intercept - R) / (2t) on the eq7 line, exact.
Rat delta_at_rate(int t, const Rat& rate);

struct Table2Row {
    int t;
    BoundLine line;
    Rat delta_at_half;
    bool best;  // maximizer of delta at R = 1/2 within the table
};

std::vector<Table2Row> table2(int tmin = 2, int tmax = 5);

std::string table2_csv(int tmin = 2, int tmax = 5);

}  // namespace soc
