#pragma once

#include <gmpxx.h>

#include <string>

namespace soc {

using Rat = mpq_class;

// The line R + slope * delta = intercept in the (delta, R) plane, with
// exact rational coefficients.
struct BoundLine {
    Rat slope;
    Rat intercept;
    std::string label;

    BoundLine(Rat s, Rat i, std::string l);

    Rat rate_at(const Rat& delta) const { return intercept - slope * delta; }
    Rat delta_at(const Rat& rate) const { return (intercept - rate) / slope; }
};

// 2^e as an exact integer.
mpz_class pow2(unsigned long e);

}  // namespace soc
