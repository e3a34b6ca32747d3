#pragma once

#include <optional>
#include <string>
#include <vector>

#include "soc/line.hpp"

namespace soc {

struct BoundPoint {
    double delta;
    double rate;
    std::string label;
};

// q-ary entropy H_q(x) on [0, (q-1)/q], with H_q(0) = 0.
double entropy_h(int q, double x);

// Sampled (delta, 1 - H_q(delta)) curve, endpoints included, labelled
// "gv". For q = 2 the same curve restricted to rate <= 1/2 is appended
// again as "gv-so" (self-orthogonality caps the rate at 1/2).
std::vector<BoundPoint> gv_curve(int q, int num_samples);

// R + delta = 1 - 1/(l-1).
BoundLine tvz_line(long l);

// The constructive line family drawn in the figure: the recomputed
// six published eq5 lines, eq6 for m in {3,5,7}, and eq7 for
// t in [eq7_tmin, eq7_tmax].
std::vector<BoundLine> constructive_family(int eq7_tmin = 2, int eq7_tmax = 8);

// Largest delta achieved at the given rate over the family (the line
// intersections are evaluated in exact rationals). nullopt when every
// intercept lies at or below the rate. `which` reports the maximizer.
std::optional<Rat> envelope_delta_at_rate(const std::vector<BoundLine>& family,
                                          const Rat& rate,
                                          const BoundLine** which = nullptr);

// Envelope rate max_i(c_i - s_i * delta) at the given delta; nullopt once
// every line has dropped below zero.
std::optional<Rat> envelope_rate_at_delta(const std::vector<BoundLine>& family,
                                          const Rat& delta);

// The envelope as maximizer segments over [0, end of positive rate],
// breakpoints exact.
struct EnvelopeSegment {
    size_t line_index;
    Rat delta_lo, delta_hi;
};
std::vector<EnvelopeSegment> envelope_segments(const std::vector<BoundLine>& family);

// Bisection solution of 1 - H_2(delta) = rate on [0, 1/2].
double gv_delta_at_rate(double rate, double tol = 1e-6);

// CSV rows `label,delta,rate`: the GV and gv-so curves, every family
// line, and the family envelope, each sampled at `samples` points and
// clipped to delta, rate >= 0. Byte-stable for a fixed sample count.
std::string figure1_csv(int samples);

}  // namespace soc
