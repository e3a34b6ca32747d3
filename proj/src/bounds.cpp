#include "soc/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "soc/construct_a.hpp"
#include "soc/construct_b.hpp"

namespace soc {

double entropy_h(int q, double x) {
    if (q < 2) throw std::invalid_argument("entropy_h: q >= 2");
    double top = (q - 1.0) / q;
    if (x < 0.0 || x > top + 1e-12)
        throw std::invalid_argument("entropy_h: x outside [0, (q-1)/q]");
    if (x == 0.0) return 0.0;
    double lq = std::log(static_cast<double>(q));
    double h = x * std::log(q - 1.0) / lq - x * std::log(x) / lq;
    if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / lq;
    return h;
}

std::vector<BoundPoint> gv_curve(int q, int num_samples) {
    if (num_samples < 2) throw std::invalid_argument("gv_curve: need >= 2 samples");
    double top = (q - 1.0) / q;
    std::vector<BoundPoint> pts;
    for (int i = 0; i < num_samples; ++i) {
        double d = top * i / (num_samples - 1);
        pts.push_back({d, 1.0 - entropy_h(q, d), "gv"});
    }
    if (q == 2) {
        for (int i = 0; i < num_samples; ++i) {
            double d = top * i / (num_samples - 1);
            double r = 1.0 - entropy_h(q, d);
            if (r <= 0.5) pts.push_back({d, r, "gv-so"});
        }
    }
    return pts;
}

BoundLine tvz_line(long l) {
    if (l < 3) throw std::invalid_argument("tvz_line: l >= 3");
    std::ostringstream label;
    label << "tvz_l" << l;
    return BoundLine(Rat(1), 1 - Rat(1, l - 1), label.str());
}

std::vector<BoundLine> constructive_family(int eq7_tmin, int eq7_tmax) {
    std::vector<BoundLine> fam;
    for (const Table1Row& row : table1()) fam.push_back(row.computed);
    for (int m : {3, 5, 7}) fam.push_back(line_eq6(m));
    for (int t = eq7_tmin; t <= eq7_tmax; ++t) fam.push_back(line_eq7(t));
    return fam;
}

std::optional<Rat> envelope_delta_at_rate(const std::vector<BoundLine>& family,
                                          const Rat& rate, const BoundLine** which) {
    std::optional<Rat> best;
    for (const BoundLine& line : family) {
        if (line.intercept <= rate) continue;
        Rat d = line.delta_at(rate);
        if (!best || d > *best) {
            best = d;
            if (which) *which = &line;
        }
    }
    return best;
}

std::optional<Rat> envelope_rate_at_delta(const std::vector<BoundLine>& family,
                                          const Rat& delta) {
    std::optional<Rat> best;
    for (const BoundLine& line : family) {
        Rat r = line.rate_at(delta);
        if (!best || r > *best) best = r;
    }
    if (best && *best < 0) return std::nullopt;
    return best;
}

std::vector<EnvelopeSegment> envelope_segments(const std::vector<BoundLine>& family) {
    if (family.empty()) return {};
    // Candidate breakpoints: pairwise intersections and zero crossings.
    std::vector<Rat> cuts{Rat(0)};
    Rat end(0);
    for (const BoundLine& line : family) {
        Rat x = line.intercept / line.slope;
        cuts.push_back(x);
        if (x > end) end = x;
    }
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j) {
            if (family[i].slope == family[j].slope) continue;
            Rat x = (family[i].intercept - family[j].intercept) /
                    (family[i].slope - family[j].slope);
            if (x > 0 && x < end) cuts.push_back(x);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<EnvelopeSegment> segs;
    for (size_t c = 0; c + 1 < cuts.size(); ++c) {
        if (cuts[c] >= end) break;
        Rat mid = (cuts[c] + cuts[c + 1]) / 2;
        size_t argmax = 0;
        Rat best = family[0].rate_at(mid);
        for (size_t i = 1; i < family.size(); ++i) {
            Rat r = family[i].rate_at(mid);
            if (r > best) {
                best = r;
                argmax = i;
            }
        }
        if (best < 0) break;
        if (!segs.empty() && segs.back().line_index == argmax)
            segs.back().delta_hi = cuts[c + 1];
        else
            segs.push_back({argmax, cuts[c], cuts[c + 1]});
    }
    return segs;
}

double gv_delta_at_rate(double rate, double tol) {
    if (rate < 0.0 || rate > 1.0) throw std::invalid_argument("gv_delta_at_rate: bad rate");
    double lo = 0.0, hi = 0.5;  // 1 - H2 falls from 1 to 0 on this range
    while (hi - lo > tol) {
        double mid = (lo + hi) / 2;
        if (1.0 - entropy_h(2, mid) > rate)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

namespace {

void emit(std::ostringstream& out, const std::string& label, double delta, double rate) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f,%.8f", delta, rate);
    out << label << ',' << buf << '\n';
}

}  // namespace

std::string figure1_csv(int samples) {
    if (samples < 2) throw std::invalid_argument("figure1_csv: need >= 2 samples");
    std::ostringstream out;
    out << "label,delta,rate\n";
    for (const BoundPoint& p : gv_curve(2, samples)) emit(out, p.label, p.delta, p.rate);

    std::vector<BoundLine> fam = constructive_family();
    for (const BoundLine& line : fam) {
        Rat span = line.intercept / line.slope;
        for (int i = 0; i < samples; ++i) {
            Rat d = span * Rat(i, samples - 1);
            d.canonicalize();
            emit(out, line.label, d.get_d(), line.rate_at(d).get_d());
        }
    }

    Rat end(0);
    for (const BoundLine& line : fam) {
        Rat x = line.intercept / line.slope;
        if (x > end) end = x;
    }
    for (int i = 0; i < samples; ++i) {
        Rat d = end * Rat(i, samples - 1);
        d.canonicalize();
        auto r = envelope_rate_at_delta(fam, d);
        if (!r) continue;
        emit(out, "envelope", d.get_d(), r->get_d());
    }
    return out.str();
}

}  // namespace soc
