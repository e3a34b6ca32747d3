#include "soc/construct_b.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace soc {

ExpansionScheme::ExpansionScheme(const Field& f, Basis b)
    : field(f), basis(std::move(b)) {
    if (f.m() % 2 != 0)
        throw std::invalid_argument("ExpansionScheme: field degree must be even");
    if (basis.field() != f)
        throw std::invalid_argument("ExpansionScheme: basis belongs to another field");
    if (!basis.gram_is_identity())
        throw std::invalid_argument("ExpansionScheme: basis is not self-dual");
}

ExpansionScheme::ExpansionScheme(const Field& f)
    : ExpansionScheme(f, self_dual_basis(f)) {}

LinearCode expand(const LinearCode& c, const ExpansionScheme& s) {
    if (c.binary()) throw std::invalid_argument("expand: code is already binary");
    if (c.field != s.field) throw std::invalid_argument("expand: field mismatch");
    const Field& f = c.field;
    int two_t = f.m();
    const FqMatrix& g = c.symbols();
    BitMatrix gen(two_t * c.k, two_t * c.n);
    for (int r = 0; r < c.k; ++r)
        for (int j = 0; j < two_t; ++j) {
            int out_row = r * two_t + j;
            for (int sym = 0; sym < c.n; ++sym) {
                uint32_t value = f.mul(s.basis.element(j), g.get(r, sym));
                uint32_t v = s.basis.coords(value);
                for (int b = 0; b < two_t; ++b)
                    if (v >> b & 1) gen.set(out_row, sym * two_t + b, true);
            }
        }
    return make_binary_code(std::move(gen), c.claimed_d);
}

BoundLine line_eq7(int t) {
    if (t < 2) throw std::invalid_argument("line_eq7: t must be >= 2");
    Rat intercept = 1 - Rat(1) / Rat(pow2(static_cast<unsigned long>(t)) - 1);
    std::ostringstream label;
    label << "eq7_t" << t;
    return BoundLine(Rat(2 * t), intercept, label.str());
}

Rat delta_at_rate(int t, const Rat& rate) {
    BoundLine line = line_eq7(t);
    if (rate < 0 || rate > line.intercept)
        throw std::invalid_argument("delta_at_rate: rate above the line intercept");
    return line.delta_at(rate);
}

std::vector<Table2Row> table2(int tmin, int tmax) {
    if (tmin < 2 || tmax < tmin) throw std::invalid_argument("table2: bad t range");
    std::vector<Table2Row> rows;
    for (int t = tmin; t <= tmax; ++t) {
        BoundLine line = line_eq7(t);
        Rat half(1, 2);
        Rat d = line.intercept >= half ? line.delta_at(half) : Rat(0);
        rows.push_back({t, std::move(line), d, false});
    }
    size_t best = 0;
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i].delta_at_half > rows[best].delta_at_half) best = i;
    rows[best].best = true;
    return rows;
}

std::string table2_csv(int tmin, int tmax) {
    std::ostringstream out;
    out << "t,slope,intercept_num,intercept_den,delta_at_half_num,delta_at_half_den\n";
    auto rows = table2(tmin, tmax);
    for (const Table2Row& r : rows)
        out << r.t << ',' << r.line.slope.get_num() << ',' << r.line.intercept.get_num()
            << ',' << r.line.intercept.get_den() << ',' << r.delta_at_half.get_num() << ','
            << r.delta_at_half.get_den() << '\n';
    for (const Table2Row& r : rows)
        if (r.best)
            out << "# delta at R=1/2 is maximized at t=" << r.t << " (delta = "
                << r.delta_at_half << ")\n";
    return out.str();
}

}  // namespace soc
