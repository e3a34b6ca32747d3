#include "soc/construct_a.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace soc {

BoundLine::BoundLine(Rat s, Rat i, std::string l)
    : slope(std::move(s)), intercept(std::move(i)), label(std::move(l)) {
    slope.canonicalize();
    intercept.canonicalize();
    if (slope <= 0) throw std::invalid_argument("BoundLine: slope must be positive");
    if (intercept <= 0 || intercept >= 1)
        throw std::invalid_argument("BoundLine: intercept must lie in (0,1)");
}

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

LinearCode concatenate(const ConcatScheme& scheme) {
    const LinearCode& outer = scheme.outer;
    const LinearCode& inner = scheme.inner;
    if (outer.binary())
        throw std::invalid_argument("concatenate: outer code must live in an extension field");
    if (!inner.binary())
        throw std::invalid_argument("concatenate: inner code must be binary");
    int two_t = outer.field.m();
    if (inner.k != two_t)
        throw std::invalid_argument("concatenate: inner dimension must equal outer field degree");
    if (scheme.symbol_map.field() != outer.field)
        throw std::invalid_argument("concatenate: symbol_map basis is over the wrong field");

    const Field& f = outer.field;
    const FqMatrix& og = outer.symbols();
    const BitMatrix& ig = inner.bits();
    int big_n = inner.n * outer.n;
    BitMatrix gen(two_t * outer.k, big_n);

    // pi_*(c) = coords(c) * inner generator; rows are the images of the
    // F_2-generating set {e_j * g_r} of the outer code.
    for (int r = 0; r < outer.k; ++r)
        for (int j = 0; j < two_t; ++j) {
            int out_row = r * two_t + j;
            for (int sym = 0; sym < outer.n; ++sym) {
                uint32_t value = f.mul(scheme.symbol_map.element(j), og.get(r, sym));
                uint32_t msg = scheme.symbol_map.coords(value);
                for (int b = 0; b < two_t; ++b)
                    if (msg >> b & 1)
                        for (int c = 0; c < inner.n; ++c)
                            if (ig.get(b, c)) {
                                int col = sym * inner.n + c;
                                gen.set(out_row, col, !gen.get(out_row, col));
                            }
            }
        }

    std::optional<int> claimed;
    if (outer.claimed_d && inner.claimed_d) claimed = *outer.claimed_d * *inner.claimed_d;
    return make_binary_code(std::move(gen), claimed);
}

CodeParams predict_params(const CodeParams& outer, int outer_field_degree,
                          const CodeParams& inner) {
    if (inner.k != outer_field_degree)
        throw std::invalid_argument("predict_params: inner dimension must equal field degree");
    return {inner.n * outer.n, inner.k * outer.k, inner.d * outer.d};
}

BoundLine line_eq5(int t, int inner_n, int inner_d) {
    if (t < 1 || inner_n < 2 * t || inner_d < 1)
        throw std::invalid_argument("line_eq5: need t >= 1, n >= 2t, d >= 1");
    Rat slope(2 * t, inner_d);
    Rat unit = 1 - Rat(1) / Rat(pow2(static_cast<unsigned long>(t)) - 1);
    Rat intercept = Rat(2 * t, inner_n) * unit;
    std::ostringstream label;
    label << "eq5_n" << inner_n << "d" << inner_d << "_t" << t;
    return BoundLine(slope, intercept, label.str());
}

BoundLine line_eq6(int m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("line_eq6: m must be odd, >= 3");
    Rat slope(pow2(static_cast<unsigned long>((m - 1) / 2)));
    mpz_class tower = pow2(1ul << (m - 2)) - 1;
    Rat intercept = Rat(1, 2) * (1 - Rat(1) / Rat(tower));
    std::ostringstream label;
    label << "eq6_m" << m;
    return BoundLine(slope, intercept, label.str());
}

namespace {

struct PrintedRow {
    int n, k, d, t;
    long ps_num, ps_den;        // printed slope
    const char* pi_num;         // printed intercept, decimal strings
    const char* pi_den;
};

const PrintedRow kTable1[] = {
    {22, 10, 8, 5, 5, 4, "150", "341"},
    {24, 12, 8, 6, 3, 2, "31", "63"},
    {28, 14, 6, 7, 7, 4, "63", "127"},
    {40, 20, 8, 10, 5, 2, "511", "1023"},
    {44, 22, 8, 11, 11, 4, "1023", "2047"},
    {64, 32, 12, 16, 8, 3, "32767", "65535"},
};

}  // namespace

std::vector<Table1Row> table1() {
    std::vector<Table1Row> rows;
    for (const PrintedRow& p : kTable1) {
        BoundLine line = line_eq5(p.t, p.n, p.d);
        Rat ps(p.ps_num, p.ps_den);
        Rat pi(mpz_class(p.pi_num), mpz_class(p.pi_den));
        pi.canonicalize();
        Table1Row row{p.n, p.k, p.d, p.t, line, ps, pi,
                      line.slope == ps && line.intercept == pi, {}, false};
        if (!row.match) {
            BoundLine alt = line_eq5(p.t, p.n, 8);
            row.d8_matches_printed = alt.slope == ps && alt.intercept == pi;
            row.d8_reading = std::move(alt);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string table1_csv() {
    std::ostringstream out;
    out << "inner_n,inner_k,inner_d,t,slope_num,slope_den,intercept_num,intercept_den,flag\n";
    for (const Table1Row& r : table1()) {
        out << r.inner_n << ',' << r.inner_k << ',' << r.inner_d << ',' << r.t << ','
            << r.computed.slope.get_num() << ',' << r.computed.slope.get_den() << ','
            << r.computed.intercept.get_num() << ',' << r.computed.intercept.get_den() << ','
            << (r.match ? "match" : "mismatch") << '\n';
    }
    for (const Table1Row& r : table1())
        if (r.d8_reading) {
            out << "# row [" << r.inner_n << ',' << r.inner_k << ',' << r.inner_d
                << "] reread with d=8: slope " << r.d8_reading->slope << ", intercept "
                << r.d8_reading->intercept << ", "
                << (r.d8_matches_printed ? "matches" : "does not match")
                << " the printed equation\n";
        }
    return out.str();
}

}  // namespace soc
