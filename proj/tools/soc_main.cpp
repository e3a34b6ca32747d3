#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "soc/bounds.hpp"
#include "soc/codefile.hpp"
#include "soc/codes.hpp"
#include "soc/construct_a.hpp"
#include "soc/construct_b.hpp"
#include "soc/counting.hpp"
#include "soc/galois.hpp"

using namespace soc;

namespace {

LinearCode load_code(const std::string& path) {
    if (path.empty() || path == "-") return read_code_file(std::cin);
    return read_code_file(path);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << text;
}

std::string poly_string(uint64_t f) {
    std::ostringstream s;
    bool first = true;
    for (int d = poly_degree(f); d >= 0; --d) {
        if (!(f >> d & 1)) continue;
        if (!first) s << "+";
        if (d == 0)
            s << "1";
        else if (d == 1)
            s << "x";
        else
            s << "x^" << d;
        first = false;
    }
    return s.str();
}

int run_field(int m, const std::string& modulus_hex) {
    Field f = modulus_hex.empty()
                  ? Field(m)
                  : Field(m, std::stoull(modulus_hex, nullptr, 16));
    std::cout << "GF(2^" << m << "): q=" << f.q() << ", modulus=0x" << std::hex
              << f.modulus() << std::dec << " (" << poly_string(f.modulus()) << ")\n";
    Basis sd = self_dual_basis(f);
    std::cout << "self-dual basis:";
    for (int i = 0; i < sd.size(); ++i) std::cout << ' ' << element_to_hex(sd.element(i));
    std::cout << "\ngram:\n";
    for (int i = 0; i < sd.size(); ++i) {
        for (int j = 0; j < sd.size(); ++j) std::cout << (sd.gram_row(i) >> j & 1);
        std::cout << '\n';
    }
    return 0;
}

int run_check(const std::string& path, bool expect_so) {
    LinearCode c = load_code(path);
    bool so = is_self_orthogonal(c);
    bool sd = so && 2 * c.k == c.n;
    std::cout << '[' << c.n << ',' << c.k << "] self-orthogonal: " << (so ? "yes" : "no")
              << ", self-dual: " << (sd ? "yes" : "no") << '\n';
    std::cout << "q: " << c.field.q() << "  rank: " << c.k << " (full)\n";
    bool in_dual = contains(dual_code(c), c);
    std::cout << "contained-in-dual: " << (in_dual ? "yes" : "no") << '\n';
    if (c.binary())
        std::cout << "even-weights: " << (all_weights_even(c) ? "yes" : "no") << '\n';
    return expect_so && !so ? 1 : 0;
}

int run_gv(int n, double delta, uint64_t seed) {
    int r = static_cast<int>(delta * n / 2);
    std::cout << "# gv: n=" << n << " delta=" << delta << " -> r=" << r << '\n';
    if (r < 1) {
        std::cout << "# delta too small: r < 1, nothing to assert\n";
        return 0;
    }
    if (r >= 2) {
        int k = gv_so_dimension(n, r);
        std::cout << "# remark3 dimension k = " << k << '\n';
        if (k >= 1)
            std::cout << "# theorem1(n=" << n << ", k=" << k << ", r=" << r
                      << "): " << (theorem1_holds(n, k, r) ? "true" : "false") << '\n';
        if (k >= 1 && k <= 10 && 2 * k <= n && n <= 20 && 2 * r <= n) {
            auto w = find_so_code(n, k, 2 * r, 0, seed);
            if (w) {
                std::cout << "# witness [" << n << ',' << k << "] with distance >= "
                          << 2 * r << ":\n";
                write_code_file(std::cout, *w);
            } else {
                std::cout << "# no witness found within budget\n";
            }
        } else {
            std::cout << "# witness search skipped (outside n<=20, k<=min(10,n/2), 2r<=n)\n";
        }
    } else {
        std::cout << "# r = 1: any self-orthogonal code qualifies (distance >= 2)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "socodes: binary self-orthogonal code constructions, counting oracles, and "
        "asymptotic bound tables.\n"
        "Code files: '#' comments, a 'q n k' header, then k rows of n lowercase-hex\n"
        "symbols in [0,q); symbols encode polynomial-basis coordinate bits (bit i = "
        "coeff of x^i)."};
    app.require_subcommand(1);

    auto* field_cmd =
        app.add_subcommand("field", "print a field, its self-dual basis, and the Gram matrix");
    int field_m = 0;
    std::string field_modulus;
    field_cmd->add_option("--m", field_m, "extension degree, 1..24")->required();
    field_cmd->add_option("--modulus", field_modulus, "modulus in hex (bit i = coeff of x^i)");

    auto* code_cmd = app.add_subcommand("code", "emit a code file");
    code_cmd->require_subcommand(1);
    auto* rm_cmd = code_cmd->add_subcommand("rm", "binary Reed-Muller code");
    int rm_r = 0, rm_m = 0;
    rm_cmd->add_option("--r", rm_r, "order")->required();
    rm_cmd->add_option("--m", rm_m, "number of variables")->required();
    auto* rs_cmd =
        code_cmd->add_subcommand("rs", "evaluation code on the first n field elements");
    long rs_q = 0;
    int rs_n = 0, rs_k = 0;
    rs_cmd->add_option("--q", rs_q, "field size, power of two")->required();
    rs_cmd->add_option("--n", rs_n, "length (<= q)")->required();
    rs_cmd->add_option("--k", rs_k, "dimension")->required();
    auto* so_cmd = code_cmd->add_subcommand("so-outer", "verified self-orthogonal GRS code");
    long so_q = 0;
    int so_n = 0, so_k = 0;
    uint64_t so_seed = 0;
    so_cmd->add_option("--q", so_q, "field size 2^(2t)")->required();
    so_cmd->add_option("--n", so_n, "length")->required();
    so_cmd->add_option("--k", so_k, "dimension (<= n/2)")->required();
    so_cmd->add_option("--seed", so_seed, "search seed")->required();

    auto* check_cmd = app.add_subcommand("check", "report rank, self-orthogonality, dual "
                                                  "containment, and even weights");
    std::string check_file;
    bool expect_so = false;
    check_cmd->add_option("file", check_file, "code file (default: stdin)");
    check_cmd->add_flag("--expect-so", expect_so, "exit 1 unless self-orthogonal");

    auto* mindist_cmd = app.add_subcommand("mindist", "exact minimum distance within caps");
    std::string mindist_file;
    int mindist_jobs = 1;
    mindist_cmd->add_option("file", mindist_file, "code file (default: stdin)");
    mindist_cmd->add_option("--jobs", mindist_jobs, "deterministic enumeration shards");

    auto* concat_cmd = app.add_subcommand("concat", "concatenate outer (GF(2^2t)) with a "
                                                    "binary self-orthogonal inner code");
    std::string concat_outer, concat_inner, concat_basis = "self-dual";
    concat_cmd->add_option("--outer", concat_outer, "outer code file")->required();
    concat_cmd->add_option("--inner", concat_inner, "inner code file")->required();
    concat_cmd->add_option("--basis", concat_basis, "symbol map basis (self-dual)");

    auto* expand_cmd =
        app.add_subcommand("expand", "binary expansion through a self-dual basis");
    std::string expand_file;
    expand_cmd->add_option("file", expand_file, "code file (default: stdin)");

    auto* tables_cmd = app.add_subcommand("tables", "emit published bound tables as CSV");
    int tables_which = 0;
    tables_cmd->add_option("--which", tables_which, "1 or 2")->required();

    auto* count_cmd =
        app.add_subcommand("count", "printed counting formulas vs. the exhaustive oracle");
    int count_n = 0;
    int count_k = -1, count_s = -1;
    bool count_oracle = false;
    count_cmd->add_option("--n", count_n, "even code length")->required();
    count_cmd->add_option("--k", count_k, "dimension (default: all 1..n/2)");
    count_cmd->add_option("--s", count_s, "contained-code dimension for Eq8/Lemma8 rows");
    count_cmd->add_flag("--oracle", count_oracle, "add echelon-enumeration values (n <= 10)");

    auto* gv_cmd = app.add_subcommand("gv", "GV-style existence data and a witness");
    int gv_n = 0;
    double gv_delta = 0;
    uint64_t gv_seed = 1;
    gv_cmd->add_option("--n", gv_n, "even code length")->required();
    gv_cmd->add_option("--delta", gv_delta, "relative distance in [0, 1/2]")->required();
    gv_cmd->add_option("--seed", gv_seed, "witness search seed");

    auto* bounds_cmd = app.add_subcommand("bounds", "figure CSV: GV, gv-so, construction "
                                                    "lines, and their envelope");
    int bounds_samples = 0;
    std::string bounds_out;
    bounds_cmd->add_option("--samples", bounds_samples, "samples per curve")->required();
    bounds_cmd->add_option("--out", bounds_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*field_cmd) return run_field(field_m, field_modulus);

        if (*rm_cmd) {
            LinearCode c = rm_code(rm_r, rm_m);
            std::cout << "# rm r=" << rm_r << " m=" << rm_m << " [" << c.n << ',' << c.k
                      << "] claimed_d=" << *c.claimed_d << '\n';
            write_code_file(std::cout, c);
            return 0;
        }
        if (*rs_cmd) {
            if (rs_q < 2 || (rs_q & (rs_q - 1)))
                throw std::runtime_error("rs: q must be a power of two");
            Field f(std::countr_zero(static_cast<uint64_t>(rs_q)));
            std::vector<uint32_t> pts(static_cast<size_t>(rs_n));
            for (int i = 0; i < rs_n; ++i) pts[static_cast<size_t>(i)] = static_cast<uint32_t>(i);
            LinearCode c = evaluation_code({f, pts, rs_k - 1, {}});
            std::cout << "# rs q=" << rs_q << " [" << c.n << ',' << c.k
                      << "] claimed_d=" << *c.claimed_d << '\n';
            write_code_file(std::cout, c);
            return 0;
        }
        if (*so_cmd) {
            if (so_q < 2 || (so_q & (so_q - 1)))
                throw std::runtime_error("so-outer: q must be a power of two");
            Field f(std::countr_zero(static_cast<uint64_t>(so_q)));
            LinearCode c = self_orthogonal_outer(f, so_n, so_k, so_seed);
            std::cout << "# so-outer q=" << so_q << " seed=" << so_seed << " [" << c.n << ','
                      << c.k << "] claimed_d=" << *c.claimed_d << '\n';
            write_code_file(std::cout, c);
            return 0;
        }

        if (*check_cmd) return run_check(check_file, expect_so);

        if (*mindist_cmd) {
            LinearCode c = load_code(mindist_file);
            std::cout << "min distance: " << min_distance(c, mindist_jobs) << '\n';
            return 0;
        }

        if (*concat_cmd) {
            if (concat_basis != "self-dual")
                throw std::runtime_error("concat: only --basis self-dual is supported");
            LinearCode outer = read_code_file(concat_outer);
            LinearCode inner = read_code_file(concat_inner);
            LinearCode c = concatenate({outer, inner, self_dual_basis(outer.field)});
            std::cout << "# concat outer=[" << outer.n << ',' << outer.k << "]q"
                      << outer.field.q() << " inner=[" << inner.n << ',' << inner.k
                      << "] -> [" << c.n << ',' << c.k << "]\n";
            write_code_file(std::cout, c);
            return 0;
        }

        if (*expand_cmd) {
            LinearCode c = load_code(expand_file);
            LinearCode e = expand(c, ExpansionScheme(c.field));
            std::cout << "# expand q=" << c.field.q() << " [" << c.n << ',' << c.k
                      << "] -> [" << e.n << ',' << e.k << "]\n";
            write_code_file(std::cout, e);
            return 0;
        }

        if (*tables_cmd) {
            if (tables_which == 1)
                std::cout << table1_csv();
            else if (tables_which == 2)
                std::cout << table2_csv();
            else
                throw std::runtime_error("tables: --which must be 1 or 2");
            return 0;
        }

        if (*count_cmd) {
            if (count_oracle && count_n > 10)
                throw std::runtime_error("count: --oracle requires n <= 10");
            std::optional<int> k, s;
            if (count_k >= 0) k = count_k;
            if (count_s >= 0) s = count_s;
            std::cout << count_reports_csv(count_reports(count_n, k, s, count_oracle));
            return 0;
        }

        if (*gv_cmd) return run_gv(gv_n, gv_delta, gv_seed);

        if (*bounds_cmd) {
            write_text(bounds_out, figure1_csv(bounds_samples));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
