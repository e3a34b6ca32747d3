#include "soc/counting.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "soc/line.hpp"
#include "soc/rng.hpp"

namespace soc {

namespace {

void require_even(int n, const char* who) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": length n must be even and >= 2");
}

mpz_class binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den, const char* who) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw std::runtime_error(std::string(who) + ": inexact division (formula defect)");
    return q;
}

}  // namespace

mpz_class lemma8_count(int n, int s) {
    require_even(n, "lemma8_count");
    int h = n / 2;
    if (s < 0 || s > h) throw std::invalid_argument("lemma8_count: need 0 <= s <= n/2");
    mpz_class prod = 1;
    for (int j = 1; j <= h - s; ++j) prod *= pow2(static_cast<unsigned long>(j)) + 1;
    return prod;
}

mpz_class sigma(int n, int k, int s) {
    require_even(n, "sigma");
    if (s < 0 || s > k || k > n / 2)
        throw std::invalid_argument("sigma: need 0 <= s <= k <= n/2");
    mpz_class acc = 1;
    for (int kk = s; kk < k; ++kk) {
        mpz_class num = acc * (pow2(static_cast<unsigned long>(n - 2 * kk)) - 1);
        mpz_class den = pow2(static_cast<unsigned long>(kk - s + 1)) - 1;
        acc = exact_quotient(num, den, "sigma");
    }
    return acc;
}

mpz_class count_so(int n, int k) {
    require_even(n, "count_so");
    if (k < 1 || k > n / 2) throw std::invalid_argument("count_so: need 1 <= k <= n/2");
    mpz_class num = 1, den = 1;
    for (int i = 0; i < k; ++i) num *= pow2(static_cast<unsigned long>(n - 2 * i)) - 1;
    for (int j = 1; j <= k; ++j) den *= pow2(static_cast<unsigned long>(j)) - 1;
    return exact_quotient(num, den, "count_so");
}

mpz_class count_so_containing_v(int n, int k) {
    require_even(n, "count_so_containing_v");
    if (k < 1 || k > n / 2)
        throw std::invalid_argument("count_so_containing_v: need 1 <= k <= n/2");
    mpz_class num = 1, den = 1;
    for (int i = 1; i < k; ++i) num *= pow2(static_cast<unsigned long>(n - 2 * i)) - 1;
    for (int j = 1; j < k; ++j) den *= pow2(static_cast<unsigned long>(j)) - 1;
    return exact_quotient(num, den, "count_so_containing_v");
}

namespace {

constexpr int kOracleCap = 10;

// Enumerate the reduced echelon forms of all [n,k] subspaces, recursing
// row by row so self-orthogonality prunes early. Pivot entries of later
// rows are forced to zero, which makes the representative unique.
struct EchelonScan {
    int n, k;
    std::vector<int> pivots;          // current pivot columns
    std::vector<uint64_t> rows;
    std::vector<std::vector<int>> free_cols;
    mpz_class count = 0;
    const std::vector<uint64_t>* must_contain = nullptr;

    explicit EchelonScan(int n_, int k_) : n(n_), k(k_) {}

    bool contains_all() const {
        if (!must_contain) return true;
        for (uint64_t v : *must_contain) {
            uint64_t r = v;
            for (int i = 0; i < k; ++i)
                if (r >> pivots[static_cast<size_t>(i)] & 1) r ^= rows[static_cast<size_t>(i)];
            if (r != 0) return false;
        }
        return true;
    }

    void fill_row(int i) {
        if (i == k) {
            if (contains_all()) ++count;
            return;
        }
        const auto& cols = free_cols[static_cast<size_t>(i)];
        uint64_t base = 1ull << pivots[static_cast<size_t>(i)];
        uint64_t patterns = 1ull << cols.size();
        for (uint64_t pat = 0; pat < patterns; ++pat) {
            uint64_t row = base;
            for (size_t b = 0; b < cols.size(); ++b)
                if (pat >> b & 1) row |= 1ull << cols[b];
            bool ok = true;
            for (int j = 0; j <= i && ok; ++j) {
                uint64_t other = j == i ? row : rows[static_cast<size_t>(j)];
                if (std::popcount(row & other) & 1) ok = false;
            }
            if (!ok) continue;
            rows[static_cast<size_t>(i)] = row;
            fill_row(i + 1);
        }
    }

    void run() {
        if (k == 0) {
            if (contains_all()) count = 1;
            return;
        }
        std::vector<int> comb(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
        for (;;) {
            pivots = comb;
            std::vector<bool> is_pivot(static_cast<size_t>(n), false);
            for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
            free_cols.assign(static_cast<size_t>(k), {});
            for (int i = 0; i < k; ++i)
                for (int c = pivots[static_cast<size_t>(i)] + 1; c < n; ++c)
                    if (!is_pivot[static_cast<size_t>(c)])
                        free_cols[static_cast<size_t>(i)].push_back(c);
            rows.assign(static_cast<size_t>(k), 0);
            fill_row(0);
            // next combination
            int pos = k - 1;
            while (pos >= 0 && comb[static_cast<size_t>(pos)] == n - k + pos) --pos;
            if (pos < 0) break;
            ++comb[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < k; ++i)
                comb[static_cast<size_t>(i)] = comb[static_cast<size_t>(i - 1)] + 1;
        }
    }
};

mpz_class scan_so(int n, int k, const std::vector<uint64_t>* gens) {
    if (n < 1 || n > kOracleCap)
        throw std::invalid_argument("enumeration oracle: n out of range [1,10]");
    if (k < 0 || k > n) throw std::invalid_argument("enumeration oracle: bad dimension");
    EchelonScan scan(n, k);
    scan.must_contain = gens;
    scan.run();
    return scan.count;
}

}  // namespace

mpz_class enumerate_so(int n, int k) { return scan_so(n, k, nullptr); }

mpz_class enumerate_so_containing(int n, int k, uint64_t v) {
    std::vector<uint64_t> gens{v};
    return scan_so(n, k, &gens);
}

mpz_class enumerate_so_containing_code(int n, int k, const std::vector<uint64_t>& gens) {
    return scan_so(n, k, &gens);
}

mpz_class enumerate_selfdual_containing(int n, const std::vector<uint64_t>& gens) {
    require_even(n, "enumerate_selfdual_containing");
    return scan_so(n, n / 2, &gens);
}

bool theorem1_holds(int n, int k, int r) {
    require_even(n, "theorem1_holds");
    if (k < 1 || r < 1) throw std::invalid_argument("theorem1_holds: need k >= 1, r >= 1");
    mpz_class sum = 0;
    for (int j = 1; j <= r - 1; ++j) sum += binomial(n, 2 * j);
    return sum * (pow2(static_cast<unsigned long>(k)) - 1) <
           pow2(static_cast<unsigned long>(n)) - 1;
}

int gv_so_dimension(int n, int r) {
    require_even(n, "gv_so_dimension");
    if (r < 2) throw std::invalid_argument("gv_so_dimension: need r >= 2");
    mpz_class sum = 0;
    for (int j = 1; j <= r - 1; ++j) sum += binomial(n, 2 * j);
    if (sum == 0) throw std::invalid_argument("gv_so_dimension: empty denominator sum");
    mpz_class num = pow2(static_cast<unsigned long>(n)) - 1;
    if (num >= sum) {
        mpz_class q = num / sum;
        return static_cast<int>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 1;
    }
    // Ratio below 1: floor(log2) is -e with the minimal e shifting num past sum.
    int e = 0;
    mpz_class t = num;
    while (t < sum) {
        t <<= 1;
        ++e;
    }
    return -e;
}

namespace {

struct WitnessSearch {
    int n, k, d;
    uint64_t budget;
    uint64_t nodes = 0;
    std::vector<uint64_t> cands;
    std::vector<uint64_t> gens;
    std::vector<uint64_t> span;  // all current codewords

    bool orthogonal(uint64_t v) const {
        if (std::popcount(v) & 1) return false;
        for (uint64_t g : gens)
            if (std::popcount(v & g) & 1) return false;
        return true;
    }

    bool coset_ok(uint64_t v) const {
        for (uint64_t s : span) {
            uint64_t w = s ^ v;
            if (std::popcount(w) < d) return false;
        }
        return true;
    }

    bool in_span(uint64_t v) const {
        return std::find(span.begin(), span.end(), v) != span.end();
    }

    bool dfs(size_t start) {
        if (static_cast<int>(gens.size()) == k) return true;
        for (size_t i = start; i < cands.size(); ++i) {
            if (budget && ++nodes > budget) return false;
            uint64_t v = cands[i];
            if (!orthogonal(v) || in_span(v) || !coset_ok(v)) continue;
            gens.push_back(v);
            size_t old = span.size();
            for (size_t s = 0; s < old; ++s) span.push_back(span[s] ^ v);
            if (dfs(i + 1)) return true;
            gens.pop_back();
            span.resize(old);
        }
        return false;
    }
};

}  // namespace

std::optional<LinearCode> find_so_code(int n, int k, int d_target, uint64_t budget,
                                       uint64_t seed) {
    if (n < 1 || n > 20 || k < 1 || k > 10)
        throw std::invalid_argument("find_so_code: need n <= 20, k <= 10");
    if (2 * k > n) return std::nullopt;  // C inside C-perp forces k <= n/2
    if (d_target > n) return std::nullopt;

    WitnessSearch ws{n, k, std::max(d_target, 2), budget, 0, {}, {}, {0}};
    for (uint64_t v = 1; v < (1ull << n); ++v)
        if ((std::popcount(v) & 1) == 0 && std::popcount(v) >= ws.d) ws.cands.push_back(v);

    bool found = false;
    if (n <= 14) {
        found = ws.dfs(0);  // exhaustive: candidate order is ascending
    } else {
        SplitMix64 rng(seed);
        uint64_t restarts = budget ? budget : 2000;
        for (uint64_t attempt = 0; attempt < restarts && !found; ++attempt) {
            std::vector<uint64_t> order = ws.cands;
            for (size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng.below(i)]);
            ws.gens.clear();
            ws.span.assign(1, 0);
            for (uint64_t v : order) {
                if (!ws.orthogonal(v) || ws.in_span(v) || !ws.coset_ok(v)) continue;
                ws.gens.push_back(v);
                size_t old = ws.span.size();
                for (size_t s = 0; s < old; ++s) ws.span.push_back(ws.span[s] ^ v);
                if (static_cast<int>(ws.gens.size()) == k) break;
            }
            found = static_cast<int>(ws.gens.size()) == k;
        }
    }
    if (!found) return std::nullopt;

    BitMatrix gen(k, n);
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < n; ++c)
            if (ws.gens[static_cast<size_t>(i)] >> c & 1) gen.set(i, c, true);
    LinearCode code = make_binary_code(std::move(gen), d_target);
    if (!is_self_orthogonal(code) || min_distance(code) < d_target)
        throw std::logic_error("find_so_code: witness failed verification");
    return code;
}

uint64_t canonical_even_vector(int n) {
    if (n < 2) throw std::invalid_argument("canonical_even_vector: n >= 2");
    return 0b11;
}

std::vector<uint64_t> canonical_so_generators(int n, int s) {
    if (s < 0 || 2 * s > n)
        throw std::invalid_argument("canonical_so_generators: need 0 <= s <= n/2");
    std::vector<uint64_t> gens;
    for (int i = 0; i < s; ++i) gens.push_back(0b11ull << (2 * i));
    return gens;
}

std::vector<CountReport> count_reports(int n, std::optional<int> k, std::optional<int> s,
                                       bool with_oracle) {
    require_even(n, "count_reports");
    bool oracle_ok = with_oracle && n <= kOracleCap;
    std::vector<CountReport> out;
    auto push = [&out](CountReport r) {
        if (r.oracle_value) r.agrees = r.paper_value == *r.oracle_value;
        out.push_back(std::move(r));
    };

    std::vector<int> ks;
    if (k)
        ks.push_back(*k);
    else
        for (int kk = 1; kk <= n / 2; ++kk) ks.push_back(kk);

    for (int kk : ks) {
        CountReport eq9{"Eq9", n, kk, {}, count_so(n, kk), {}, {}};
        if (oracle_ok) eq9.oracle_value = enumerate_so(n, kk);
        push(std::move(eq9));

        CountReport eq10{"Eq10", n, kk, {}, count_so_containing_v(n, kk), {}, {}};
        if (oracle_ok)
            eq10.oracle_value = enumerate_so_containing(n, kk, canonical_even_vector(n));
        push(std::move(eq10));

        if (s) {
            CountReport eq8{"Eq8", n, kk, *s, sigma(n, kk, *s), {}, {}};
            if (oracle_ok)
                eq8.oracle_value =
                    enumerate_so_containing_code(n, kk, canonical_so_generators(n, *s));
            push(std::move(eq8));
        }
    }
    if (s) {
        CountReport l8{"Lemma8", n, {}, *s, lemma8_count(n, *s), {}, {}};
        if (oracle_ok)
            l8.oracle_value = enumerate_selfdual_containing(n, canonical_so_generators(n, *s));
        push(std::move(l8));
    }
    return out;
}

std::string count_reports_csv(const std::vector<CountReport>& reports) {
    std::ostringstream out;
    out << "quantity,n,k,s,paper_value,oracle_value,agrees\n";
    for (const CountReport& r : reports) {
        out << r.quantity << ',' << r.n << ',';
        if (r.k) out << *r.k;
        out << ',';
        if (r.s) out << *r.s;
        out << ',' << r.paper_value << ',';
        if (r.oracle_value) out << *r.oracle_value;
        out << ',';
        if (r.agrees) out << (*r.agrees ? "true" : "false");
        out << '\n';
    }
    return out.str();
}

}  // namespace soc
