#include "soc/codes.hpp"

#include <algorithm>
#include <stdexcept>

#include "soc/rng.hpp"

namespace soc {

LinearCode make_binary_code(BitMatrix gen, std::optional<int> claimed_d) {
    if (rref(gen).rank != gen.rows())
        throw std::invalid_argument("make_binary_code: generator rows are dependent");
    LinearCode c{Field(1), gen.cols(), gen.rows(), std::move(gen), claimed_d};
    return c;
}

LinearCode make_fq_code(FqMatrix gen, std::optional<int> claimed_d) {
    if (rref(gen).rank != gen.rows())
        throw std::invalid_argument("make_fq_code: generator rows are dependent");
    Field f = gen.field();
    int n = gen.cols();
    int k = gen.rows();
    LinearCode c{f, n, k, std::move(gen), claimed_d};
    return c;
}

bool is_self_orthogonal(const LinearCode& c) {
    return c.binary() ? is_self_orthogonal(c.bits()) : is_self_orthogonal(c.symbols());
}

int min_distance(const LinearCode& c, int jobs) {
    return c.binary() ? min_distance(c.bits(), jobs) : min_distance(c.symbols(), jobs);
}

std::map<int, uint64_t> weight_distribution(const LinearCode& c, int jobs) {
    return c.binary() ? weight_distribution(c.bits(), jobs)
                      : weight_distribution(c.symbols(), jobs);
}

LinearCode dual_code(const LinearCode& c) {
    if (c.binary()) return make_binary_code(dual_space(c.bits()));
    return make_fq_code(dual_space(c.symbols()));
}

bool contains(const LinearCode& c1, const LinearCode& c2) {
    if (c1.field != c2.field || c1.n != c2.n)
        throw std::invalid_argument("contains: field or length mismatch");
    return c1.binary() ? row_space_contains(c1.bits(), c2.bits())
                       : row_space_contains(c1.symbols(), c2.symbols());
}

bool same_code(const LinearCode& a, const LinearCode& b) {
    if (a.field != b.field || a.n != b.n) return false;
    return a.binary() ? same_row_space(a.bits(), b.bits())
                      : same_row_space(a.symbols(), b.symbols());
}

bool all_weights_even(const LinearCode& c) {
    if (!c.binary())
        throw std::invalid_argument("all_weights_even: binary codes only");
    for (int i = 0; i < c.k; ++i)
        if (c.bits().row_weight(i) & 1) return false;
    return true;
}

LinearCode rm_code(int r, int m) {
    if (m < 0 || m > 10 || r < 0 || r > m)
        throw std::invalid_argument("rm_code: need 0 <= r <= m <= 10");
    int n = 1 << m;
    // Monomial subsets of {0..m-1} in graded-lex order.
    std::vector<uint32_t> monomials;
    for (int size = 0; size <= r; ++size) {
        std::vector<int> idx(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            uint32_t mask = 0;
            for (int i : idx) mask |= 1u << i;
            monomials.push_back(mask);
            if (size == 0) break;
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < size; ++i)
                idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
        }
    }
    BitMatrix gen(static_cast<int>(monomials.size()), n);
    for (size_t row = 0; row < monomials.size(); ++row)
        for (int j = 0; j < n; ++j)
            if ((static_cast<uint32_t>(j) & monomials[row]) == monomials[row])
                gen.set(static_cast<int>(row), j, true);
    return make_binary_code(std::move(gen), 1 << (m - r));
}

LinearCode evaluation_code(const EvaluationCodeSpec& espec) {
    const Field& f = espec.field;
    int n = static_cast<int>(espec.points.size());
    if (n == 0) throw std::invalid_argument("evaluation_code: empty point set");
    if (espec.degree < 0 || espec.degree >= n)
        throw std::invalid_argument("evaluation_code: need 0 <= degree < |points|");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (espec.points[static_cast<size_t>(i)] == espec.points[static_cast<size_t>(j)])
                throw std::invalid_argument("evaluation_code: points must be distinct");
    if (!espec.multipliers.empty()) {
        if (static_cast<int>(espec.multipliers.size()) != n)
            throw std::invalid_argument("evaluation_code: multiplier count mismatch");
        for (uint32_t v : espec.multipliers)
            if (v == 0) throw std::invalid_argument("evaluation_code: zero multiplier");
    }
    int k = espec.degree + 1;
    FqMatrix gen(f, k, n);
    for (int j = 0; j < n; ++j) {
        uint32_t v = espec.multipliers.empty() ? 1u : espec.multipliers[static_cast<size_t>(j)];
        uint32_t p = espec.points[static_cast<size_t>(j)];
        uint32_t pw = 1;
        for (int i = 0; i < k; ++i) {
            gen.set(i, j, f.mul(v, pw));
            pw = f.mul(pw, p);
        }
    }
    return make_fq_code(std::move(gen), n - espec.degree);
}

LinearCode self_orthogonal_outer(const Field& f, int n, int k, uint64_t seed) {
    if (f.m() % 2 != 0)
        throw std::invalid_argument("self_orthogonal_outer: field degree must be even");
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("self_orthogonal_outer: need 1 <= k <= n/2");
    if (static_cast<uint32_t>(n) > f.q())
        throw std::invalid_argument("self_orthogonal_outer: n exceeds field size");
    std::vector<uint32_t> points(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) points[static_cast<size_t>(j)] = static_cast<uint32_t>(j);

    // Self-orthogonality of a GRS generator (v_j a_j^i) reads
    //   sum_j v_j^2 a_j^(s) = 0  for s = 0..2k-2,
    // linear in w_j = v_j^2 since squaring is additive in char 2.
    FqMatrix cond(f, 2 * k - 1, n);
    for (int s = 0; s < 2 * k - 1; ++s)
        for (int j = 0; j < n; ++j)
            cond.set(s, j, f.pow(points[static_cast<size_t>(j)], static_cast<uint64_t>(s)));
    FqMatrix null_basis = dual_space(cond);
    if (null_basis.rows() == 0)
        throw std::runtime_error("self_orthogonal_outer: no self-orthogonality solutions");

    auto sqrt_of = [&f](uint32_t w) {
        return f.pow(w, 1ull << (f.m() - 1));  // Frobenius inverse of squaring
    };
    auto build = [&](const std::vector<uint32_t>& w) {
        std::vector<uint32_t> mult(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) mult[static_cast<size_t>(j)] = sqrt_of(w[static_cast<size_t>(j)]);
        return evaluation_code({f, points, k - 1, mult});
    };

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<uint32_t> w(static_cast<size_t>(n), 0);
        for (int b = 0; b < null_basis.rows(); ++b) {
            uint32_t coeff = static_cast<uint32_t>(rng.below(f.q()));
            if (coeff == 0) continue;
            for (int j = 0; j < n; ++j)
                w[static_cast<size_t>(j)] ^= f.mul(coeff, null_basis.get(b, j));
        }
        if (std::find(w.begin(), w.end(), 0u) != w.end()) continue;
        LinearCode c = build(w);
        if (is_self_orthogonal(c)) return c;
    }

    // Deterministic fallback: w_j = prod_{i != j} (a_j - a_i)^{-1} kills
    // sum_j w_j a_j^s for every s <= n-2, which covers s <= 2k-2.
    std::vector<uint32_t> w(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        uint32_t prod = 1;
        for (int i = 0; i < n; ++i)
            if (i != j)
                prod = f.mul(prod, points[static_cast<size_t>(j)] ^ points[static_cast<size_t>(i)]);
        w[static_cast<size_t>(j)] = f.inv(prod);
    }
    LinearCode c = build(w);
    if (!is_self_orthogonal(c))
        throw std::runtime_error("self_orthogonal_outer: verification failed");
    return c;
}

}  // namespace soc
