#include "soc/gf2la.hpp"

#include <bit>
#include <algorithm>
#include <stdexcept>
#include <thread>

namespace soc {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), wpr_(cols > 0 ? (cols + 63) / 64 : 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix: negative shape");
    data_.assign(static_cast<size_t>(rows) * wpr_, 0);
}

bool BitMatrix::get(int r, int c) const {
    return row(r)[c >> 6] >> (c & 63) & 1;
}

void BitMatrix::set(int r, int c, bool v) {
    uint64_t mask = 1ull << (c & 63);
    if (v)
        row(r)[c >> 6] |= mask;
    else
        row(r)[c >> 6] &= ~mask;
}

void BitMatrix::xor_row_into(int src, int dst) {
    const uint64_t* s = row(src);
    uint64_t* d = row(dst);
    for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    uint64_t* ra = row(a);
    uint64_t* rb = row(b);
    for (int w = 0; w < wpr_; ++w) std::swap(ra[w], rb[w]);
}

bool BitMatrix::row_is_zero(int r) const {
    const uint64_t* p = row(r);
    for (int w = 0; w < wpr_; ++w)
        if (p[w]) return false;
    return true;
}

int BitMatrix::row_weight(int r) const {
    const uint64_t* p = row(r);
    int s = 0;
    for (int w = 0; w < wpr_; ++w) s += std::popcount(p[w]);
    return s;
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitRref rref(const BitMatrix& a) {
    BitRref r{a, 0, {}};
    BitMatrix& m = r.m;
    for (int col = 0; col < m.cols() && r.rank < m.rows(); ++col) {
        int piv = -1;
        for (int i = r.rank; i < m.rows(); ++i)
            if (m.get(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        m.swap_rows(piv, r.rank);
        for (int i = 0; i < m.rows(); ++i)
            if (i != r.rank && m.get(i, col)) m.xor_row_into(r.rank, i);
        r.pivots.push_back(col);
        ++r.rank;
    }
    return r;
}

BitMatrix dual_space(const BitMatrix& g) {
    BitRref r = rref(g);
    int n = g.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;
    BitMatrix d(n - r.rank, n);
    int out = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        d.set(out, f, true);
        for (int i = 0; i < r.rank; ++i)
            if (r.m.get(i, f)) d.set(out, r.pivots[static_cast<size_t>(i)], true);
        ++out;
    }
    return d;
}

bool is_self_orthogonal(const BitMatrix& g) {
    for (int i = 0; i < g.rows(); ++i)
        for (int j = i; j < g.rows(); ++j) {
            const uint64_t* a = g.row(i);
            const uint64_t* b = g.row(j);
            uint64_t acc = 0;
            for (int w = 0; w < g.words_per_row(); ++w) acc ^= a[w] & b[w];
            if (std::popcount(acc) & 1) return false;
        }
    return true;
}

namespace {

BitMatrix rank_rows(const BitMatrix& g) {
    BitRref r = rref(g);
    BitMatrix m(r.rank, g.cols());
    for (int i = 0; i < r.rank; ++i)
        for (int w = 0; w < m.words_per_row(); ++w) m.row(i)[w] = r.m.row(i)[w];
    return m;
}

}  // namespace

bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return rank_rows(a) == rank_rows(b);
}

bool row_space_contains(const BitMatrix& outer, const BitMatrix& inner) {
    if (outer.cols() != inner.cols())
        throw std::invalid_argument("row_space_contains: length mismatch");
    BitRref r = rref(outer);
    int wpr = outer.words_per_row();
    std::vector<uint64_t> v(static_cast<size_t>(wpr));
    for (int row = 0; row < inner.rows(); ++row) {
        std::copy(inner.row(row), inner.row(row) + wpr, v.data());
        for (int i = 0; i < r.rank; ++i) {
            int p = r.pivots[static_cast<size_t>(i)];
            if (v[static_cast<size_t>(p >> 6)] >> (p & 63) & 1)
                for (int w = 0; w < wpr; ++w) v[static_cast<size_t>(w)] ^= r.m.row(i)[w];
        }
        for (uint64_t word : v)
            if (word) return false;
    }
    return true;
}

namespace {

constexpr int kBinaryRankCap = 28;

// Gray-code walk over the row space of `gen` (full-rank rows), visiting
// message indices [lo, hi) of [0, 2^k). Calls visit(weight) for each
// nonzero codeword in the range.
template <typename Visit>
void walk_bits(const BitMatrix& gen, uint64_t lo, uint64_t hi, Visit visit) {
    int k = gen.rows();
    int wpr = gen.words_per_row();
    std::vector<uint64_t> cw(static_cast<size_t>(wpr), 0);
    uint64_t g = lo ^ (lo >> 1);
    for (int b = 0; b < k; ++b)
        if (g >> b & 1)
            for (int w = 0; w < wpr; ++w) cw[static_cast<size_t>(w)] ^= gen.row(b)[w];
    auto weight = [&cw, wpr]() {
        int s = 0;
        for (int w = 0; w < wpr; ++w) s += std::popcount(cw[static_cast<size_t>(w)]);
        return s;
    };
    if (lo != 0) visit(weight());
    for (uint64_t i = lo + 1; i < hi; ++i) {
        int b = std::countr_zero(i);
        for (int w = 0; w < wpr; ++w) cw[static_cast<size_t>(w)] ^= gen.row(b)[w];
        visit(weight());
    }
}

std::vector<std::pair<uint64_t, uint64_t>> chunk_ranges(uint64_t total, int jobs) {
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    int j = static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(jobs), total));
    std::vector<std::pair<uint64_t, uint64_t>> out;
    uint64_t step = total / static_cast<uint64_t>(j);
    uint64_t rem = total % static_cast<uint64_t>(j);
    uint64_t at = 0;
    for (int i = 0; i < j; ++i) {
        uint64_t len = step + (static_cast<uint64_t>(i) < rem ? 1 : 0);
        out.emplace_back(at, at + len);
        at += len;
    }
    return out;
}

}  // namespace

int min_distance(const BitMatrix& gen, int jobs) {
    BitMatrix g = rank_rows(gen);
    int k = g.rows();
    if (k == 0) throw std::invalid_argument("min_distance: zero code");
    if (k > kBinaryRankCap)
        throw std::invalid_argument("min_distance: dimension exceeds enumeration cap 28");
    uint64_t total = 1ull << k;
    auto ranges = chunk_ranges(total, jobs);
    std::vector<int> mins(ranges.size(), gen.cols() + 1);
    auto run = [&g, &ranges, &mins](size_t idx) {
        int best = mins[idx];
        walk_bits(g, ranges[idx].first, ranges[idx].second, [&best](int w) {
            if (w < best) best = w;
        });
        mins[idx] = best;
    };
    if (ranges.size() == 1) {
        run(0);
    } else {
        std::vector<std::thread> ts;
        for (size_t i = 0; i < ranges.size(); ++i) ts.emplace_back(run, i);
        for (auto& t : ts) t.join();
    }
    int best = gen.cols() + 1;
    for (int v : mins) best = std::min(best, v);
    return best;
}

std::map<int, uint64_t> weight_distribution(const BitMatrix& gen, int jobs) {
    BitMatrix g = rank_rows(gen);
    int k = g.rows();
    if (k > kBinaryRankCap)
        throw std::invalid_argument("weight_distribution: dimension exceeds enumeration cap 28");
    uint64_t total = 1ull << k;
    auto ranges = chunk_ranges(total, jobs);
    std::vector<std::vector<uint64_t>> counts(
        ranges.size(), std::vector<uint64_t>(static_cast<size_t>(gen.cols()) + 1, 0));
    auto run = [&g, &ranges, &counts](size_t idx) {
        auto& local = counts[idx];
        walk_bits(g, ranges[idx].first, ranges[idx].second,
                  [&local](int w) { ++local[static_cast<size_t>(w)]; });
    };
    if (ranges.size() == 1) {
        run(0);
    } else {
        std::vector<std::thread> ts;
        for (size_t i = 0; i < ranges.size(); ++i) ts.emplace_back(run, i);
        for (auto& t : ts) t.join();
    }
    std::map<int, uint64_t> dist;
    dist[0] = 1;  // the zero word, skipped by the walk
    for (const auto& local : counts)
        for (size_t w = 0; w < local.size(); ++w)
            if (local[w]) dist[static_cast<int>(w)] += local[w];
    return dist;
}

FqMatrix::FqMatrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("FqMatrix: negative shape");
    a_.assign(static_cast<size_t>(rows) * cols, 0);
}

void FqMatrix::set(int r, int c, uint32_t v) {
    if (v >= field_.q()) throw std::invalid_argument("FqMatrix: entry out of range");
    a_[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)] = v;
}

FqRref rref(const FqMatrix& a) {
    FqRref r{a, 0, {}};
    FqMatrix& m = r.m;
    const Field& f = a.field();
    for (int col = 0; col < m.cols() && r.rank < m.rows(); ++col) {
        int piv = -1;
        for (int i = r.rank; i < m.rows(); ++i)
            if (m.get(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r.rank)
            for (int c = 0; c < m.cols(); ++c) {
                uint32_t t = m.get(piv, c);
                m.set(piv, c, m.get(r.rank, c));
                m.set(r.rank, c, t);
            }
        uint32_t scale = f.inv(m.get(r.rank, col));
        for (int c = 0; c < m.cols(); ++c) m.set(r.rank, c, f.mul(scale, m.get(r.rank, c)));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r.rank) continue;
            uint32_t factor = m.get(i, col);
            if (factor == 0) continue;
            for (int c = 0; c < m.cols(); ++c)
                m.set(i, c, m.get(i, c) ^ f.mul(factor, m.get(r.rank, c)));
        }
        r.pivots.push_back(col);
        ++r.rank;
    }
    return r;
}

FqMatrix dual_space(const FqMatrix& g) {
    FqRref r = rref(g);
    const Field& f = g.field();
    int n = g.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;
    FqMatrix d(f, n - r.rank, n);
    int out = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        d.set(out, free, 1);
        for (int i = 0; i < r.rank; ++i) {
            uint32_t coeff = r.m.get(i, free);
            if (coeff) d.set(out, r.pivots[static_cast<size_t>(i)], coeff);
        }
        ++out;
    }
    return d;
}

bool is_self_orthogonal(const FqMatrix& g) {
    const Field& f = g.field();
    for (int i = 0; i < g.rows(); ++i)
        for (int j = i; j < g.rows(); ++j) {
            uint32_t acc = 0;
            for (int c = 0; c < g.cols(); ++c) acc ^= f.mul(g.get(i, c), g.get(j, c));
            if (acc) return false;
        }
    return true;
}

namespace {

FqMatrix rank_rows(const FqMatrix& g) {
    FqRref r = rref(g);
    FqMatrix m(g.field(), r.rank, g.cols());
    for (int i = 0; i < r.rank; ++i)
        for (int c = 0; c < g.cols(); ++c) m.set(i, c, r.m.get(i, c));
    return m;
}

}  // namespace

bool same_row_space(const FqMatrix& a, const FqMatrix& b) {
    if (a.field() != b.field() || a.cols() != b.cols()) return false;
    return rank_rows(a) == rank_rows(b);
}

bool row_space_contains(const FqMatrix& outer, const FqMatrix& inner) {
    if (outer.field() != inner.field() || outer.cols() != inner.cols())
        throw std::invalid_argument("row_space_contains: field or length mismatch");
    const Field& f = outer.field();
    FqRref r = rref(outer);
    std::vector<uint32_t> v(static_cast<size_t>(outer.cols()));
    for (int row = 0; row < inner.rows(); ++row) {
        for (int c = 0; c < inner.cols(); ++c) v[static_cast<size_t>(c)] = inner.get(row, c);
        for (int i = 0; i < r.rank; ++i) {
            uint32_t factor = v[static_cast<size_t>(r.pivots[static_cast<size_t>(i)])];
            if (factor == 0) continue;
            for (int c = 0; c < outer.cols(); ++c)
                v[static_cast<size_t>(c)] ^= f.mul(factor, r.m.get(i, c));
        }
        for (uint32_t s : v)
            if (s) return false;
    }
    return true;
}

namespace {

constexpr int kFqBitCap = 24;

// Binary generating set of the row space: rows x^j * g_i as symbol arrays.
std::vector<std::vector<uint32_t>> binary_generators(const FqMatrix& g) {
    const Field& f = g.field();
    std::vector<std::vector<uint32_t>> gens;
    gens.reserve(static_cast<size_t>(g.rows()) * f.m());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < f.m(); ++j) {
            std::vector<uint32_t> row(static_cast<size_t>(g.cols()));
            for (int c = 0; c < g.cols(); ++c)
                row[static_cast<size_t>(c)] = f.mul(1u << j, g.get(i, c));
            gens.push_back(std::move(row));
        }
    return gens;
}

template <typename Visit>
void walk_symbols(const std::vector<std::vector<uint32_t>>& gens, int n, uint64_t lo,
                  uint64_t hi, Visit visit) {
    std::vector<uint32_t> cw(static_cast<size_t>(n), 0);
    uint64_t g = lo ^ (lo >> 1);
    for (size_t b = 0; b < gens.size(); ++b)
        if (g >> b & 1)
            for (int c = 0; c < n; ++c) cw[static_cast<size_t>(c)] ^= gens[b][static_cast<size_t>(c)];
    auto weight = [&cw]() {
        int s = 0;
        for (uint32_t v : cw) s += v != 0;
        return s;
    };
    if (lo != 0) visit(weight());
    for (uint64_t i = lo + 1; i < hi; ++i) {
        size_t b = static_cast<size_t>(std::countr_zero(i));
        for (int c = 0; c < n; ++c) cw[static_cast<size_t>(c)] ^= gens[b][static_cast<size_t>(c)];
        visit(weight());
    }
}

}  // namespace

int min_distance(const FqMatrix& gen, int jobs) {
    FqMatrix g = rank_rows(gen);
    int kbits = g.rows() * g.field().m();
    if (g.rows() == 0) throw std::invalid_argument("min_distance: zero code");
    if (kbits > kFqBitCap)
        throw std::invalid_argument("min_distance: binary image exceeds enumeration cap 2^24");
    auto gens = binary_generators(g);
    uint64_t total = 1ull << kbits;
    auto ranges = chunk_ranges(total, jobs);
    std::vector<int> mins(ranges.size(), gen.cols() + 1);
    auto run = [&gens, &gen, &ranges, &mins](size_t idx) {
        int best = mins[idx];
        walk_symbols(gens, gen.cols(), ranges[idx].first, ranges[idx].second,
                     [&best](int w) {
                         if (w < best) best = w;
                     });
        mins[idx] = best;
    };
    if (ranges.size() == 1) {
        run(0);
    } else {
        std::vector<std::thread> ts;
        for (size_t i = 0; i < ranges.size(); ++i) ts.emplace_back(run, i);
        for (auto& t : ts) t.join();
    }
    int best = gen.cols() + 1;
    for (int v : mins) best = std::min(best, v);
    return best;
}

std::map<int, uint64_t> weight_distribution(const FqMatrix& gen, int jobs) {
    FqMatrix g = rank_rows(gen);
    int kbits = g.rows() * g.field().m();
    if (kbits > kFqBitCap)
        throw std::invalid_argument(
            "weight_distribution: binary image exceeds enumeration cap 2^24");
    auto gens = binary_generators(g);
    uint64_t total = 1ull << kbits;
    auto ranges = chunk_ranges(total, jobs);
    std::vector<std::vector<uint64_t>> counts(
        ranges.size(), std::vector<uint64_t>(static_cast<size_t>(gen.cols()) + 1, 0));
    auto run = [&gens, &gen, &ranges, &counts](size_t idx) {
        auto& local = counts[idx];
        walk_symbols(gens, gen.cols(), ranges[idx].first, ranges[idx].second,
                     [&local](int w) { ++local[static_cast<size_t>(w)]; });
    };
    if (ranges.size() == 1) {
        run(0);
    } else {
        std::vector<std::thread> ts;
        for (size_t i = 0; i < ranges.size(); ++i) ts.emplace_back(run, i);
        for (auto& t : ts) t.join();
    }
    std::map<int, uint64_t> dist;
    dist[0] = 1;
    for (const auto& local : counts)
        for (size_t w = 0; w < local.size(); ++w)
            if (local[w]) dist[static_cast<int>(w)] += local[w];
    return dist;
}

}  // namespace soc
