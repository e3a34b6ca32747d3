#include "soc/galois.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <utility>

namespace soc {

int poly_degree(uint64_t f) {
    int d = -1;
    while (f) {
        ++d;
        f >>= 1;
    }
    return d;
}

uint64_t poly_mod(uint64_t f, uint64_t g) {
    if (g == 0) throw std::invalid_argument("poly_mod: division by zero polynomial");
    int dg = poly_degree(g);
    for (int d = poly_degree(f); d >= dg; --d)
        if (f >> d & 1) f ^= g << (d - dg);
    return f;
}

bool poly_irreducible(uint64_t f) {
    int d = poly_degree(f);
    if (d < 1) return false;
    for (int dd = 1; 2 * dd <= d; ++dd)
        for (uint64_t g = 1ull << dd; g < (2ull << dd); ++g)
            if (poly_mod(f, g) == 0) return false;
    return true;
}

namespace {

// Least irreducible polynomial of each degree, bit i = coefficient of x^i.
constexpr uint64_t kDefaultModuli[25] = {
    0,
    0x0000002, 0x0000007, 0x000000b, 0x0000013, 0x0000025, 0x0000043,
    0x0000083, 0x000011b, 0x0000203, 0x0000409, 0x0000805, 0x0001009,
    0x000201b, 0x0004021, 0x0008003, 0x001002b, 0x0020009, 0x0040009,
    0x0080027, 0x0100009, 0x0200005, 0x0400003, 0x0800021, 0x100001b,
};

// Invert an m x m bit matrix given as rows (bit j of rows[i] = entry (i,j)).
// Throws if singular.
std::vector<uint32_t> invert_bit_matrix(std::vector<uint32_t> rows, int m,
                                        const char* what) {
    std::vector<uint32_t> inv(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) inv[static_cast<size_t>(i)] = 1u << i;
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r = col; r < m; ++r)
            if (rows[static_cast<size_t>(r)] >> col & 1) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument(what);
        std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(col)]);
        std::swap(inv[static_cast<size_t>(piv)], inv[static_cast<size_t>(col)]);
        for (int r = 0; r < m; ++r)
            if (r != col && (rows[static_cast<size_t>(r)] >> col & 1)) {
                rows[static_cast<size_t>(r)] ^= rows[static_cast<size_t>(col)];
                inv[static_cast<size_t>(r)] ^= inv[static_cast<size_t>(col)];
            }
    }
    return inv;
}

}  // namespace

uint64_t default_modulus(int m) {
    if (m < 1 || m > 24) throw std::invalid_argument("default_modulus: m out of range [1,24]");
    return kDefaultModuli[m];
}

Field::Field(int m) : Field(m, default_modulus(m)) {}

Field::Field(int m, uint64_t modulus) : m_(m), mod_(modulus) {
    if (m < 1 || m > 24) throw std::invalid_argument("Field: m out of range [1,24]");
    if (poly_degree(modulus) != m)
        throw std::invalid_argument("Field: modulus degree does not equal m");
    if (!poly_irreducible(modulus))
        throw std::invalid_argument("Field: modulus is reducible over GF(2)");
    q_ = 1u << m;
}

void Field::check_element(uint32_t a) const {
    if (a >= q_) throw std::invalid_argument("Field: element out of range");
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    check_element(a);
    check_element(b);
    return a ^ b;
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    check_element(a);
    check_element(b);
    uint64_t acc = 0;
    uint64_t x = a;
    for (uint32_t y = b; y; y >>= 1) {
        if (y & 1) acc ^= x;
        x <<= 1;
        if (x & q_) x ^= mod_;
    }
    return static_cast<uint32_t>(acc);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    check_element(a);
    uint32_t r = 1;
    uint32_t base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint32_t Field::inv(uint32_t a) const {
    check_element(a);
    if (a == 0) throw std::domain_error("Field: inversion of zero");
    return pow(a, q_ - 2);
}

int Field::trace(uint32_t a) const {
    check_element(a);
    uint32_t s = 0;
    uint32_t x = a;
    for (int i = 0; i < m_; ++i) {
        s ^= x;
        x = mul(x, x);
    }
    return static_cast<int>(s & 1u);
}

Basis::Basis(const Field& f, std::vector<uint32_t> elems)
    : field_(f), elems_(std::move(elems)) {
    int m = field_.m();
    if (static_cast<int>(elems_.size()) != m)
        throw std::invalid_argument("Basis: need exactly m elements");
    // Change-of-basis matrix: row i holds bit j = coefficient x^i of e_j.
    std::vector<uint32_t> mat(static_cast<size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
        uint32_t e = elems_[static_cast<size_t>(j)];
        if (e >= field_.q()) throw std::invalid_argument("Basis: element out of range");
        for (int i = 0; i < m; ++i)
            if (e >> i & 1) mat[static_cast<size_t>(i)] |= 1u << j;
    }
    inv_rows_ = invert_bit_matrix(mat, m, "Basis: elements are linearly dependent");
    gram_.assign(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (field_.trace(field_.mul(elems_[static_cast<size_t>(i)],
                                        elems_[static_cast<size_t>(j)])))
                gram_[static_cast<size_t>(i)] |= 1u << j;
}

bool Basis::gram_is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (gram_[static_cast<size_t>(i)] != (1u << i)) return false;
    return true;
}

uint32_t Basis::coords(uint32_t a) const {
    if (a >= field_.q()) throw std::invalid_argument("coords: element out of range");
    uint32_t v = 0;
    for (int i = 0; i < size(); ++i) {
        uint32_t dot = inv_rows_[static_cast<size_t>(i)] & a;
        if (__builtin_parity(dot)) v |= 1u << i;
    }
    return v;
}

uint32_t Basis::from_coords(uint32_t v) const {
    if (v >= field_.q()) throw std::invalid_argument("from_coords: vector out of range");
    uint32_t a = 0;
    for (int i = 0; i < size(); ++i)
        if (v >> i & 1) a ^= elems_[static_cast<size_t>(i)];
    return a;
}

Basis polynomial_basis(const Field& f) {
    std::vector<uint32_t> elems(static_cast<size_t>(f.m()));
    for (int i = 0; i < f.m(); ++i) elems[static_cast<size_t>(i)] = 1u << i;
    return Basis(f, std::move(elems));
}

Basis dual_basis(const Basis& b) {
    const Field& f = b.field();
    int m = b.size();
    std::vector<uint32_t> gram(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) gram[static_cast<size_t>(i)] = b.gram_row(i);
    // e'_j = sum_k G^{-1}[j][k] e_k gives Tr(e_i e'_j) = (G^{-1} G)_{ji}.
    std::vector<uint32_t> ginv =
        invert_bit_matrix(std::move(gram), m, "dual_basis: Gram matrix singular");
    std::vector<uint32_t> elems(static_cast<size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
        uint32_t e = 0;
        for (int k = 0; k < m; ++k)
            if (ginv[static_cast<size_t>(j)] >> k & 1) e ^= b.element(k);
        elems[static_cast<size_t>(j)] = e;
    }
    return Basis(f, std::move(elems));
}

namespace {

// Orthonormalize a spanning set under the trace form B(x,y) = Tr(xy).
// Greedy normalization; alternating remainders are paired up and each
// hyperbolic pair is folded with one finished unit vector into the
// orthonormal triple {e+u, e+w, e+u+w}.
std::vector<uint32_t> orthonormalize(const Field& f, std::vector<uint32_t> work) {
    auto B = [&f](uint32_t x, uint32_t y) { return f.trace(f.mul(x, y)); };
    std::vector<uint32_t> done;
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    while (!work.empty()) {
        size_t idx = work.size();
        for (size_t i = 0; i < work.size(); ++i)
            if (B(work[i], work[i]) == 1) {
                idx = i;
                break;
            }
        if (idx < work.size()) {
            uint32_t v = work[idx];
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(idx));
            for (uint32_t& u : work)
                if (B(u, v)) u ^= v;
            done.push_back(v);
        } else {
            // Remainder is alternating; pull out a hyperbolic pair.
            size_t pi = work.size(), pj = work.size();
            for (size_t i = 0; i < work.size() && pi == work.size(); ++i)
                for (size_t j = i + 1; j < work.size(); ++j)
                    if (B(work[i], work[j])) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == work.size())
                throw std::logic_error("orthonormalize: degenerate trace form");
            uint32_t u = work[pi], w = work[pj];
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(pj));
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(pi));
            for (uint32_t& r : work) {
                uint32_t r2 = r;
                if (B(r2, w)) r ^= u;
                if (B(r2, u)) r ^= w;
            }
            pairs.emplace_back(u, w);
        }
    }
    for (auto [u, w] : pairs) {
        if (done.empty())
            throw std::logic_error("orthonormalize: no unit vector available");
        uint32_t e = done.back();
        done.pop_back();
        done.push_back(e ^ u);
        done.push_back(e ^ w);
        done.push_back(e ^ u ^ w);
    }
    return done;
}

}  // namespace

Basis self_dual_basis(const Field& f) {
    if (f.m() == 1) return Basis(f, {1u});
    std::vector<uint32_t> start(static_cast<size_t>(f.m()));
    for (int i = 0; i < f.m(); ++i) start[static_cast<size_t>(i)] = 1u << i;
    Basis b(f, orthonormalize(f, start));
    if (b.gram_is_identity()) return b;
    // The elimination above is expected to succeed; retry from random
    // starting bases only as a small-field fallback.
    if (f.m() <= 8) {
        std::mt19937 rng(0xC0DE5u);
        for (int attempt = 0; attempt < 1000; ++attempt) {
            std::vector<uint32_t> elems(static_cast<size_t>(f.m()));
            for (uint32_t& e : elems) e = 1u + rng() % (f.q() - 1u);
            try {
                Basis cand(f, orthonormalize(f, elems));
                if (cand.gram_is_identity()) return cand;
            } catch (const std::exception&) {
            }
        }
    }
    throw std::runtime_error("self_dual_basis: construction failed");
}

std::string element_to_hex(uint32_t a) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%x", a);
    return buf;
}

uint32_t element_from_hex(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("element_from_hex: empty token");
    uint64_t v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("element_from_hex: bad hex digit");
        v = v * 16 + static_cast<uint64_t>(d);
        if (v > 0xFFFFFFFFull) throw std::invalid_argument("element_from_hex: overflow");
    }
    return static_cast<uint32_t>(v);
}

}  // namespace soc
