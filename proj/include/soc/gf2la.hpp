#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "soc/galois.hpp"

namespace soc {

// Dense bit matrix over GF(2), rows packed into 64-bit words. Bits past
// cols in the last word of each row stay zero.
class BitMatrix {
public:
    BitMatrix() : rows_(0), cols_(0), wpr_(0) {}
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return wpr_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);

    uint64_t* row(int r) { return data_.data() + static_cast<size_t>(r) * wpr_; }
    const uint64_t* row(int r) const {
        return data_.data() + static_cast<size_t>(r) * wpr_;
    }

    void xor_row_into(int src, int dst);  // row dst ^= row src
    void swap_rows(int a, int b);
    bool row_is_zero(int r) const;
    int row_weight(int r) const;

    static BitMatrix identity(int n);

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_, cols_, wpr_;
    std::vector<uint64_t> data_;
};

struct BitRref {
    BitMatrix m;
    int rank;
    std::vector<int> pivots;
};

BitRref rref(const BitMatrix& a);

// Generators of the null space of G under the standard dot product,
// (n - rank) x n, rows ordered by free column. G * result^T = 0.
BitMatrix dual_space(const BitMatrix& g);

// True iff G * G^T = 0.
bool is_self_orthogonal(const BitMatrix& g);

bool same_row_space(const BitMatrix& a, const BitMatrix& b);
bool row_space_contains(const BitMatrix& outer, const BitMatrix& inner);

// Exact minimum Hamming weight of the nonzero row-space elements,
// enumerated in Gray-code order. rank <= 28; jobs >= 1 splits the
// enumeration into contiguous ranges whose minima are merged, so the
// result is independent of jobs.
int min_distance(const BitMatrix& gen, int jobs = 1);

// Exact weight -> count map over the whole row space (zero word included).
std::map<int, uint64_t> weight_distribution(const BitMatrix& gen, int jobs = 1);

// Matrix over GF(2^m) with uint32_t entries.
class FqMatrix {
public:
    FqMatrix(const Field& f, int rows, int cols);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint32_t get(int r, int c) const {
        return a_[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
    }
    void set(int r, int c, uint32_t v);

    bool operator==(const FqMatrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    Field field_;
    int rows_, cols_;
    std::vector<uint32_t> a_;
};

struct FqRref {
    FqMatrix m;
    int rank;
    std::vector<int> pivots;
};

FqRref rref(const FqMatrix& a);
FqMatrix dual_space(const FqMatrix& g);
bool is_self_orthogonal(const FqMatrix& g);
bool same_row_space(const FqMatrix& a, const FqMatrix& b);
bool row_space_contains(const FqMatrix& outer, const FqMatrix& inner);

// Symbol-weight minimum distance / weight distribution over GF(2^m),
// enumerated through the binary expansion of the row space.
// rank * m <= 24.
int min_distance(const FqMatrix& gen, int jobs = 1);
std::map<int, uint64_t> weight_distribution(const FqMatrix& gen, int jobs = 1);

}  // namespace soc
