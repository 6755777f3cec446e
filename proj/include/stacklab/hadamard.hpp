#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "stacklab/layout.hpp"

namespace stacklab {

// +/-1 matrix whose distinct rows differ in exactly order/2 entries.
class HadamardMatrix {
public:
    HadamardMatrix() = default;
    // entries in row-major order, each +1 or -1
    HadamardMatrix(int order, std::vector<std::int8_t> entries);

    int order() const { return p_; }
    std::int8_t at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(p_) +
                        static_cast<std::size_t>(col)];
    }
    bool normalized() const;  // last column all +1

    friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

private:
    int p_ = 0;
    std::vector<std::int8_t> entries_;
};

// Tensor-doubling construction; p must be a power of two (p >= 1).
HadamardMatrix sylvester(int p);

// Quadratic-residue construction of order q+1 for prime q with q = 3 (mod 4).
HadamardMatrix paley(int q);

// Row-difference check: every pair of distinct rows differs in exactly p/2
// entries.
bool validate_hadamard(const HadamardMatrix& h);

// Negates every row whose last entry is -1; returns the flipped row indices
// (0-based) through *flipped when given.
HadamardMatrix normalize_last_column(const HadamardMatrix& h,
                                     std::vector<int>* flipped = nullptr);

// The order-4 matrix used by the triple-path construction.
HadamardMatrix reference_order4();

// p permutations of {1..m^(p-1)} induced by a normalized Hadamard matrix:
// pi_k remaps digit a of i-1 (little-endian base m) to m-1-digit exactly when
// H[k][a] = -1.
class PermutationFamily {
public:
    PermutationFamily() = default;
    PermutationFamily(HadamardMatrix h, int m);

    int p() const { return source_.order(); }
    int m() const { return m_; }
    std::int64_t n() const { return n_; }
    const HadamardMatrix& source() const { return source_; }

    // k is 1-based; value tables are 1-based sequences pi_k(1..n).
    std::int64_t apply(int k, std::int64_t i) const;
    std::int64_t apply_inverse(int k, std::int64_t value) const;
    const std::vector<std::int64_t>& values(int k) const {
        return perms_[static_cast<std::size_t>(k - 1)];
    }

private:
    HadamardMatrix source_;
    int m_ = 0;
    std::int64_t n_ = 0;
    std::vector<std::vector<std::int64_t>> perms_;    // pi_k(i), index i-1
    std::vector<std::vector<std::int64_t>> inverse_;  // pi_k^{-1}(v), index v-1
};

struct SumSetAnalysis {
    int k = 0, ell = 0;
    std::set<std::int64_t> values;  // pi_k(i)+pi_ell(j) over |i-j| <= 1
    std::vector<int> a_plus;        // digit positions with equal matrix rows
    std::vector<int> a_minus;       // digit positions with opposite entries
    // Sample digit-sum vectors tau(i,j), one per distinct sum, for diagnostics.
    std::vector<std::vector<int>> tau_witnesses;
};

SumSetAnalysis sum_set(const PermutationFamily& f, int k, int ell);

// (2p-3)-stack layout of the n-vertex path on the ordering
// (pi_k^{-1}(1), ..., pi_k^{-1}(n)).
StackLayout path_layout_under_permutation(const PermutationFamily& f, int k);

// Exact longest common subsequence of the value sequences of pi_k and pi_ell.
std::int64_t lcs(const PermutationFamily& f, int k, int ell);

// Matrix text format: "hadamard <p>" then p rows of +/- characters.
std::string hadamard_to_string(const HadamardMatrix& h);
HadamardMatrix hadamard_from_string(const std::string& text);
// Permutation export: "perm <n>" then the image sequence.
std::string permutation_to_string(const PermutationFamily& f, int k);

}  // namespace stacklab
