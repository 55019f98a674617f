#pragma once

#include <cstddef>
#include <vector>

#include "jk/field.hpp"
#include "jk/jet.hpp"

namespace jk {

// Dense row-major matrix over F_p. The workhorse of every rank computation;
// entries are raw residues and all arithmetic goes through a PrimeField
// passed to the free functions below.
struct FpMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Fp> a;

    FpMat() = default;
    FpMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Fp& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Fp at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    Fp* row(std::size_t i) { return a.data() + i * cols; }
    const Fp* row(std::size_t i) const { return a.data() + i * cols; }

    static FpMat identity(std::size_t n) {
        FpMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Fp{1};
        return m;
    }

    friend bool operator==(const FpMat& x, const FpMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

// Same layout with jet entries; only what the coadjoint pipeline needs.
struct JetMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Jet> a;

    JetMat() = default;
    JetMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Jet& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Jet at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Rank over F_p by row-echelon elimination. Pivots are chosen as the first
// nonzero entry down the column, lowest row index first, so runs reproduce
// exactly. The input is taken by value and eliminated in place.
std::size_t mat_rank(const PrimeField& F, FpMat M);

// Basis of the right nullspace {v : Mv = 0}; size is cols - rank(M), and
// every returned vector satisfies Mv = 0 exactly.
std::vector<std::vector<Fp>> mat_nullspace(const PrimeField& F, FpMat M);

Fp det(const PrimeField& F, FpMat M);

// Determinant of a jet matrix. Pivots require an invertible primal part;
// a column whose remaining entries are all pure-eps ends the elimination
// through a minor expansion (the primal part there is exactly zero).
Jet det(const PrimeField& F, JetMat M);

FpMat matmul(const PrimeField& F, const FpMat& A, const FpMat& B);
JetMat matmul(const JetRing& R, const JetMat& A, const JetMat& B);

FpMat transpose(const FpMat& M);

std::vector<Fp> matvec(const PrimeField& F, const FpMat& M, const std::vector<Fp>& v);

bool is_skew(const PrimeField& F, const FpMat& M);

FpMat random_matrix(const PrimeField& F, std::size_t rows, std::size_t cols, SeededRng& rng);

// Uniform independent residues; deterministic given the seed and draw order.
std::vector<Fp> random_vector(const PrimeField& F, std::size_t dim, SeededRng& rng);

// Random invertible square matrix (resamples until full rank).
FpMat random_invertible(const PrimeField& F, std::size_t n, SeededRng& rng);

} // namespace jk
