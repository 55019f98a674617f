#include "jk/matrix.hpp"

namespace jk {

namespace {

// Reduction policies let the elimination inner loops inline the modular
// multiply instead of branching on the modulus per element.
struct Mersenne61 {
    static constexpr u64 P = (u64(1) << 61) - 1;
    u64 p() const { return P; }
    u64 mul(u64 a, u64 b) const {
        u128 t = u128(a) * b;
        u64 s = (u64(t) & P) + u64(t >> 61);
        return s >= P ? s - P : s;
    }
};

struct GenericMod {
    u64 p_;
    u64 p() const { return p_; }
    u64 mul(u64 a, u64 b) const { return u64(u128(a) * b % p_); }
};

template <class Red>
u64 submul(const Red& R, u64 x, u64 f, u64 y) {
    // x - f*y mod p
    u64 t = R.mul(f, y);
    return x >= t ? x - t : x + R.p() - t;
}

// Row echelon form, in place. Returns the rank; if pivot_cols is non-null it
// receives the pivot column of each of the first `rank` rows. When `reduce`
// is set the matrix is taken all the way to RREF.
template <class Red>
std::size_t echelon(const PrimeField& F, const Red& R, FpMat& M, bool reduce,
                    std::vector<std::size_t>* pivot_cols) {
    const std::size_t rows = M.rows, cols = M.cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && M.at(pr, c).v == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r) {
            Fp* a = M.row(r);
            Fp* b = M.row(pr);
            for (std::size_t j = c; j < cols; ++j) std::swap(a[j], b[j]);
        }
        const u64 pinv = F.inv(M.at(r, c)).v;
        Fp* prow = M.row(r);
        prow[c].v = 1;
        for (std::size_t j = c + 1; j < cols; ++j) prow[j].v = R.mul(prow[j].v, pinv);
        const std::size_t lo = reduce ? 0 : r + 1;
        for (std::size_t i = lo; i < rows; ++i) {
            if (i == r) continue;
            const u64 f = M.at(i, c).v;
            if (f == 0) continue;
            Fp* row = M.row(i);
            row[c].v = 0;
            for (std::size_t j = c + 1; j < cols; ++j)
                row[j].v = submul(R, row[j].v, f, prow[j].v);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

template <class Fn>
auto with_reducer(const PrimeField& F, Fn&& fn) {
    if (F.is_mersenne61()) return fn(Mersenne61{});
    return fn(GenericMod{F.modulus()});
}

} // namespace

std::size_t mat_rank(const PrimeField& F, FpMat M) {
    return with_reducer(F, [&](auto R) { return echelon(F, R, M, false, nullptr); });
}

std::vector<std::vector<Fp>> mat_nullspace(const PrimeField& F, FpMat M) {
    std::vector<std::size_t> piv;
    const std::size_t rank =
        with_reducer(F, [&](auto R) { return echelon(F, R, M, true, &piv); });
    const std::size_t cols = M.cols;

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : piv) is_pivot[c] = true;

    std::vector<std::vector<Fp>> basis;
    basis.reserve(cols - rank);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Fp> v(cols, Fp{0});
        v[f] = Fp{1};
        for (std::size_t r = 0; r < rank; ++r) v[piv[r]] = F.neg(M.at(r, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

Fp det(const PrimeField& F, FpMat M) {
    if (M.rows != M.cols) throw InvalidArgument("det: matrix not square");
    const std::size_t n = M.rows;
    Fp d = F.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && M.at(pr, c).v == 0) ++pr;
        if (pr == n) return F.zero();
        if (pr != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(M.at(c, j), M.at(pr, j));
            d = F.neg(d);
        }
        const Fp pivot = M.at(c, c);
        d = F.mul(d, pivot);
        const Fp pinv = F.inv(pivot);
        for (std::size_t j = c + 1; j < n; ++j) M.at(c, j) = F.mul(M.at(c, j), pinv);
        for (std::size_t i = c + 1; i < n; ++i) {
            const Fp f = M.at(i, c);
            if (f.v == 0) continue;
            for (std::size_t j = c + 1; j < n; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(c, j)));
        }
    }
    return d;
}

namespace {

// Primal part of M with row `skip` removed (rows start at `r0`, columns at
// `c0 + 1`), used by the pure-eps fallback of the jet determinant.
FpMat primal_minor(const JetMat& M, std::size_t r0, std::size_t c0, std::size_t skip) {
    const std::size_t n = M.rows - r0 - 1;
    FpMat out(n, n);
    std::size_t oi = 0;
    for (std::size_t i = r0; i < M.rows; ++i) {
        if (i == skip) continue;
        for (std::size_t j = c0 + 1, oj = 0; j < M.cols; ++j, ++oj)
            out.at(oi, oj) = M.at(i, j).a;
        ++oi;
    }
    return out;
}

} // namespace

Jet det(const PrimeField& F, JetMat M) {
    if (M.rows != M.cols) throw InvalidArgument("det: matrix not square");
    const JetRing R(F);
    const std::size_t n = M.rows;
    Jet d = R.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && M.at(pr, c).a.v == 0) ++pr;
        if (pr == n) {
            // No invertible pivot. If the whole remaining column is zero the
            // determinant vanishes exactly; otherwise every remaining entry
            // is pure eps and exactly one factor of eps survives per term:
            //   det = eps * sum_i +-b_i * det(primal minor_i).
            bool all_zero = true;
            for (std::size_t i = c; i < n; ++i) all_zero = all_zero && M.at(i, c).b.v == 0;
            if (all_zero) return R.zero();
            Fp t = F.zero();
            Fp sign = F.one();
            for (std::size_t i = c; i < n; ++i) {
                const Fp bi = M.at(i, c).b;
                if (bi.v != 0) t = F.add(t, F.mul(sign, F.mul(bi, det(F, primal_minor(M, c, c, i)))));
                sign = F.neg(sign);
            }
            return Jet{F.zero(), F.mul(d.a, t)};
        }
        if (pr != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(M.at(c, j), M.at(pr, j));
            d = R.neg(d);
        }
        const Jet pivot = M.at(c, c);
        d = R.mul(d, pivot);
        const Jet pinv = R.inv(pivot);
        for (std::size_t j = c + 1; j < n; ++j) M.at(c, j) = R.mul(M.at(c, j), pinv);
        for (std::size_t i = c + 1; i < n; ++i) {
            const Jet f = M.at(i, c);
            if (f.a.v == 0 && f.b.v == 0) continue;
            for (std::size_t j = c + 1; j < n; ++j)
                M.at(i, j) = R.sub(M.at(i, j), R.mul(f, M.at(c, j)));
        }
    }
    return d;
}

FpMat matmul(const PrimeField& F, const FpMat& A, const FpMat& B) {
    if (A.cols != B.rows) throw InvalidArgument("matmul: shape mismatch");
    FpMat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const Fp f = A.at(i, k);
            if (f.v == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(f, B.at(k, j)));
        }
    return C;
}

JetMat matmul(const JetRing& R, const JetMat& A, const JetMat& B) {
    if (A.cols != B.rows) throw InvalidArgument("matmul: shape mismatch");
    JetMat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const Jet f = A.at(i, k);
            if (f.a.v == 0 && f.b.v == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = R.add(C.at(i, j), R.mul(f, B.at(k, j)));
        }
    return C;
}

FpMat transpose(const FpMat& M) {
    FpMat T(M.cols, M.rows);
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) T.at(j, i) = M.at(i, j);
    return T;
}

std::vector<Fp> matvec(const PrimeField& F, const FpMat& M, const std::vector<Fp>& v) {
    if (M.cols != v.size()) throw InvalidArgument("matvec: shape mismatch");
    std::vector<Fp> out(M.rows, Fp{0});
    for (std::size_t i = 0; i < M.rows; ++i) {
        Fp acc = F.zero();
        const Fp* row = M.row(i);
        for (std::size_t j = 0; j < M.cols; ++j) acc = F.add(acc, F.mul(row[j], v[j]));
        out[i] = acc;
    }
    return out;
}

bool is_skew(const PrimeField& F, const FpMat& M) {
    if (M.rows != M.cols) return false;
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = i; j < M.cols; ++j)
            if (M.at(i, j) != F.neg(M.at(j, i))) return false;
    return true;
}

FpMat random_matrix(const PrimeField& F, std::size_t rows, std::size_t cols, SeededRng& rng) {
    FpMat M(rows, cols);
    for (auto& x : M.a) x = F.sample(rng);
    return M;
}

std::vector<Fp> random_vector(const PrimeField& F, std::size_t dim, SeededRng& rng) {
    if (dim == 0) throw InvalidArgument("random_vector: dim must be >= 1");
    std::vector<Fp> v(dim);
    for (auto& x : v) x = F.sample(rng);
    return v;
}

FpMat random_invertible(const PrimeField& F, std::size_t n, SeededRng& rng) {
    for (;;) {
        FpMat Q = random_matrix(F, n, n, rng);
        if (mat_rank(F, Q) == n) return Q;
    }
}

} // namespace jk
