#include "normic/normal_forms.hpp"

#include <stdexcept>

namespace normic {

HermiteForm hnf(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    HermiteForm out;
    out.H = A;
    out.U = IntMatrix::identity(n);
    IntMatrix& H = out.H;
    IntMatrix& U = out.U;
    std::size_t chi = n;  // active columns are 0..chi-1
    for (std::size_t ii = m; ii-- > 0;) {
        // gcd-eliminate row ii among the active columns; pivot column is the
        // one with smallest nonzero |entry|, ties broken by lowest index
        for (;;) {
            std::size_t nz = 0, k0 = 0;
            for (std::size_t k = 0; k < chi; ++k) {
                const Int& v = H(ii, k);
                if (v == 0) continue;
                if (nz == 0 || abs_int(v) < abs_int(H(ii, k0))) k0 = k;
                ++nz;
            }
            if (nz <= 1) break;
            for (std::size_t k = 0; k < chi; ++k) {
                if (k == k0 || H(ii, k) == 0) continue;
                Int q = floor_div(H(ii, k), H(ii, k0));
                H.addmul_col(k, k0, -q);
                U.addmul_col(k, k0, -q);
            }
        }
        std::size_t k0 = chi;
        for (std::size_t k = 0; k < chi; ++k)
            if (H(ii, k) != 0) { k0 = k; break; }
        if (k0 == chi) continue;  // row is zero on the active range
        H.swap_cols(k0, chi - 1);
        U.swap_cols(k0, chi - 1);
        if (H(ii, chi - 1) < 0) {
            H.negate_col(chi - 1);
            U.negate_col(chi - 1);
        }
        const Int piv = H(ii, chi - 1);
        for (std::size_t k = chi; k < n; ++k) {
            Int q = floor_div(H(ii, k), piv);
            H.addmul_col(k, chi - 1, -q);
            U.addmul_col(k, chi - 1, -q);
        }
        --chi;
    }
    out.zero_cols = chi;
    return out;
}

IntMatrix kernel_basis(const IntMatrix& A) {
    HermiteForm hf = hnf(A);
    IntMatrix K = hf.U.columns(0, hf.zero_cols);
    if (K.cols() == 0) return K;
    HermiteForm canon = hnf(K);
    // a kernel basis is independent, so its Hermite form has no zero columns
    return canon.H;
}

std::size_t rank(const IntMatrix& A) {
    return A.cols() - hnf(A).zero_cols;
}

namespace {

struct Pivots {
    // (pivot row, column) pairs of a Hermite form, rightmost column first
    std::vector<std::pair<std::size_t, std::size_t>> pos;
};

Pivots find_pivots(const HermiteForm& hf) {
    Pivots p;
    const IntMatrix& H = hf.H;
    for (std::size_t j = H.cols(); j-- > hf.zero_cols;) {
        std::size_t pr = H.rows();
        for (std::size_t i = H.rows(); i-- > 0;)
            if (H(i, j) != 0) { pr = i; break; }
        p.pos.emplace_back(pr, j);
    }
    return p;
}

// Reduce v against H's pivot columns; returns the coefficient vector on the
// Hermite columns if v lies in the column span, nullopt otherwise.
std::optional<std::vector<Int>> reduce_against(const HermiteForm& hf, const Pivots& piv,
                                               std::vector<Int> r) {
    const IntMatrix& H = hf.H;
    std::vector<Int> coeff(H.cols());
    for (const auto& [pr, j] : piv.pos) {
        const Int& d = H(pr, j);
        if (r[pr] % d != 0) return std::nullopt;
        Int q = r[pr] / d;
        coeff[j] = q;
        if (q != 0)
            for (std::size_t i = 0; i < H.rows(); ++i) r[i] -= q * H(i, j);
    }
    for (const Int& x : r)
        if (x != 0) return std::nullopt;
    return coeff;
}

}  // namespace

bool lattice_contains(const IntMatrix& L, const std::vector<Int>& v) {
    if (v.size() != L.rows()) throw std::invalid_argument("lattice_contains: dimension mismatch");
    HermiteForm hf = hnf(L);
    Pivots piv = find_pivots(hf);
    return reduce_against(hf, piv, v).has_value();
}

bool lattice_contains_all(const IntMatrix& L, const IntMatrix& V) {
    if (V.rows() != L.rows()) throw std::invalid_argument("lattice_contains_all: dimension mismatch");
    HermiteForm hf = hnf(L);
    Pivots piv = find_pivots(hf);
    for (std::size_t c = 0; c < V.cols(); ++c)
        if (!reduce_against(hf, piv, V.col(c))) return false;
    return true;
}

std::optional<std::vector<Int>> solve_lattice(const IntMatrix& L, const std::vector<Int>& v) {
    if (v.size() != L.rows()) throw std::invalid_argument("solve_lattice: dimension mismatch");
    HermiteForm hf = hnf(L);
    Pivots piv = find_pivots(hf);
    auto coeff = reduce_against(hf, piv, v);
    if (!coeff) return std::nullopt;
    return hf.U.mul_vec(*coeff);
}

IntMatrix saturation(const IntMatrix& L) {
    IntMatrix B = kernel_basis(L.transpose());
    return kernel_basis(B.transpose());
}

SmithForm snf(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    SmithForm out;
    out.D = A;
    out.U = IntMatrix::identity(m);
    out.V = IntMatrix::identity(n);
    IntMatrix& D = out.D;
    IntMatrix& U = out.U;
    IntMatrix& V = out.V;
    const std::size_t mn = m < n ? m : n;
    std::size_t t = 0;
    while (t < mn) {
        // pivot: smallest nonzero |entry| of the trailing submatrix,
        // ties broken by lowest row then column index
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Int& v = D(i, j);
                if (v == 0) continue;
                if (!found || abs_int(v) < abs_int(D(pi, pj))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        D.swap_rows(t, pi);
        U.swap_rows(t, pi);
        D.swap_cols(t, pj);
        V.swap_cols(t, pj);
        bool dirty = false;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (D(i, t) == 0) continue;
            Int q = floor_div(D(i, t), D(t, t));
            D.addmul_row(i, t, -q);
            U.addmul_row(i, t, -q);
            if (D(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (D(t, j) == 0) continue;
            Int q = floor_div(D(t, j), D(t, t));
            D.addmul_col(j, t, -q);
            V.addmul_col(j, t, -q);
            if (D(t, j) != 0) dirty = true;
        }
        if (dirty) continue;  // remainders appeared; rescan for a smaller pivot
        // enforce the divisibility chain before moving on
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                if (D(i, j) % D(t, t) != 0) {
                    D.addmul_row(t, i, 1);
                    U.addmul_row(t, i, 1);
                    fixed = true;
                    break;
                }
        if (fixed) continue;
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
        ++t;
    }
    return out;
}

Int det(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    IntMatrix M = A;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t sw = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (M(i, k) != 0) { sw = i; break; }
            if (sw == n) return 0;
            M.swap_rows(k, sw);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
            M(i, k) = 0;
        }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

std::vector<Int> nontrivial_invariant_factors(const IntMatrix& A) {
    SmithForm s = snf(A);
    std::vector<Int> out;
    const std::size_t mn = A.rows() < A.cols() ? A.rows() : A.cols();
    for (std::size_t i = 0; i < mn; ++i)
        if (s.D(i, i) > 1) out.push_back(s.D(i, i));
    return out;
}

}  // namespace normic
