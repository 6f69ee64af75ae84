#pragma once

#include <optional>
#include <vector>

#include "normic/int_matrix.hpp"

namespace normic {

/// U*A*V = D with U, V unimodular; D diagonal, nonnegative, with the
/// divisibility chain d1 | d2 | ... followed by zeros.
struct SmithForm {
    IntMatrix D, U, V;
};

/// A*U = H with U unimodular. Column-style Hermite form: zero columns first,
/// each nonzero column's pivot is its lowest nonzero entry, pivot rows
/// strictly increase left to right, pivots are positive, and in a pivot's row
/// the entries to the right are reduced into [0, pivot).
struct HermiteForm {
    IntMatrix H, U;
    std::size_t zero_cols = 0;
};

SmithForm snf(const IntMatrix& A);
HermiteForm hnf(const IntMatrix& A);

/// Basis of the integer kernel lattice {x : A*x = 0}, in column Hermite form.
/// Number of columns = cols(A) - rank(A).
IntMatrix kernel_basis(const IntMatrix& A);

std::size_t rank(const IntMatrix& A);

/// True iff v is an integer combination of the columns of L.
bool lattice_contains(const IntMatrix& L, const std::vector<Int>& v);

/// True iff every column of V is an integer combination of the columns of L.
/// A single Hermite form of L is shared across all membership tests.
bool lattice_contains_all(const IntMatrix& L, const IntMatrix& V);

/// One integer solution x of L*x = v, if any.
std::optional<std::vector<Int>> solve_lattice(const IntMatrix& L, const std::vector<Int>& v);

/// Basis of the saturation {v : n*v in span(L) for some n >= 1}.
IntMatrix saturation(const IntMatrix& L);

/// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMatrix& A);

/// Invariant factors of A with unit entries suppressed (the nontrivial
/// diagonal of the Smith form).
std::vector<Int> nontrivial_invariant_factors(const IntMatrix& A);

}  // namespace normic
