#pragma once

#include <optional>

#include "normic/abelian.hpp"
#include "normic/group_ring.hpp"

namespace normic {

/// A finitely generated abelian group with an action of G = (Z/p)^2 given by
/// matrices for the two generators. The matrices act on the ambient lattice
/// and must descend to the quotient, have order p there, and commute.
struct GMod {
    int p = 0;
    AbGroup underlying;
    IntMatrix action_x, action_y;
};

/// Certifies the GMod invariants on the quotient; throws std::runtime_error
/// with a description when one fails.
void certify_gmod(const GMod& m);

/// True iff h commutes with the x- and y-actions of the two modules,
/// as maps on the quotients.
bool check_equivariant(const AbHom& h, const GMod& dom, const GMod& cod);

/// An AbHom certified to be G-equivariant between two GMods.
struct EquivariantHom {
    AbHom hom;
};
EquivariantHom make_equivariant(const GMod& dom, const GMod& cod, const IntMatrix& m);

/// Z[G] with the regular (translation) action; free of rank p^2.
GMod regular_module(int p);

/// Z[H_i] = Z[z_i]/(z_i^p - 1) on the power basis, G acting through the i-th
/// quotient map (x -> z_i, y -> z_i^i; for i = 0: x -> 1, y -> z_0).
GMod coset_module(int p, int i);

/// The direct sum of all p+1 coset modules, in index order.
GMod coset_module_sum(int p);

/// Z[z_i]/(v(z_i)): the coset module modulo its norm element.
GMod coset_norm_quotient(int p, int i);

/// The quotient-and-stack map Z[G] -> (+)_i Z[H_i].
EquivariantHom rho_hat(int p);

struct DiagonalQuotient {
    GMod quotient;     // T-hat (from Z[G]) or S-hat (from the coset sum)
    AbHom projection;  // from the input module
    AbHom embedding;   // Z -> input, 1 -> sum of the canonical basis
};
/// Quotient by the diagonally embedded Z (the norm character).
DiagonalQuotient diagonal_quotient(const GMod& m);

/// The induced map T-hat -> S-hat on the diagonal quotients.
EquivariantHom alpha_hat(int p);

/// The explicit p = 2 lattice maps: the middle vertical map
/// (x1,x2,x3,x4) -> (x1+x2, x3+x4, x1+x3, x2+x4, x1+x4, x2+x3) on the bases
/// (1, tau, sigma, tau*sigma) and (1,sigma' | 1,tau' | 1,gamma), and the map
/// (y1..y6) -> (y1+y2-y3-y4, y1+y2-y5-y6) descended to S-hat -> Z^2.
AbHom middle_vertical_p2();
EquivariantHom beta_hat_p2();

/// The p = 2 module carrying the explicit bases above (identical to the
/// canonical T-hat / S-hat up to the recorded factor reordering).
GMod paper_basis_that_p2();
GMod paper_basis_shat_p2();

/// Z[G]/(ideal generated by gens, plus the scalar m if given), with the
/// inherited action. Relations are all G-translates of each generator.
GMod ideal_quotient_module(int p, const std::vector<GroupRingElement>& gens,
                           const std::optional<Int>& m = std::nullopt);

/// The maps through the i-th coset algebra:
///   h: Z[H_i] -> Z[z_i]/(v(z_i)) x Z          (pair of reductions)
///   f: Z[G]   -> Z[z_i]/(v(z_i)) x Z          (h after the quotient map)
///   g: Z[G]   -> Z[z_i]/(v(z_i))              (first component)
///   j: Z[G]   -> Z                            (augmentation; independent of i)
struct CosetSplitMaps {
    EquivariantHom h, f, g;
    EquivariantHom j;
};
CosetSplitMaps maps_h_f_g_j(int p, int i);

/// A GMod with trivial G-action.
GMod trivial_action_module(AbGroup g, int p);

/// Direct sum of GMods (block actions).
GMod gmod_direct_sum(const std::vector<GMod>& parts);

}  // namespace normic
