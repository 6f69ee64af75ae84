#include "normic/gmodule.hpp"

#include <stdexcept>

namespace normic {

namespace {

// does A map the relation lattice into itself / act as id on the quotient?
bool descends(const IntMatrix& A, const AbGroup& g) {
    if (g.relations().cols() == 0) return true;
    return lattice_contains_all(g.relations(), A.mul(g.relations()));
}

bool acts_as_identity(const IntMatrix& A, const AbGroup& g) {
    IntMatrix diff = A.sub(IntMatrix::identity(g.ambient_rank()));
    return lattice_contains_all(g.relations(), diff);
}

IntMatrix matrix_power(const IntMatrix& A, int e) {
    IntMatrix r = IntMatrix::identity(A.rows());
    for (int k = 0; k < e; ++k) r = r.mul(A);
    return r;
}

}  // namespace

void certify_gmod(const GMod& m) {
    const std::size_t n = m.underlying.ambient_rank();
    if (m.action_x.rows() != n || m.action_x.cols() != n ||
        m.action_y.rows() != n || m.action_y.cols() != n)
        throw std::runtime_error("action matrix shape mismatch");
    if (!descends(m.action_x, m.underlying) || !descends(m.action_y, m.underlying))
        throw std::runtime_error("action does not preserve the relation lattice");
    if (!acts_as_identity(matrix_power(m.action_x, m.p), m.underlying))
        throw std::runtime_error("x-action does not have order dividing p");
    if (!acts_as_identity(matrix_power(m.action_y, m.p), m.underlying))
        throw std::runtime_error("y-action does not have order dividing p");
    IntMatrix comm = m.action_x.mul(m.action_y).sub(m.action_y.mul(m.action_x));
    if (!lattice_contains_all(m.underlying.relations(), comm))
        throw std::runtime_error("actions do not commute on the quotient");
}

bool check_equivariant(const AbHom& h, const GMod& dom, const GMod& cod) {
    IntMatrix dx = h.matrix().mul(dom.action_x).sub(cod.action_x.mul(h.matrix()));
    IntMatrix dy = h.matrix().mul(dom.action_y).sub(cod.action_y.mul(h.matrix()));
    return lattice_contains_all(cod.underlying.relations(), dx) &&
           lattice_contains_all(cod.underlying.relations(), dy);
}

EquivariantHom make_equivariant(const GMod& dom, const GMod& cod, const IntMatrix& m) {
    AbHom h = make_hom(dom.underlying, cod.underlying, m);
    if (!check_equivariant(h, dom, cod))
        throw std::runtime_error("hom is not equivariant");
    return EquivariantHom{std::move(h)};
}

GMod regular_module(int p) {
    ElemAbelianGroup g(p);
    const std::size_t n = g.order();
    IntMatrix ax(n, n), ay(n, n);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            ax(g.index(a + 1, b), g.index(a, b)) = 1;
            ay(g.index(a, b + 1), g.index(a, b)) = 1;
        }
    return GMod{p, AbGroup(n), std::move(ax), std::move(ay)};
}

namespace {

IntMatrix shift_matrix(int p, int s) {
    IntMatrix m(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) m(static_cast<std::size_t>((k + s) % p), static_cast<std::size_t>(k)) = 1;
    return m;
}

}  // namespace

GMod coset_module(int p, int i) {
    ElemAbelianGroup g(p);
    int sx = g.quotient_exponent(i, 1, 0);
    int sy = g.quotient_exponent(i, 0, 1);
    return GMod{p, AbGroup(static_cast<std::size_t>(p)), shift_matrix(p, sx), shift_matrix(p, sy)};
}

GMod gmod_direct_sum(const std::vector<GMod>& parts) {
    std::vector<AbGroup> groups;
    groups.reserve(parts.size());
    for (const GMod& m : parts) groups.push_back(m.underlying);
    DirectSum ds = direct_sum(groups);
    const std::size_t n = ds.sum.ambient_rank();
    IntMatrix ax(n, n), ay(n, n);
    std::size_t off = 0;
    for (const GMod& m : parts) {
        const std::size_t k = m.underlying.ambient_rank();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                ax(off + i, off + j) = m.action_x(i, j);
                ay(off + i, off + j) = m.action_y(i, j);
            }
        off += k;
    }
    int p = parts.empty() ? 2 : parts.front().p;
    return GMod{p, ds.sum, std::move(ax), std::move(ay)};
}

GMod coset_module_sum(int p) {
    std::vector<GMod> parts;
    for (int i = 0; i <= p; ++i) parts.push_back(coset_module(p, i));
    return gmod_direct_sum(parts);
}

GMod coset_norm_quotient(int p, int i) {
    GMod m = coset_module(p, i);
    IntMatrix rel = IntMatrix::ones_column(static_cast<std::size_t>(p));
    return GMod{p, AbGroup(static_cast<std::size_t>(p), rel), m.action_x, m.action_y};
}

EquivariantHom rho_hat(int p) {
    ElemAbelianGroup g(p);
    GMod dom = regular_module(p);
    GMod cod = coset_module_sum(p);
    const std::size_t n = g.order();
    IntMatrix m(static_cast<std::size_t>(p) * (p + 1), n);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            std::size_t c = g.index(a, b);
            for (int i = 0; i <= p; ++i)
                m(static_cast<std::size_t>(i) * p + g.quotient_exponent(i, a, b), c) = 1;
        }
    return make_equivariant(dom, cod, m);
}

DiagonalQuotient diagonal_quotient(const GMod& m) {
    const std::size_t n = m.underlying.ambient_rank();
    IntMatrix ones = IntMatrix::ones_column(n);
    AbHom embed = make_hom(free_group(1), m.underlying, ones);
    AbGroup q(n, m.underlying.relations().hstack(ones));
    GMod quotient{m.p, q, m.action_x, m.action_y};
    certify_gmod(quotient);
    AbHom proj = make_hom(m.underlying, q, IntMatrix::identity(n));
    return {std::move(quotient), std::move(proj), std::move(embed)};
}

EquivariantHom alpha_hat(int p) {
    EquivariantHom rho = rho_hat(p);
    DiagonalQuotient t = diagonal_quotient(regular_module(p));
    DiagonalQuotient s = diagonal_quotient(coset_module_sum(p));
    return make_equivariant(t.quotient, s.quotient, rho.hom.matrix());
}

GMod paper_basis_that_p2() {
    DiagonalQuotient t = diagonal_quotient(regular_module(2));
    return t.quotient;  // basis order (1, y, x, xy) = (1, tau, sigma, tau*sigma)
}

GMod paper_basis_shat_p2() {
    // factor order (i = 2, 0, 1) so the blocks read (1,sigma' | 1,tau' | 1,gamma)
    GMod reordered = gmod_direct_sum({coset_module(2, 2), coset_module(2, 0), coset_module(2, 1)});
    DiagonalQuotient s = diagonal_quotient(reordered);
    return s.quotient;
}

AbHom middle_vertical_p2() {
    IntMatrix m = IntMatrix::from_rows({{1, 1, 0, 0},
                                        {0, 0, 1, 1},
                                        {1, 0, 1, 0},
                                        {0, 1, 0, 1},
                                        {1, 0, 0, 1},
                                        {0, 1, 1, 0}});
    return make_hom(free_group(4), free_group(6), m);
}

EquivariantHom beta_hat_p2() {
    GMod shat = paper_basis_shat_p2();
    IntMatrix m = IntMatrix::from_rows({{1, 1, -1, -1, 0, 0},
                                        {1, 1, 0, 0, -1, -1}});
    GMod z2 = trivial_action_module(free_group(2), 2);
    return make_equivariant(shat, z2, m);
}

GMod trivial_action_module(AbGroup g, int p) {
    IntMatrix id = IntMatrix::identity(g.ambient_rank());
    return GMod{p, std::move(g), id, id};
}

GMod ideal_quotient_module(int p, const std::vector<GroupRingElement>& gens,
                           const std::optional<Int>& m) {
    GMod reg = regular_module(p);
    ElemAbelianGroup g(p);
    const std::size_t n = g.order();
    std::size_t cols = gens.size() * n + (m ? n : 0);
    IntMatrix rel(n, cols);
    std::size_t c = 0;
    for (const GroupRingElement& e : gens) {
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                // translate: column = coefficients of x^a y^b * e
                for (int a2 = 0; a2 < p; ++a2)
                    for (int b2 = 0; b2 < p; ++b2) {
                        const Int& v = e.coeff()[g.index(a2, b2)];
                        if (v != 0) rel(g.index(a + a2, b + b2), c) += v;
                    }
                ++c;
            }
    }
    if (m) {
        for (std::size_t k = 0; k < n; ++k) rel(k, c + k) = *m;
        c += n;
    }
    GMod out{p, AbGroup(n, std::move(rel)), reg.action_x, reg.action_y};
    certify_gmod(out);
    return out;
}

CosetSplitMaps maps_h_f_g_j(int p, int i) {
    ElemAbelianGroup g(p);
    GMod zh = coset_module(p, i);
    GMod vq = coset_norm_quotient(p, i);
    GMod zt = trivial_action_module(free_group(1), p);
    GMod cod = gmod_direct_sum({vq, zt});

    IntMatrix hm(static_cast<std::size_t>(p) + 1, static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) {
        hm(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = 1;
        hm(static_cast<std::size_t>(p), static_cast<std::size_t>(k)) = 1;
    }
    EquivariantHom h = make_equivariant(zh, cod, hm);

    GMod reg = regular_module(p);
    const std::size_t n = g.order();
    IntMatrix qm(static_cast<std::size_t>(p), n);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            qm(static_cast<std::size_t>(g.quotient_exponent(i, a, b)), g.index(a, b)) = 1;
    IntMatrix fm = hm.mul(qm);
    EquivariantHom f = make_equivariant(reg, cod, fm);
    EquivariantHom gq = make_equivariant(reg, vq, qm);
    IntMatrix jm(1, n);
    for (std::size_t k = 0; k < n; ++k) jm(0, k) = 1;
    EquivariantHom j = make_equivariant(reg, zt, jm);
    return {std::move(h), std::move(f), std::move(gq), std::move(j)};
}

}  // namespace normic
