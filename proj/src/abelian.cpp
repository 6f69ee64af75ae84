#include "normic/abelian.hpp"

#include <sstream>

namespace normic {

std::string GroupInvariants::to_string() const {
    std::ostringstream os;
    os << "Z^" << free_rank;
    for (const Int& d : torsion) os << " + Z/" << d;
    return os.str();
}

GroupInvariants elementary_invariants(const Int& p, std::size_t k) {
    GroupInvariants g;
    g.torsion.assign(k, p);
    return g;
}

std::string AbGroup::to_text() const {
    std::ostringstream os;
    os << ambient_ << '\n' << relations_.to_text();
    return os.str();
}

GroupInvariants invariants(const AbGroup& g) {
    SmithForm s = snf(g.relations());
    GroupInvariants out;
    const std::size_t mn = std::min(s.D.rows(), s.D.cols());
    std::size_t r = 0;
    for (std::size_t i = 0; i < mn; ++i) {
        if (s.D(i, i) == 0) continue;
        ++r;
        if (s.D(i, i) > 1) out.torsion.push_back(s.D(i, i));
    }
    out.free_rank = g.ambient_rank() - r;
    return out;
}

bool is_isomorphic(const AbGroup& a, const AbGroup& b) {
    return invariants(a) == invariants(b);
}

AbGroup trivial_group() { return AbGroup(0); }

AbGroup free_group(std::size_t rank) { return AbGroup(rank); }

AbGroup cyclic_group(const Int& n) {
    IntMatrix rel(1, 1);
    rel(0, 0) = n;
    return n == 0 ? AbGroup(1) : AbGroup(1, rel);
}

AbHom make_hom(const AbGroup& dom, const AbGroup& cod, const IntMatrix& m) {
    if (m.rows() != cod.ambient_rank() || m.cols() != dom.ambient_rank())
        throw std::invalid_argument("hom matrix shape mismatch");
    const IntMatrix& rel = dom.relations();
    if (rel.cols() > 0) {
        IntMatrix img = m.mul(rel);
        if (!lattice_contains_all(cod.relations(), img)) {
            for (std::size_t c = 0; c < img.cols(); ++c)
                if (!lattice_contains(cod.relations(), img.col(c)))
                    throw IllDefinedHom(c);
        }
    }
    return AbHom(dom, cod, m);
}

AbHom identity_hom(const AbGroup& g) {
    return AbHom(g, g, IntMatrix::identity(g.ambient_rank()));
}

AbHom zero_hom(const AbGroup& dom, const AbGroup& cod) {
    return AbHom(dom, cod, IntMatrix(cod.ambient_rank(), dom.ambient_rank()));
}

AbHom compose(const AbHom& g, const AbHom& f) {
    if (g.domain().ambient_rank() != f.codomain().ambient_rank())
        throw std::invalid_argument("compose: shapes do not match");
    return AbHom(f.domain(), g.codomain(), g.matrix().mul(f.matrix()));
}

bool homs_equal(const AbHom& f, const AbHom& g) {
    if (f.domain().ambient_rank() != g.domain().ambient_rank() ||
        f.codomain().ambient_rank() != g.codomain().ambient_rank())
        return false;
    IntMatrix diff = f.matrix().sub(g.matrix());
    return lattice_contains_all(f.codomain().relations(), diff);
}

bool is_zero_hom(const AbHom& h) {
    return lattice_contains_all(h.codomain().relations(), h.matrix());
}

KernelResult kernel(const AbHom& h) {
    // pairs (x, y) with  M x + R_cod y = 0  project to the preimage lattice
    const std::size_t n = h.domain().ambient_rank();
    IntMatrix stacked = h.matrix().hstack(h.codomain().relations());
    IntMatrix pairs = kernel_basis(stacked);
    IntMatrix X = pairs.top_rows(n);
    // presentation of the kernel: coefficient vectors c with X c in span(R_dom)
    IntMatrix relpairs = kernel_basis(X.hstack(h.domain().relations()));
    IntMatrix Krel = relpairs.top_rows(X.cols());
    AbGroup K(X.cols(), Krel);
    return {K, AbHom(K, h.domain(), X)};
}

CokernelResult cokernel(const AbHom& h) {
    AbGroup C(h.codomain().ambient_rank(), h.codomain().relations().hstack(h.matrix()));
    return {C, AbHom(h.codomain(), C, IntMatrix::identity(C.ambient_rank()))};
}

AbGroup image(const AbHom& h) {
    // domain modulo the preimage of the codomain relation lattice
    const std::size_t n = h.domain().ambient_rank();
    IntMatrix pre = kernel_basis(h.matrix().hstack(h.codomain().relations()));
    return AbGroup(n, pre.top_rows(n));
}

bool is_injective(const AbHom& h) {
    return invariants(kernel(h).group).is_trivial();
}

bool is_surjective(const AbHom& h) {
    return invariants(cokernel(h).group).is_trivial();
}

bool is_exact_at(const AbHom& h1, const AbHom& h2) {
    if (h1.codomain().ambient_rank() != h2.domain().ambient_rank())
        throw std::invalid_argument("is_exact_at: maps do not compose");
    if (!is_zero_hom(compose(h2, h1))) return false;
    const AbGroup& B = h2.domain();
    // image sublattice (with B's relations adjoined)
    IntMatrix img = h1.matrix().hstack(B.relations());
    // kernel sublattice of h2 (contains B's relations by well-definedness)
    IntMatrix pre = kernel_basis(h2.matrix().hstack(h2.codomain().relations()));
    IntMatrix ker = pre.top_rows(B.ambient_rank()).hstack(B.relations());
    return lattice_contains_all(img, ker) && lattice_contains_all(ker, img);
}

DirectSum direct_sum(const std::vector<AbGroup>& parts) {
    std::size_t n = 0, rc = 0;
    for (const AbGroup& g : parts) {
        n += g.ambient_rank();
        rc += g.relations().cols();
    }
    IntMatrix rel(n, rc);
    std::size_t ro = 0, co = 0;
    for (const AbGroup& g : parts) {
        for (std::size_t i = 0; i < g.ambient_rank(); ++i)
            for (std::size_t j = 0; j < g.relations().cols(); ++j)
                rel(ro + i, co + j) = g.relations()(i, j);
        ro += g.ambient_rank();
        co += g.relations().cols();
    }
    DirectSum out{AbGroup(n, rel), {}, {}};
    std::size_t off = 0;
    for (const AbGroup& g : parts) {
        IntMatrix inj(n, g.ambient_rank());
        IntMatrix prj(g.ambient_rank(), n);
        for (std::size_t i = 0; i < g.ambient_rank(); ++i) {
            inj(off + i, i) = 1;
            prj(i, off + i) = 1;
        }
        out.injections.push_back(make_hom(g, out.sum, inj));
        out.projections.push_back(make_hom(out.sum, g, prj));
        off += g.ambient_rank();
    }
    return out;
}

bool square_commutes(const AbHom& top, const AbHom& bottom, const AbHom& left,
                     const AbHom& right) {
    if (top.domain().ambient_rank() != left.domain().ambient_rank() ||
        right.domain().ambient_rank() != top.codomain().ambient_rank() ||
        bottom.domain().ambient_rank() != left.codomain().ambient_rank() ||
        right.codomain().ambient_rank() != bottom.codomain().ambient_rank())
        throw std::invalid_argument("square_commutes: shapes do not compose");
    return homs_equal(compose(right, top), compose(bottom, left));
}

}  // namespace normic
