#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "normic/normal_forms.hpp"

namespace normic {

/// Isomorphism class of a finitely generated abelian group: free rank plus
/// the invariant factor chain d1 | d2 | ... with trivial factors suppressed.
struct GroupInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const GroupInvariants& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const GroupInvariants& o) const { return !(*this == o); }
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    Int torsion_order() const {
        Int t = 1;
        for (const Int& d : torsion) t *= d;
        return t;
    }
    std::string to_string() const;
};

/// Elementary abelian invariants (Z/p)^k.
GroupInvariants elementary_invariants(const Int& p, std::size_t k);

/// Finitely generated abelian group Z^n / columnspan(relations).
class AbGroup {
  public:
    AbGroup() = default;
    explicit AbGroup(std::size_t ambient_rank)
        : ambient_(ambient_rank), relations_(ambient_rank, 0) {}
    AbGroup(std::size_t ambient_rank, IntMatrix relations)
        : ambient_(ambient_rank), relations_(std::move(relations)) {
        if (relations_.rows() != ambient_)
            throw std::invalid_argument("relation matrix must have ambient_rank rows");
    }

    std::size_t ambient_rank() const { return ambient_; }
    const IntMatrix& relations() const { return relations_; }

    std::string to_text() const;  // ambient_rank + relation matrix

  private:
    std::size_t ambient_ = 0;
    IntMatrix relations_;
};

GroupInvariants invariants(const AbGroup& g);
bool is_isomorphic(const AbGroup& a, const AbGroup& b);

AbGroup trivial_group();
AbGroup free_group(std::size_t rank);
AbGroup cyclic_group(const Int& n);  // Z/n (n = 0 gives Z)

/// Homomorphism between presented groups, as a matrix on the ambient lattices.
class AbHom {
  public:
    AbHom() = default;
    AbHom(AbGroup dom, AbGroup cod, IntMatrix m)
        : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(m)) {
        if (matrix_.rows() != cod_.ambient_rank() || matrix_.cols() != dom_.ambient_rank())
            throw std::invalid_argument("hom matrix shape mismatch");
    }

    const AbGroup& domain() const { return dom_; }
    const AbGroup& codomain() const { return cod_; }
    const IntMatrix& matrix() const { return matrix_; }

  private:
    AbGroup dom_, cod_;
    IntMatrix matrix_;
};

struct IllDefinedHom : std::runtime_error {
    std::size_t offending_column;
    explicit IllDefinedHom(std::size_t col)
        : std::runtime_error("hom not well-defined: relation column " + std::to_string(col) +
                             " does not map into the codomain relation lattice"),
          offending_column(col) {}
};

/// Builds the hom and certifies well-definedness: every domain relation column
/// must map into the codomain relation lattice. Throws IllDefinedHom otherwise.
AbHom make_hom(const AbGroup& dom, const AbGroup& cod, const IntMatrix& m);

AbHom identity_hom(const AbGroup& g);
AbHom zero_hom(const AbGroup& dom, const AbGroup& cod);
AbHom compose(const AbHom& g, const AbHom& f);  // g after f

/// Equality as maps on the quotients (difference lands in codomain relations).
bool homs_equal(const AbHom& f, const AbHom& g);
bool is_zero_hom(const AbHom& h);

struct KernelResult {
    AbGroup group;
    AbHom inclusion;  // into the domain
};
KernelResult kernel(const AbHom& h);

struct CokernelResult {
    AbGroup group;
    AbHom projection;  // from the codomain
};
CokernelResult cokernel(const AbHom& h);

/// Abstract isomorphism class of the image (the domain modulo the kernel).
AbGroup image(const AbHom& h);

bool is_injective(const AbHom& h);
bool is_surjective(const AbHom& h);

/// Exactness at the middle of A --h1--> B --h2--> C: h2 o h1 = 0 and the
/// image of h1 equals the kernel of h2 as subgroups of B (mutual membership
/// of generators with B's relations adjoined).
bool is_exact_at(const AbHom& h1, const AbHom& h2);

struct DirectSum {
    AbGroup sum;
    std::vector<AbHom> injections;
    std::vector<AbHom> projections;
};
DirectSum direct_sum(const std::vector<AbGroup>& parts);

/// True iff right o top = bottom o left as maps on the quotients.
bool square_commutes(const AbHom& top, const AbHom& bottom, const AbHom& left,
                     const AbHom& right);

}  // namespace normic
