#pragma once

#include <vector>

#include "normic/int_matrix.hpp"

namespace normic {

bool is_prime(int n);

/// The group G = (Z/p)^2 with fixed generators x, y. Elements are indexed by
/// exponent pairs (a, b) <-> x^a y^b, index = a*p + b.
class ElemAbelianGroup {
  public:
    explicit ElemAbelianGroup(int p);

    int p() const { return p_; }
    std::size_t order() const { return static_cast<std::size_t>(p_) * p_; }
    std::size_t index(int a, int b) const;

    /// Exponent of z_i for the image of x^a y^b under the i-th quotient map:
    /// i = 0 sends x -> 1, y -> z_0; otherwise x -> z_i, y -> z_i^i.
    int quotient_exponent(int i, int a, int b) const;

    std::size_t subgroup_count() const { return static_cast<std::size_t>(p_) + 1; }

    struct Subgroup {
        int index;                                 // 0..p
        std::pair<int, int> generator;             // exponent pair
        std::vector<std::pair<int, int>> elements; // all p elements
    };
    /// The p+1 order-p subgroups, G_i = ker(quotient map i).
    std::vector<Subgroup> subgroup_list() const;

  private:
    int p_;
};

/// Element of Z[G], coefficients indexed by the group elements of G.
class GroupRingElement {
  public:
    GroupRingElement(int p, std::vector<Int> coeff);
    static GroupRingElement zero(int p);
    static GroupRingElement one(int p);
    static GroupRingElement monomial(int p, int a, int b, const Int& c = 1);

    int p() const { return p_; }
    const std::vector<Int>& coeff() const { return coeff_; }

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;  // convolution over G
    bool operator==(const GroupRingElement& o) const {
        return p_ == o.p_ && coeff_ == o.coeff_;
    }

    Int augmentation() const;  // sum of coefficients

  private:
    int p_;
    std::vector<Int> coeff_;
};

enum class NormVariable { x, y };

/// The norm element v(t) = 1 + t + ... + t^(p-1) for t = x or y in Z[G].
GroupRingElement v_element(NormVariable var, int p);

/// The coset-module norm element 1 + z_i + ... + z_i^(p-1) as a coefficient
/// vector on the basis z_i^0 .. z_i^(p-1).
std::vector<Int> coset_norm_element(int p);

GroupRingElement x_minus_one(int p);
GroupRingElement y_minus_one(int p);

}  // namespace normic
