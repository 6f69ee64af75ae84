#include "normic/group_ring.hpp"

#include <stdexcept>

namespace normic {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ElemAbelianGroup::ElemAbelianGroup(int p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

std::size_t ElemAbelianGroup::index(int a, int b) const {
    a %= p_; if (a < 0) a += p_;
    b %= p_; if (b < 0) b += p_;
    return static_cast<std::size_t>(a) * p_ + b;
}

int ElemAbelianGroup::quotient_exponent(int i, int a, int b) const {
    if (i < 0 || i > p_) throw std::out_of_range("subgroup index out of range");
    long long e = (i == 0) ? b : a + static_cast<long long>(i) * b;
    e %= p_; if (e < 0) e += p_;
    return static_cast<int>(e);
}

std::vector<ElemAbelianGroup::Subgroup> ElemAbelianGroup::subgroup_list() const {
    std::vector<Subgroup> out;
    for (int i = 0; i <= p_; ++i) {
        Subgroup s;
        s.index = i;
        for (int a = 0; a < p_; ++a)
            for (int b = 0; b < p_; ++b)
                if (quotient_exponent(i, a, b) == 0) s.elements.emplace_back(a, b);
        // generator: the first nonidentity element in (a, b) order
        s.generator = s.elements.size() > 1 ? s.elements[1] : std::make_pair(0, 0);
        for (const auto& e : s.elements)
            if (e != std::make_pair(0, 0)) { s.generator = e; break; }
        out.push_back(std::move(s));
    }
    return out;
}

GroupRingElement::GroupRingElement(int p, std::vector<Int> coeff)
    : p_(p), coeff_(std::move(coeff)) {
    if (coeff_.size() != static_cast<std::size_t>(p) * p)
        throw std::invalid_argument("coefficient vector must have p^2 entries");
}

GroupRingElement GroupRingElement::zero(int p) {
    return GroupRingElement(p, std::vector<Int>(static_cast<std::size_t>(p) * p));
}

GroupRingElement GroupRingElement::one(int p) { return monomial(p, 0, 0); }

GroupRingElement GroupRingElement::monomial(int p, int a, int b, const Int& c) {
    ElemAbelianGroup g(p);
    std::vector<Int> v(g.order());
    v[g.index(a, b)] = c;
    return GroupRingElement(p, std::move(v));
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed group rings");
    std::vector<Int> v(coeff_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff_[i] + o.coeff_[i];
    return GroupRingElement(p_, std::move(v));
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed group rings");
    std::vector<Int> v(coeff_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff_[i] - o.coeff_[i];
    return GroupRingElement(p_, std::move(v));
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed group rings");
    ElemAbelianGroup g(p_);
    std::vector<Int> v(coeff_.size());
    for (int a1 = 0; a1 < p_; ++a1)
        for (int b1 = 0; b1 < p_; ++b1) {
            const Int& c1 = coeff_[g.index(a1, b1)];
            if (c1 == 0) continue;
            for (int a2 = 0; a2 < p_; ++a2)
                for (int b2 = 0; b2 < p_; ++b2) {
                    const Int& c2 = o.coeff_[g.index(a2, b2)];
                    if (c2 != 0) v[g.index(a1 + a2, b1 + b2)] += c1 * c2;
                }
        }
    return GroupRingElement(p_, std::move(v));
}

Int GroupRingElement::augmentation() const {
    Int s = 0;
    for (const Int& c : coeff_) s += c;
    return s;
}

GroupRingElement v_element(NormVariable var, int p) {
    GroupRingElement e = GroupRingElement::zero(p);
    std::vector<Int> v = e.coeff();
    ElemAbelianGroup g(p);
    for (int k = 0; k < p; ++k)
        v[var == NormVariable::x ? g.index(k, 0) : g.index(0, k)] = 1;
    return GroupRingElement(p, std::move(v));
}

std::vector<Int> coset_norm_element(int p) {
    return std::vector<Int>(static_cast<std::size_t>(p), Int(1));
}

GroupRingElement x_minus_one(int p) {
    return GroupRingElement::monomial(p, 1, 0) - GroupRingElement::one(p);
}

GroupRingElement y_minus_one(int p) {
    return GroupRingElement::monomial(p, 0, 1) - GroupRingElement::one(p);
}

}  // namespace normic
