#ifndef INDEXP_GROUP_HPP
#define INDEXP_GROUP_HPP

#include "indexp/cyclotomic.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace indexp {

// One conjugacy class: representative = minimal member index.
struct ConjClass {
    int representative;
    std::vector<int> members; // sorted
    int size() const { return static_cast<int>(members.size()); }
};

// Conjugacy classes sorted by (size, minimal member); element -> class lookup.
struct ConjClassSet {
    std::vector<ConjClass> classes;
    std::vector<int> class_of;
    int count() const { return static_cast<int>(classes.size()); }
};

// Finite group on labels 0..n-1 with identity 0 and full multiplication
// table. Immutable after construction; conjugacy data is built eagerly.
class FiniteGroup {
public:
    static std::shared_ptr<const FiniteGroup>
    from_perm_generators(int degree, const std::vector<std::vector<int>>& generators,
                         int order_cap = kDefaultOrderCap);
    static std::shared_ptr<const FiniteGroup>
    from_cayley_table(const std::vector<std::vector<int>>& table, bool validate = true,
                      int order_cap = kDefaultOrderCap);

    static constexpr int kDefaultOrderCap = 5000;

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inverse(int a) const { return inverse_[a]; }
    int conjugate(int g, int a) const { return mul(mul(g, a), inverse(g)); } // g a g^-1
    int power(int a, long e) const;
    int element_order(int a) const { return element_order_[a]; }
    int exponent() const { return exponent_; }

    const ConjClassSet& classes() const { return classes_; }
    int class_of(int a) const { return classes_.class_of[a]; }

    bool has_permutations() const { return degree_ > 0; }
    int permutation_degree() const { return degree_; }
    const std::vector<int>& permutation(int a) const { return perms_[a]; }
    const std::vector<int>& generator_indices() const { return generators_; }

    // Index of a permutation given by its 0-based image vector, or -1.
    int element_from_permutation(const std::vector<int>& images) const;

private:
    FiniteGroup() = default;
    void finalize(); // inverses, orders, exponent, classes

    int n_ = 0;
    std::vector<int> table_; // row-major n x n
    std::vector<int> inverse_;
    std::vector<int> element_order_;
    int exponent_ = 1;
    ConjClassSet classes_;
    std::vector<int> generators_;
    int degree_ = 0;
    std::vector<std::vector<int>> perms_;
    std::map<std::vector<int>, int> perm_index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

const ConjClassSet& conjugacy_classes(const FiniteGroup& G);

// Subgroup with its own group structure; members are sorted parent indices,
// so sub-index i embeds as members[i].
struct Subgroup {
    GroupPtr parent;
    GroupPtr sub;
    std::vector<int> members;     // sub index -> parent index
    std::vector<int> parent_to_sub; // -1 outside

    int order() const { return sub->order(); }
    int to_parent(int i) const { return members[i]; }
    int from_parent(int g) const { return parent_to_sub[g]; }
    bool contains(int g) const { return parent_to_sub[g] >= 0; }
};

Subgroup subgroup(const GroupPtr& G, const std::vector<int>& generator_indices);

// The (G, H, p, x) setting: H normal of prime index, x a coset generator.
struct IndexPContext {
    GroupPtr G;
    Subgroup H;
    int p = 0;
    int x = 0;
    std::vector<int> transversal; // x^0 .. x^{p-1}
};

IndexPContext index_p_context(const GroupPtr& G, const Subgroup& H,
                              std::optional<int> x_hint = std::nullopt);

bool is_normal_subgroup(const Subgroup& H);

// Sparse exact element of the group algebra over the cyclotomic closure.
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(GroupPtr group) : group_(std::move(group)) {}

    const GroupPtr& group() const { return group_; }
    const std::map<int, CycNumber>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    CycNumber coeff(int g) const;
    void set(int g, const CycNumber& c);
    void add(int g, const CycNumber& c);

    bool is_central() const; // coefficients constant on conjugacy classes

    GroupAlgebraElement scaled(const CycNumber& c) const;

private:
    GroupPtr group_;
    std::map<int, CycNumber> coeffs_; // no explicit zeros
};

bool algebra_eq(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement algebra_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement algebra_sub(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement algebra_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement algebra_identity(const GroupPtr& G);

GroupAlgebraElement class_sum(const GroupPtr& G, int g);

// C(x)^p computed in F[G], checked central with support in H, re-expressed
// over H's own indices.
GroupAlgebraElement class_sum_pth_power(const IndexPContext& ctx);

// Embed an element of H's algebra into G's.
GroupAlgebraElement algebra_embed(const GroupAlgebraElement& a, const Subgroup& H);

// Class map g -> class(g^t); requires gcd(t, exponent) = 1 so it permutes.
std::vector<int> power_class_map(const FiniteGroup& G, long t);
// Same map without the unit restriction (used for indicators).
std::vector<int> class_power_map_any(const FiniteGroup& G, long t);

int group_exponent(const FiniteGroup& G);

// All normal subgroups of prime index: hyperplane preimages of the quotient
// by the subgroup generated by commutators and p-th powers, over each p.
std::vector<Subgroup> index_p_normal_subgroups(const GroupPtr& G);

} // namespace indexp

#endif
