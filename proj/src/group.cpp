#include "indexp/group.hpp"

#include "indexp/errors.hpp"
#include "indexp/numtheory.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace indexp {

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    // (a*b)(i) = a[b[i]]
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

} // namespace

std::shared_ptr<const FiniteGroup>
FiniteGroup::from_perm_generators(int degree, const std::vector<std::vector<int>>& generators,
                                  int order_cap) {
    check_input(degree >= 1, "permutation degree must be positive");
    std::vector<std::vector<int>> gens;
    for (const auto& g : generators) {
        check_input(static_cast<int>(g.size()) == degree,
                    "generator length does not match degree");
        std::vector<bool> seen(degree, false);
        for (int image : g) {
            check_input(image >= 0 && image < degree && !seen[image],
                        "generator is not a bijection");
            seen[image] = true;
        }
        gens.push_back(g);
    }

    auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    G->degree_ = degree;
    std::vector<int> identity(degree);
    for (int i = 0; i < degree; ++i) identity[i] = i;

    // Breadth-first closure in deterministic generator order.
    G->perms_.push_back(identity);
    G->perm_index_[identity] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            std::vector<int> prod = compose(G->perms_[cur], g);
            auto it = G->perm_index_.find(prod);
            if (it == G->perm_index_.end()) {
                check_input(static_cast<int>(G->perms_.size()) < order_cap,
                            "group order exceeds cap (" + std::to_string(order_cap) + ")");
                int idx = static_cast<int>(G->perms_.size());
                G->perm_index_[prod] = idx;
                G->perms_.push_back(std::move(prod));
                queue.push_back(idx);
            }
        }
    }
    G->n_ = static_cast<int>(G->perms_.size());
    for (const auto& g : gens) G->generators_.push_back(G->perm_index_.at(g));

    G->table_.assign(static_cast<std::size_t>(G->n_) * G->n_, 0);
    for (int a = 0; a < G->n_; ++a)
        for (int b = 0; b < G->n_; ++b)
            G->table_[static_cast<std::size_t>(a) * G->n_ + b] =
                G->perm_index_.at(compose(G->perms_[a], G->perms_[b]));
    G->finalize();
    return G;
}

std::shared_ptr<const FiniteGroup>
FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table, bool validate,
                               int order_cap) {
    int n = static_cast<int>(table.size());
    check_input(n >= 1, "empty multiplication table");
    check_input(n <= order_cap, "group order exceeds cap (" + std::to_string(order_cap) + ")");
    for (const auto& row : table) {
        check_input(static_cast<int>(row.size()) == n, "multiplication table is not square");
        for (int v : row) check_input(v >= 0 && v < n, "table entry out of range");
    }
    if (validate) {
        for (int j = 0; j < n; ++j)
            check_input(table[0][j] == j && table[j][0] == j, "element 0 is not the identity");
        // Latin property: rows and columns are bijections.
        for (int i = 0; i < n; ++i) {
            std::vector<bool> row_seen(n, false), col_seen(n, false);
            for (int j = 0; j < n; ++j) {
                check_input(!row_seen[table[i][j]], "row " + std::to_string(i) + " repeats");
                row_seen[table[i][j]] = true;
                check_input(!col_seen[table[j][i]], "column " + std::to_string(i) + " repeats");
                col_seen[table[j][i]] = true;
            }
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    check_input(table[table[a][b]][c] == table[a][table[b][c]],
                                "table is not associative at (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")");
        for (int a = 0; a < n; ++a) {
            bool has_inverse = false;
            for (int b = 0; b < n; ++b)
                if (table[a][b] == 0 && table[b][a] == 0) has_inverse = true;
            check_input(has_inverse, "element " + std::to_string(a) + " has no inverse");
        }
    }
    auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    G->n_ = n;
    G->table_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) G->table_[static_cast<std::size_t>(a) * n + b] = table[a][b];
    for (int a = 1; a < n; ++a) G->generators_.push_back(a);
    G->finalize();
    return G;
}

void FiniteGroup::finalize() {
    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) {
                inverse_[a] = b;
                break;
            }
    for (int a = 0; a < n_; ++a) check_internal(inverse_[a] >= 0, "missing inverse");

    element_order_.assign(n_, 1);
    exponent_ = 1;
    for (int a = 0; a < n_; ++a) {
        int ord = 1, cur = a;
        while (cur != 0) {
            cur = mul(cur, a);
            ++ord;
        }
        element_order_[a] = ord;
        exponent_ = static_cast<int>(lcm_long(exponent_, ord));
    }

    // Conjugacy classes, sorted by (size, minimal member).
    std::vector<bool> seen(n_, false);
    std::vector<ConjClass> classes;
    for (int a = 0; a < n_; ++a) {
        if (seen[a]) continue;
        std::set<int> orbit;
        std::deque<int> queue{a};
        orbit.insert(a);
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int g = 0; g < n_; ++g) {
                int c = conjugate(g, cur);
                if (orbit.insert(c).second) queue.push_back(c);
            }
        }
        ConjClass cls;
        cls.members.assign(orbit.begin(), orbit.end());
        cls.representative = cls.members.front();
        for (int x : cls.members) seen[x] = true;
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.representative < b.representative;
    });
    classes_.classes = std::move(classes);
    classes_.class_of.assign(n_, -1);
    for (int c = 0; c < classes_.count(); ++c)
        for (int g : classes_.classes[c].members) classes_.class_of[g] = c;
}

int FiniteGroup::power(int a, long e) const {
    int ord = element_order_[a];
    long r = e % ord;
    if (r < 0) r += ord;
    int result = 0;
    for (long i = 0; i < r; ++i) result = mul(result, a);
    return result;
}

int FiniteGroup::element_from_permutation(const std::vector<int>& images) const {
    auto it = perm_index_.find(images);
    return it == perm_index_.end() ? -1 : it->second;
}

const ConjClassSet& conjugacy_classes(const FiniteGroup& G) { return G.classes(); }

int group_exponent(const FiniteGroup& G) { return G.exponent(); }

Subgroup subgroup(const GroupPtr& G, const std::vector<int>& generator_indices) {
    for (int g : generator_indices)
        check_input(g >= 0 && g < G->order(), "subgroup generator index out of range");
    std::set<int> members{0};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int g : generator_indices) {
            int prod = G->mul(cur, g);
            if (members.insert(prod).second) queue.push_back(prod);
        }
    }
    Subgroup H;
    H.parent = G;
    H.members.assign(members.begin(), members.end());
    H.parent_to_sub.assign(G->order(), -1);
    for (std::size_t i = 0; i < H.members.size(); ++i)
        H.parent_to_sub[H.members[i]] = static_cast<int>(i);
    int h = static_cast<int>(H.members.size());
    std::vector<std::vector<int>> table(h, std::vector<int>(h));
    for (int a = 0; a < h; ++a)
        for (int b = 0; b < h; ++b) {
            int prod = G->mul(H.members[a], H.members[b]);
            int idx = H.parent_to_sub[prod];
            check_internal(idx >= 0, "subgroup closure violated");
            table[a][b] = idx;
        }
    H.sub = FiniteGroup::from_cayley_table(table, /*validate=*/false);
    return H;
}

bool is_normal_subgroup(const Subgroup& H) {
    const FiniteGroup& G = *H.parent;
    for (int g = 0; g < G.order(); ++g)
        for (int m : H.members)
            if (!H.contains(G.conjugate(g, m))) return false;
    return true;
}

IndexPContext index_p_context(const GroupPtr& G, const Subgroup& H, std::optional<int> x_hint) {
    check_input(H.parent.get() == G.get(), "subgroup does not belong to the group");
    check_input(G->order() % H.order() == 0, "subgroup order does not divide group order");
    int index = G->order() / H.order();
    check_input(is_prime(index), "subgroup index " + std::to_string(index) + " is not prime");
    check_input(is_normal_subgroup(H), "subgroup is not normal");

    IndexPContext ctx;
    ctx.G = G;
    ctx.H = H;
    ctx.p = index;
    if (x_hint.has_value()) {
        check_input(*x_hint >= 0 && *x_hint < G->order(), "x out of range");
        check_input(!H.contains(*x_hint), "x lies in the subgroup");
        ctx.x = *x_hint;
    } else {
        int x = -1;
        for (int g = 0; g < G->order(); ++g)
            if (!H.contains(g)) {
                x = g;
                break;
            }
        check_internal(x >= 0, "no coset generator found");
        ctx.x = x;
    }
    int cur = 0;
    for (int i = 0; i < ctx.p; ++i) {
        if (i > 0) check_internal(!H.contains(cur), "transversal power fell into H");
        ctx.transversal.push_back(cur);
        cur = G->mul(cur, ctx.x);
    }
    check_internal(H.contains(G->power(ctx.x, ctx.p)), "x^p not in H");
    return ctx;
}

CycNumber GroupAlgebraElement::coeff(int g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? CycNumber() : it->second;
}

void GroupAlgebraElement::set(int g, const CycNumber& c) {
    if (c.is_zero())
        coeffs_.erase(g);
    else
        coeffs_[g] = c;
}

void GroupAlgebraElement::add(int g, const CycNumber& c) {
    auto it = coeffs_.find(g);
    if (it == coeffs_.end()) {
        if (!c.is_zero()) coeffs_[g] = c;
        return;
    }
    CycNumber s = cyc_add(it->second, c);
    if (s.is_zero())
        coeffs_.erase(it);
    else
        it->second = s;
}

bool GroupAlgebraElement::is_central() const {
    const FiniteGroup& G = *group_;
    for (const auto& cls : G.classes().classes) {
        CycNumber c0 = coeff(cls.representative);
        for (int g : cls.members)
            if (!cyc_eq(coeff(g), c0)) return false;
    }
    return true;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const CycNumber& c) const {
    GroupAlgebraElement r(group_);
    if (c.is_zero()) return r;
    for (const auto& [g, v] : coeffs_) r.set(g, cyc_mul(v, c));
    return r;
}

bool algebra_eq(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_input(a.group().get() == b.group().get(), "algebra elements over different groups");
    if (a.terms().size() != b.terms().size()) return false;
    for (const auto& [g, v] : a.terms())
        if (!cyc_eq(v, b.coeff(g))) return false;
    return true;
}

GroupAlgebraElement algebra_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_input(a.group().get() == b.group().get(), "algebra elements over different groups");
    GroupAlgebraElement r = a;
    for (const auto& [g, v] : b.terms()) r.add(g, v);
    return r;
}

GroupAlgebraElement algebra_sub(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return algebra_add(a, b.scaled(CycNumber::integer(-1)));
}

GroupAlgebraElement algebra_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_input(a.group().get() == b.group().get(), "algebra elements over different groups");
    const FiniteGroup& G = *a.group();
    GroupAlgebraElement r(a.group());
    for (const auto& [g, u] : a.terms())
        for (const auto& [h, v] : b.terms()) r.add(G.mul(g, h), cyc_mul(u, v));
    return r;
}

GroupAlgebraElement algebra_identity(const GroupPtr& G) {
    GroupAlgebraElement e(G);
    e.set(0, CycNumber::rational(Rational(1)));
    return e;
}

GroupAlgebraElement class_sum(const GroupPtr& G, int g) {
    check_input(g >= 0 && g < G->order(), "class_sum: element out of range");
    GroupAlgebraElement r(G);
    const ConjClass& cls = G->classes().classes[G->class_of(g)];
    for (int m : cls.members) r.set(m, CycNumber::rational(Rational(1)));
    return r;
}

GroupAlgebraElement class_sum_pth_power(const IndexPContext& ctx) {
    GroupAlgebraElement cx = class_sum(ctx.G, ctx.x);
    GroupAlgebraElement w = cx;
    for (int i = 1; i < ctx.p; ++i) w = algebra_mul(w, cx);
    check_internal(w.is_central(), "class_sum_pth_power: result not central");
    GroupAlgebraElement over_h(ctx.H.sub);
    for (const auto& [g, v] : w.terms()) {
        check_internal(ctx.H.contains(g), "class_sum_pth_power: support outside H");
        over_h.set(ctx.H.from_parent(g), v);
    }
    return over_h;
}

GroupAlgebraElement algebra_embed(const GroupAlgebraElement& a, const Subgroup& H) {
    check_input(a.group().get() == H.sub.get(), "algebra_embed: element not over the subgroup");
    GroupAlgebraElement r(H.parent);
    for (const auto& [g, v] : a.terms()) r.set(H.to_parent(g), v);
    return r;
}

std::vector<int> class_power_map_any(const FiniteGroup& G, long t) {
    const ConjClassSet& cls = G.classes();
    std::vector<int> map(cls.count(), -1);
    for (int c = 0; c < cls.count(); ++c) {
        int image = G.class_of(G.power(cls.classes[c].representative, t));
        for (int g : cls.classes[c].members)
            check_internal(G.class_of(G.power(g, t)) == image, "power class map not well-defined");
        map[c] = image;
    }
    return map;
}

std::vector<int> power_class_map(const FiniteGroup& G, long t) {
    check_input(gcd_long(t, G.exponent()) == 1, "power_class_map: gcd(t, exponent) != 1");
    return class_power_map_any(G, t);
}

std::vector<Subgroup> index_p_normal_subgroups(const GroupPtr& G) {
    std::vector<Subgroup> result;
    for (int p : prime_factors(G->order())) {
        // Subgroup generated by commutators and p-th powers; the quotient is
        // elementary abelian and index-p normal subgroups are exactly the
        // hyperplane preimages.
        std::vector<int> gens;
        for (int a = 0; a < G->order(); ++a) {
            gens.push_back(G->power(a, p));
            for (int b = 0; b < G->order(); ++b)
                gens.push_back(G->mul(G->mul(a, b), G->mul(G->inverse(a), G->inverse(b))));
        }
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        Subgroup K = subgroup(G, gens);
        if (K.order() == G->order()) continue;

        int q = G->order() / K.order();
        std::vector<int> coset_of(G->order(), -1);
        std::vector<int> coset_rep;
        for (int g = 0; g < G->order(); ++g) {
            if (coset_of[g] >= 0) continue;
            int c = static_cast<int>(coset_rep.size());
            coset_rep.push_back(g);
            for (int k : K.members) coset_of[G->mul(g, k)] = c;
        }
        check_internal(static_cast<int>(coset_rep.size()) == q, "coset count mismatch");
        auto coset_mul = [&](int a, int b) { return coset_of[G->mul(coset_rep[a], coset_rep[b])]; };

        // Greedy basis of the quotient vector space over F_p.
        std::vector<int> basis;
        std::vector<int> span{0};
        std::vector<bool> in_span(q, false);
        in_span[0] = true;
        for (int c = 1; c < q; ++c) {
            if (in_span[c]) continue;
            basis.push_back(c);
            std::vector<int> current = span;
            for (int s : current) {
                int cur = s;
                for (int e = 1; e < p; ++e) {
                    cur = coset_mul(cur, c);
                    if (!in_span[cur]) {
                        in_span[cur] = true;
                        span.push_back(cur);
                    }
                }
            }
        }
        int d = static_cast<int>(basis.size());
        check_internal(static_cast<int>(span.size()) == q, "quotient span mismatch");

        // Coordinates of each coset in that basis.
        std::vector<std::vector<int>> coords(q);
        std::vector<bool> seen(q, false);
        coords[0].assign(d, 0);
        seen[0] = true;
        std::deque<int> queue{0};
        while (!queue.empty()) {
            int c = queue.front();
            queue.pop_front();
            for (int bi = 0; bi < d; ++bi) {
                int nc = coset_mul(c, basis[bi]);
                if (seen[nc]) continue;
                seen[nc] = true;
                coords[nc] = coords[c];
                coords[nc][bi] = (coords[nc][bi] + 1) % p;
                queue.push_back(nc);
            }
        }

        // Nonzero functionals up to scalar: first nonzero coefficient = 1.
        std::vector<std::vector<int>> functionals;
        std::vector<int> f(d, 0);
        while (true) {
            int i = d - 1;
            while (i >= 0 && f[i] == p - 1) f[i--] = 0;
            if (i < 0) break;
            ++f[i];
            int first = 0;
            while (first < d && f[first] == 0) ++first;
            if (first < d && f[first] == 1) functionals.push_back(f);
        }
        for (const auto& fn : functionals) {
            std::vector<int> member_gens;
            for (int g = 0; g < G->order(); ++g) {
                int c = coset_of[g];
                int v = 0;
                for (int bi = 0; bi < d; ++bi) v = (v + fn[bi] * coords[c][bi]) % p;
                if (v == 0) member_gens.push_back(g);
            }
            result.push_back(subgroup(G, member_gens));
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
    result.erase(std::unique(result.begin(), result.end(),
                             [](const Subgroup& a, const Subgroup& b) {
                                 return a.members == b.members;
                             }),
                 result.end());
    return result;
}

} // namespace indexp
