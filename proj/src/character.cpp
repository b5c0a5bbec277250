#include "indexp/character.hpp"

#include "indexp/errors.hpp"
#include "indexp/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace indexp {

long ClassFunction::degree_int() const {
    CycNumber d = degree();
    check_input(d.is_rational() && rat_is_integer(d.rational_value()),
                "class function degree is not an integer");
    return static_cast<long>(d.rational_value().get_num().get_si());
}

bool class_function_eq(const ClassFunction& a, const ClassFunction& b) {
    if (a.group.get() != b.group.get() || a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (!cyc_eq(a.values[i], b.values[i])) return false;
    return true;
}

int CharacterTable::index_of(const ClassFunction& f) const {
    for (int i = 0; i < count(); ++i)
        if (class_function_eq(irreducibles[i], f)) return i;
    return -1;
}

namespace {

// ----- dense linear algebra over F_ell (ell < 2^31, products fit in long) -----

using Row = std::vector<long>;
using Matrix = std::vector<Row>;

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref(Matrix& m, long ell) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return {};
    int cols = static_cast<int>(m[0].size());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        long inv = inv_mod(m[r][c], ell);
        for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % ell;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long fn = ell - m[i][c];
            const Row& pivot_row = m[r];
            Row& row = m[i];
            for (int j = c; j < cols; ++j) row[j] = (row[j] + fn * pivot_row[j]) % ell;
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

// Kernel basis (as rows) of a square matrix.
Matrix kernel(const Matrix& a, long ell) {
    int n = static_cast<int>(a.size());
    Matrix m = a;
    std::vector<int> pivots = rref(m, ell);
    std::vector<int> pivot_of_col(n, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<int>(i);
    Matrix basis;
    for (int c = 0; c < n; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Row v(n, 0);
        v[c] = 1;
        for (int cc = 0; cc < n; ++cc)
            if (pivot_of_col[cc] >= 0) v[cc] = (ell - m[pivot_of_col[cc]][c]) % ell;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Characteristic polynomial mod ell via Hessenberg reduction (Cohen 2.2.9).
Row charpoly_mod(Matrix h, long ell) {
    int n = static_cast<int>(h.size());
    for (int m = 1; m < n - 0 - 1; ++m) {
        // find nonzero entry below subdiagonal in column m-1
        int pivot = -1;
        for (int i = m; i < n; ++i)
            if (h[i][m - 1] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != m) {
            std::swap(h[pivot], h[m]);
            for (int i = 0; i < n; ++i) std::swap(h[i][pivot], h[i][m]);
        }
        long inv = inv_mod(h[m][m - 1], ell);
        for (int i = m + 1; i < n; ++i) {
            if (h[i][m - 1] == 0) continue;
            long u = h[i][m - 1] * inv % ell;
            for (int j = 0; j < n; ++j) h[i][j] = ((h[i][j] - u * h[m][j]) % ell + ell) % ell;
            for (int j = 0; j < n; ++j) h[j][m] = (h[j][m] + u * h[j][i]) % ell;
        }
    }
    // p_0 = 1; p_m built from the Hessenberg matrix (1-based recurrence).
    std::vector<Row> p(n + 1);
    p[0] = {1};
    for (int m = 1; m <= n; ++m) {
        // p_m = (X - h[m-1][m-1]) p_{m-1} - sum_{i=1}^{m-1} h[i-1][m-1] * prod * p_{i-1}
        Row cur(p[m - 1].size() + 1, 0);
        for (std::size_t j = 0; j < p[m - 1].size(); ++j) {
            cur[j + 1] = (cur[j + 1] + p[m - 1][j]) % ell;
            cur[j] = ((cur[j] - h[m - 1][m - 1] * p[m - 1][j]) % ell + ell) % ell;
        }
        long prod = 1;
        for (int i = m - 1; i >= 1; --i) {
            prod = prod * h[i][i - 1] % ell;
            long coef = h[i - 1][m - 1] * prod % ell;
            if (coef != 0)
                for (std::size_t j = 0; j < p[i - 1].size(); ++j)
                    cur[j] = ((cur[j] - coef * p[i - 1][j]) % ell + ell) % ell;
        }
        p[m] = std::move(cur);
    }
    return p[n];
}

long horner_mod(const Row& poly, long x, long ell) {
    long r = 0;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) r = (r * x + poly[i]) % ell;
    return r;
}

struct DixonState {
    const FiniteGroup& G;
    long ell;
    long z; // primitive e-th root of unity mod ell
    int r;
    std::vector<long> class_size;
    std::vector<int> inv_class;
};

// Class-multiplication matrix M_i[j][k] = #{(u,v) in C_i x C_j : uv = g_k}.
Matrix class_matrix(const DixonState& st, int i) {
    const auto& classes = st.G.classes().classes;
    Matrix m(st.r, Row(st.r, 0));
    for (int k = 0; k < st.r; ++k) {
        int gk = classes[k].representative;
        for (int u : classes[i].members) {
            int v = st.G.mul(st.G.inverse(u), gk);
            ++m[st.G.class_of(v)][k];
        }
    }
    for (auto& row : m)
        for (auto& x : row) x %= st.ell;
    return m;
}

} // namespace

CharacterTable character_table(const GroupPtr& Gp) {
    const FiniteGroup& G = *Gp;
    const auto& classes = G.classes().classes;
    const int r = static_cast<int>(classes.size());
    const int n = G.order();
    const int e = G.exponent();

    // Smallest prime ell = 1 (mod e) exceeding 2|G|; makes F_ell a splitting
    // field with room to read off degrees and multiplicities unambiguously.
    long ell = 2 * n + 1;
    while (!(is_prime(ell) && (ell - 1) % e == 0)) ++ell;
    long z = pow_mod(primitive_root(ell), (ell - 1) / e, ell);

    DixonState st{G, ell, z, r, {}, {}};
    st.class_size.resize(r);
    for (int c = 0; c < r; ++c) st.class_size[c] = classes[c].size();
    st.inv_class.resize(r);
    for (int c = 0; c < r; ++c) st.inv_class[c] = G.class_of(G.inverse(classes[c].representative));

    // Split the coordinate space into common eigenspaces of the class
    // matrices; each one-dimensional piece is a central character mod ell.
    std::vector<Matrix> subspaces;
    {
        Matrix full(r, Row(r, 0));
        for (int i = 0; i < r; ++i) full[i][i] = 1;
        subspaces.push_back(std::move(full));
    }
    for (int i = 1; i < r; ++i) {
        bool all_one = true;
        for (const auto& w : subspaces)
            if (w.size() > 1) all_one = false;
        if (all_one) break;
        Matrix mi = class_matrix(st, i);
        std::vector<Matrix> next;
        for (auto& w : subspaces) {
            int dim = static_cast<int>(w.size());
            if (dim == 1) {
                next.push_back(std::move(w));
                continue;
            }
            // Pivot columns of the RREF basis give coordinates for free.
            Matrix basis = w;
            std::vector<int> pivots = rref(basis, ell);
            check_internal(static_cast<int>(pivots.size()) == dim, "subspace basis degenerate");
            // Restriction R: column k = coordinates of M * b_k.
            Matrix images(dim, Row(r, 0));
            for (int k = 0; k < dim; ++k)
                for (int row = 0; row < r; ++row) {
                    long acc = 0;
                    for (int col = 0; col < r; ++col)
                        if (mi[row][col] != 0 && basis[k][col] != 0)
                            acc = (acc + mi[row][col] * basis[k][col]) % ell;
                    images[k][row] = acc;
                }
            Matrix restr(dim, Row(dim, 0));
            for (int k = 0; k < dim; ++k) {
                for (int j = 0; j < dim; ++j) restr[j][k] = images[k][pivots[j]];
                // invariance check: residual must vanish
                Row resid = images[k];
                for (int j = 0; j < dim; ++j) {
                    long c = restr[j][k];
                    if (c == 0) continue;
                    for (int col = 0; col < r; ++col)
                        resid[col] = ((resid[col] - c * basis[j][col]) % ell + ell) % ell;
                }
                for (long v : resid) check_internal(v == 0, "subspace not invariant");
            }
            Row cp = charpoly_mod(restr, ell);
            int found = 0;
            for (long lam = 0; lam < ell && found < dim; ++lam) {
                if (horner_mod(cp, lam, ell) != 0) continue;
                Matrix shifted = restr;
                for (int d = 0; d < dim; ++d) shifted[d][d] = ((shifted[d][d] - lam) % ell + ell) % ell;
                Matrix ker = kernel(shifted, ell);
                check_internal(!ker.empty(), "charpoly root without eigenvector");
                found += static_cast<int>(ker.size());
                Matrix sub;
                for (const auto& kv : ker) {
                    Row vec(r, 0);
                    for (int j = 0; j < dim; ++j) {
                        if (kv[j] == 0) continue;
                        for (int col = 0; col < r; ++col)
                            vec[col] = (vec[col] + kv[j] * basis[j][col]) % ell;
                    }
                    sub.push_back(std::move(vec));
                }
                next.push_back(std::move(sub));
            }
            check_internal(found == dim, "eigenspace dimensions do not fill subspace");
        }
        subspaces = std::move(next);
    }
    check_internal(static_cast<int>(subspaces.size()) == r, "wrong number of central characters");

    // Normalize each eigenvector by its identity-class coordinate.
    std::vector<Row> omega(r);
    for (int i = 0; i < r; ++i) {
        check_internal(subspaces[i].size() == 1, "subspace not one-dimensional");
        Row v = subspaces[i][0];
        check_internal(v[0] != 0, "central character vanishes at identity");
        long inv = inv_mod(v[0], ell);
        for (auto& x : v) x = x * inv % ell;
        omega[i] = std::move(v);
    }

    // Degrees from the norm relation d^2 = |G| / sum_j v_j v_{j'} / n_j.
    std::vector<long> degree(r);
    {
        long total = 0;
        for (int i = 0; i < r; ++i) {
            long s = 0;
            for (int j = 0; j < r; ++j)
                s = (s + omega[i][j] * omega[i][st.inv_class[j]] % ell *
                             inv_mod(st.class_size[j], ell)) %
                    ell;
            check_internal(s != 0, "degree relation degenerate");
            long d2 = static_cast<long>(n) % ell * inv_mod(s, ell) % ell;
            long d = sqrt_mod(d2, ell);
            check_internal(d >= 0, "degree is not a square mod ell");
            d = std::min(d, ell - d);
            check_internal(d >= 1 && d * d <= n, "degree out of range");
            degree[i] = d;
            total += d * d;
        }
        check_internal(total == n, "sum of squared degrees mismatch");
    }

    // Discrete log table for the cyclic group generated by z.
    std::vector<long> dlog(ell, -1);
    {
        long cur = 1;
        for (int s = 0; s < e; ++s) {
            dlog[cur] = s;
            cur = cur * z % ell;
        }
    }

    // Power-class maps: pc[j][t] = class of g_j^t for 0 <= t < order(g_j).
    std::vector<std::vector<int>> pc(r);
    for (int j = 0; j < r; ++j) {
        int g = classes[j].representative;
        int o = G.element_order(g);
        pc[j].resize(o);
        int cur = 0;
        for (int t = 0; t < o; ++t) {
            pc[j][t] = G.class_of(cur);
            cur = G.mul(cur, g);
        }
    }

    // Lift values: chi(g_j) = sum_s mult_s zeta_o^s recovered by a length-o
    // DFT of the mod-ell values along the cyclic group <g_j>.
    struct SparseValue {
        std::vector<std::pair<long, long>> terms; // (exponent at conductor e, multiplicity)
    };
    std::vector<std::vector<SparseValue>> lifted(r, std::vector<SparseValue>(r));
    std::vector<Character> chars(r);
    for (int i = 0; i < r; ++i) {
        Row chi_hat(r);
        for (int c = 0; c < r; ++c)
            chi_hat[c] = degree[i] % ell * omega[i][c] % ell * inv_mod(st.class_size[c], ell) % ell;
        for (int j = 0; j < r; ++j) {
            int o = static_cast<int>(pc[j].size());
            SparseValue sv;
            if (degree[i] == 1) {
                long s = dlog[chi_hat[j]];
                check_internal(s >= 0, "linear character value is not a root of unity");
                check_internal((s * o) % e == 0, "root of unity order mismatch");
                sv.terms.emplace_back(s, 1);
            } else {
                long zo = pow_mod(z, e / o, ell);
                long zo_inv = inv_mod(zo, ell);
                long o_inv = inv_mod(o, ell);
                long total = 0;
                for (int s = 0; s < o; ++s) {
                    long acc = 0;
                    long w = 1; // zo^{-st}
                    long step = pow_mod(zo_inv, s, ell);
                    for (int t = 0; t < o; ++t) {
                        acc = (acc + chi_hat[pc[j][t]] * w) % ell;
                        w = w * step % ell;
                    }
                    long mult = acc * o_inv % ell;
                    check_internal(mult <= degree[i], "eigenvalue multiplicity exceeds degree");
                    if (mult != 0) sv.terms.emplace_back(static_cast<long>(s) * (e / o), mult);
                    total += mult;
                }
                check_internal(total == degree[i], "eigenvalue multiplicities do not sum to degree");
            }
            lifted[i][j] = std::move(sv);
        }
    }

    // Exact orthogonality verification on the lifted integer data, working in
    // the reduced power basis at the normalized conductor.
    {
        int en = normalize_conductor(e);
        const ConductorData& cd = conductor_data(en);
        int phi = cd.phi;
        // Reduction rows as machine integers, plus the exponent remap e -> en.
        std::vector<std::vector<long>> rows(e);
        std::vector<int> remap_exp(e);
        std::vector<int> remap_sign(e, 1);
        for (int k = 0; k < e; ++k) {
            int kk = k, sign = 1;
            if (e != en) { // e = 2 mod 4: zeta_e^k = (-1)^k zeta_en^{k(en+1)/2}
                sign = (k % 2 == 1) ? -1 : 1;
                kk = static_cast<int>(static_cast<long>(k % en) * ((en + 1) / 2) % en);
            }
            remap_exp[k] = kk;
            remap_sign[k] = sign;
            rows[k].resize(phi);
            for (int idx = 0; idx < phi; ++idx) {
                const Integer& v = cd.zeta_pow[kk][idx];
                check_internal(v.fits_slong_p(), "reduction row entry too large");
                rows[k][idx] = sign * v.get_si();
            }
        }
        auto accumulate = [&](std::vector<long>& acc, long weight, const SparseValue& a,
                              const SparseValue& b) {
            for (const auto& [ka, ma] : a.terms)
                for (const auto& [kb, mb] : b.terms) {
                    long k = (ka + kb) % e;
                    long coef = weight * ma * mb;
                    const auto& row = rows[k];
                    for (int idx = 0; idx < phi; ++idx)
                        if (row[idx] != 0) acc[idx] += coef * row[idx];
                }
        };
        // Rows: <chi_i, chi_j> |G| = delta_ij |G|.
        for (int i = 0; i < r; ++i)
            for (int j = i; j < r; ++j) {
                std::vector<long> acc(phi, 0);
                for (int c = 0; c < r; ++c)
                    accumulate(acc, st.class_size[c], lifted[i][c], lifted[j][st.inv_class[c]]);
                long expect = (i == j) ? n : 0;
                check_internal(acc[0] == expect, "row orthogonality failed");
                for (int idx = 1; idx < phi; ++idx)
                    check_internal(acc[idx] == 0, "row orthogonality failed");
            }
        // Columns: sum_i chi_i(g_a) chi_i(g_b^{-1}) = delta_ab |G| / |C_a|.
        for (int a = 0; a < r; ++a)
            for (int b = a; b < r; ++b) {
                std::vector<long> acc(phi, 0);
                for (int i = 0; i < r; ++i)
                    accumulate(acc, 1, lifted[i][a], lifted[i][st.inv_class[b]]);
                long expect = (a == b) ? n / st.class_size[a] : 0;
                check_internal(acc[0] == expect, "column orthogonality failed");
                for (int idx = 1; idx < phi; ++idx)
                    check_internal(acc[idx] == 0, "column orthogonality failed");
            }
    }

    // Materialize exact values and order characters canonically.
    for (int i = 0; i < r; ++i) {
        Character chi;
        chi.group = Gp;
        chi.values.resize(r);
        for (int j = 0; j < r; ++j) {
            std::vector<std::pair<long, Rational>> terms;
            terms.reserve(lifted[i][j].terms.size());
            for (const auto& [k, mult] : lifted[i][j].terms) terms.emplace_back(k, Rational(mult));
            chi.values[j] = CycNumber::from_exponents(e, terms);
        }
        check_internal(chi.values[0].is_rational() &&
                           chi.values[0].rational_value() == Rational(degree[i]),
                       "lifted degree mismatch");
        chars[i] = std::move(chi);
    }
    std::sort(chars.begin(), chars.end(), [](const Character& a, const Character& b) {
        long da = a.values[0].rational_value().get_num().get_si();
        long db = b.values[0].rational_value().get_num().get_si();
        if (da != db) return da < db;
        for (std::size_t c = 0; c < a.values.size(); ++c) {
            int cmp = cyc_cmp(a.values[c], b.values[c]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });

    CharacterTable table;
    table.group = Gp;
    table.exponent = e;
    table.ell = ell;
    table.irreducibles = std::move(chars);
    return table;
}

ClassFunction induce_character(const GroupPtr& G, const Subgroup& H, const ClassFunction& f) {
    check_input(f.group.get() == H.sub.get(), "induce: class function not on the subgroup");
    const auto& classes = G->classes().classes;
    ClassFunction out;
    out.group = G;
    out.values.resize(classes.size());
    Rational scale(1, H.order());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        int g = classes[c].representative;
        CycNumber acc;
        for (int a = 0; a < G->order(); ++a) {
            int conj = G->mul(G->mul(G->inverse(a), g), a);
            if (!H.contains(conj)) continue;
            acc = cyc_add(acc, f.values[H.sub->class_of(H.from_parent(conj))]);
        }
        out.values[c] = cyc_mul(acc, CycNumber::rational(scale));
    }
    return out;
}

ClassFunction induce_character(const IndexPContext& ctx, const ClassFunction& f) {
    return induce_character(ctx.G, ctx.H, f);
}

ClassFunction restrict_character(const ClassFunction& f, const Subgroup& H) {
    check_input(f.group.get() == H.parent.get(), "restrict: class function not on the parent");
    const auto& classes = H.sub->classes().classes;
    ClassFunction out;
    out.group = H.sub;
    out.values.resize(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        out.values[c] = f.values[H.parent->class_of(H.to_parent(classes[c].representative))];
    return out;
}

CycNumber inner_product(const ClassFunction& a, const ClassFunction& b) {
    check_input(a.group.get() == b.group.get(), "inner product across different groups");
    const auto& classes = a.group->classes().classes;
    CycNumber acc;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        CycNumber term = cyc_mul(a.values[c], cyc_galois(b.values[c], -1));
        acc = cyc_add(acc, term.is_zero()
                               ? term
                               : cyc_mul(term, CycNumber::integer(classes[c].size())));
    }
    return cyc_mul(acc, CycNumber::rational(Rational(1, a.group->order())));
}

ClassFunction conjugate_character(const ClassFunction& f, const IndexPContext& ctx) {
    check_input(f.group.get() == ctx.H.sub.get(), "conjugate: class function not on H");
    const auto& classes = ctx.H.sub->classes().classes;
    ClassFunction out;
    out.group = f.group;
    out.values.resize(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        int h_parent = ctx.H.to_parent(classes[c].representative);
        int conj = ctx.G->conjugate(ctx.x, h_parent);
        check_internal(ctx.H.contains(conj), "conjugation left the normal subgroup");
        out.values[c] = f.values[ctx.H.sub->class_of(ctx.H.from_parent(conj))];
    }
    return out;
}

ClassFunction galois_twist(const ClassFunction& f, long t) {
    const FiniteGroup& G = *f.group;
    std::vector<int> pcm = power_class_map(G, t);
    ClassFunction out;
    out.group = f.group;
    out.values.resize(f.values.size());
    for (std::size_t c = 0; c < f.values.size(); ++c) out.values[c] = f.values[pcm[c]];
    return out;
}

std::vector<GaloisOrbit> galois_orbits_over_F(const CharacterTable& table, const FieldSpec& F) {
    const int r = table.count();
    const int e = table.exponent;
    int g = static_cast<int>(gcd_long(e, F.conductor()));
    std::vector<int> ts;
    for (int t : units_mod(e)) {
        if (e == 1) t = 1;
        if (t % g == 1 % g) ts.push_back(t);
    }
    if (e == 1) ts = {1};

    // Permutation of character indices per twist.
    std::vector<std::vector<int>> perms;
    for (int t : ts) {
        std::vector<int> pcm = power_class_map(*table.group, t);
        std::vector<int> perm(r, -1);
        for (int i = 0; i < r; ++i) {
            ClassFunction tw;
            tw.group = table.group;
            tw.values.resize(table.irreducibles[i].values.size());
            for (std::size_t c = 0; c < tw.values.size(); ++c)
                tw.values[c] = table.irreducibles[i].values[pcm[c]];
            perm[i] = table.index_of(tw);
            check_internal(perm[i] >= 0, "galois twist left the character table");
        }
        perms.push_back(std::move(perm));
    }

    std::vector<GaloisOrbit> orbits;
    std::vector<bool> seen(r, false);
    for (int i = 0; i < r; ++i) {
        if (seen[i]) continue;
        std::vector<int> members;
        std::vector<int> stab;
        for (std::size_t u = 0; u < ts.size(); ++u) {
            int img = perms[u][i];
            if (!seen[img]) {
                seen[img] = true;
                members.push_back(img);
            }
            if (img == i) stab.push_back(ts[u]);
        }
        std::sort(members.begin(), members.end());
        GaloisOrbit orb;
        orb.F = F;
        orb.members = std::move(members);
        orb.k = static_cast<int>(orb.members.size());
        orb.stabilizer = std::move(stab);
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

CycNumber fs_indicator(const ClassFunction& chi) {
    const FiniteGroup& G = *chi.group;
    std::vector<int> sq = class_power_map_any(G, 2);
    CycNumber acc;
    const auto& classes = G.classes().classes;
    for (std::size_t c = 0; c < classes.size(); ++c)
        acc = cyc_add(acc, cyc_mul(chi.values[sq[c]], CycNumber::integer(classes[c].size())));
    return cyc_mul(acc, CycNumber::rational(Rational(1, G.order())));
}

int character_field_conductor(const ClassFunction& chi) {
    const FiniteGroup& G = *chi.group;
    int e = G.exponent();
    std::vector<int> fixers; // units t mod e fixing chi
    for (int t : units_mod(e)) {
        if (e == 1) t = 1;
        std::vector<int> pcm = power_class_map(G, t);
        bool fixed = true;
        for (std::size_t c = 0; c < chi.values.size() && fixed; ++c)
            if (!cyc_eq(chi.values[pcm[c]], chi.values[c])) fixed = false;
        if (fixed) fixers.push_back(t);
    }
    std::sort(fixers.begin(), fixers.end());
    for (int d : divisors(e)) {
        if (d % 4 == 2) continue; // not a normalized conductor
        bool ok = true;
        for (int t : units_mod(e)) {
            if (e == 1) t = 1;
            if (t % d != 1 % d) continue;
            if (!std::binary_search(fixers.begin(), fixers.end(), t)) {
                ok = false;
                break;
            }
        }
        if (ok) return d;
    }
    throw InternalError("character field conductor not found");
}

ClassFunction FIrreducibleSpec::orbit_sum() const {
    ClassFunction sum;
    sum.group = table->group;
    sum.values.assign(table->irreducibles[representative].values.size(), CycNumber());
    for (int idx : orbit.members)
        for (std::size_t c = 0; c < sum.values.size(); ++c)
            sum.values[c] = cyc_add(sum.values[c], table->irreducibles[idx].values[c]);
    return sum;
}

long FIrreducibleSpec::orbit_degree() const {
    long d = 0;
    for (int idx : orbit.members) d += table->irreducibles[idx].degree_int();
    return d;
}

} // namespace indexp
