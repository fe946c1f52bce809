#include "kdiff/formulas.hpp"

#include <algorithm>

namespace kdiff {

namespace {

// k-subsets of {0..nv-1}, lexicographic
void subsets_rec(int nv, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) { out.push_back(cur); return; }
    for (int v = start; v < nv; ++v) {
        cur.push_back(v);
        subsets_rec(nv, k, v + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int nv, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > nv) return out;
    std::vector<int> cur;
    subsets_rec(nv, k, 0, cur, out);
    return out;
}

}  // namespace

long long binom(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

long long deg_fat_points(const FatPointParams& params) {
    long long s = 0;
    for (int m : params.mults) s += binom(params.n + m - 1, params.n);
    return s;
}

namespace {

void require_char_gate(long long characteristic, long long threshold,
                       const std::string& what) {
    if (characteristic != 0 && characteristic <= threshold)
        throw CharTooSmall(what + " requires char(K) = 0 or char(K) > " +
                           std::to_string(threshold));
}

}  // namespace

long long delta_formula(int n, int k, int m) {
    return binom(n, m) * binom(n + k - 2, n - 1) -
           binom(m + k - 2, m) * binom(n + k - 2, n - m - 1);
}

HilbertData hf_omega_local(int n, int k, int m, long long characteristic) {
    if (m < 1 || m > n) throw FormDegreeOutOfRange("hf_omega_local needs 1 <= m <= n");
    if (k < 1) throw Error("hf_omega_local needs k >= 1");
    require_char_gate(characteristic, k, "hf_omega_local");
    std::vector<long long> values;
    const int top = m + k - 1;
    for (int i = 0; i < top; ++i)
        values.push_back(binom(n, m) * binom(n + i - m - 1, n - 1));
    values.push_back(binom(n, m) * binom(n + k - 2, n - 1) - delta_formula(n, k, m));
    values.push_back(0);
    values.push_back(0);
    return stabilize(std::move(values), top + 1);
}

long long dim_omega_local(int n, int k, int m, long long characteristic) {
    if (k < 1) throw Error("dim_omega_local needs k >= 1");
    if (m == 0) return binom(n + k - 1, n);
    if (m < 0) throw FormDegreeOutOfRange("dim_omega_local needs m >= 0");
    if (m > n) return 0;
    require_char_gate(characteristic, k, "dim_omega_local");
    return binom(n, m) * binom(n + k - 2, n) +
           binom(m + k - 2, m) * binom(n + k - 2, n - m - 1);
}

long long delta_bruteforce(const Field& field, int n, int k, int m) {
    Ring aff = affine_ring(field, n);
    auto tops = terms_of_degree(aff, k);        // generators t_i of q^k
    auto cols_terms = terms_of_degree(aff, k - 1);
    auto col_index = [&](const Term& t) {
        for (std::size_t i = 0; i < cols_terms.size(); ++i)
            if (cols_terms[i] == t) return static_cast<int>(i);
        throw InternalInconsistency("term index lookup failed");
    };

    // positions: m-subsets of variables, lexicographic
    auto labels = subsets(n, m);
    auto sublabels = subsets(n, m - 1);
    if (labels.empty()) return 0;

    const int ncols = static_cast<int>(labels.size() * cols_terms.size());
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& t : tops) {
        for (const auto& J : sublabels) {
            std::vector<FieldElem> row(ncols, field.zero());
            bool nonzero = false;
            for (int l = 0; l < n; ++l) {
                if (std::binary_search(J.begin(), J.end(), l)) continue;
                if (t.e[l] == 0) continue;
                FieldElem c = field.from_integer(t.e[l]);
                if (field.is_zero(c)) continue;
                std::vector<int> lab = J;
                int nu = 0;
                while (nu < static_cast<int>(J.size()) && J[nu] < l) ++nu;
                lab.insert(lab.begin() + nu, l);
                if (nu % 2 != 0) c = field.neg(c);
                auto it = std::lower_bound(labels.begin(), labels.end(), lab);
                int pos = static_cast<int>(it - labels.begin());
                Term dt = t;
                dt.e[l] -= 1;
                dt.deg -= 1;
                row[pos * cols_terms.size() + col_index(dt)] = c;
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    // rank by Gaussian elimination
    long long rank = 0;
    std::size_t rpos = 0;
    for (int col = 0; col < ncols && rpos < rows.size(); ++col) {
        std::size_t pivot = rpos;
        while (pivot < rows.size() && field.is_zero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rpos], rows[pivot]);
        FieldElem inv = field.inv(rows[rpos][col]);
        for (int c = col; c < ncols; ++c)
            rows[rpos][c] = field.mul(rows[rpos][c], inv);
        for (std::size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == rpos || field.is_zero(rows[rr][col])) continue;
            FieldElem f = rows[rr][col];
            for (int c = col; c < ncols; ++c)
                rows[rr][c] = field.sub(rows[rr][c], field.mul(f, rows[rpos][c]));
        }
        ++rpos;
        ++rank;
    }
    return rank;
}

long long hp_omega_fatpoints(const FatPointParams& params, int m) {
    const int n = params.n;
    if (m < 1 || m > n + 1)
        throw FormDegreeOutOfRange("hp_omega_fatpoints needs 1 <= m <= n+1");
    long long maxm = 0;
    for (int mi : params.mults) maxm = std::max<long long>(maxm, mi);
    require_char_gate(params.characteristic, maxm, "hp_omega_fatpoints");

    long long s = 0;
    for (int mi : params.mults) {
        if (m == 1) {
            s += binom(n + mi - 1, n) + (mi - 1) * binom(n + mi - 1, n - 1);
        } else if (m <= n) {
            long long delta_im = binom(m + mi - 2, m) * binom(n + mi - 2, n - m - 1) +
                                 binom(m + mi - 3, m - 1) * binom(n + mi - 2, n - m);
            s += binom(n + 1, m) * binom(n + mi - 2, n) + delta_im;
        } else {
            s += binom(n + mi - 2, n);
        }
    }
    return s;
}

std::pair<long long, long long> hp_curvilinear(const LocalRingProfile& profile,
                                               long long characteristic,
                                               long long deg) {
    long long drop = 0;
    for (auto [kappa, nu] : profile.entries)
        if (characteristic == 0 || nu % characteristic != 0) drop += kappa;
    return {2 * deg - drop, deg - drop};
}

HilbertData hf_omega_rtilde(long long deg, long long dim_omega1_s) {
    if (deg < 0 || dim_omega1_s < 0) throw Error("hf_omega_rtilde needs non-negative inputs");
    HilbertData h;
    h.values = {dim_omega1_s, deg + dim_omega1_s, deg + dim_omega1_s};
    h.hp = deg + dim_omega1_s;
    h.ri = (h.values[0] == h.hp) ? 0 : 1;
    return h;
}

}  // namespace kdiff
