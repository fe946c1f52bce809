#ifndef KDIFF_FORMULAS_HPP
#define KDIFF_FORMULAS_HPP

#include <utility>
#include <vector>

#include "kdiff/hilbert.hpp"

namespace kdiff {

// C(a, b) with the conventions C(a, b) = 0 for b < 0 or a < b.
long long binom(long long a, long long b);

// (kappa_i, nu_i) per local ring: residue field K-dimension and nilpotency
// index of the maximal ideal generator.
struct LocalRingProfile {
    std::vector<std::pair<long long, long long>> entries;

    long long total_dimension() const {  // sum nu_i * kappa_i
        long long s = 0;
        for (auto [k, v] : entries) s += k * v;
        return s;
    }
};

struct FatPointParams {
    int n = 2;
    std::vector<int> mults;
    long long characteristic = 0;
};

// deg(X) = sum C(n + m_i - 1, n).
long long deg_fat_points(const FatPointParams& params);

// Full Hilbert function of Omega^m of the local ring A/q^k at a fat point
// (closed form; requires char(K) = 0 or char(K) > k).
HilbertData hf_omega_local(int n, int k, int m, long long characteristic);

// dim_K Omega^m_{S/K} for S = A/q^k, same characteristic constraint;
// m = 0 gives dim_K S.
long long dim_omega_local(int n, int k, int m, long long characteristic);

// The closed form for delta = dim (dq^k wedge Omega^{m-1})_{m+k-1}
// (valid in char 0 or char > k).
long long delta_formula(int n, int k, int m);

// Independent oracle for delta: spans the generating vectors of the initial
// defining vector space inside the degree-(m+k-1) slice of A(-m)^C(n,m) and
// returns their rank by exact Gaussian elimination over the given field.
long long delta_bruteforce(const Field& field, int n, int k, int m);

// HP(Omega^m) of a fat point scheme, 1 <= m <= n+1; requires char(K) = 0 or
// char(K) > max multiplicity.
long long hp_omega_fatpoints(const FatPointParams& params, int m);

// (HP(Omega^1), HP(Omega^2)) of a weakly curvilinear scheme from its local
// ring profile.
std::pair<long long, long long> hp_curvilinear(const LocalRingProfile& profile,
                                               long long characteristic,
                                               long long deg);

// Hilbert function of Omega^1 of the truncated integral closure:
// dim Omega^1_S in degree 0, deg(X) + dim Omega^1_S from degree 1 on.
HilbertData hf_omega_rtilde(long long deg, long long dim_omega1_s);

}  // namespace kdiff

#endif
