#ifndef KDIFF_KAEHLER_HPP
#define KDIFF_KAEHLER_HPP

#include "kdiff/schemes.hpp"

namespace kdiff {

// Presentation of Omega^m as F/N: F free of rank C(#vars, m) with all basis
// vectors in degree m and exterior-power labels, N the relation submodule
// I*Omega^m + dI wedge Omega^{m-1} built from generators of the ideal.
struct KaehlerPresentation {
    int m = 1;
    FreeModulePtr free_module;
    Submodule relations;
};

// Over an arbitrary ring (projective or affine) from an explicit generator
// list. m >= #vars + 1 yields the zero module.
KaehlerPresentation omega_presentation(const Ring& ring,
                                       const std::vector<Polynomial>& ideal_gens,
                                       int m);

// From a compiled scheme, using the cached Gröbner basis of I_X.
KaehlerPresentation omega_presentation(const SchemeCtx& ctx, int m);

// Hilbert data of Omega^m_{R/K}, computed out to 2 r_X + m + 1 and
// stabilized at the guaranteed bound 2 r_X + m.
HilbertData omega_hilbert(const SchemeCtx& ctx, int m);

// dim_K Omega^m_{S/K} of the affine coordinate ring (m = 0 gives deg X).
long long omega_affine_dim(const SchemeCtx& ctx, int m);

// Hilbert data of the X0-torsion submodule of Omega^1; its Hilbert
// polynomial must vanish.
HilbertData torsion_hilbert(const SchemeCtx& ctx);

// Hilbert data of Ker(eps) for the Euler form eps(dx_i) = x_i, via the
// surjectivity of eps onto the maximal ideal.
HilbertData euler_kernel_hilbert(const SchemeCtx& ctx);

// Hilbert data of the Koszul submodule U = <x_i dx_j - x_j dx_i>.
HilbertData koszul_submodule_hilbert(const SchemeCtx& ctx);

// The Koszul generators X_i e_j - X_j e_i of the rank-(n+1) free module.
std::vector<ModuleElement> koszul_generators(const FreeModulePtr& f1);

// F = F_0 X_0 + ... + F_n X_n with F_i in K[X_i..X_n]: every term is
// assigned to its least-index variable.
struct TriangularDecomposition {
    std::vector<Polynomial> parts;
};
TriangularDecomposition triangular_decompose(const Polynomial& f);

// Generators of Ker(eps): the Koszul generators plus the images of the
// triangular decompositions of the ideal generators.
std::vector<ModuleElement> ker_epsilon_generators(const SchemeCtx& ctx);

// --- graded fat point local rings S = A/q^k ----------------------------

// Hilbert function values of Omega^m_{S/K} (m = 0 gives S itself),
// computed symbolically over the given field.
std::vector<long long> local_omega_hf(const Field& field, int n, int k, int m,
                                      int upto);

long long local_omega_dim(const Field& field, int n, int k, int m);

// Alternating sum across the Euler-Koszul complex of S in degree i:
// HF(q/q^k)(i) - HF(Omega^1)(i) + HF(Omega^2)(i) - ...; zero whenever the
// complex is exact in degree i (char 0, or char not dividing i).
long long euler_koszul_alternating_sum(const Field& field, int n, int k, int i);

}  // namespace kdiff

#endif
