#ifndef KDIFF_SCHEMES_HPP
#define KDIFF_SCHEMES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kdiff/formulas.hpp"
#include "kdiff/hilbert.hpp"

namespace kdiff {

// A K-rational point with a multiplicity (fat point component).
struct PointComponent {
    std::vector<FieldElem> coords;  // length n+1, normalized to leading 1
    int mult = 1;
};

// A local piece given by an explicit homogeneous ideal (e.g. a non-reduced
// point that is not a full fat point).
struct IdealComponent {
    std::vector<Polynomial> gens;
};

using SchemeComponent = std::variant<PointComponent, IdealComponent>;

// User-level description of a 0-dimensional subscheme of P^n: either a list
// of components whose ideals get intersected, or one explicit homogeneous
// ideal (which must be saturated with X0 a nonzerodivisor).
struct SchemeSpec {
    Field field = Field::rationals();
    int n = 2;
    std::vector<SchemeComponent> components;
    std::vector<Polynomial> explicit_gens;
    std::optional<LocalRingProfile> profile;  // user-supplied (kappa, nu) list
    std::string label;

    bool from_points() const { return explicit_gens.empty(); }
    bool reduced_rational() const;
    int point_count() const;
};

// Scales so the first nonzero coordinate is 1; it must sit at index 0.
std::vector<FieldElem> normalize_point(const Field& field,
                                       std::vector<FieldElem> coords);

// <X_i - a_i X_0 : i = 1..n> for p = (1 : a_1 : ... : a_n).
Ideal point_ideal(const Ring& proj, const std::vector<FieldElem>& p);

// Compiled scheme: saturated vanishing ideal with cached Gröbner basis,
// Hilbert function, degree and regularity index.
struct SchemeCtx {
    SchemeSpec spec;
    Ring ring;  // the projective ring K[X_0..X_n]
    Ideal ideal;
    HilbertData hf;
    long long deg = 0;
    int r = 0;
};

SchemeCtx compile(const SchemeSpec& spec, int cap = 256);

// A subscheme obtained by removing points of a reduced scheme.
struct Subscheme {
    std::vector<int> removed;  // indices into the parent's point list
    SchemeCtx ctx;
    int alpha = 0;  // separator degree
};

// All subschemes of degree deg(X) - colength, for reduced K-rational
// schemes (point subsets).
std::vector<Subscheme> colength_subschemes(const SchemeCtx& parent, int colength);

// First degree where the Hilbert functions differ. For colength one the
// exact unit-step shape of HF_Y is asserted.
int separator_degree(const SchemeCtx& parent, const SchemeCtx& sub,
                     bool assert_unit_step);

// --- geometric checkers -------------------------------------------------

struct SmoothEvidence {
    bool smooth = false;
    long long dim_omega1_s = 0;         // criterion via the affine ring
    long long hp_omega1 = 0;            // criterion via Hilbert polynomials
    long long deg = 0;
    std::vector<long long> hp_higher;   // HP(Omega^m), m = 2..n+1
};
SmoothEvidence check_smooth(const SchemeCtx& ctx);

enum class CurvilinearVerdict { Smooth, CurvilinearNotSmooth, No };
std::string to_string(CurvilinearVerdict v);

struct CurvilinearEvidence {
    CurvilinearVerdict verdict = CurvilinearVerdict::No;
    std::vector<long long> affine_dims;  // dim Omega^m_S, m = 1..n
    std::vector<long long> hps;          // HP(Omega^m),   m = 1..n+1
    long long deg = 0;
};
CurvilinearEvidence check_weakly_curvilinear(const SchemeCtx& ctx);

struct CbpEvidence {
    bool holds = false;
    int degree = 0;
    int min_alpha = 0;
    std::vector<int> alphas;       // separator degree per colength-1 subscheme
    bool differential_checked = false;
};
// Cayley-Bacharach property of degree d, decided through separator degrees;
// cross-checked against the Omega^1 Hilbert function criterion whenever
// char(K) = 0 or char(K) > r_X.
CbpEvidence check_cbp(const SchemeCtx& ctx, int d);

struct UniformEvidence {
    bool holds = false;
    int i = 0, j = 0;
    int violations = 0;
    bool differential_checked = false;
};
UniformEvidence check_uniform(const SchemeCtx& ctx, int i, int j);

// (kappa, nu) profile of the local rings. Returns the user-supplied profile
// when present; otherwise derives one for the recognizable curvilinear
// shapes (simple points, fat points on a line, component ideals cut out by
// linear forms and a power of a linear polynomial).
LocalRingProfile local_profile(const SchemeSpec& spec);

}  // namespace kdiff

#endif
