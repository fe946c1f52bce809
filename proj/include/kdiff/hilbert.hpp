#ifndef KDIFF_HILBERT_HPP
#define KDIFF_HILBERT_HPP

#include <vector>

#include "kdiff/groebner.hpp"

namespace kdiff {

// Finite prefix of a Hilbert function together with its stable value (the
// Hilbert polynomial of a module of Krull dimension <= 1) and the first
// degree from which the function equals that value.
struct HilbertData {
    std::vector<long long> values;  // indexed from degree 0
    long long hp = 0;
    int ri = 0;

    long long at(int i) const {
        if (i < 0) return 0;
        if (i < static_cast<int>(values.size())) return values[i];
        return hp;
    }
    bool operator==(const HilbertData& o) const {
        return values == o.values && hp == o.hp && ri == o.ri;
    }
};

// dim_K of each graded piece of P/I for 0 <= i <= upto, by counting the
// degree-i terms outside the leading term ideal.
std::vector<long long> hf_ring_quotient(const Ideal& ideal, int upto);

// Same for F/N with twists taken into account.
std::vector<long long> hf_module_quotient(const Submodule& n, int upto);

// Extracts hp/ri from a value list that is guaranteed stable from `bound`
// on. Values should extend at least one step past the bound; the constancy
// check at the boundary turns upstream bugs into hard errors.
HilbertData stabilize(std::vector<long long> values, int bound);

// Hilbert function of a 0-dimensional scheme: computed degree by degree and
// stopped at the first repeat (the function is strictly increasing up to
// its regularity index, then constant).
HilbertData hf_autostop(const Ideal& ideal, int cap = 256);

// K-dimension of F/N for an affine quotient, by counting standard module
// monomials. Throws InfiniteDimensional when some component has no pure
// power of some variable among the leading terms.
long long affine_k_dimension(const Submodule& n);
long long affine_k_dimension(const Ideal& ideal);

}  // namespace kdiff

#endif
