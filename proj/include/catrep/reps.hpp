#ifndef CATREP_REPS_HPP
#define CATREP_REPS_HPP

#include <optional>
#include <vector>

#include "catrep/twovect.hpp"
#include "catrep/xmod.hpp"

namespace catrep {

// A strict categorical representation: a base homomorphism into S_N whose
// kernel contains the boundary image, plus one character of E per
// coordinate, equivariant along the base action.
struct CatRep {
    XModPtr xmod;
    int dim = 0;
    PermAction base;                      // right action of G on {0..N-1}
    std::vector<AbelianCharacter> chars;  // size N, modulus = exponent(E)

    int sigma(int x, int i) const { return base.perm[size_t(x)][size_t(i)]; }
    CycNumber char_value(int i, int e, int conductor) const {
        return chars[size_t(i)].value(e, conductor);
    }
    int conductor() const { return xmod->working_conductor(); }
};

bool rep_equal(const CatRep& a, const CatRep& b);
bool rep_less(const CatRep& a, const CatRep& b); // canonical (base, chars) order

CatRep validate_rep(XModPtr xmod, int dim, PermAction base, std::vector<AbelianCharacter> chars);
// the N-dimensional representation with trivial base and trivial characters
CatRep trivial_rep(const XModPtr& xmod, int dim);

// the permutation 1-morphism of the base at an object
NatMatrix rep_matrix(const CatRep& r, int x);
// the 2Vect 2-cell of a categorical group morphism under the representation
TwoMorphism rep_apply(const CatRep& r, const CatGroupMorphism& f, int conductor = 0);

enum class UpTo { equality, isomorphism };
std::vector<CatRep> enumerate_reps(const XModPtr& xmod, int dim, UpTo mode);

CatRep boxplus_rep(const CatRep& r, const CatRep& t);
CatRep boxtimes_rep(const CatRep& r, const CatRep& t);

// relabels coordinates: new index p plays the role of old index perm[p]
CatRep conjugate_rep(const CatRep& r, const std::vector<int>& perm);

bool is_decomposable(const CatRep& r); // base action not transitive; dim >= 1

struct Decomposition {
    std::vector<CatRep> parts;     // indecomposable, in least-orbit-element order
    std::vector<int> witness_perm; // conjugate_rep(r, witness_perm) equals the boxplus of parts
};
Decomposition decompose(const CatRep& r);

// No smaller-dimensional retract through a pair of 1-intertwiners. The
// witness search is the one in reducibility_witness (intertwiners module).
bool is_irreducible(const CatRep& r);
// exact orbit-stabilizer criterion, valid for indecomposable representations
// of intransitive categorical groups
bool stabilizer_criterion_irreducible(const CatRep& r);

// one representation per G-invariant character of E
std::vector<CatRep> classify_one_dimensional(const XModPtr& xmod);

// pullback of a character along the action of a base element: e -> chi(X |> e)
AbelianCharacter char_pullback(const CrossedModule& m, const AbelianCharacter& chi, int x);

} // namespace catrep

#endif
