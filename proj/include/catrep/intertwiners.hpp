#ifndef CATREP_INTERTWINERS_HPP
#define CATREP_INTERTWINERS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "catrep/reps.hpp"

namespace catrep {

// A 1-intertwiner R -> T: an equivariant N x M shape over the naturals plus,
// for every base object X, an invertible 2-cell R(X) o h -> h o T(X). The
// cells define a vector bundle on N x M with a fiberwise group action; the
// bundle view is exposed through admissible_shapes and the orbit helpers.
struct OneIntertwiner {
    CatRep source, target;
    NatMatrix shape;
    std::vector<TwoMorphism> action; // indexed by X in G

    const TwoMorphism& component(int x) const { return action[size_t(x)]; }
};

struct TwoIntertwiner {
    OneIntertwiner source, target; // h, k with the same R, T
    TwoMorphism cell;              // h_bullet -> k_bullet
};

// Orbit structure of the combined action on {0..N-1} x {0..M-1} with the
// per-orbit character constraint: a nonzero fiber needs the forced scalar on
// the boundary image to be well-defined and to extend to a character of the
// point stabilizer.
struct ShapeOrbit {
    std::vector<std::pair<int, int>> cells; // sorted, least cell first
    bool admissible = false;
    std::string obstruction; // "", "kernel-mismatch" or "no-extension"
    std::vector<int> stabilizer; // of the least cell
};

struct AdmissibleShapes {
    int rows = 0, cols = 0;
    std::vector<ShapeOrbit> orbits;
    std::vector<int> orbit_of; // cell index i*M+j -> orbit id
    // entry (i,j) = 1+orbit id where a free parameter may sit, 0 where forced zero
    NatMatrix parameter_pattern() const;
};

AdmissibleShapes admissible_shapes(const CatRep& r, const CatRep& t);

OneIntertwiner validate_one_intertwiner(const CatRep& r, const CatRep& t, const NatMatrix& shape,
                                        const std::vector<TwoMorphism>& action);
OneIntertwiner identity_intertwiner(const CatRep& r);

// horizontal composite R -> S -> T; inserts the middle associator
OneIntertwiner hcompose_intertwiners(const OneIntertwiner& h, const OneIntertwiner& k);

OneIntertwiner boxtimes_intertwiner(const OneIntertwiner& h, const OneIntertwiner& k);
OneIntertwiner boxplus_intertwiner(const OneIntertwiner& h, const OneIntertwiner& k);
TwoIntertwiner boxtimes_intertwiner2(const TwoIntertwiner& p, const TwoIntertwiner& q);
TwoIntertwiner boxplus_intertwiner2(const TwoIntertwiner& p, const TwoIntertwiner& q);

TwoIntertwiner validate_two_intertwiner(const OneIntertwiner& h, const OneIntertwiner& k,
                                        const TwoMorphism& cell);
TwoIntertwiner identity_two_intertwiner(const OneIntertwiner& h);
TwoIntertwiner vcompose_two_intertwiners(const TwoIntertwiner& p, const TwoIntertwiner& q);

// exact solution space of the modification condition
struct HomSpace {
    int dimension = 0;
    std::vector<TwoIntertwiner> basis; // echelonized deterministically
};
HomSpace two_intertwiner_space(const OneIntertwiner& h, const OneIntertwiner& k);

// whether an endo-intertwiner with identity-permutation shape is isomorphic
// to the identity 1-intertwiner (invertible 2-intertwiner to 1_R)
bool isomorphic_to_identity(const OneIntertwiner& h);

struct IsoResult {
    bool isomorphic = false;
    std::optional<OneIntertwiner> witness; // invertible, permutation shape
};
IsoResult is_isomorphic(const CatRep& r, const CatRep& t);

struct ReducibilityWitness {
    CatRep sub;                // S with dim S < dim R
    OneIntertwiner inclusion;  // h:  S -> R
    OneIntertwiner projection; // h': R -> S
};
// Bounded search over 0/1 shapes and per-orbit stabilizer characters for a
// pair with h o h' isomorphic to the identity on S.
std::optional<ReducibilityWitness> reducibility_witness(const CatRep& r);

// Builds the 1-intertwiner with the given 0/1 shape from one stabilizer
// character per pair orbit (listed in orbit order for orbits meeting the
// support). Characters live on the stabilizer subgroups of G.
OneIntertwiner intertwiner_from_orbit_characters(const CatRep& r, const CatRep& t, const NatMatrix& shape,
                                                 const std::vector<AbelianCharacter>& orbit_chars);

// All valid per-orbit character choices for a 0/1 shape (empty when the
// shape is inadmissible); each entry is one character per supported orbit.
std::vector<std::vector<AbelianCharacter>> orbit_character_choices(const CatRep& r, const CatRep& t,
                                                                   const NatMatrix& shape);

} // namespace catrep

#endif
