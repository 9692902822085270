#ifndef CATREP_XMOD_HPP
#define CATREP_XMOD_HPP

#include <memory>
#include <vector>

#include "catrep/groups.hpp"

namespace catrep {

struct CrossedModule;
using XModPtr = std::shared_ptr<const CrossedModule>;

// A crossed module: boundary E -> G with a G-action on E by automorphisms
// satisfying equivariance and the Peiffer identity. This is the canonical
// store; the categorical group it generates is a derived view.
struct CrossedModule {
    GroupPtr principal; // E
    GroupPtr base;      // G
    GroupHom boundary;  // E -> G
    std::vector<std::vector<int>> action; // action[X][e] = X |> e

    int act(int x, int e) const { return action[size_t(x)][size_t(e)]; }
    int bnd(int e) const { return boundary.map[size_t(e)]; }
    bool boundary_trivial() const;
    // scalars for this crossed module live in Q(zeta_c), c = lcm(exp E, |G|)
    int working_conductor() const;
    // image of the boundary as a sorted element list (a normal subgroup of G)
    std::vector<int> boundary_image() const;
    std::vector<int> boundary_kernel() const;
};

XModPtr validate_xmod(GroupPtr principal, GroupPtr base, std::vector<int> boundary,
                      std::vector<std::vector<int>> action);

bool same_xmod(const CrossedModule& a, const CrossedModule& b);

// A morphism of the categorical group generated by a crossed module:
// source object X in G with a label e in E; the target is d(e)X.
struct CatGroupMorphism {
    XModPtr parent;
    int source = 0;
    int label = 0;

    int target() const { return parent->base->mul(parent->bnd(label), source); }
    friend bool operator==(const CatGroupMorphism& a, const CatGroupMorphism& b) {
        return a.source == b.source && a.label == b.label;
    }
};

// All morphisms X -> Y, i.e. labels in the boundary fiber over Y X^{-1}.
std::vector<CatGroupMorphism> hom_set(const XModPtr& m, int x, int y);
CatGroupMorphism identity_morphism(const XModPtr& m, int x);
std::vector<CatGroupMorphism> all_morphisms(const XModPtr& m);

// monoidal product f o g = f (X |> g), and its inverse morphism
CatGroupMorphism tensor(const CatGroupMorphism& f, const CatGroupMorphism& g);
CatGroupMorphism tensor_inverse(const CatGroupMorphism& f);
// vertical composition (target f = source g): label is the product g f in E
CatGroupMorphism compose(const CatGroupMorphism& f, const CatGroupMorphism& g);

struct XModClass {
    bool transitive = false;   // boundary surjective
    bool intransitive = false; // boundary trivial
    bool free = false;         // boundary injective
};
XModClass classify(const CrossedModule& m);

// standard families
XModPtr closure_xmod(const GroupPtr& k); // abelian K over the trivial base
XModPtr wreath_xmod(int n, int mu = 4);  // (mu-th roots)^n -> S_n, coordinate permutations
XModPtr g23();                           // C_3 over C_2 with the inversion action

} // namespace catrep

#endif
