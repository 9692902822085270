#ifndef CATREP_TWOVECT_HPP
#define CATREP_TWOVECT_HPP

#include <vector>

#include "catrep/cyclotomic.hpp"
#include "catrep/xmod.hpp"

namespace catrep {

// A 1-morphism of 2Vect: a matrix over the natural numbers. Index
// conventions used throughout: block-diagonal sums run ascending in the
// middle index, Kronecker products are left-factor major, and the pair index
// of a monoidal product is row-major ((i,j) -> i*M + j).
struct NatMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> ent;

    NatMatrix() = default;
    NatMatrix(int r, int c) : rows(r), cols(c), ent(size_t(r) * size_t(c), 0) {}

    long long at(int i, int j) const { return ent[size_t(i) * cols + j]; }
    long long& at(int i, int j) { return ent[size_t(i) * cols + j]; }

    static NatMatrix identity(int n);
    static NatMatrix zero(int r, int c) { return NatMatrix(r, c); }
    // permutation matrix with a 1 at (i, sigma[i]); right action on points
    static NatMatrix permutation(const std::vector<int>& sigma);

    bool is_permutation() const;
    NatMatrix transpose() const;

    friend bool operator==(const NatMatrix& a, const NatMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.ent == b.ent;
    }
    friend bool operator!=(const NatMatrix& a, const NatMatrix& b) { return !(a == b); }
};

// A 2-morphism of 2Vect between two equal-shape 1-morphisms a -> b: per cell
// (i,j) an exact complex matrix of dimension a^i_j x b^i_j. Zero-dimensional
// blocks are legal and compose correctly.
struct TwoMorphism {
    NatMatrix source, target;
    std::vector<CycMatrix> blocks;

    const CycMatrix& block(int i, int j) const { return blocks[size_t(i) * source.cols + j]; }
    CycMatrix& block(int i, int j) { return blocks[size_t(i) * source.cols + j]; }
};

TwoMorphism make_two_morphism(NatMatrix source, NatMatrix target, std::vector<CycMatrix> blocks);
TwoMorphism two_identity(const NatMatrix& a, int conductor = 1);
TwoMorphism two_zero(const NatMatrix& a, const NatMatrix& b, int conductor = 1);
bool two_equal(const TwoMorphism& a, const TwoMorphism& b);

// vertical composition: componentwise matrix multiplication
TwoMorphism vcompose(const TwoMorphism& a, const TwoMorphism& b);
// horizontal composition of 1-morphisms: matrix product over N
NatMatrix hcompose1(const NatMatrix& a, const NatMatrix& b);
// horizontal composition of 2-morphisms: (a o b)^i_j = sum_k a^i_k (x) b^k_j
TwoMorphism hcompose2(const TwoMorphism& a, const TwoMorphism& b);

// the basis-permutation 2-morphism a.(b.c) -> (a.b).c
TwoMorphism associator(const NatMatrix& a, const NatMatrix& b, const NatMatrix& c);
TwoMorphism associator_inverse(const NatMatrix& a, const NatMatrix& b, const NatMatrix& c);

// monoidal product
long long boxtimes_obj(long long n, long long m);
NatMatrix boxtimes_nat(const NatMatrix& a, const NatMatrix& b);
TwoMorphism boxtimes_two(const TwoMorphism& a, const TwoMorphism& b);
// the basis-permutation 2-morphism (a [] b).(c [] d) -> (a.c) [] (b.d);
// identity whenever a,b or c,d are permutation matrices
TwoMorphism tensorator(const NatMatrix& a, const NatMatrix& b, const NatMatrix& c, const NatMatrix& d);

// monoidal sum (block diagonal), direct sum (entrywise), sum of 2-morphisms
long long boxplus_obj(long long n, long long m);
NatMatrix boxplus_nat(const NatMatrix& a, const NatMatrix& b);
TwoMorphism boxplus_two(const TwoMorphism& a, const TwoMorphism& b);
NatMatrix dsum_nat(const NatMatrix& a, const NatMatrix& b);
TwoMorphism dsum_two(const TwoMorphism& a, const TwoMorphism& b);
TwoMorphism add_two(const TwoMorphism& a, const TwoMorphism& b);

// cellwise inverse; requires source = target entrywise and invertible blocks
TwoMorphism vinverse(const TwoMorphism& a);

// 1-invertibility over N (permutation matrices exactly)
bool gl_check(const NatMatrix& a);
// 2-invertibility (equal source/target and invertible blocks)
bool gl_check(const TwoMorphism& a);

// The crossed module of GL(N): (mu_m)^N -> S_N with the coordinate
// permutation action, principal group realized as diagonal scalars that are
// m-th roots of unity.
XModPtr gl_crossed_module(int n, int mu);

} // namespace catrep

#endif
