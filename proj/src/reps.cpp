#include "catrep/reps.hpp"

#include <algorithm>
#include <numeric>

#include "catrep/intertwiners.hpp"

namespace catrep {

bool rep_equal(const CatRep& a, const CatRep& b) {
    if (a.dim != b.dim || a.base.perm != b.base.perm) return false;
    for (int i = 0; i < a.dim; ++i)
        if (!(a.chars[size_t(i)] == b.chars[size_t(i)])) return false;
    return same_xmod(*a.xmod, *b.xmod);
}

bool rep_less(const CatRep& a, const CatRep& b) {
    if (a.base.perm != b.base.perm) return a.base.perm < b.base.perm;
    std::vector<std::vector<int>> ea, eb;
    for (const auto& c : a.chars) ea.push_back(c.expmap);
    for (const auto& c : b.chars) eb.push_back(c.expmap);
    return ea < eb;
}

CatRep validate_rep(XModPtr xmod, int dim, PermAction base, std::vector<AbelianCharacter> chars) {
    if (dim < 0) throw ValidationError("malformed-rep", "negative dimension");
    if (!same_group(*base.group, *xmod->base))
        throw ValidationError("malformed-rep", "base action is not an action of the base group");
    base = validate_action(base.group, dim, base.perm);
    if (int(chars.size()) != dim) throw ValidationError("malformed-rep", "one character per coordinate required");
    int m = xmod->principal->exponent();
    for (int i = 0; i < dim; ++i) {
        const auto& c = chars[size_t(i)];
        if (c.modulus != m || int(c.expmap.size()) != xmod->principal->order)
            throw ValidationError("malformed-rep", "character " + std::to_string(i) + " has wrong modulus or length");
        for (int e = 0; e < xmod->principal->order; ++e) {
            if (c.expmap[size_t(e)] < 0 || c.expmap[size_t(e)] >= m)
                throw ValidationError("malformed-rep", "character exponent out of range");
            for (int f = 0; f < xmod->principal->order; ++f)
                if ((c.expmap[size_t(e)] + c.expmap[size_t(f)]) % m !=
                    c.expmap[size_t(xmod->principal->mul(e, f))])
                    throw ValidationError("malformed-rep", "coordinate " + std::to_string(i) +
                                                               " is not a character at (e,e')=(" +
                                                               std::to_string(e) + "," + std::to_string(f) + ")");
        }
    }
    // kernel condition: the base kills the boundary image
    for (int e = 0; e < xmod->principal->order; ++e) {
        int x = xmod->bnd(e);
        for (int p = 0; p < dim; ++p)
            if (base.apply(x, p) != p)
                throw ValidationError("kernel-condition", "boundary of e=" + std::to_string(e) +
                                                              " moves coordinate " + std::to_string(p));
    }
    // character equivariance along the base action
    for (int x = 0; x < xmod->base->order; ++x)
        for (int e = 0; e < xmod->principal->order; ++e)
            for (int i = 0; i < dim; ++i)
                if (chars[size_t(i)].expmap[size_t(xmod->act(x, e))] !=
                    chars[size_t(base.apply(x, i))].expmap[size_t(e)])
                    throw ValidationError("equivariance", "witness (X,e,i)=(" + std::to_string(x) + "," +
                                                              std::to_string(e) + "," + std::to_string(i) + ")");
    CatRep r;
    r.xmod = std::move(xmod);
    r.dim = dim;
    r.base = std::move(base);
    r.chars = std::move(chars);
    return r;
}

CatRep trivial_rep(const XModPtr& xmod, int dim) {
    PermAction base = trivial_action(xmod->base, dim);
    std::vector<AbelianCharacter> chars(size_t(dim),
                                        trivial_character(xmod->principal, xmod->principal->exponent()));
    return validate_rep(xmod, dim, std::move(base), std::move(chars));
}

NatMatrix rep_matrix(const CatRep& r, int x) { return NatMatrix::permutation(r.base.perm[size_t(x)]); }

TwoMorphism rep_apply(const CatRep& r, const CatGroupMorphism& f, int conductor) {
    if (!same_xmod(*r.xmod, *f.parent)) throw std::invalid_argument("rep_apply: morphism of another crossed module");
    if (conductor == 0) conductor = r.conductor();
    NatMatrix src = rep_matrix(r, f.source);
    NatMatrix tgt = rep_matrix(r, f.target());
    std::vector<CycMatrix> blocks;
    blocks.reserve(size_t(r.dim) * size_t(r.dim));
    for (int i = 0; i < r.dim; ++i)
        for (int j = 0; j < r.dim; ++j) {
            CycMatrix cell(int(src.at(i, j)), int(tgt.at(i, j)), conductor);
            if (src.at(i, j) == 1 && tgt.at(i, j) == 1) cell.set(0, 0, r.char_value(i, f.label, conductor));
            blocks.push_back(std::move(cell));
        }
    return TwoMorphism{std::move(src), std::move(tgt), std::move(blocks)};
}

AbelianCharacter char_pullback(const CrossedModule& m, const AbelianCharacter& chi, int x) {
    AbelianCharacter r = chi;
    for (int e = 0; e < m.principal->order; ++e) r.expmap[size_t(e)] = chi.expmap[size_t(m.act(x, e))];
    return r;
}

namespace {

bool char_invariant_under(const CrossedModule& m, const AbelianCharacter& chi, const std::vector<int>& elems) {
    for (int s : elems)
        if (!(char_pullback(m, chi, s) == chi)) return false;
    return true;
}

std::vector<CatRep> enumerate_equal(const XModPtr& xmod, int dim) {
    auto sym = symmetric_group(dim);
    auto homs = enumerate_homs(xmod->base, sym);
    auto all_chars = linear_characters(xmod->principal);
    std::vector<CatRep> result;
    for (const auto& hom : homs) {
        std::vector<std::vector<int>> perm(size_t(xmod->base->order));
        for (int x = 0; x < xmod->base->order; ++x) perm[size_t(x)] = symmetric_group_element(dim, hom.map[size_t(x)]);
        PermAction base{xmod->base, dim, std::move(perm)};
        bool kernel_ok = true;
        for (int e = 0; e < xmod->principal->order && kernel_ok; ++e)
            for (int p = 0; p < dim; ++p)
                if (base.apply(xmod->bnd(e), p) != p) {
                    kernel_ok = false;
                    break;
                }
        if (!kernel_ok) continue;
        auto orbs = orbits(base);
        // per orbit: stabilizer-invariant characters, propagated along a transversal
        std::vector<std::vector<AbelianCharacter>> candidates(orbs.size());
        bool any_empty = false;
        for (size_t o = 0; o < orbs.size(); ++o) {
            auto stab = stabilizer(base, orbs[o][0]);
            for (const auto& chi : all_chars)
                if (char_invariant_under(*xmod, chi, stab)) candidates[o].push_back(chi);
            if (candidates[o].empty()) any_empty = true;
        }
        if (any_empty) continue; // cannot happen (trivial character qualifies), kept for safety
        std::vector<size_t> pick(orbs.size(), 0);
        while (true) {
            std::vector<AbelianCharacter> chars(size_t(dim),
                                                trivial_character(xmod->principal, xmod->principal->exponent()));
            for (size_t o = 0; o < orbs.size(); ++o) {
                const auto& orbit = orbs[o];
                auto trans = transversal(base, orbit[0], orbit);
                const auto& chi = candidates[o][pick[o]];
                for (size_t p = 0; p < orbit.size(); ++p)
                    chars[size_t(orbit[p])] = char_pullback(*xmod, chi, trans[p]);
            }
            CatRep r;
            r.xmod = xmod;
            r.dim = dim;
            r.base = base;
            r.chars = std::move(chars);
            result.push_back(std::move(r));
            size_t o = 0;
            while (o < orbs.size() && ++pick[o] == candidates[o].size()) pick[o++] = 0;
            if (o == orbs.size()) break;
        }
    }
    std::sort(result.begin(), result.end(), rep_less);
    return result;
}

} // namespace

std::vector<CatRep> enumerate_reps(const XModPtr& xmod, int dim, UpTo mode) {
    std::vector<CatRep> all = enumerate_equal(xmod, dim);
    if (mode == UpTo::equality) return all;
    std::vector<CatRep> reps;
    for (const auto& r : all) {
        bool seen = false;
        for (const auto& kept : reps)
            if (is_isomorphic(kept, r).isomorphic) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(r);
    }
    return reps;
}

CatRep boxplus_rep(const CatRep& r, const CatRep& t) {
    if (!same_xmod(*r.xmod, *t.xmod)) throw std::invalid_argument("boxplus_rep: crossed-module mismatch");
    int n = r.dim + t.dim;
    std::vector<std::vector<int>> perm(size_t(r.xmod->base->order), std::vector<int>(size_t(n)));
    for (int x = 0; x < r.xmod->base->order; ++x) {
        for (int i = 0; i < r.dim; ++i) perm[size_t(x)][size_t(i)] = r.sigma(x, i);
        for (int i = 0; i < t.dim; ++i) perm[size_t(x)][size_t(r.dim + i)] = r.dim + t.sigma(x, i);
    }
    std::vector<AbelianCharacter> chars = r.chars;
    chars.insert(chars.end(), t.chars.begin(), t.chars.end());
    return validate_rep(r.xmod, n, PermAction{r.xmod->base, n, std::move(perm)}, std::move(chars));
}

CatRep boxtimes_rep(const CatRep& r, const CatRep& t) {
    if (!same_xmod(*r.xmod, *t.xmod)) throw std::invalid_argument("boxtimes_rep: crossed-module mismatch");
    int n = r.dim * t.dim;
    std::vector<std::vector<int>> perm(size_t(r.xmod->base->order), std::vector<int>(size_t(n)));
    std::vector<AbelianCharacter> chars;
    chars.reserve(size_t(n));
    for (int i = 0; i < r.dim; ++i)
        for (int j = 0; j < t.dim; ++j) chars.push_back(char_mul(r.chars[size_t(i)], t.chars[size_t(j)]));
    for (int x = 0; x < r.xmod->base->order; ++x)
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < t.dim; ++j)
                perm[size_t(x)][size_t(i * t.dim + j)] = r.sigma(x, i) * t.dim + t.sigma(x, j);
    return validate_rep(r.xmod, n, PermAction{r.xmod->base, n, std::move(perm)}, std::move(chars));
}

CatRep conjugate_rep(const CatRep& r, const std::vector<int>& perm) {
    if (int(perm.size()) != r.dim) throw std::invalid_argument("conjugate_rep: wrong permutation length");
    std::vector<int> inv(size_t(r.dim));
    for (int p = 0; p < r.dim; ++p) inv[size_t(perm[size_t(p)])] = p;
    std::vector<std::vector<int>> base(size_t(r.xmod->base->order), std::vector<int>(size_t(r.dim)));
    std::vector<AbelianCharacter> chars;
    chars.reserve(size_t(r.dim));
    for (int p = 0; p < r.dim; ++p) chars.push_back(r.chars[size_t(perm[size_t(p)])]);
    for (int x = 0; x < r.xmod->base->order; ++x)
        for (int p = 0; p < r.dim; ++p)
            base[size_t(x)][size_t(p)] = inv[size_t(r.sigma(x, perm[size_t(p)]))];
    return validate_rep(r.xmod, r.dim, PermAction{r.xmod->base, r.dim, std::move(base)}, std::move(chars));
}

bool is_decomposable(const CatRep& r) {
    if (r.dim == 0) throw std::invalid_argument("is_decomposable: zero-dimensional representation");
    return orbits(r.base).size() > 1;
}

Decomposition decompose(const CatRep& r) {
    if (r.dim == 0) throw std::invalid_argument("decompose: zero-dimensional representation");
    Decomposition d;
    auto orbs = orbits(r.base);
    for (const auto& orbit : orbs) {
        int k = int(orbit.size());
        std::vector<int> pos(size_t(r.dim), -1);
        for (int p = 0; p < k; ++p) pos[size_t(orbit[size_t(p)])] = p;
        std::vector<std::vector<int>> base(size_t(r.xmod->base->order), std::vector<int>(size_t(k)));
        std::vector<AbelianCharacter> chars;
        for (int p = 0; p < k; ++p) chars.push_back(r.chars[size_t(orbit[size_t(p)])]);
        for (int x = 0; x < r.xmod->base->order; ++x)
            for (int p = 0; p < k; ++p)
                base[size_t(x)][size_t(p)] = pos[size_t(r.sigma(x, orbit[size_t(p)]))];
        d.parts.push_back(
            validate_rep(r.xmod, k, PermAction{r.xmod->base, k, std::move(base)}, std::move(chars)));
        d.witness_perm.insert(d.witness_perm.end(), orbit.begin(), orbit.end());
    }
    return d;
}

bool stabilizer_criterion_irreducible(const CatRep& r) {
    if (!r.xmod->boundary_trivial())
        throw std::invalid_argument("stabilizer criterion applies to intransitive categorical groups only");
    if (r.dim == 0) return true;
    if (orbits(r.base).size() > 1) return false;
    auto stab = stabilizer(r.base, 0);
    std::vector<int> char_stab;
    for (int x = 0; x < r.xmod->base->order; ++x)
        if (char_pullback(*r.xmod, r.chars[0], x) == r.chars[0]) char_stab.push_back(x);
    return stab == char_stab;
}

bool is_irreducible(const CatRep& r) {
    if (r.dim == 0) return true;
    if (is_decomposable(r)) return false;
    if (r.xmod->boundary_trivial()) return stabilizer_criterion_irreducible(r);
    return !reducibility_witness(r).has_value();
}

std::vector<CatRep> classify_one_dimensional(const XModPtr& xmod) {
    std::vector<CatRep> result;
    for (const auto& chi : linear_characters(xmod->principal)) {
        bool invariant = true;
        for (int x = 0; x < xmod->base->order && invariant; ++x)
            if (!(char_pullback(*xmod, chi, x) == chi)) invariant = false;
        if (!invariant) continue;
        result.push_back(validate_rep(xmod, 1, trivial_action(xmod->base, 1), {chi}));
    }
    return result;
}

} // namespace catrep
