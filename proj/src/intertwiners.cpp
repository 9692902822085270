#include "catrep/intertwiners.hpp"

#include <algorithm>
#include <numeric>

namespace catrep {

namespace {

int pair_index(int i, int j, int cols) { return i * cols + j; }

// the combined right action of G on {0..N-1} x {0..M-1}
PermAction pair_action(const CatRep& r, const CatRep& t) {
    int n = r.dim, m = t.dim;
    std::vector<std::vector<int>> perm(size_t(r.xmod->base->order), std::vector<int>(size_t(n) * size_t(m)));
    for (int x = 0; x < r.xmod->base->order; ++x)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                perm[size_t(x)][size_t(pair_index(i, j, m))] = pair_index(r.sigma(x, i), t.sigma(x, j), m);
    return PermAction{r.xmod->base, n * m, std::move(perm)};
}

struct OrbitData {
    std::vector<std::pair<int, int>> cells;
    std::vector<int> pair_cells; // same, as pair indices
    std::vector<int> stab;       // stabilizer of the least cell, in G
    Subgroup sub;                // the stabilizer as a group
    std::vector<int> lambda;     // forced exponent (mod m) of the scalar on d(e)
    bool kernel_ok = true;
    std::vector<AbelianCharacter> extensions; // characters of sub matching lambda on d(E)
};

std::vector<OrbitData> orbit_data(const CatRep& r, const CatRep& t, std::vector<int>* orbit_of_out) {
    const CrossedModule& xm = *r.xmod;
    int m = xm.principal->exponent();
    PermAction pa = pair_action(r, t);
    auto orbs = orbits(pa);
    std::vector<int> orbit_of(size_t(pa.degree), -1);
    std::vector<OrbitData> data;
    for (size_t o = 0; o < orbs.size(); ++o) {
        OrbitData d;
        for (int cell : orbs[o]) {
            orbit_of[size_t(cell)] = int(o);
            d.pair_cells.push_back(cell);
            d.cells.emplace_back(cell / t.dim, cell % t.dim);
        }
        int i0 = d.cells[0].first, j0 = d.cells[0].second;
        d.stab = stabilizer(pa, d.pair_cells[0]);
        d.sub = make_subgroup(*xm.base, d.stab);
        d.lambda.resize(size_t(xm.principal->order));
        for (int e = 0; e < xm.principal->order; ++e)
            d.lambda[size_t(e)] =
                ((t.chars[size_t(j0)].expmap[size_t(e)] - r.chars[size_t(i0)].expmap[size_t(e)]) % m + m) % m;
        for (int k : xm.boundary_kernel())
            if (d.lambda[size_t(k)] != 0) d.kernel_ok = false;
        if (d.kernel_ok) {
            for (const auto& chi : linear_characters(d.sub.group)) {
                int c0 = std::lcm(chi.modulus, m);
                bool match = true;
                for (int e = 0; e < xm.principal->order && match; ++e) {
                    int se = d.sub.from_parent[size_t(xm.bnd(e))];
                    if (se < 0) throw std::logic_error("boundary image escapes a pair stabilizer");
                    long long lhs = (long long)chi.expmap[size_t(se)] * (c0 / chi.modulus) % c0;
                    long long rhs = (long long)d.lambda[size_t(e)] * (c0 / m) % c0;
                    if (lhs != rhs) match = false;
                }
                if (match) d.extensions.push_back(chi);
            }
        }
        data.push_back(std::move(d));
    }
    if (orbit_of_out) *orbit_of_out = std::move(orbit_of);
    return data;
}

void require_same_xmod(const CatRep& r, const CatRep& t, const char* who) {
    if (!same_xmod(*r.xmod, *t.xmod)) throw std::invalid_argument(std::string(who) + ": crossed-module mismatch");
}

bool shape_equivariant(const CatRep& r, const CatRep& t, const NatMatrix& shape, int* wx = nullptr) {
    for (int x = 0; x < r.xmod->base->order; ++x)
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < t.dim; ++j)
                if (shape.at(r.sigma(x, i), t.sigma(x, j)) != shape.at(i, j)) {
                    if (wx) *wx = x;
                    return false;
                }
    return true;
}

} // namespace

NatMatrix AdmissibleShapes::parameter_pattern() const {
    NatMatrix p(rows, cols);
    for (size_t o = 0; o < orbits.size(); ++o)
        if (orbits[o].admissible)
            for (auto [i, j] : orbits[o].cells) p.at(i, j) = 1 + static_cast<long long>(o);
    return p;
}

AdmissibleShapes admissible_shapes(const CatRep& r, const CatRep& t) {
    require_same_xmod(r, t, "admissible_shapes");
    AdmissibleShapes result;
    result.rows = r.dim;
    result.cols = t.dim;
    auto data = orbit_data(r, t, &result.orbit_of);
    for (const auto& d : data) {
        ShapeOrbit so;
        so.cells = d.cells;
        so.stabilizer = d.stab;
        if (!d.kernel_ok) {
            so.obstruction = "kernel-mismatch";
        } else if (d.extensions.empty()) {
            so.obstruction = "no-extension";
        } else {
            so.admissible = true;
        }
        result.orbits.push_back(std::move(so));
    }
    return result;
}

OneIntertwiner validate_one_intertwiner(const CatRep& r, const CatRep& t, const NatMatrix& shape,
                                        const std::vector<TwoMorphism>& action) {
    require_same_xmod(r, t, "validate_one_intertwiner");
    const CrossedModule& xm = *r.xmod;
    const GroupPtr& g = xm.base;
    if (shape.rows != r.dim || shape.cols != t.dim)
        throw ValidationError("malformed-intertwiner", "shape is not dim(R) x dim(T)");
    for (long long v : shape.ent)
        if (v < 0) throw ValidationError("malformed-intertwiner", "negative multiplicity");
    int wx = 0;
    if (!shape_equivariant(r, t, shape, &wx))
        throw ValidationError("shape-equivariance", "R_b(X) h != h T_b(X) at X=" + std::to_string(wx));
    if (int(action.size()) != g->order)
        throw ValidationError("malformed-intertwiner", "one 2-morphism per base object required");
    for (int x = 0; x < g->order; ++x) {
        NatMatrix src = hcompose1(rep_matrix(r, x), shape);
        NatMatrix tgt = hcompose1(shape, rep_matrix(t, x));
        if (!(action[size_t(x)].source == src) || !(action[size_t(x)].target == tgt))
            throw ValidationError("malformed-intertwiner",
                                  "component at X=" + std::to_string(x) + " has wrong source or target");
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < t.dim; ++j) {
                const CycMatrix& blk = action[size_t(x)].block(i, j);
                if (blk.rows() != src.at(i, j) || blk.cols() != tgt.at(i, j))
                    throw ValidationError("malformed-intertwiner", "component at X=" + std::to_string(x) +
                                                                       " has a mis-sized cell");
                if (!blk.is_invertible())
                    throw ValidationError("cell-not-invertible", "component at X=" + std::to_string(x));
            }
    }
    if (!two_equal(action[0], two_identity(shape, action[0].blocks.empty() ? 1 : action[0].blocks[0].conductor())))
        throw ValidationError("cocycle", "component at the identity is not the identity 2-morphism");
    // cocycle law on generators of G (together with the identity component
    // this pins the whole left action)
    for (int gen : generating_set(*g))
        for (int y = 0; y < g->order; ++y) {
            int gy = g->mul(gen, y);
            for (int i = 0; i < r.dim; ++i)
                for (int j = 0; j < t.dim; ++j) {
                    const CycMatrix& lhs = action[size_t(gy)].block(i, j);
                    CycMatrix rhs = action[size_t(y)].block(r.sigma(gen, i), j) *
                                    action[size_t(gen)].block(i, t.sigma(g->inverse(y), j));
                    if (!(lhs == rhs))
                        throw ValidationError("cocycle", "witness (X,Y,cell)=(" + std::to_string(gen) + "," +
                                                             std::to_string(y) + ",(" + std::to_string(i) + "," +
                                                             std::to_string(j) + "))");
                }
        }
    // naturality on generators of E
    int conductor = r.conductor();
    for (int e : generating_set(*xm.principal)) {
        int de = xm.bnd(e);
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < t.dim; ++j) {
                CycNumber scalar = r.char_value(i, xm.principal->inverse(e), conductor) *
                                   t.char_value(j, e, conductor);
                CycMatrix expect =
                    CycMatrix::identity(int(shape.at(i, j)), conductor).scaled(scalar);
                if (!(action[size_t(de)].block(i, j) == expect))
                    throw ValidationError("naturality", "witness (e,cell)=(" + std::to_string(e) + ",(" +
                                                            std::to_string(i) + "," + std::to_string(j) + "))");
            }
    }
    return OneIntertwiner{r, t, shape, action};
}

OneIntertwiner identity_intertwiner(const CatRep& r) {
    NatMatrix shape = NatMatrix::identity(r.dim);
    std::vector<TwoMorphism> action;
    action.reserve(size_t(r.xmod->base->order));
    for (int x = 0; x < r.xmod->base->order; ++x)
        action.push_back(two_identity(rep_matrix(r, x), r.conductor()));
    return OneIntertwiner{r, r, std::move(shape), std::move(action)};
}

OneIntertwiner hcompose_intertwiners(const OneIntertwiner& h, const OneIntertwiner& k) {
    if (!rep_equal(h.target, k.source))
        throw std::invalid_argument("hcompose_intertwiners: middle representation mismatch");
    const CatRep& mid = h.target;
    int conductor = h.source.conductor();
    NatMatrix shape = hcompose1(h.shape, k.shape);
    std::vector<TwoMorphism> action;
    action.reserve(h.action.size());
    for (int x = 0; x < h.source.xmod->base->order; ++x) {
        TwoMorphism a = hcompose2(h.action[size_t(x)], two_identity(k.shape, conductor));
        TwoMorphism m = associator_inverse(h.shape, rep_matrix(mid, x), k.shape);
        TwoMorphism b = hcompose2(two_identity(h.shape, conductor), k.action[size_t(x)]);
        action.push_back(vcompose(vcompose(a, m), b));
    }
    return OneIntertwiner{h.source, k.target, std::move(shape), std::move(action)};
}

OneIntertwiner boxplus_intertwiner(const OneIntertwiner& h, const OneIntertwiner& k) {
    CatRep src = boxplus_rep(h.source, k.source);
    CatRep tgt = boxplus_rep(h.target, k.target);
    NatMatrix shape = boxplus_nat(h.shape, k.shape);
    std::vector<TwoMorphism> action;
    for (size_t x = 0; x < h.action.size(); ++x) action.push_back(boxplus_two(h.action[x], k.action[x]));
    return OneIntertwiner{std::move(src), std::move(tgt), std::move(shape), std::move(action)};
}

OneIntertwiner boxtimes_intertwiner(const OneIntertwiner& h, const OneIntertwiner& k) {
    CatRep src = boxtimes_rep(h.source, k.source);
    CatRep tgt = boxtimes_rep(h.target, k.target);
    NatMatrix shape = boxtimes_nat(h.shape, k.shape);
    std::vector<TwoMorphism> action;
    for (int x = 0; x < h.source.xmod->base->order; ++x) {
        TwoMorphism pre = tensorator(rep_matrix(h.source, x), rep_matrix(k.source, x), h.shape, k.shape);
        TwoMorphism core = boxtimes_two(h.action[size_t(x)], k.action[size_t(x)]);
        TwoMorphism post = tensorator(h.shape, k.shape, rep_matrix(h.target, x), rep_matrix(k.target, x));
        action.push_back(vcompose(vcompose(pre, core), vinverse(post)));
    }
    return OneIntertwiner{std::move(src), std::move(tgt), std::move(shape), std::move(action)};
}

TwoIntertwiner boxplus_intertwiner2(const TwoIntertwiner& p, const TwoIntertwiner& q) {
    return TwoIntertwiner{boxplus_intertwiner(p.source, q.source), boxplus_intertwiner(p.target, q.target),
                          boxplus_two(p.cell, q.cell)};
}

TwoIntertwiner boxtimes_intertwiner2(const TwoIntertwiner& p, const TwoIntertwiner& q) {
    return TwoIntertwiner{boxtimes_intertwiner(p.source, q.source), boxtimes_intertwiner(p.target, q.target),
                          boxtimes_two(p.cell, q.cell)};
}

TwoIntertwiner validate_two_intertwiner(const OneIntertwiner& h, const OneIntertwiner& k,
                                        const TwoMorphism& cell) {
    if (!rep_equal(h.source, k.source) || !rep_equal(h.target, k.target))
        throw std::invalid_argument("validate_two_intertwiner: 1-intertwiners between different representations");
    if (!(cell.source == h.shape) || !(cell.target == k.shape))
        throw ValidationError("malformed-intertwiner", "cell does not run h -> k");
    const GroupPtr& g = h.source.xmod->base;
    for (int x = 0; x < g->order; ++x)
        for (int i = 0; i < h.source.dim; ++i)
            for (int j = 0; j < h.target.dim; ++j) {
                CycMatrix lhs = h.action[size_t(x)].block(i, j) *
                                cell.block(i, h.target.sigma(g->inverse(x), j));
                CycMatrix rhs = cell.block(h.source.sigma(x, i), j) * k.action[size_t(x)].block(i, j);
                if (!(lhs == rhs))
                    throw ValidationError("modification", "witness (X,cell)=(" + std::to_string(x) + ",(" +
                                                              std::to_string(i) + "," + std::to_string(j) + "))");
            }
    return TwoIntertwiner{h, k, cell};
}

TwoIntertwiner identity_two_intertwiner(const OneIntertwiner& h) {
    return TwoIntertwiner{h, h, two_identity(h.shape, h.source.conductor())};
}

TwoIntertwiner vcompose_two_intertwiners(const TwoIntertwiner& p, const TwoIntertwiner& q) {
    return TwoIntertwiner{p.source, q.target, vcompose(p.cell, q.cell)};
}

HomSpace two_intertwiner_space(const OneIntertwiner& h, const OneIntertwiner& k) {
    if (!rep_equal(h.source, k.source) || !rep_equal(h.target, k.target))
        throw std::invalid_argument("two_intertwiner_space: 1-intertwiners between different representations");
    const CatRep& r = h.source;
    const CatRep& t = h.target;
    const GroupPtr& g = r.xmod->base;
    int conductor = r.conductor();
    int n = r.dim, m = t.dim;
    // flatten the unknown cells phi^i_j (h^i_j x k^i_j matrices)
    std::vector<int> offset(size_t(n) * size_t(m) + 1, 0);
    for (int c = 0; c < n * m; ++c) {
        int i = c / m, j = c % m;
        offset[size_t(c) + 1] = offset[size_t(c)] + int(h.shape.at(i, j) * k.shape.at(i, j));
    }
    int vars = offset[size_t(n) * size_t(m)];
    auto var_of = [&](int i, int j, int row, int col) {
        return offset[size_t(pair_index(i, j, m))] + row * int(k.shape.at(i, j)) + col;
    };
    std::vector<std::vector<CycNumber>> rows;
    for (int x = 1; x < g->order; ++x) {
        int xi = g->inverse(x);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                // th(X)^i_j phi^i_{j tau^-1} = phi^{i sigma}_j tk(X)^i_j
                const CycMatrix& th = h.action[size_t(x)].block(i, j);
                const CycMatrix& tk = k.action[size_t(x)].block(i, j);
                int jt = t.sigma(xi, j);
                int is = r.sigma(x, i);
                int out_rows = th.rows();
                int out_cols = tk.cols();
                for (int rr = 0; rr < out_rows; ++rr)
                    for (int cc = 0; cc < out_cols; ++cc) {
                        std::vector<CycNumber> eq(size_t(vars), CycNumber::zero(conductor));
                        for (int s = 0; s < th.cols(); ++s)
                            eq[size_t(var_of(i, jt, s, cc))] += th.at(rr, s);
                        for (int s = 0; s < tk.rows(); ++s)
                            eq[size_t(var_of(is, j, rr, s))] -= tk.at(s, cc);
                        rows.push_back(std::move(eq));
                    }
            }
    }
    CycMatrix system(int(rows.size()), vars, conductor);
    for (size_t rr = 0; rr < rows.size(); ++rr)
        for (int v = 0; v < vars; ++v) system.set(int(rr), v, rows[rr][size_t(v)]);
    auto rn = system.rank_nullspace();
    HomSpace space;
    space.dimension = int(rn.nullspace.size());
    for (const auto& vec : rn.nullspace) {
        TwoMorphism cell = two_zero(h.shape, k.shape, conductor);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                for (int row = 0; row < int(h.shape.at(i, j)); ++row)
                    for (int col = 0; col < int(k.shape.at(i, j)); ++col)
                        cell.block(i, j).set(row, col, vec.at(var_of(i, j, row, col), 0));
        space.basis.push_back(TwoIntertwiner{h, k, std::move(cell)});
    }
    return space;
}

bool isomorphic_to_identity(const OneIntertwiner& h) {
    if (!rep_equal(h.source, h.target)) return false;
    if (!(h.shape == NatMatrix::identity(h.source.dim))) return false;
    const CatRep& r = h.source;
    const GroupPtr& g = r.xmod->base;
    int conductor = r.conductor();
    // solve d_{i sigma_X} = c_X(i) d_i over each base orbit
    std::vector<CycNumber> d(size_t(r.dim), CycNumber::zero(conductor));
    std::vector<bool> known(size_t(r.dim), false);
    for (const auto& orbit : orbits(r.base)) {
        d[size_t(orbit[0])] = CycNumber::one(conductor);
        known[size_t(orbit[0])] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int x = 0; x < g->order; ++x)
                for (int i : orbit) {
                    if (!known[size_t(i)]) continue;
                    int is = r.sigma(x, i);
                    CycNumber v = h.action[size_t(x)].block(i, is).at(0, 0) * d[size_t(i)];
                    if (!known[size_t(is)]) {
                        d[size_t(is)] = v;
                        known[size_t(is)] = true;
                        grew = true;
                    } else if (!(d[size_t(is)] == v)) {
                        return false;
                    }
                }
        }
    }
    return true;
}

std::vector<std::vector<AbelianCharacter>> orbit_character_choices(const CatRep& r, const CatRep& t,
                                                                   const NatMatrix& shape) {
    require_same_xmod(r, t, "orbit_character_choices");
    for (long long v : shape.ent)
        if (v != 0 && v != 1) throw std::invalid_argument("orbit_character_choices: shape must be 0/1");
    if (!shape_equivariant(r, t, shape)) return {};
    auto data = orbit_data(r, t, nullptr);
    std::vector<std::vector<AbelianCharacter>> per_orbit;
    for (const auto& d : data) {
        if (shape.at(d.cells[0].first, d.cells[0].second) == 0) continue;
        if (d.extensions.empty()) return {};
        per_orbit.push_back(d.extensions);
    }
    std::vector<std::vector<AbelianCharacter>> result;
    std::vector<size_t> pick(per_orbit.size(), 0);
    if (per_orbit.empty()) return {std::vector<AbelianCharacter>{}};
    while (true) {
        std::vector<AbelianCharacter> choice;
        for (size_t o = 0; o < per_orbit.size(); ++o) choice.push_back(per_orbit[o][pick[o]]);
        result.push_back(std::move(choice));
        size_t o = 0;
        while (o < per_orbit.size() && ++pick[o] == per_orbit[o].size()) pick[o++] = 0;
        if (o == per_orbit.size()) break;
    }
    return result;
}

OneIntertwiner intertwiner_from_orbit_characters(const CatRep& r, const CatRep& t, const NatMatrix& shape,
                                                 const std::vector<AbelianCharacter>& orbit_chars) {
    require_same_xmod(r, t, "intertwiner_from_orbit_characters");
    const CrossedModule& xm = *r.xmod;
    const GroupPtr& g = xm.base;
    int conductor = r.conductor();
    std::vector<int> orbit_of;
    auto data = orbit_data(r, t, &orbit_of);
    PermAction pa = pair_action(r, t);
    // per supported orbit: its character, subgroup view and transversal
    std::vector<int> support_index(data.size(), -1);
    {
        int s = 0;
        for (size_t o = 0; o < data.size(); ++o)
            if (shape.at(data[o].cells[0].first, data[o].cells[0].second) == 1) support_index[o] = s++;
        if (s != int(orbit_chars.size()))
            throw std::invalid_argument("intertwiner_from_orbit_characters: one character per supported orbit");
    }
    std::vector<std::vector<int>> trans(data.size());
    for (size_t o = 0; o < data.size(); ++o)
        if (support_index[o] >= 0) trans[o] = transversal(pa, data[o].pair_cells[0], data[o].pair_cells);
    auto trans_of = [&](int cell) {
        int o = orbit_of[size_t(cell)];
        const auto& pcs = data[size_t(o)].pair_cells;
        size_t pos = size_t(std::lower_bound(pcs.begin(), pcs.end(), cell) - pcs.begin());
        return trans[size_t(o)][pos];
    };
    std::vector<TwoMorphism> action;
    for (int x = 0; x < g->order; ++x) {
        int xi = g->inverse(x);
        NatMatrix src = hcompose1(rep_matrix(r, x), shape);
        NatMatrix tgt = hcompose1(shape, rep_matrix(t, x));
        TwoMorphism th = two_zero(src, tgt, conductor);
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < t.dim; ++j) {
                if (src.at(i, j) != 1) continue;
                int p = pair_index(r.sigma(x, i), j, t.dim);
                int o = orbit_of[size_t(p)];
                if (support_index[size_t(o)] < 0) throw std::logic_error("support is not orbit-closed");
                const OrbitData& od = data[size_t(o)];
                const AbelianCharacter& chi = orbit_chars[size_t(support_index[size_t(o)])];
                int pxi = pa.apply(xi, p);
                int elt = g->mul(g->mul(trans_of(pxi), x), g->inverse(trans_of(p)));
                int se = od.sub.from_parent[size_t(elt)];
                if (se < 0) throw std::logic_error("transversal combination escapes the stabilizer");
                th.block(i, j).set(0, 0, chi.value(se, conductor));
            }
        action.push_back(std::move(th));
    }
    return validate_one_intertwiner(r, t, shape, action);
}

IsoResult is_isomorphic(const CatRep& r, const CatRep& t) {
    require_same_xmod(r, t, "is_isomorphic");
    if (r.dim != t.dim) return {false, std::nullopt};
    if (r.dim == 0) return {true, OneIntertwiner{r, t, NatMatrix(0, 0), identity_intertwiner(r).action}};
    const GroupPtr& g = r.xmod->base;
    std::vector<int> pi(static_cast<size_t>(r.dim));
    std::iota(pi.begin(), pi.end(), 0);
    do {
        bool equivariant = true;
        for (int x = 0; x < g->order && equivariant; ++x)
            for (int i = 0; i < r.dim; ++i)
                if (pi[size_t(r.sigma(x, i))] != t.sigma(x, pi[size_t(i)])) {
                    equivariant = false;
                    break;
                }
        if (!equivariant) continue;
        NatMatrix shape = NatMatrix::permutation(pi);
        auto choices = orbit_character_choices(r, t, shape);
        if (choices.empty()) continue;
        OneIntertwiner witness = intertwiner_from_orbit_characters(r, t, shape, choices[0]);
        return {true, std::move(witness)};
    } while (std::next_permutation(pi.begin(), pi.end()));
    return {false, std::nullopt};
}

namespace {

// all-ones fibers over a 0/1 shape whose matched coordinates carry equal
// characters; used for the inclusion/projection pair of a decomposition
OneIntertwiner unit_fiber_intertwiner(const CatRep& r, const CatRep& t, const NatMatrix& shape) {
    const GroupPtr& g = r.xmod->base;
    int conductor = r.conductor();
    std::vector<TwoMorphism> action;
    for (int x = 0; x < g->order; ++x) {
        NatMatrix src = hcompose1(rep_matrix(r, x), shape);
        NatMatrix tgt = hcompose1(shape, rep_matrix(t, x));
        TwoMorphism th = two_zero(src, tgt, conductor);
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < t.dim; ++j)
                if (src.at(i, j) == 1) th.block(i, j).set(0, 0, CycNumber::one(conductor));
        action.push_back(std::move(th));
    }
    return validate_one_intertwiner(r, t, shape, action);
}

// whether 1_S is a retract of the endo-intertwiner H (same S), i.e. phi psi =
// identity for some 2-intertwiners phi: 1_S -> H, psi: H -> 1_S. The solution
// spaces decouple over base orbits, so a nonzero pairing per orbit suffices.
bool identity_is_retract(const CatRep& s, const OneIntertwiner& big) {
    OneIntertwiner id_s = identity_intertwiner(s);
    HomSpace into = two_intertwiner_space(id_s, big);
    HomSpace onto = two_intertwiner_space(big, id_s);
    if (into.dimension == 0 || onto.dimension == 0) return false;
    for (const auto& orbit : orbits(s.base)) {
        int q0 = orbit[0];
        bool found = false;
        for (const auto& phi : into.basis) {
            for (const auto& psi : onto.basis) {
                CycMatrix prod = phi.cell.block(q0, q0) * psi.cell.block(q0, q0);
                if (!prod.at(0, 0).is_zero()) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) return false;
    }
    return true;
}

} // namespace

std::optional<ReducibilityWitness> reducibility_witness(const CatRep& r) {
    if (r.dim == 0) return std::nullopt;
    if (is_decomposable(r)) {
        Decomposition d = decompose(r);
        const CatRep& s = d.parts[0];
        auto first_orbit = orbits(r.base)[0];
        NatMatrix inc(s.dim, r.dim);
        for (int p = 0; p < s.dim; ++p) inc.at(p, first_orbit[size_t(p)]) = 1;
        OneIntertwiner h = unit_fiber_intertwiner(s, r, inc);
        OneIntertwiner hp = unit_fiber_intertwiner(r, s, inc.transpose());
        return ReducibilityWitness{s, std::move(h), std::move(hp)};
    }
    for (int m = 1; m < r.dim; ++m) {
        for (const CatRep& s : enumerate_reps(r.xmod, m, UpTo::equality)) {
            auto adm_in = admissible_shapes(s, r);
            auto adm_out = admissible_shapes(r, s);
            std::vector<int> in_orbits, out_orbits;
            for (size_t o = 0; o < adm_in.orbits.size(); ++o)
                if (adm_in.orbits[o].admissible) in_orbits.push_back(int(o));
            for (size_t o = 0; o < adm_out.orbits.size(); ++o)
                if (adm_out.orbits[o].admissible) out_orbits.push_back(int(o));
            if (in_orbits.empty() || out_orbits.empty()) continue;
            for (unsigned in_mask = 1; in_mask < (1u << in_orbits.size()); ++in_mask) {
                NatMatrix hshape(s.dim, r.dim);
                for (size_t b = 0; b < in_orbits.size(); ++b)
                    if (in_mask & (1u << b))
                        for (auto [i, j] : adm_in.orbits[size_t(in_orbits[b])].cells) hshape.at(i, j) = 1;
                for (unsigned out_mask = 1; out_mask < (1u << out_orbits.size()); ++out_mask) {
                    NatMatrix pshape(r.dim, s.dim);
                    for (size_t b = 0; b < out_orbits.size(); ++b)
                        if (out_mask & (1u << b))
                            for (auto [i, j] : adm_out.orbits[size_t(out_orbits[b])].cells) pshape.at(i, j) = 1;
                    NatMatrix comp = hcompose1(hshape, pshape);
                    bool diag_ok = true;
                    for (int q = 0; q < s.dim; ++q)
                        if (comp.at(q, q) == 0) diag_ok = false;
                    if (!diag_ok) continue;
                    for (const auto& hchoice : orbit_character_choices(s, r, hshape)) {
                        OneIntertwiner h = intertwiner_from_orbit_characters(s, r, hshape, hchoice);
                        for (const auto& pchoice : orbit_character_choices(r, s, pshape)) {
                            OneIntertwiner hp = intertwiner_from_orbit_characters(r, s, pshape, pchoice);
                            OneIntertwiner big = hcompose_intertwiners(h, hp);
                            if (identity_is_retract(s, big))
                                return ReducibilityWitness{s, std::move(h), std::move(hp)};
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace catrep
