#include "catrep/xmod.hpp"

#include <algorithm>
#include <numeric>

namespace catrep {

bool CrossedModule::boundary_trivial() const {
    for (int v : boundary.map)
        if (v != 0) return false;
    return true;
}

int CrossedModule::working_conductor() const {
    return std::lcm(principal->exponent(), base->order);
}

std::vector<int> CrossedModule::boundary_image() const {
    std::vector<int> img(boundary.map);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

std::vector<int> CrossedModule::boundary_kernel() const {
    std::vector<int> ker;
    for (int e = 0; e < principal->order; ++e)
        if (boundary.map[size_t(e)] == 0) ker.push_back(e);
    return ker;
}

XModPtr validate_xmod(GroupPtr principal, GroupPtr base, std::vector<int> boundary,
                      std::vector<std::vector<int>> action) {
    GroupHom bnd = validate_hom(principal, base, std::move(boundary));
    const FiniteGroup& e_grp = *principal;
    const FiniteGroup& g_grp = *base;
    if (int(action.size()) != g_grp.order)
        throw ValidationError("malformed-action", "one automorphism per base element required");
    for (int x = 0; x < g_grp.order; ++x) {
        const auto& ax = action[size_t(x)];
        if (int(ax.size()) != e_grp.order)
            throw ValidationError("malformed-action", "action row " + std::to_string(x) + " has wrong length");
        std::vector<bool> seen(size_t(e_grp.order), false);
        for (int v : ax) {
            if (v < 0 || v >= e_grp.order || seen[size_t(v)])
                throw ValidationError("action-not-automorphism",
                                      "X=" + std::to_string(x) + " is not a bijection of E");
            seen[size_t(v)] = true;
        }
        for (int e = 0; e < e_grp.order; ++e)
            for (int f = 0; f < e_grp.order; ++f)
                if (ax[size_t(e_grp.mul(e, f))] != e_grp.mul(ax[size_t(e)], ax[size_t(f)]))
                    throw ValidationError("action-not-automorphism", "X=" + std::to_string(x) +
                                                                         " fails on (e,e')=(" + std::to_string(e) +
                                                                         "," + std::to_string(f) + ")");
    }
    for (int e = 0; e < e_grp.order; ++e)
        if (action[0][size_t(e)] != e)
            throw ValidationError("action-not-automorphism",
                                  "identity acts non-trivially on e=" + std::to_string(e));
    for (int x = 0; x < g_grp.order; ++x)
        for (int y = 0; y < g_grp.order; ++y) {
            int xy = g_grp.mul(x, y);
            for (int e = 0; e < e_grp.order; ++e)
                if (action[size_t(xy)][size_t(e)] != action[size_t(x)][size_t(action[size_t(y)][size_t(e)])]
                    )
                    throw ValidationError("action-not-automorphism",
                                          "action is not functorial at (X,Y,e)=(" + std::to_string(x) + "," +
                                              std::to_string(y) + "," + std::to_string(e) + ")");
        }
    // equivariance: d(X |> e) = X d(e) X^{-1}
    for (int x = 0; x < g_grp.order; ++x)
        for (int e = 0; e < e_grp.order; ++e)
            if (bnd.map[size_t(action[size_t(x)][size_t(e)])] != g_grp.conjugate(x, bnd.map[size_t(e)]))
                throw ValidationError("equivariance",
                                      "witness (X,e)=(" + std::to_string(x) + "," + std::to_string(e) + ")");
    // Peiffer: d(e) |> e' = e e' e^{-1}
    for (int e = 0; e < e_grp.order; ++e)
        for (int f = 0; f < e_grp.order; ++f)
            if (action[size_t(bnd.map[size_t(e)])][size_t(f)] != e_grp.conjugate(e, f))
                throw ValidationError("peiffer",
                                      "witness (e,e')=(" + std::to_string(e) + "," + std::to_string(f) + ")");
    auto m = std::make_shared<CrossedModule>();
    m->principal = std::move(principal);
    m->base = std::move(base);
    m->boundary = std::move(bnd);
    m->action = std::move(action);
    return m;
}

bool same_xmod(const CrossedModule& a, const CrossedModule& b) {
    return same_group(*a.principal, *b.principal) && same_group(*a.base, *b.base) &&
           a.boundary.map == b.boundary.map && a.action == b.action;
}

std::vector<CatGroupMorphism> hom_set(const XModPtr& m, int x, int y) {
    int t = m->base->mul(y, m->base->inverse(x));
    std::vector<CatGroupMorphism> result;
    for (int e = 0; e < m->principal->order; ++e)
        if (m->bnd(e) == t) result.push_back(CatGroupMorphism{m, x, e});
    return result;
}

CatGroupMorphism identity_morphism(const XModPtr& m, int x) { return CatGroupMorphism{m, x, 0}; }

std::vector<CatGroupMorphism> all_morphisms(const XModPtr& m) {
    std::vector<CatGroupMorphism> result;
    for (int x = 0; x < m->base->order; ++x)
        for (int e = 0; e < m->principal->order; ++e) result.push_back(CatGroupMorphism{m, x, e});
    return result;
}

CatGroupMorphism tensor(const CatGroupMorphism& f, const CatGroupMorphism& g) {
    if (f.parent.get() != g.parent.get() && !same_xmod(*f.parent, *g.parent))
        throw std::invalid_argument("tensor: parent mismatch");
    const auto& m = *f.parent;
    int label = m.principal->mul(f.label, m.act(f.source, g.label));
    return CatGroupMorphism{f.parent, m.base->mul(f.source, g.source), label};
}

CatGroupMorphism tensor_inverse(const CatGroupMorphism& f) {
    const auto& m = *f.parent;
    int xs = m.base->inverse(f.source);
    int label = m.act(xs, m.principal->inverse(f.label));
    return CatGroupMorphism{f.parent, xs, label};
}

CatGroupMorphism compose(const CatGroupMorphism& f, const CatGroupMorphism& g) {
    if (f.parent.get() != g.parent.get() && !same_xmod(*f.parent, *g.parent))
        throw std::invalid_argument("compose: parent mismatch");
    if (f.target() != g.source) throw std::invalid_argument("compose: morphisms are not composable");
    const auto& m = *f.parent;
    return CatGroupMorphism{f.parent, f.source, m.principal->mul(g.label, f.label)};
}

XModClass classify(const CrossedModule& m) {
    XModClass c;
    c.transitive = int(m.boundary_image().size()) == m.base->order;
    c.intransitive = m.boundary_trivial();
    c.free = int(m.boundary_kernel().size()) == 1;
    return c;
}

XModPtr closure_xmod(const GroupPtr& k) {
    if (!k->is_abelian())
        throw ValidationError("non-abelian", "closure of a non-abelian group is not a categorical group");
    std::vector<int> id(static_cast<size_t>(k->order));
    std::iota(id.begin(), id.end(), 0);
    return validate_xmod(k, trivial_group(), std::vector<int>(size_t(k->order), 0), {id});
}

XModPtr wreath_xmod(int n, int mu) {
    if (n < 0 || mu < 1) throw std::domain_error("wreath_xmod: bad parameters");
    // E = (C_mu)^n encoded in base-mu digits, coordinate 0 most significant
    long long order = 1;
    for (int i = 0; i < n; ++i) order *= mu;
    if (order > max_group_order()) throw ValidationError("order-cap", "principal group too large");
    int e_order = int(order);
    auto digits = [&](int v) {
        std::vector<int> d(static_cast<size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            d[size_t(i)] = v % mu;
            v /= mu;
        }
        return d;
    };
    auto undigits = [&](const std::vector<int>& d) {
        int v = 0;
        for (int i = 0; i < n; ++i) v = v * mu + d[size_t(i)];
        return v;
    };
    std::vector<std::vector<int>> etab(static_cast<size_t>(e_order), std::vector<int>(static_cast<size_t>(e_order)));
    for (int a = 0; a < e_order; ++a)
        for (int b = 0; b < e_order; ++b) {
            auto da = digits(a), db = digits(b);
            for (int i = 0; i < n; ++i) da[size_t(i)] = (da[size_t(i)] + db[size_t(i)]) % mu;
            etab[size_t(a)][size_t(b)] = undigits(da);
        }
    GroupPtr e = validate_group(etab, "mu" + std::to_string(mu) + "^" + std::to_string(n));
    GroupPtr g = symmetric_group(n);
    std::vector<std::vector<int>> action(size_t(g->order), std::vector<int>(static_cast<size_t>(e_order)));
    for (int x = 0; x < g->order; ++x) {
        auto sigma = symmetric_group_element(n, x);
        for (int a = 0; a < e_order; ++a) {
            auto d = digits(a);
            std::vector<int> r(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) r[size_t(i)] = d[size_t(sigma[size_t(i)])];
            action[size_t(x)][size_t(a)] = undigits(r);
        }
    }
    return validate_xmod(e, g, std::vector<int>(static_cast<size_t>(e_order), 0), std::move(action));
}

XModPtr g23() {
    auto e = cyclic_group(3);
    auto g = cyclic_group(2);
    std::vector<std::vector<int>> action = {{0, 1, 2}, {0, 2, 1}};
    return validate_xmod(e, g, {0, 0, 0}, std::move(action));
}

} // namespace catrep
