#include "catrep/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace catrep {

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int FiniteGroup::exponent() const {
    int e = 1;
    for (int a = 0; a < order; ++a) e = std::lcm(e, element_order(a));
    return e;
}

int max_group_order() {
    static int cap = [] {
        if (const char* env = std::getenv("CATREP_MAX_GROUP_ORDER")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 512;
    }();
    return cap;
}

GroupPtr validate_group(const std::vector<std::vector<int>>& table, std::string name) {
    int n = int(table.size());
    if (n == 0) throw ValidationError("empty-table", "a group needs at least the identity");
    if (n > max_group_order())
        throw ValidationError("order-cap", "order " + std::to_string(n) + " exceeds cap " +
                                               std::to_string(max_group_order()));
    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->name = std::move(name);
    g->table.resize(size_t(n) * n);
    for (int a = 0; a < n; ++a) {
        if (int(table[size_t(a)].size()) != n)
            throw ValidationError("malformed-table", "row " + std::to_string(a) + " is not square");
        for (int b = 0; b < n; ++b) {
            int v = table[size_t(a)][size_t(b)];
            if (v < 0 || v >= n)
                throw ValidationError("malformed-table", "entry (" + std::to_string(a) + "," +
                                                             std::to_string(b) + ") out of range");
            g->table[size_t(a) * n + b] = v;
        }
    }
    for (int a = 0; a < n; ++a) {
        if (g->mul(0, a) != a || g->mul(a, 0) != a)
            throw ValidationError("missing-identity", "0 is not a two-sided identity at " + std::to_string(a));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
                    throw ValidationError("non-associative", "witness (" + std::to_string(a) + "," +
                                                                 std::to_string(b) + "," + std::to_string(c) + ")");
    g->inv.assign(size_t(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g->mul(a, b) == 0 && g->mul(b, a) == 0) {
                g->inv[size_t(a)] = b;
                break;
            }
        if (g->inv[size_t(a)] < 0)
            throw ValidationError("missing-inverse", "no inverse for " + std::to_string(a));
    }
    return g;
}

GroupPtr trivial_group() {
    static GroupPtr g = validate_group({{0}}, "1");
    return g;
}

GroupPtr cyclic_group(int n) {
    if (n < 1) throw std::domain_error("cyclic_group: order must be positive");
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[size_t(a)][size_t(b)] = (a + b) % n;
    return validate_group(t, "C" + std::to_string(n));
}

namespace {

std::vector<std::vector<int>> permutations_lex(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

} // namespace

GroupPtr symmetric_group(int n) {
    if (n < 0) throw std::domain_error("symmetric_group: negative degree");
    auto perms = permutations_lex(std::max(n, 0));
    if (n == 0) perms = {std::vector<int>{}};
    int ord = int(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < ord; ++i) index[perms[size_t(i)]] = i;
    std::vector<std::vector<int>> t(static_cast<size_t>(ord), std::vector<int>(static_cast<size_t>(ord)));
    for (int a = 0; a < ord; ++a)
        for (int b = 0; b < ord; ++b) {
            std::vector<int> ab(static_cast<size_t>(n));
            for (int p = 0; p < n; ++p) ab[size_t(p)] = perms[size_t(b)][size_t(perms[size_t(a)][size_t(p)])];
            t[size_t(a)][size_t(b)] = index.at(ab);
        }
    return validate_group(t, "S" + std::to_string(n));
}

std::vector<int> symmetric_group_element(int n, int index) {
    auto perms = permutations_lex(n);
    return perms.at(size_t(index));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    int n = a->order * b->order;
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    auto idx = [&](int x, int y) { return x * b->order + y; };
    for (int x1 = 0; x1 < a->order; ++x1)
        for (int y1 = 0; y1 < b->order; ++y1)
            for (int x2 = 0; x2 < a->order; ++x2)
                for (int y2 = 0; y2 < b->order; ++y2)
                    t[size_t(idx(x1, y1))][size_t(idx(x2, y2))] = idx(a->mul(x1, x2), b->mul(y1, y2));
    std::string name;
    if (!a->name.empty() && !b->name.empty()) name = a->name + "x" + b->name;
    return validate_group(t, name);
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order == b.order && a.table == b.table;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<bool> in(size_t(g.order), false);
    std::vector<int> elems{0};
    in[0] = true;
    for (int x : gens)
        if (!in[size_t(x)]) {
            in[size_t(x)] = true;
            elems.push_back(x);
        }
    for (size_t head = 0; head < elems.size(); ++head) {
        for (size_t k = 0; k < elems.size(); ++k) {
            int p = g.mul(elems[head], elems[k]);
            if (!in[size_t(p)]) {
                in[size_t(p)] = true;
                elems.push_back(p);
            }
            p = g.mul(elems[k], elems[head]);
            if (!in[size_t(p)]) {
                in[size_t(p)] = true;
                elems.push_back(p);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<int> generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> generated{0};
    for (int a = 1; a < g.order && int(generated.size()) < g.order; ++a) {
        if (std::binary_search(generated.begin(), generated.end(), a)) continue;
        gens.push_back(a);
        generated = subgroup_closure(g, gens);
    }
    return gens;
}

Subgroup make_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
    std::vector<int> elems = elements;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty() || elems[0] != 0)
        throw std::invalid_argument("make_subgroup: identity missing from element list");
    Subgroup s;
    s.to_parent = elems;
    s.from_parent.assign(size_t(g.order), -1);
    for (int i = 0; i < int(elems.size()); ++i) s.from_parent[size_t(elems[size_t(i)])] = i;
    std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
    for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = 0; b < elems.size(); ++b) {
            int p = g.mul(elems[a], elems[b]);
            int pi = s.from_parent[size_t(p)];
            if (pi < 0) throw std::invalid_argument("make_subgroup: element list not closed");
            t[a][b] = pi;
        }
    s.group = validate_group(t);
    return s;
}

std::vector<int> commutator_subgroup(const FiniteGroup& g) {
    std::vector<int> comms;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            comms.push_back(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
    return subgroup_closure(g, comms);
}

Quotient quotient_group(const FiniteGroup& g, const std::vector<int>& normal_subgroup) {
    std::vector<bool> in_n(size_t(g.order), false);
    for (int x : normal_subgroup) in_n[size_t(x)] = true;
    // canonical coset representative: least element of the coset
    std::vector<int> coset_rep(size_t(g.order), -1);
    std::vector<int> reps;
    for (int a = 0; a < g.order; ++a) {
        if (coset_rep[size_t(a)] >= 0) continue;
        std::vector<int> coset;
        for (int x : normal_subgroup) coset.push_back(g.mul(a, x));
        int rep = *std::min_element(coset.begin(), coset.end());
        for (int y : coset) {
            if (coset_rep[size_t(y)] >= 0 && coset_rep[size_t(y)] != rep)
                throw std::invalid_argument("quotient_group: subgroup is not normal");
            coset_rep[size_t(y)] = rep;
        }
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<int> rep_index(size_t(g.order), -1);
    for (int i = 0; i < int(reps.size()); ++i) rep_index[size_t(reps[size_t(i)])] = i;
    Quotient q;
    q.projection.resize(size_t(g.order));
    for (int a = 0; a < g.order; ++a) q.projection[size_t(a)] = rep_index[size_t(coset_rep[size_t(a)])];
    std::vector<std::vector<int>> t(reps.size(), std::vector<int>(reps.size()));
    for (size_t a = 0; a < reps.size(); ++a)
        for (size_t b = 0; b < reps.size(); ++b)
            t[a][b] = q.projection[size_t(g.mul(reps[a], reps[b]))];
    q.group = validate_group(t);
    return q;
}

GroupHom validate_hom(GroupPtr source, GroupPtr target, std::vector<int> map) {
    if (int(map.size()) != source->order)
        throw ValidationError("malformed-hom", "map length differs from source order");
    for (int v : map)
        if (v < 0 || v >= target->order) throw ValidationError("malformed-hom", "image out of range");
    if (map[0] != 0) throw ValidationError("hom-identity", "identity does not map to identity");
    for (int a = 0; a < source->order; ++a)
        for (int b = 0; b < source->order; ++b)
            if (map[size_t(source->mul(a, b))] != target->mul(map[size_t(a)], map[size_t(b)]))
                throw ValidationError("hom-multiplicative",
                                      "witness (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return GroupHom{std::move(source), std::move(target), std::move(map)};
}

namespace {

// Extends the partial map on <assigned generators> by closure; returns false
// on conflict. map entries are -1 where undefined.
bool extend_by_closure(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
                       const std::vector<int>& images, std::vector<int>& map) {
    map.assign(size_t(g.order), -1);
    map[0] = 0;
    std::vector<int> known{0};
    for (size_t i = 0; i < images.size(); ++i) {
        int ge = gens[i], im = images[i];
        if (map[size_t(ge)] == -1) {
            map[size_t(ge)] = im;
            known.push_back(ge);
        } else if (map[size_t(ge)] != im) {
            return false;
        }
    }
    for (size_t head = 0; head < known.size(); ++head) {
        for (size_t k = 0; k < known.size(); ++k) {
            for (auto [a, b] : {std::pair{known[head], known[k]}, std::pair{known[k], known[head]}}) {
                int p = g.mul(a, b);
                int ip = h.mul(map[size_t(a)], map[size_t(b)]);
                if (map[size_t(p)] == -1) {
                    map[size_t(p)] = ip;
                    known.push_back(p);
                } else if (map[size_t(p)] != ip) {
                    return false;
                }
            }
        }
    }
    return true;
}

void enumerate_homs_rec(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
                        std::vector<int>& images, std::vector<std::vector<int>>& out) {
    if (images.size() == gens.size()) {
        std::vector<int> map;
        if (!extend_by_closure(g, h, gens, images, map)) return;
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                if (map[size_t(g.mul(a, b))] != h.mul(map[size_t(a)], map[size_t(b)])) return;
        out.push_back(std::move(map));
        return;
    }
    int gen = gens[images.size()];
    int gen_order = g.element_order(gen);
    for (int im = 0; im < h.order; ++im) {
        if (gen_order % h.element_order(im) != 0) continue;
        images.push_back(im);
        std::vector<int> map;
        if (extend_by_closure(g, h, gens, images, map)) enumerate_homs_rec(g, h, gens, images, out);
        images.pop_back();
    }
}

} // namespace

std::vector<GroupHom> enumerate_homs(const GroupPtr& source, const GroupPtr& target) {
    std::vector<int> gens = generating_set(*source);
    std::vector<std::vector<int>> maps;
    std::vector<int> images;
    enumerate_homs_rec(*source, *target, gens, images, maps);
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
    std::vector<GroupHom> homs;
    homs.reserve(maps.size());
    for (auto& m : maps) homs.push_back(GroupHom{source, target, std::move(m)});
    return homs;
}

PermAction validate_action(GroupPtr group, int degree, std::vector<std::vector<int>> perm) {
    if (degree < 0) throw ValidationError("malformed-action", "negative degree");
    if (int(perm.size()) != group->order)
        throw ValidationError("malformed-action", "one permutation per group element required");
    for (int g = 0; g < group->order; ++g) {
        if (int(perm[size_t(g)].size()) != degree)
            throw ValidationError("malformed-action", "permutation " + std::to_string(g) + " has wrong degree");
        std::vector<bool> seen(size_t(degree), false);
        for (int p : perm[size_t(g)]) {
            if (p < 0 || p >= degree || seen[size_t(p)])
                throw ValidationError("malformed-action", "element " + std::to_string(g) + " is not a permutation");
            seen[size_t(p)] = true;
        }
    }
    for (int p = 0; p < degree; ++p)
        if (perm[0][size_t(p)] != p)
            throw ValidationError("action-identity", "identity moves point " + std::to_string(p));
    for (int a = 0; a < group->order; ++a)
        for (int b = 0; b < group->order; ++b) {
            int ab = group->mul(a, b);
            for (int p = 0; p < degree; ++p)
                if (perm[size_t(ab)][size_t(p)] != perm[size_t(b)][size_t(perm[size_t(a)][size_t(p)])]
                    )
                    throw ValidationError("action-homomorphism", "witness (" + std::to_string(a) + "," +
                                                                     std::to_string(b) + ") at point " +
                                                                     std::to_string(p));
        }
    return PermAction{std::move(group), degree, std::move(perm)};
}

PermAction trivial_action(GroupPtr group, int degree) {
    std::vector<int> id(static_cast<size_t>(degree));
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> perm(size_t(group->order), id);
    return PermAction{std::move(group), degree, std::move(perm)};
}

std::vector<std::vector<int>> orbits(const PermAction& a) {
    std::vector<bool> seen(size_t(a.degree), false);
    std::vector<std::vector<int>> result;
    for (int p = 0; p < a.degree; ++p) {
        if (seen[size_t(p)]) continue;
        std::vector<int> orbit{p};
        seen[size_t(p)] = true;
        for (size_t head = 0; head < orbit.size(); ++head)
            for (int g = 0; g < a.group->order; ++g) {
                int q = a.apply(g, orbit[head]);
                if (!seen[size_t(q)]) {
                    seen[size_t(q)] = true;
                    orbit.push_back(q);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        result.push_back(std::move(orbit));
    }
    return result;
}

std::vector<int> orbit_of(const PermAction& a, int point) {
    for (auto& o : orbits(a))
        if (std::binary_search(o.begin(), o.end(), point)) return o;
    throw std::out_of_range("orbit_of: point out of range");
}

std::vector<int> stabilizer(const PermAction& a, int point) {
    std::vector<int> result;
    for (int g = 0; g < a.group->order; ++g)
        if (a.apply(g, point) == point) result.push_back(g);
    return result;
}

std::vector<int> transversal(const PermAction& a, int base_point, const std::vector<int>& orbit) {
    std::vector<int> result;
    result.reserve(orbit.size());
    for (int p : orbit) {
        int found = -1;
        for (int g = 0; g < a.group->order; ++g)
            if (a.apply(g, base_point) == p) {
                found = g;
                break;
            }
        if (found < 0) throw std::invalid_argument("transversal: point not in the orbit of base_point");
        result.push_back(found);
    }
    return result;
}

bool AbelianCharacter::is_trivial() const {
    for (int k : expmap)
        if (k != 0) return false;
    return true;
}

CycNumber AbelianCharacter::value(int e, int conductor) const {
    if (conductor % modulus != 0)
        throw std::domain_error("character value: modulus does not divide conductor");
    return CycNumber::root_of_unity(conductor, (long long)(expmap[size_t(e)]) * (conductor / modulus));
}

std::vector<AbelianCharacter> characters(const GroupPtr& e) {
    if (!e->is_abelian()) throw ValidationError("non-abelian", "characters require an abelian group");
    return linear_characters(e);
}

std::vector<AbelianCharacter> linear_characters(const GroupPtr& g) {
    int m = g->exponent();
    Quotient ab = quotient_group(*g, commutator_subgroup(*g));
    int qm = ab.group->exponent();
    // characters of the abelianization are homs into C_{exp}
    auto homs = enumerate_homs(ab.group, cyclic_group(qm));
    std::vector<AbelianCharacter> result;
    result.reserve(homs.size());
    for (const auto& h : homs) {
        AbelianCharacter c;
        c.group = g;
        c.modulus = m;
        c.expmap.resize(size_t(g->order));
        for (int a = 0; a < g->order; ++a)
            c.expmap[size_t(a)] = h.map[size_t(ab.projection[size_t(a)])] * (m / qm);
        result.push_back(std::move(c));
    }
    std::sort(result.begin(), result.end(),
              [](const AbelianCharacter& a, const AbelianCharacter& b) { return a.expmap < b.expmap; });
    return result;
}

AbelianCharacter char_mul(const AbelianCharacter& a, const AbelianCharacter& b) {
    if (a.modulus != b.modulus || a.expmap.size() != b.expmap.size())
        throw std::invalid_argument("char_mul: incompatible characters");
    AbelianCharacter c = a;
    for (size_t i = 0; i < c.expmap.size(); ++i) c.expmap[i] = (a.expmap[i] + b.expmap[i]) % a.modulus;
    return c;
}

AbelianCharacter char_inverse(const AbelianCharacter& a) {
    AbelianCharacter c = a;
    for (auto& k : c.expmap) k = (a.modulus - k) % a.modulus;
    return c;
}

AbelianCharacter trivial_character(const GroupPtr& g, int modulus) {
    AbelianCharacter c;
    c.group = g;
    c.modulus = modulus;
    c.expmap.assign(size_t(g->order), 0);
    return c;
}

} // namespace catrep
