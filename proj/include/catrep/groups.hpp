#ifndef CATREP_GROUPS_HPP
#define CATREP_GROUPS_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catrep/cyclotomic.hpp"

namespace catrep {

// Raised when input data violates a structural axiom. Carries a short
// machine-readable axiom tag; the message names the witnesses.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string axiom, const std::string& detail)
        : std::runtime_error(axiom + ": " + detail), axiom_(std::move(axiom)) {}
    const std::string& axiom() const { return axiom_; }

private:
    std::string axiom_;
};

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group as an indexed multiplication table. The identity sits at
// index 0 and inverses are precomputed.
struct FiniteGroup {
    int order = 1;
    std::vector<int> table; // row-major, table[a*order+b] = a*b
    std::vector<int> inv;
    std::string name;

    int mul(int a, int b) const { return table[size_t(a) * order + b]; }
    int inverse(int a) const { return inv[size_t(a)]; }
    int conjugate(int x, int a) const { return mul(mul(x, a), inverse(x)); } // x a x^-1
    int element_order(int a) const;
    bool is_abelian() const;
    int exponent() const;
};

// Order cap for table-driven groups; override with CATREP_MAX_GROUP_ORDER.
int max_group_order();

GroupPtr validate_group(const std::vector<std::vector<int>>& table, std::string name = "");
GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr symmetric_group(int n); // elements are one-line permutations in lex order
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

bool same_group(const FiniteGroup& a, const FiniteGroup& b);

// One-line permutation of the element at the given index of symmetric_group(n).
std::vector<int> symmetric_group_element(int n, int index);

// Greedy generating sequence: scan elements in index order, keep those that
// enlarge the generated subgroup.
std::vector<int> generating_set(const FiniteGroup& g);
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);

struct Subgroup {
    GroupPtr group;
    std::vector<int> to_parent;   // element index -> parent index
    std::vector<int> from_parent; // parent index -> element index or -1
};
Subgroup make_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

std::vector<int> commutator_subgroup(const FiniteGroup& g);

struct Quotient {
    GroupPtr group;
    std::vector<int> projection; // parent index -> quotient index
};
Quotient quotient_group(const FiniteGroup& g, const std::vector<int>& normal_subgroup);

struct GroupHom {
    GroupPtr source, target;
    std::vector<int> map;

    int apply(int a) const { return map[size_t(a)]; }
};

GroupHom validate_hom(GroupPtr source, GroupPtr target, std::vector<int> map);

// The complete, duplicate-free list of homomorphisms source -> target,
// ordered lexicographically by element map.
std::vector<GroupHom> enumerate_homs(const GroupPtr& source, const GroupPtr& target);

// A right action: points move by p -> perm[g][p], and perm[a*b] applies
// perm[a] first, then perm[b].
struct PermAction {
    GroupPtr group;
    int degree = 0;
    std::vector<std::vector<int>> perm;

    int apply(int g, int p) const { return perm[size_t(g)][size_t(p)]; }
};

PermAction validate_action(GroupPtr group, int degree, std::vector<std::vector<int>> perm);
PermAction trivial_action(GroupPtr group, int degree);

// Orbits sorted ascending, listed by least element.
std::vector<std::vector<int>> orbits(const PermAction& a);
std::vector<int> orbit_of(const PermAction& a, int point);
std::vector<int> stabilizer(const PermAction& a, int point);
// for each point of the orbit (in orbit order), the least group element
// moving base_point there
std::vector<int> transversal(const PermAction& a, int base_point, const std::vector<int>& orbit);

// A character with values in the modulus-th roots of unity: e -> zeta^expmap[e].
// For abelian groups the modulus is the group exponent; linear characters of a
// non-abelian group are stored against the same exponent-of-group modulus.
struct AbelianCharacter {
    GroupPtr group;
    int modulus = 1;
    std::vector<int> expmap;

    bool is_trivial() const;
    CycNumber value(int e, int conductor) const; // requires modulus | conductor
    friend bool operator==(const AbelianCharacter& a, const AbelianCharacter& b) {
        return a.modulus == b.modulus && a.expmap == b.expmap;
    }
};

// All |E| characters of an abelian group, ordered by expmap; rejects
// non-abelian input.
std::vector<AbelianCharacter> characters(const GroupPtr& e);

// All characters of G/[G,G] pulled back to G, with modulus = exponent(G).
std::vector<AbelianCharacter> linear_characters(const GroupPtr& g);

AbelianCharacter char_mul(const AbelianCharacter& a, const AbelianCharacter& b);
AbelianCharacter char_inverse(const AbelianCharacter& a);
AbelianCharacter trivial_character(const GroupPtr& g, int modulus);

} // namespace catrep

#endif
