#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cocycle/errors.hpp"

namespace cocycle {

/// A finite group as a validated Cayley table. Elements are opaque indices
/// 0..n-1 and the identity always sits at index 0 (build_group relabels if
/// the input has it elsewhere).
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table; // table[a][b] = a*b
    std::vector<int> inverses;
    std::string name; // metadata only, never part of equality

    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const { return inverses[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); } // g x g^-1

    bool is_abelian() const;
    int element_order(int a) const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.table == b.table;
    }
};

using GroupRef = std::shared_ptr<const FiniteGroup>;

/// Validates the table (closure, identity, associativity over all n^3
/// triples, inverses), relabels so the identity is index 0, and fills in the
/// inverse table. Throws NotClosed / NoIdentity / NotAssociative /
/// MissingInverse naming the offending indices.
GroupRef build_group(std::vector<std::vector<int>> table, std::string name = "");

/// A group homomorphism given by its value table on source indices.
struct Homomorphism {
    GroupRef source;
    GroupRef target;
    std::vector<int> image; // image[x] in target

    int operator()(int x) const { return image[x]; }
};

/// Validates image[x*y] == image[x]*image[y] (which forces image[0] == 0).
Homomorphism make_homomorphism(GroupRef source, GroupRef target, std::vector<int> image);

/// The full automorphism group of a base group: the maps themselves plus the
/// composition table as a FiniteGroup. Element 0 is the identity map and the
/// listing is lexicographic on image arrays.
struct AutomorphismGroup {
    GroupRef base;
    std::vector<std::vector<int>> elements; // each an automorphism of base
    GroupRef group;                         // table[i][j] = index of elements[i] o elements[j]

    int size() const { return static_cast<int>(elements.size()); }
    int apply(int aut, int x) const { return elements[aut][x]; }
    /// Index of elements[i] o elements[j] (apply j first).
    int compose(int i, int j) const { return group->mul(i, j); }
    int index_of(const std::vector<int>& map) const; // -1 if absent
};

inline constexpr int kDefaultAutOrderCap = 64;
inline constexpr int kDefaultAutSizeCap = 1024;

/// Brute force over generator-image assignments: pick a greedy minimal
/// generating set, try all value tuples of matching element order, extend
/// along the Cayley graph and validate. Throws SizeLimitExceeded past the
/// order cap, past the global candidate cap, or when the automorphism count
/// would make the composition table infeasible (its validation is cubic).
AutomorphismGroup compute_aut(GroupRef g, int order_cap = kDefaultAutOrderCap,
                              int aut_size_cap = kDefaultAutSizeCap);

struct Subgroup {
    GroupRef ambient;
    std::vector<int> members; // sorted ascending, always contains 0
    bool normal = false;

    bool contains(int x) const;
    int size() const { return static_cast<int>(members.size()); }
};

/// Validates closure under product and inverse and membership of the
/// identity; computes the normal flag by conjugating every member by every
/// ambient element. Throws NotASubgroup.
Subgroup make_subgroup(GroupRef ambient, std::vector<int> members);

/// Left-coset space G/N. Cosets are sorted ascending and listed by minimal
/// element, so the basepoint coset N is always index 0. The quotient group is
/// present exactly when N is normal; its identity is the basepoint coset.
struct CosetSpace {
    GroupRef ambient;
    Subgroup subgroup;
    std::vector<std::vector<int>> cosets;
    int basepoint = 0;
    std::vector<int> coset_of;                  // ambient element -> coset index
    std::vector<std::vector<int>> left_action;  // left_action[g][c] = coset of g*(rep of c)
    GroupRef quotient;                          // null unless subgroup.normal
};

CosetSpace coset_space(GroupRef g, const Subgroup& n);

/// A subgroup relabeled as a standalone FiniteGroup together with the index
/// translation in both directions.
struct SubgroupGroup {
    GroupRef group;
    std::vector<int> to_ambient;   // subgroup index -> ambient index
    std::vector<int> from_ambient; // ambient index -> subgroup index, -1 outside
};

SubgroupGroup subgroup_as_group(const Subgroup& n);

/// Greedy minimal generating set: repeatedly adjoin the smallest element
/// outside the closure of what has been chosen so far.
std::vector<int> minimal_generating_set(const FiniteGroup& g);

/// Closure of a subset under product (finite group, so inverses come free).
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed);

/// Every subgroup of g, each fully validated, sorted by (size, members).
std::vector<Subgroup> all_subgroups(GroupRef g);

/// All homomorphisms source -> target as image arrays, sorted
/// lexicographically. Enumerates assignments on a minimal generating set of
/// the source (pruned by element-order divisibility) and validates each
/// extension against the full table. Throws SizeLimitExceeded when the
/// candidate count passes `cap`.
std::vector<std::vector<int>> enumerate_homomorphisms(const FiniteGroup& source,
                                                      const FiniteGroup& target,
                                                      std::uint64_t cap);

/// Global candidate-map cap; reads COCYCLE_MAX_BRUTE once (default 10^7).
std::uint64_t brute_force_cap();

/// Composition p(q(x)) of two index maps of equal length.
std::vector<int> compose_maps(const std::vector<int>& p, const std::vector<int>& q);

/// Inverse of a permutation given as an index map.
std::vector<int> invert_permutation(const std::vector<int>& p);

bool is_permutation(const std::vector<int>& p);

} // namespace cocycle
