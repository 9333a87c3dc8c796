#pragma once

#include <string>
#include <vector>

#include "centra/group.hpp"

namespace centra {

/// C_G(x): elements commuting with x. Always a subgroup containing the
/// center and x itself.
ElementSet centralizer_elem(const Group& g, int x);

/// C_G(S) = intersection of element centralizers; C_G(empty) = G.
ElementSet centralizer_set(const Group& g, const ElementSet& s);

ElementSet center(const Group& g);

/// Z_2(G): preimage in G of the center of G/Z(G); computed directly as
/// {x : [x, g] in Z(G) for all g}.
ElementSet second_center(const Group& g);

/// Distinct element centralizers {C_G(x) : x in G}, deduplicated and
/// sorted (canonical bitset order).
std::vector<ElementSet> cent_set(const Group& g);

/// Distinct pair centralizers {C_G(x) n C_G(y) : x != y}. The naive
/// version iterates all unordered pairs and is the reference oracle; the
/// optimized version intersects centralizer classes instead. Both require
/// |G| >= 2 and return identical sorted sets.
std::vector<ElementSet> two_cent_naive(const Group& g);
std::vector<ElementSet> two_cent(const Group& g);

/// 1 when the center is trivial, else 0.
int delta(const Group& g);

/// True when every non-central element has an abelian centralizer
/// (vacuously true for abelian groups).
bool is_ca_group(const Group& g);

struct NoncommutingClique {
    int size = 0;
    ElementSet witness;
};

/// Exact maximum size of a set of pairwise non-commuting elements (the
/// maximum clique of the non-commuting graph), plus one witness clique.
/// Elements sharing a centralizer commute, so the search runs over one
/// representative per centralizer class. Throws abelian_group.
NoncommutingClique max_noncommuting_set(const Group& g);

/// Sentinel stored in CentProfile::r for abelian groups, where a set of
/// pairwise non-commuting elements does not exist.
constexpr int r_undefined = -1;

/// All counting invariants of one group. quotient_* fields are computed
/// on G/Z(G); when that quotient is trivial (G abelian) the pair count is
/// undefined and quotient_n_2cent holds 0, making primitive_2n false.
struct CentProfile {
    std::string group_spec;
    int order = 0;
    int center_order = 0;
    int n_cent = 0;
    int n_2cent = 0;
    int delta = 0;
    bool is_ca = false;
    int r = r_undefined;
    int derived_order = 0;
    bool solvable = false;
    int second_center_order = 0;
    int quotient_n_cent = 0;
    int quotient_n_2cent = 0;
    bool primitive_n = false;
    bool primitive_2n = false;
};

/// Requires |G| >= 2 (throws group_too_small).
CentProfile cent_profile(const Group& g, std::string spec_label);

} // namespace centra
