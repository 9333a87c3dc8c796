#pragma once

#include <string>
#include <vector>

#include "centra/element_set.hpp"
#include "centra/errors.hpp"

namespace centra {

/// Immutable finite group stored as an order x order Cayley table of
/// element indices. Index 0 is always the identity; constructors relabel
/// if necessary. Validation covers the Latin-square property, identity,
/// two-sided inverses and associativity (full triple check up to order
/// 512, random spot check above).
class Group {
public:
    static constexpr int identity = 0;
    static constexpr int default_element_cap = 20000;

    static Group from_cayley_table(const std::vector<std::vector<int>>& table,
                                   std::vector<std::string> labels = {});

    /// Breadth-first closure of permutation generators on {0..degree-1}.
    /// Elements are indexed in discovery order, identity first.
    static Group from_permutation_generators(int degree,
                                             const std::vector<std::vector<int>>& generators,
                                             int element_cap = default_element_cap);

    int order() const { return order_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inverses_[a]; }
    int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }

    const std::string& label(int e) const { return labels_[e]; }

    int element_order(int e) const;
    bool is_abelian() const;

    /// Smallest subgroup containing the given set.
    ElementSet subgroup_generated(const ElementSet& seed) const;
    bool is_subgroup(const ElementSet& candidate) const;

    /// Throws not_a_subgroup when the argument fails subgroup checks.
    bool is_normal(const ElementSet& subgroup) const;

    /// Group on the cosets of a normal subgroup; the identity coset is
    /// index 0 and every coset is labelled by its lowest-index
    /// representative. Throws not_normal.
    Group quotient(const ElementSet& normal_subgroup) const;

    ElementSet derived_subgroup() const;
    bool is_solvable() const;

    /// Runs the full construction validator again; used by tests.
    void validate() const;

private:
    Group(int order, std::vector<int32_t> table, std::vector<std::string> labels);

    static Group build_validated(int order, std::vector<int32_t> table,
                                 std::vector<std::string> labels);

    int order_ = 0;
    std::vector<int32_t> table_;
    std::vector<int32_t> inverses_;
    std::vector<std::string> labels_;
};

/// One-line cycle notation for a permutation, e.g. "(0 1 2)(3 4)".
std::string cycle_notation(const std::vector<int>& perm);

} // namespace centra
