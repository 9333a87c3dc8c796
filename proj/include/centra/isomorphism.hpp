#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "centra/group.hpp"

namespace centra {

/// Cheap isomorphism invariants. Unequal fingerprints prove groups
/// non-isomorphic; equal fingerprints trigger the backtracking search.
struct Fingerprint {
    int order = 0;
    bool abelian = false;
    int center_order = 0;
    std::map<int, int> element_order_histogram;
    std::map<int, int> conjugacy_class_size_histogram;
    int derived_order = 0;
    int derived_length = 0; // 0 when the derived series never reaches {e}

    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Group& g);

/// Exact isomorphism test: fingerprint filter, then a backtracking search
/// mapping a greedily chosen generating sequence of g onto
/// order-compatible targets in h. Throws order_cap_exceeded above the cap.
bool is_isomorphic(const Group& g, const Group& h, int order_cap = 600);

struct NamedGroup {
    std::string name;
    const Group* group = nullptr;
};

/// Name of the first entry isomorphic to g, if any.
std::optional<std::string> identify_in_catalog(const Group& g, std::span<const NamedGroup> entries);

} // namespace centra
