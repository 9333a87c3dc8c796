#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centra/centralizers.hpp"
#include "centra/group.hpp"
#include "centra/isomorphism.hpp"

namespace centra {

/// One named group of the verification universe. Most entries are DSL
/// specs; the order-27 Heisenberg group is presented directly because the
/// DSL grammar has no presentation atom.
struct CatalogEntry {
    std::string name;
    std::string spec_text;
    int order = 0; // known in advance, used for cap filtering
    std::function<Group()> build;
    std::string notes; // documented aliases, e.g. "isomorphic to S(3)"
};

const std::vector<CatalogEntry>& default_catalog();

struct BuiltItem {
    std::string name;
    std::string spec_text;
    std::string notes;
    Group group;
    Group quotient_by_center;          // G/Z(G)
    std::optional<CentProfile> profile; // absent for the order-1 entry
};

struct BuiltCatalog {
    std::vector<BuiltItem> items;
    std::vector<std::pair<std::string, std::string>> skipped; // (name, reason)

    const BuiltItem* find(const std::string& name) const;
    /// View over (name, group) pairs for identify_in_catalog.
    std::vector<NamedGroup> named_groups() const;
};

/// Builds every default entry with order <= order_cap and precomputes its
/// profile; jobs > 1 builds items concurrently (results are merged in
/// catalog order, so output is identical for any jobs value).
BuiltCatalog build_catalog(int order_cap = 600, int jobs = 1);

} // namespace centra
