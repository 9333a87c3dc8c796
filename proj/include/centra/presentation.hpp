#pragma once

#include <optional>
#include <vector>

#include "centra/group.hpp"

namespace centra {

/// Finite presentation on generator_count generators. Relator words are
/// sequences of signed 1-based generator numbers: +k means generator k-1,
/// -k its inverse, so {1, 1, -2} encodes a*a*b^-1.
struct Presentation {
    int generator_count = 0;
    std::vector<std::vector<int>> relators;
    std::optional<int> expected_order;
};

/// Coset enumeration over the trivial subgroup. The live cosets form the
/// regular representation; the returned group is its closure as a
/// permutation group, identity first. Throws coset_cap_exceeded when the
/// enumeration defines more than coset_cap rows and order_mismatch when
/// expected_order is set and differs from the enumerated order.
Group presented_group(const Presentation& pres, int coset_cap = 10000);

} // namespace centra
