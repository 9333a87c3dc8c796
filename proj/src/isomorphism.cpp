#include "centra/isomorphism.hpp"

#include <algorithm>
#include <vector>

#include "centra/centralizers.hpp"

namespace centra {

namespace {

// class_of[x] = lowest-index element of x's conjugacy class.
std::vector<int> conjugacy_class_of(const Group& g) {
    const int n = g.order();
    std::vector<int> class_of(n, -1);
    for (int x = 0; x < n; ++x) {
        if (class_of[x] >= 0) continue;
        for (int c = 0; c < n; ++c) {
            int y = g.conjugate(c, x);
            if (class_of[y] < 0) class_of[y] = x;
        }
    }
    return class_of;
}

std::vector<int> per_element_class_size(const std::vector<int>& class_of) {
    std::vector<int> count(class_of.size(), 0);
    for (int rep : class_of) ++count[rep];
    std::vector<int> size_of(class_of.size());
    for (size_t x = 0; x < class_of.size(); ++x) size_of[x] = count[class_of[x]];
    return size_of;
}

} // namespace

Fingerprint fingerprint(const Group& g) {
    Fingerprint fp;
    fp.order = g.order();
    fp.abelian = g.is_abelian();
    fp.center_order = center(g).count();
    for (int x = 0; x < g.order(); ++x) ++fp.element_order_histogram[g.element_order(x)];

    std::vector<int> class_of = conjugacy_class_of(g);
    std::vector<int> count(g.order(), 0);
    for (int rep : class_of) ++count[rep];
    for (int x = 0; x < g.order(); ++x)
        if (count[x]) ++fp.conjugacy_class_size_histogram[count[x]];

    fp.derived_order = g.derived_subgroup().count();

    // Length of the derived series down to {e}; 0 marks a non-solvable group.
    ElementSet current = ElementSet::full(g.order());
    int length = 0;
    while (current.count() > 1) {
        ElementSet commutators(g.order());
        const auto members = current.elements();
        for (int a : members)
            for (int b : members)
                commutators.add(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
        ElementSet next = g.subgroup_generated(commutators);
        if (next == current) {
            length = -1;
            break;
        }
        current = next;
        ++length;
    }
    fp.derived_length = length < 0 ? 0 : length;
    return fp;
}

namespace {

// Backtracking generator-mapping search. The image of the first generator
// only needs to range over conjugacy class representatives of h (composing
// with an inner automorphism fixes any class member); later generators are
// filtered by element order, class size and the orders of products with
// the generators already placed.
class IsoSearch {
public:
    IsoSearch(const Group& g, const Group& h) : g_(g), h_(h), n_(g.order()) {
        ElementSet sub = ElementSet::single(n_, Group::identity);
        for (int x = 0; x < n_ && sub.count() < n_; ++x) {
            if (sub.contains(x)) continue;
            gens_.push_back(x);
            ElementSet seed = sub;
            seed.add(x);
            sub = g_.subgroup_generated(seed);
        }

        g_orders_.resize(n_);
        for (int x = 0; x < n_; ++x) g_orders_[x] = g_.element_order(x);
        h_orders_.resize(n_);
        for (int x = 0; x < n_; ++x) h_orders_[x] = h_.element_order(x);

        g_class_size_ = per_element_class_size(conjugacy_class_of(g_));
        h_class_of_ = conjugacy_class_of(h_);
        h_class_size_ = per_element_class_size(h_class_of_);
    }

    bool run() {
        std::vector<int> map(n_, -1);
        map[Group::identity] = Group::identity;
        return assign(0, {Group::identity}, std::move(map));
    }

private:
    bool extend(std::vector<int>& mapped, std::vector<int>& map, int new_gen, int image) const {
        if (map[new_gen] >= 0) return map[new_gen] == image;
        std::vector<char> used(n_, 0);
        for (int x : mapped) used[map[x]] = 1;
        if (used[image]) return false;
        map[new_gen] = image;
        used[image] = 1;
        mapped.push_back(new_gen);

        // Closure under products of mapped elements; checking
        // phi(x*y) = phi(x)*phi(y) on every such edge forces the
        // homomorphism property on the generated subgroup.
        for (size_t head = 0; head < mapped.size(); ++head) {
            int x = mapped[head];
            for (size_t i = 0; i < mapped.size(); ++i) {
                int y = mapped[i];
                for (auto [prod, img] :
                     {std::pair{g_.mul(x, y), h_.mul(map[x], map[y])},
                      std::pair{g_.mul(y, x), h_.mul(map[y], map[x])}}) {
                    if (map[prod] < 0) {
                        if (used[img]) return false;
                        map[prod] = img;
                        used[img] = 1;
                        mapped.push_back(prod);
                    } else if (map[prod] != img) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    bool candidate_ok(size_t level, const std::vector<int>& map, int gen, int target) const {
        if (h_orders_[target] != g_orders_[gen]) return false;
        if (h_class_size_[target] != g_class_size_[gen]) return false;
        for (size_t i = 0; i < level; ++i) {
            int prev = gens_[i];
            if (g_orders_[g_.mul(prev, gen)] != h_orders_[h_.mul(map[prev], target)]) return false;
            if (g_orders_[g_.mul(gen, prev)] != h_orders_[h_.mul(target, map[prev])]) return false;
        }
        return true;
    }

    bool assign(size_t level, std::vector<int> mapped, std::vector<int> map) const {
        if (level == gens_.size()) return static_cast<int>(mapped.size()) == n_;
        int gen = gens_[level];
        for (int target = 0; target < n_; ++target) {
            if (level == 0 && h_class_of_[target] != target) continue;
            if (!candidate_ok(level, map, gen, target)) continue;
            std::vector<int> next_mapped = mapped;
            std::vector<int> next_map = map;
            if (!extend(next_mapped, next_map, gen, target)) continue;
            if (assign(level + 1, std::move(next_mapped), std::move(next_map))) return true;
        }
        return false;
    }

    const Group& g_;
    const Group& h_;
    int n_;
    std::vector<int> gens_;
    std::vector<int> g_orders_;
    std::vector<int> h_orders_;
    std::vector<int> g_class_size_;
    std::vector<int> h_class_size_;
    std::vector<int> h_class_of_;
};

} // namespace

bool is_isomorphic(const Group& g, const Group& h, int order_cap) {
    if (g.order() > order_cap || h.order() > order_cap)
        throw group_error(errc::order_cap_exceeded,
                          "isomorphism search capped at order " + std::to_string(order_cap));
    if (g.order() != h.order()) return false;
    if (fingerprint(g) != fingerprint(h)) return false;
    if (g.order() == 1) return true;
    return IsoSearch(g, h).run();
}

std::optional<std::string> identify_in_catalog(const Group& g,
                                               std::span<const NamedGroup> entries) {
    Fingerprint fp = fingerprint(g);
    for (const auto& entry : entries) {
        if (entry.group->order() != g.order()) continue;
        if (fingerprint(*entry.group) != fp) continue;
        if (is_isomorphic(g, *entry.group)) return entry.name;
    }
    return std::nullopt;
}

} // namespace centra
