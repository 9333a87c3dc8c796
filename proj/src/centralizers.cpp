#include "centra/centralizers.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace centra {

ElementSet centralizer_elem(const Group& g, int x) {
    ElementSet out(g.order());
    for (int e = 0; e < g.order(); ++e)
        if (g.mul(e, x) == g.mul(x, e)) out.add(e);
    return out;
}

ElementSet centralizer_set(const Group& g, const ElementSet& s) {
    ElementSet out = ElementSet::full(g.order());
    for (int x : s.elements()) out = out & centralizer_elem(g, x);
    return out;
}

ElementSet center(const Group& g) {
    ElementSet out(g.order());
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int e = 0; e < g.order() && central; ++e) central = g.mul(e, x) == g.mul(x, e);
        if (central) out.add(x);
    }
    return out;
}

ElementSet second_center(const Group& g) {
    ElementSet z = center(g);
    ElementSet out(g.order());
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int e = 0; e < g.order() && ok; ++e)
            ok = z.contains(g.mul(g.mul(g.inv(x), g.inv(e)), g.mul(x, e)));
        if (ok) out.add(x);
    }
    return out;
}

namespace {

std::vector<ElementSet> all_element_centralizers(const Group& g) {
    std::vector<ElementSet> out;
    out.reserve(g.order());
    for (int x = 0; x < g.order(); ++x) out.push_back(centralizer_elem(g, x));
    return out;
}

std::vector<ElementSet> sorted_unique(std::set<ElementSet>&& collected) {
    return {std::make_move_iterator(collected.begin()), std::make_move_iterator(collected.end())};
}

} // namespace

std::vector<ElementSet> cent_set(const Group& g) {
    std::set<ElementSet> distinct;
    for (int x = 0; x < g.order(); ++x) distinct.insert(centralizer_elem(g, x));
    return sorted_unique(std::move(distinct));
}

std::vector<ElementSet> two_cent_naive(const Group& g) {
    if (g.order() < 2)
        throw group_error(errc::group_too_small, "2-Cent needs a pair of distinct elements");
    const auto cents = all_element_centralizers(g);
    std::set<ElementSet> distinct;
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y) distinct.insert(cents[x] & cents[y]);
    return sorted_unique(std::move(distinct));
}

std::vector<ElementSet> two_cent(const Group& g) {
    if (g.order() < 2)
        throw group_error(errc::group_too_small, "2-Cent needs a pair of distinct elements");
    // Classes of elements sharing one centralizer; a pair inside a class of
    // size >= 2 contributes the class centralizer itself, a cross-class pair
    // contributes the intersection.
    std::map<ElementSet, int> classes;
    for (int x = 0; x < g.order(); ++x) ++classes[centralizer_elem(g, x)];

    std::vector<const ElementSet*> reps;
    reps.reserve(classes.size());
    std::set<ElementSet> distinct;
    for (const auto& [cent, multiplicity] : classes) {
        if (multiplicity >= 2) distinct.insert(cent);
        reps.push_back(&cent);
    }
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j) distinct.insert(*reps[i] & *reps[j]);
    return sorted_unique(std::move(distinct));
}

int delta(const Group& g) { return center(g).count() == 1 ? 1 : 0; }

namespace {

bool subgroup_is_abelian(const Group& g, const ElementSet& members) {
    const auto elems = members.elements();
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
    return true;
}

} // namespace

bool is_ca_group(const Group& g) {
    ElementSet z = center(g);
    std::set<ElementSet> checked;
    for (int x = 0; x < g.order(); ++x) {
        if (z.contains(x)) continue;
        ElementSet cent = centralizer_elem(g, x);
        if (checked.insert(cent).second && !subgroup_is_abelian(g, cent)) return false;
    }
    return true;
}

namespace {

// Exact branch and bound over centralizer-class representatives with a
// greedy colouring bound. Vertices are ordered by non-commuting degree.
class CliqueSearch {
public:
    CliqueSearch(const Group& g, const std::vector<int>& reps) : reps_(reps) {
        const int k = static_cast<int>(reps.size());
        adj_.assign(k, std::vector<char>(k, 0));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                bool commute = g.mul(reps[i], reps[j]) == g.mul(reps[j], reps[i]);
                adj_[i][j] = adj_[j][i] = commute ? 0 : 1;
            }
        order_.resize(k);
        for (int i = 0; i < k; ++i) order_[i] = i;
        std::vector<int> degree(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) degree[i] += adj_[i][j];
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return degree[a] > degree[b]; });
    }

    std::vector<int> run() {
        std::vector<int> candidates = order_;
        greedy_seed(candidates);
        std::vector<int> current;
        expand(candidates, current);
        return best_;
    }

private:
    void greedy_seed(const std::vector<int>& candidates) {
        std::vector<int> clique;
        for (int v : candidates) {
            bool ok = true;
            for (int u : clique) ok = ok && adj_[u][v];
            if (ok) clique.push_back(v);
        }
        best_ = clique;
    }

    // Greedy colouring upper bound: vertices of one colour class are
    // pairwise commuting, so a clique takes at most one from each.
    int colour_bound(const std::vector<int>& candidates) const {
        std::vector<std::vector<int>> colour_classes;
        for (int v : candidates) {
            bool placed = false;
            for (auto& cls : colour_classes) {
                bool independent = true;
                for (int u : cls)
                    if (adj_[u][v]) {
                        independent = false;
                        break;
                    }
                if (independent) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) colour_classes.push_back({v});
        }
        return static_cast<int>(colour_classes.size());
    }

    void expand(std::vector<int>& candidates, std::vector<int>& current) {
        if (candidates.empty()) {
            if (current.size() > best_.size()) best_ = current;
            return;
        }
        if (static_cast<int>(current.size()) + colour_bound(candidates) <=
            static_cast<int>(best_.size()))
            return;
        while (!candidates.empty()) {
            if (static_cast<int>(current.size() + candidates.size()) <=
                static_cast<int>(best_.size()))
                return;
            int v = candidates.front();
            candidates.erase(candidates.begin());
            std::vector<int> next;
            for (int u : candidates)
                if (adj_[v][u]) next.push_back(u);
            current.push_back(v);
            expand(next, current);
            current.pop_back();
        }
    }

    const std::vector<int>& reps_;
    std::vector<std::vector<char>> adj_;
    std::vector<int> order_;
    std::vector<int> best_;
};

} // namespace

NoncommutingClique max_noncommuting_set(const Group& g) {
    if (g.is_abelian())
        throw group_error(errc::abelian_group, "no non-commuting pair exists");

    // One representative (lowest index) per centralizer class, central
    // elements excluded: commuting is constant on classes and same-class
    // elements always commute.
    std::map<ElementSet, int> first_rep;
    ElementSet z = center(g);
    for (int x = 0; x < g.order(); ++x) {
        if (z.contains(x)) continue;
        first_rep.emplace(centralizer_elem(g, x), x);
    }
    std::vector<int> reps;
    reps.reserve(first_rep.size());
    for (const auto& [cent, x] : first_rep) reps.push_back(x);
    std::sort(reps.begin(), reps.end());

    CliqueSearch search(g, reps);
    std::vector<int> best = search.run();

    NoncommutingClique out;
    out.size = static_cast<int>(best.size());
    out.witness = ElementSet(g.order());
    for (int v : best) out.witness.add(reps[v]);
    return out;
}

CentProfile cent_profile(const Group& g, std::string spec_label) {
    if (g.order() < 2)
        throw group_error(errc::group_too_small, "profile needs |G| >= 2");

    CentProfile p;
    p.group_spec = std::move(spec_label);
    p.order = g.order();

    ElementSet z = center(g);
    p.center_order = z.count();
    p.delta = p.center_order == 1 ? 1 : 0;
    p.n_cent = static_cast<int>(cent_set(g).size());
    p.n_2cent = static_cast<int>(two_cent(g).size());
    p.is_ca = is_ca_group(g);
    p.r = g.is_abelian() ? r_undefined : max_noncommuting_set(g).size;
    p.derived_order = g.derived_subgroup().count();
    p.solvable = g.is_solvable();
    p.second_center_order = second_center(g).count();

    Group q = g.quotient(z);
    p.quotient_n_cent = static_cast<int>(cent_set(q).size());
    p.quotient_n_2cent = q.order() >= 2 ? static_cast<int>(two_cent(q).size()) : 0;
    p.primitive_n = p.n_cent == p.quotient_n_cent;
    p.primitive_2n = p.n_2cent == p.quotient_n_2cent;
    return p;
}

} // namespace centra
