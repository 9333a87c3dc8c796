#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "centra/presentation.hpp"

namespace centra {

namespace {

// HLT coset enumeration with coincidence handling, following the classic
// scheme: one table column per generator and per inverse generator, a
// union-find over cosets for coincidences, and a queue of dead cosets
// whose rows still need to be transplanted.
class Enumerator {
public:
    Enumerator(const Presentation& pres, int coset_cap)
        : ngens_(pres.generator_count), ncols_(2 * pres.generator_count), cap_(coset_cap) {
        for (const auto& word : pres.relators) {
            std::vector<int> cols;
            cols.reserve(word.size());
            for (int letter : word) {
                int g = std::abs(letter) - 1;
                if (letter == 0 || g >= ngens_)
                    throw group_error(errc::bad_parameter, "relator letter out of range");
                cols.push_back(letter > 0 ? 2 * g : 2 * g + 1);
            }
            if (cols.empty())
                throw group_error(errc::bad_parameter, "empty relator word");
            relators_.push_back(std::move(cols));
        }
        new_coset();
    }

    void run() {
        for (int alpha = 0; alpha < static_cast<int>(table_.size()); ++alpha) {
            if (rep(alpha) != alpha) continue;
            for (const auto& w : relators_) {
                scan_and_fill(alpha, w);
                if (rep(alpha) != alpha) break;
            }
            if (rep(alpha) != alpha) continue;
            for (int x = 0; x < ncols_; ++x)
                if (entry(alpha, x) < 0) define(alpha, x);
        }
    }

    /// Permutation action of each generator on the live cosets, relabelled
    /// 0..live-1 in ascending coset order (coset 0 stays first).
    std::vector<std::vector<int>> generator_actions() const {
        std::vector<int> live_index(table_.size(), -1);
        int live = 0;
        for (size_t c = 0; c < table_.size(); ++c)
            if (parent_[c] == static_cast<int>(c)) live_index[c] = live++;

        std::vector<std::vector<int>> actions(ngens_, std::vector<int>(live, -1));
        for (size_t c = 0; c < table_.size(); ++c) {
            if (live_index[c] < 0) continue;
            for (int g = 0; g < ngens_; ++g) {
                int target = entry(static_cast<int>(c), 2 * g);
                if (target < 0)
                    throw group_error(errc::not_latin_square, "incomplete coset table");
                actions[g][live_index[c]] = live_index[rep_const(target)];
            }
        }
        return actions;
    }

private:
    int entry(int c, int x) const { return table_[c][x]; }
    void set_entry(int c, int x, int v) { table_[c][x] = v; }
    static int inv_col(int x) { return x ^ 1; }

    int new_coset() {
        if (static_cast<int>(table_.size()) >= cap_)
            throw group_error(errc::coset_cap_exceeded,
                              "enumeration exceeds coset cap " + std::to_string(cap_));
        table_.emplace_back(ncols_, -1);
        parent_.push_back(static_cast<int>(table_.size()) - 1);
        return parent_.back();
    }

    int rep(int k) {
        int root = k;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[k] != root) {
            int next = parent_[k];
            parent_[k] = root;
            k = next;
        }
        return root;
    }

    int rep_const(int k) const {
        while (parent_[k] != k) k = parent_[k];
        return k;
    }

    void define(int alpha, int x) {
        int beta = new_coset();
        set_entry(alpha, x, beta);
        set_entry(beta, inv_col(x), alpha);
    }

    void merge(int a, int b, std::deque<int>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        int keep = std::min(a, b);
        int drop = std::max(a, b);
        parent_[drop] = keep;
        queue.push_back(drop);
    }

    void coincidence(int a, int b) {
        std::deque<int> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            int dead = queue.front();
            queue.pop_front();
            for (int x = 0; x < ncols_; ++x) {
                int delta = entry(dead, x);
                if (delta < 0) continue;
                // Remove the back-reference into the dead row before
                // transplanting, then reconcile with whatever the live
                // representatives already know.
                if (entry(delta, inv_col(x)) == dead) set_entry(delta, inv_col(x), -1);
                int mu = rep(dead);
                int nu = rep(delta);
                if (entry(mu, x) >= 0) {
                    merge(nu, entry(mu, x), queue);
                } else if (entry(nu, inv_col(x)) >= 0) {
                    merge(mu, entry(nu, inv_col(x)), queue);
                } else {
                    set_entry(mu, x, nu);
                    set_entry(nu, inv_col(x), mu);
                }
            }
        }
    }

    void scan_and_fill(int alpha, const std::vector<int>& word) {
        int f = alpha;
        int i = 0;
        int b = alpha;
        int j = static_cast<int>(word.size()) - 1;
        while (true) {
            while (i <= j && entry(f, word[i]) >= 0) f = entry(f, word[i++]);
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && entry(b, inv_col(word[j])) >= 0) b = entry(b, inv_col(word[j--]));
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (j == i) {
                set_entry(f, word[i], b);
                set_entry(b, inv_col(word[i]), f);
                return;
            }
            define(f, word[i]);
        }
    }

    int ngens_;
    int ncols_;
    int cap_;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> table_;
    std::vector<int> parent_;
};

} // namespace

Group presented_group(const Presentation& pres, int coset_cap) {
    if (pres.generator_count <= 0)
        throw group_error(errc::bad_parameter, "presentation needs at least one generator");
    if (pres.relators.empty())
        throw group_error(errc::bad_parameter, "presentation needs at least one relator");

    Enumerator enumerator(pres, coset_cap);
    enumerator.run();
    auto actions = enumerator.generator_actions();
    int order = static_cast<int>(actions.empty() ? 1 : actions[0].size());

    Group out = actions.empty()
                    ? Group::from_permutation_generators(1, {})
                    : Group::from_permutation_generators(order, actions);

    if (out.order() != order)
        throw group_error(errc::not_latin_square,
                          "coset action does not close to the regular representation");
    if (pres.expected_order && *pres.expected_order != out.order())
        throw group_error(errc::order_mismatch,
                          "expected order " + std::to_string(*pres.expected_order) + ", got " +
                              std::to_string(out.order()));
    return out;
}

} // namespace centra
