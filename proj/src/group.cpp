#include "centra/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace centra {

const char* errc_name(errc code) {
    switch (code) {
        case errc::not_latin_square: return "NotLatinSquare";
        case errc::not_associative: return "NotAssociative";
        case errc::no_identity: return "NoIdentity";
        case errc::no_inverse: return "NoInverse";
        case errc::order_cap_exceeded: return "OrderCapExceeded";
        case errc::coset_cap_exceeded: return "CosetCapExceeded";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::bad_parameter: return "BadParameter";
        case errc::bad_action: return "BadAction";
        case errc::not_a_subgroup: return "NotASubgroup";
        case errc::not_normal: return "NotNormal";
        case errc::group_too_small: return "GroupTooSmall";
        case errc::abelian_group: return "AbelianGroup";
        case errc::parse_error: return "ParseError";
        case errc::unknown_theorem: return "UnknownTheorem";
    }
    return "UnknownError";
}

namespace {

// Full associativity check is cubic; beyond this order we fall back to a
// deterministic random sample (composition-built tables are associative by
// construction anyway).
constexpr int kFullAssociativityLimit = 512;
constexpr int kAssociativitySamples = 10000;

std::string triple_text(int a, int b, int c) {
    std::ostringstream os;
    os << "(" << a << ", " << b << ", " << c << ")";
    return os.str();
}

} // namespace

Group::Group(int order, std::vector<int32_t> table, std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
    if (labels_.empty()) {
        labels_.reserve(order_);
        for (int e = 0; e < order_; ++e) labels_.push_back(std::to_string(e));
    }
    inverses_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            if (mul(a, b) == identity && mul(b, a) == identity) {
                inverses_[a] = b;
                break;
            }
        }
        if (inverses_[a] < 0)
            throw group_error(errc::no_inverse,
                              "element " + std::to_string(a) + " has no two-sided inverse");
    }
}

Group Group::build_validated(int order, std::vector<int32_t> table,
                             std::vector<std::string> labels) {
    Group g(order, std::move(table), std::move(labels));
    g.validate();
    return g;
}

void Group::validate() const {
    const int n = order_;
    if (n <= 0) throw group_error(errc::bad_parameter, "group order must be positive");

    // Latin square: every row and column is a permutation of 0..n-1.
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = mul(a, b);
            if (v < 0 || v >= n || seen[v])
                throw group_error(errc::not_latin_square, "row " + std::to_string(a) +
                                      " is not a permutation (column " + std::to_string(b) + ")");
            seen[v] = 1;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) {
            int v = mul(a, b);
            if (seen[v])
                throw group_error(errc::not_latin_square, "column " + std::to_string(b) +
                                      " is not a permutation (row " + std::to_string(a) + ")");
            seen[v] = 1;
        }
    }

    for (int a = 0; a < n; ++a)
        if (mul(identity, a) != a || mul(a, identity) != a)
            throw group_error(errc::no_identity,
                              "index 0 is not a two-sided identity at element " + std::to_string(a));

    for (int a = 0; a < n; ++a)
        if (mul(a, inverses_[a]) != identity || mul(inverses_[a], a) != identity)
            throw group_error(errc::no_inverse,
                              "stored inverse of " + std::to_string(a) + " is wrong");

    if (n <= kFullAssociativityLimit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = mul(a, b);
                for (int c = 0; c < n; ++c)
                    if (mul(ab, c) != mul(a, mul(b, c)))
                        throw group_error(errc::not_associative,
                                          "triple " + triple_text(a, b, c));
            }
    } else {
        std::mt19937 rng(0x5eed5u);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < kAssociativitySamples; ++i) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw group_error(errc::not_associative, "triple " + triple_text(a, b, c));
        }
    }
}

Group Group::from_cayley_table(const std::vector<std::vector<int>>& table,
                               std::vector<std::string> labels) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw group_error(errc::bad_parameter, "empty table");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n)
            throw group_error(errc::bad_parameter, "table is not square at row " + std::to_string(a));
        for (int b = 0; b < n; ++b)
            if (table[a][b] < 0 || table[a][b] >= n)
                throw group_error(errc::bad_parameter, "entry out of range at (" +
                                      std::to_string(a) + ", " + std::to_string(b) + ")");
    }

    // Locate the two-sided identity before anything else so it can be
    // relabelled to index 0.
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = table[cand][a] == a && table[a][cand] == a;
        if (ok) e = cand;
    }
    if (e < 0) throw group_error(errc::no_identity, "no two-sided identity element");

    // Relabel by swapping indices 0 and e.
    std::vector<int> to_new(n), to_old(n);
    for (int i = 0; i < n; ++i) to_new[i] = to_old[i] = i;
    std::swap(to_old[0], to_old[e]);
    to_new[e] = 0;
    to_new[0] = e;

    std::vector<int32_t> flat(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            flat[static_cast<size_t>(a) * n + b] =
                static_cast<int32_t>(to_new[table[to_old[a]][to_old[b]]]);

    std::vector<std::string> out_labels;
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw group_error(errc::bad_parameter, "label count does not match order");
        out_labels.resize(n);
        for (int i = 0; i < n; ++i) out_labels[i] = labels[to_old[i]];
    }
    return build_validated(n, std::move(flat), std::move(out_labels));
}

namespace {

std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = p[q[i]];
    return out;
}

} // namespace

Group Group::from_permutation_generators(int degree,
                                         const std::vector<std::vector<int>>& generators,
                                         int element_cap) {
    if (degree <= 0) throw group_error(errc::bad_parameter, "degree must be positive");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree)
            throw group_error(errc::bad_parameter, "generator degree mismatch");
        std::vector<char> seen(degree, 0);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[v])
                throw group_error(errc::bad_parameter, "generator is not a permutation");
            seen[v] = 1;
        }
    }

    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;

    std::vector<std::vector<int>> elements{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            std::vector<int> next = compose_perm(elements[head], g);
            if (index.emplace(next, static_cast<int>(elements.size())).second) {
                if (static_cast<int>(elements.size()) >= element_cap)
                    throw group_error(errc::order_cap_exceeded,
                                      "closure exceeds element cap " + std::to_string(element_cap));
                elements.push_back(std::move(next));
            }
        }
    }

    const int n = static_cast<int>(elements.size());
    std::vector<int32_t> flat(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            flat[static_cast<size_t>(a) * n + b] =
                static_cast<int32_t>(index.at(compose_perm(elements[a], elements[b])));

    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : elements) labels.push_back(cycle_notation(p));
    return build_validated(n, std::move(flat), std::move(labels));
}

int Group::element_order(int e) const {
    int k = 1;
    int cur = e;
    while (cur != identity) {
        cur = mul(cur, e);
        ++k;
    }
    return k;
}

bool Group::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

ElementSet Group::subgroup_generated(const ElementSet& seed) const {
    ElementSet sub(order_);
    sub.add(identity);
    std::vector<int> frontier{identity};
    for (int e : seed.elements()) {
        if (!sub.contains(e)) {
            sub.add(e);
            frontier.push_back(e);
        }
    }
    std::vector<int> members = frontier;
    for (size_t head = 0; head < frontier.size(); ++head) {
        int x = frontier[head];
        for (size_t i = 0; i < members.size(); ++i) {
            for (int prod : {mul(x, members[i]), mul(members[i], x)}) {
                if (!sub.contains(prod)) {
                    sub.add(prod);
                    frontier.push_back(prod);
                    members.push_back(prod);
                }
            }
        }
    }
    return sub;
}

bool Group::is_subgroup(const ElementSet& candidate) const {
    if (candidate.universe() != order_ || !candidate.contains(identity)) return false;
    std::vector<int> members = candidate.elements();
    for (int a : members) {
        if (!candidate.contains(inv(a))) return false;
        for (int b : members)
            if (!candidate.contains(mul(a, b))) return false;
    }
    return true;
}

bool Group::is_normal(const ElementSet& subgroup) const {
    if (!is_subgroup(subgroup))
        throw group_error(errc::not_a_subgroup, "argument of is_normal is not a subgroup");
    std::vector<int> members = subgroup.elements();
    for (int g = 0; g < order_; ++g)
        for (int h : members)
            if (!subgroup.contains(conjugate(g, h))) return false;
    return true;
}

Group Group::quotient(const ElementSet& normal_subgroup) const {
    if (!is_subgroup(normal_subgroup))
        throw group_error(errc::not_a_subgroup, "quotient by a non-subgroup");
    if (!is_normal(normal_subgroup))
        throw group_error(errc::not_normal, "quotient by a non-normal subgroup");

    if (normal_subgroup.count() == 1) return *this;

    const int n = order_;
    std::vector<int> coset_of(n, -1);
    std::vector<int> representative;
    std::vector<int> nm = normal_subgroup.elements();
    for (int a = 0; a < n; ++a) {
        if (coset_of[a] >= 0) continue;
        int id_coset = static_cast<int>(representative.size());
        representative.push_back(a);
        for (int h : nm) coset_of[mul(a, h)] = id_coset;
    }

    const int q = static_cast<int>(representative.size());
    std::vector<int32_t> flat(static_cast<size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            flat[static_cast<size_t>(a) * q + b] =
                static_cast<int32_t>(coset_of[mul(representative[a], representative[b])]);

    std::vector<std::string> labels;
    labels.reserve(q);
    for (int a = 0; a < q; ++a) labels.push_back("[" + labels_[representative[a]] + "]");
    return build_validated(q, std::move(flat), std::move(labels));
}

ElementSet Group::derived_subgroup() const {
    ElementSet commutators(order_);
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            commutators.add(mul(mul(inv(a), inv(b)), mul(a, b)));
    return subgroup_generated(commutators);
}

bool Group::is_solvable() const {
    // Derived series inside the ambient group: restrict commutators to the
    // current term until it stabilises.
    ElementSet current = ElementSet::full(order_);
    while (true) {
        ElementSet commutators(order_);
        std::vector<int> members = current.elements();
        for (int a : members)
            for (int b : members)
                commutators.add(mul(mul(inv(a), inv(b)), mul(a, b)));
        ElementSet next = subgroup_generated(commutators);
        if (next.count() == 1) return true;
        if (next == current) return false;
        current = next;
    }
}

std::string cycle_notation(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> used(n, 0);
    std::ostringstream os;
    bool any = false;
    for (int start = 0; start < n; ++start) {
        if (used[start] || perm[start] == start) continue;
        any = true;
        os << "(" << start;
        used[start] = 1;
        for (int v = perm[start]; v != start; v = perm[v]) {
            os << " " << v;
            used[v] = 1;
        }
        os << ")";
    }
    return any ? os.str() : "()";
}

} // namespace centra
