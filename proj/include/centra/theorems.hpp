#pragma once

#include <string>
#include <vector>

#include "centra/catalog.hpp"

namespace centra {

struct Counterexample {
    std::string instance;
    std::string expected;
    std::string got;
};

struct SkipNote {
    std::string instance;
    std::string reason;
};

/// Result of one verifier: instances = passed + failed; skipped instances
/// are tracked separately with reasons.
struct TheoremReport {
    std::string theorem_id;
    int instances = 0;
    int passed = 0;
    int failed = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<SkipNote> skipped;

    void check(const std::string& instance, bool ok, const std::string& expected,
               const std::string& got);
    void check_eq(const std::string& instance, long long expected, long long got);
    void skip(const std::string& instance, const std::string& reason);
    void merge(const TheoremReport& other);
    bool all_passed() const { return failed == 0; }
};

// --- per-instance verifiers -------------------------------------------------

/// Z(G) not in Cent(G); G in 2-Cent(G) iff Z(G) nontrivial. Non-abelian G.
TheoremReport verify_lemma_2_1(const Group& g, const std::string& instance);

/// Nontrivial center: Cent(G) strictly inside 2-Cent(G); trivial center:
/// Cent(G) \ {G} inside 2-Cent(G) and |Cent| <= |2-Cent|. Non-abelian G.
TheoremReport verify_lemma_2_2(const Group& g, const std::string& instance);

/// |Cent(HxK)| = |Cent(H)| * |Cent(K)|, all three counts brute-forced.
TheoremReport verify_lemma_2_3(const Group& h, const Group& k, const std::string& instance);

/// |2-Cent(HxK)| = |2C(H)||2C(K)| + delta(K)|2C(H)| + delta(H)|2C(K)|,
/// every quantity computed with the naive oracle.
TheoremReport verify_thm_2_4(const Group& h, const Group& k, const std::string& instance);

/// Seven-term expansion of |2-Cent(H1 x H2 x H3)| against brute force.
TheoremReport verify_cor_2_6(const Group& h1, const Group& h2, const Group& h3,
                             const std::string& instance);

/// CA-groups: |2-Cent| = |Cent| + (center nontrivial ? 1 : 0).
TheoremReport verify_thm_2_6(const Group& g, const std::string& instance);

/// G = Z_n x| Z_p (p prime, non-abelian): |Z| divides n,
/// |Cent| = n/|Z| + 2, |2-Cent| = n+2 when centerless else n/|Z| + 3.
TheoremReport verify_thm_2_9(int n, int p, int k);

/// For G whose central quotient decomposes as non-abelian Z_n x| Z_p with
/// p prime: the count identities of the quotient corollaries plus both
/// primitivity biconditionals.
TheoremReport verify_cor_2_10_11_12(const Group& g, const std::string& instance);

/// CA iff |2-Cent| = r + 1 (centerless) / r + 2 (otherwise), with r the
/// maximum pairwise non-commuting set size. Non-abelian G.
TheoremReport verify_thm_2_13(const Group& g, const std::string& instance);

// --- catalog-wide verifiers --------------------------------------------------

/// Classification of (2,n)-centralizer catalog groups for n in 2..9.
TheoremReport verify_classification(int n, const BuiltCatalog& catalog);

/// Solvability below 22, the A5 characterization, and the simple-group
/// scan (brute-force normal-subgroup search).
TheoremReport verify_section5(const BuiltCatalog& catalog);

/// p-group counting: the all-proper-centralizers-of-order-p|Z| count, the
/// s + t(p+1) identity, and the order-p^4 case list.
TheoremReport verify_pgroup_theorems(const BuiltCatalog& catalog);

/// Closed-form family counts; family is one of "D", "SD", "T", "V", "U".
TheoremReport verify_section6_family(const std::string& family);

/// Pairwise-distinctness experiment for |2-Cent| over catalog simple
/// non-abelian groups; informational, never a suite failure.
struct ConjectureReport {
    struct Entry {
        std::string name;
        int n_2cent = 0;
    };
    std::vector<Entry> entries;                              // one per iso class
    std::vector<std::pair<std::string, std::string>> merged; // (name, same class as)
    bool pairwise_distinct = true;
};
ConjectureReport conjecture_experiment(const BuiltCatalog& catalog);

// --- suite -------------------------------------------------------------------

struct SuiteConfig {
    std::vector<std::string> theorem_ids; // empty = all
    int order_cap = 600;
    int jobs = 1;
    /// Catalog names whose pairwise products feed the product-formula
    /// verifiers. Empty selects the designated default subset (which also
    /// adds the S(3) x S(3) self-product and C(4) x D(8) instances).
    std::vector<std::string> product_set;
};

const std::vector<std::string>& all_theorem_ids();

/// Runs the selected verifiers over a shared built catalog. Reports come
/// back in registry order regardless of jobs. Throws unknown_theorem for
/// an unrecognized id.
std::vector<TheoremReport> run_suite(const SuiteConfig& config);
std::vector<TheoremReport> run_suite(const SuiteConfig& config, const BuiltCatalog& catalog);

} // namespace centra
