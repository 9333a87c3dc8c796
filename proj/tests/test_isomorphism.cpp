#include "doctest.h"

#include "centra/catalog.hpp"
#include "centra/constructions.hpp"
#include "centra/isomorphism.hpp"
#include "centra/presentation.hpp"

using namespace centra;

TEST_CASE("fingerprints separate Z4 from Z2xZ2 and D8 from Q8") {
    Fingerprint z4 = fingerprint(cyclic(4));
    Fingerprint v4 = fingerprint(elem_abelian(2, 2));
    CHECK(z4 != v4);
    CHECK(z4.element_order_histogram != v4.element_order_histogram);

    Fingerprint d8 = fingerprint(dihedral(8));
    Fingerprint q8 = fingerprint(dicyclic(2));
    CHECK(d8.order == q8.order);
    CHECK(d8.center_order == q8.center_order);
    CHECK(d8.derived_order == q8.derived_order);
    CHECK(d8.element_order_histogram.at(2) == 5); // five involutions
    CHECK(q8.element_order_histogram.at(2) == 1); // one involution
    CHECK(d8 != q8);

    CHECK(fingerprint(symmetric(4)) == fingerprint(symmetric(4)));
}

TEST_CASE("fingerprint derived length: abelian 1, S4 3, A5 non-solvable 0") {
    CHECK(fingerprint(cyclic(6)).derived_length == 1);
    CHECK(fingerprint(symmetric(3)).derived_length == 2);
    CHECK(fingerprint(symmetric(4)).derived_length == 3);
    CHECK(fingerprint(alternating(5)).derived_length == 0);
}

TEST_CASE("is_isomorphic: positives, negatives, and the order cap") {
    CHECK(is_isomorphic(dihedral(6), symmetric(3)));
    CHECK_FALSE(is_isomorphic(cyclic(4), elem_abelian(2, 2)));
    CHECK_FALSE(is_isomorphic(cyclic(4), cyclic(8)));

    SUBCASE("dicyclic(2) matches the quaternion presentation") {
        Presentation pres;
        pres.generator_count = 2;
        pres.relators = {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}};
        CHECK(is_isomorphic(dicyclic(2), presented_group(pres)));
    }

    SUBCASE("D8 and Q8 are not isomorphic") {
        CHECK_FALSE(is_isomorphic(dihedral(8), dicyclic(2)));
    }

    SUBCASE("order cap") {
        CHECK_THROWS_WITH_AS(is_isomorphic(cyclic(10), cyclic(10), 5),
                             doctest::Contains("OrderCapExceeded"), group_error);
    }
}

TEST_CASE("is_isomorphic is reflexive and symmetric on a catalog sample") {
    std::vector<Group> sample;
    sample.push_back(dihedral(12));
    sample.push_back(dicyclic(3));
    sample.push_back(alternating(4));
    sample.push_back(elem_abelian(2, 3));
    sample.push_back(cyclic(12));
    for (const Group& g : sample) CHECK(is_isomorphic(g, g));
    for (size_t i = 0; i < sample.size(); ++i)
        for (size_t j = i + 1; j < sample.size(); ++j) {
            bool ij = is_isomorphic(sample[i], sample[j]);
            bool ji = is_isomorphic(sample[j], sample[i]);
            CHECK(ij == ji);
        }
}

TEST_CASE("abelian groups of the same order split correctly") {
    CHECK(is_isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6)));
    CHECK_FALSE(is_isomorphic(direct_product(cyclic(2), cyclic(4)), cyclic(8)));
    CHECK_FALSE(is_isomorphic(elem_abelian(2, 4), direct_product(cyclic(4), cyclic(4))));
    CHECK(is_isomorphic(elem_abelian(3, 2), direct_product(cyclic(3), cyclic(3))));
}

TEST_CASE("PSL(2,5) is the alternating group A5") {
    CHECK(is_isomorphic(psl2(5), alternating(5)));
}

TEST_CASE("identify_in_catalog: quotients and canonical names") {
    BuiltCatalog catalog = build_catalog(100, 1);
    auto named = catalog.named_groups();

    Group d8 = dihedral(8);
    Group v4 = d8.quotient(center(d8));
    auto v4_name = identify_in_catalog(v4, named);
    REQUIRE(v4_name.has_value());
    CHECK(*v4_name == "EA(2,2)");

    auto r_name = identify_in_catalog(sdp_cyclic(5, 4, 2), named);
    REQUIRE(r_name.has_value());
    CHECK(*r_name == "R");

    auto missing = identify_in_catalog(dihedral(26), named);
    CHECK_FALSE(missing.has_value());
}

TEST_CASE("catalog round-trip: every entry is identified up to documented aliases") {
    BuiltCatalog catalog = build_catalog(600, 1);
    auto named = catalog.named_groups();

    // Isomorphism classes sharing one catalog name; the first listed entry
    // wins identification.
    auto alias_class = [](const std::string& name) -> std::string {
        if (name == "S(3)" || name == "U(1,3)") return "D(6)";
        if (name == "V(1)" || name == "U(1,4)") return "D(8)";
        if (name == "U(1,5)") return "D(10)";
        if (name == "U(1,6)") return "D(12)";
        if (name == "U(2,3)") return "T(3)";
        if (name == "U(2,5)") return "T(5)";
        if (name == "C(6)") return "C(6)";
        if (name == "PSL2(5)") return "A(5)";
        return name;
    };

    for (const auto& item : catalog.items) {
        auto found = identify_in_catalog(item.group, named);
        REQUIRE_MESSAGE(found.has_value(), item.name);
        CHECK_MESSAGE(*found == alias_class(item.name), item.name, " -> ", *found);
    }
}
