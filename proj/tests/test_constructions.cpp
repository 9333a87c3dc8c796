#include "doctest.h"

#include "centra/centralizers.hpp"
#include "centra/constructions.hpp"
#include "centra/isomorphism.hpp"
#include "centra/presentation.hpp"

using namespace centra;

TEST_CASE("cyclic groups: orders and element orders") {
    CHECK(cyclic(1).order() == 1);
    Group z6 = cyclic(6);
    CHECK(z6.order() == 6);
    CHECK(z6.is_abelian());
    Group z7 = cyclic(7);
    for (int x = 1; x < 7; ++x) CHECK(z7.element_order(x) == 7);
}

TEST_CASE("dihedral: D6 is S3, centers split by parity") {
    CHECK(is_isomorphic(dihedral(6), symmetric(3)));
    CHECK(is_isomorphic(dihedral(4), elem_abelian(2, 2))); // degenerate digon case
    CHECK(center(dihedral(8)).count() == 2);
    CHECK_THROWS_WITH_AS(dihedral(7), doctest::Contains("BadParameter"), group_error);
    CHECK_THROWS_WITH_AS(dihedral(2), doctest::Contains("BadParameter"), group_error);

    SUBCASE("centerless exactly for odd polygon size") {
        for (int n = 3; n <= 12; ++n) {
            int expected = n % 2 == 1 ? 1 : 2;
            CHECK(center(dihedral(2 * n)).count() == expected);
        }
    }
}

TEST_CASE("coset enumeration: cyclic, semidihedral and quaternion presentations") {
    SUBCASE("single-generator cyclic group") {
        Presentation pres;
        pres.generator_count = 1;
        pres.relators = {{1, 1, 1, 1, 1}};
        Group g = presented_group(pres);
        CHECK(g.order() == 5);
        CHECK(is_isomorphic(g, cyclic(5)));
    }

    SUBCASE("SD16 from its two-generator presentation") {
        // a^8 = b^2 = e, bab = a^3.
        Presentation pres;
        pres.generator_count = 2;
        pres.relators = {{1, 1, 1, 1, 1, 1, 1, 1}, {2, 2}, {2, 1, 2, -1, -1, -1}};
        Group g = presented_group(pres);
        CHECK(g.order() == 16);
        CHECK(is_isomorphic(g, semidihedral(2)));
    }

    SUBCASE("quaternion group via the dicyclic presentation") {
        // a^4 = e, a^2 = b^2, b^-1 a b = a^-1.
        Presentation pres;
        pres.generator_count = 2;
        pres.relators = {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}};
        Group g = presented_group(pres);
        CHECK(g.order() == 8);
        CHECK(is_isomorphic(g, dicyclic(2)));
    }

    SUBCASE("colliding relators collapse to the trivial group") {
        Presentation pres;
        pres.generator_count = 1;
        pres.relators = {{1, 1, 1}, {1, 1, 1, 1, 1}};
        CHECK(presented_group(pres).order() == 1);
    }

    SUBCASE("expected_order mismatch is reported") {
        Presentation pres;
        pres.generator_count = 1;
        pres.relators = {{1, 1, 1, 1, 1}};
        pres.expected_order = 6;
        CHECK_THROWS_WITH_AS(presented_group(pres), doctest::Contains("OrderMismatch"),
                             group_error);
    }

    SUBCASE("runaway enumerations hit the coset cap") {
        Presentation pres;
        pres.generator_count = 2;
        pres.relators = {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}};
        CHECK_THROWS_WITH_AS(presented_group(pres, 50), doctest::Contains("CosetCapExceeded"),
                             group_error);
    }

    SUBCASE("triangle-style presentations match their permutation models") {
        // (2,3,3), (2,3,4), (2,3,5): A4, S4, A5. Involution-heavy relator
        // sets drive the coincidence machinery hard.
        struct Triangle {
            int q;
            int expected_order;
        };
        for (const Triangle t : {Triangle{3, 12}, Triangle{4, 24}, Triangle{5, 60}}) {
            Presentation pres;
            pres.generator_count = 2;
            pres.relators = {{1, 1}, {2, 2, 2}};
            std::vector<int> power;
            for (int i = 0; i < t.q; ++i) {
                power.push_back(1);
                power.push_back(2);
            }
            pres.relators.push_back(power);
            Group g = presented_group(pres);
            REQUIRE(g.order() == t.expected_order);
            if (t.q == 3) CHECK(is_isomorphic(g, alternating(4)));
            if (t.q == 4) CHECK(is_isomorphic(g, symmetric(4)));
            if (t.q == 5) CHECK(is_isomorphic(g, alternating(5)));
        }
    }

    SUBCASE("Coxeter presentation of the order-48 hyperoctahedral group") {
        // <a,b,c | a^2, b^2, c^2, (ab)^4, (bc)^3, (ac)^2>
        Presentation pres;
        pres.generator_count = 3;
        pres.relators = {{1, 1}, {2, 2}, {3, 3},
                         {1, 2, 1, 2, 1, 2, 1, 2}, {2, 3, 2, 3, 2, 3}, {1, 3, 1, 3}};
        Group g = presented_group(pres);
        CHECK(g.order() == 48);
        CHECK_FALSE(g.is_abelian());
        CHECK(g.is_solvable());
    }

    SUBCASE("reflection presentations of dihedral groups") {
        for (int n = 3; n <= 9; ++n) {
            Presentation pres;
            pres.generator_count = 2;
            pres.relators = {{1, 1}, {2, 2}};
            std::vector<int> braid;
            for (int i = 0; i < n; ++i) {
                braid.push_back(1);
                braid.push_back(2);
            }
            pres.relators.push_back(braid);
            Group g = presented_group(pres);
            REQUIRE(g.order() == 2 * n);
            CHECK(is_isomorphic(g, dihedral(2 * n)));
        }
    }

    SUBCASE("degenerate presentations are rejected") {
        Presentation no_relators;
        no_relators.generator_count = 2;
        CHECK_THROWS_WITH_AS(presented_group(no_relators), doctest::Contains("BadParameter"),
                             group_error);

        Presentation empty_word;
        empty_word.generator_count = 1;
        empty_word.relators = {{}};
        CHECK_THROWS_WITH_AS(presented_group(empty_word), doctest::Contains("BadParameter"),
                             group_error);

        Presentation out_of_range;
        out_of_range.generator_count = 1;
        out_of_range.relators = {{1, 2}};
        CHECK_THROWS_WITH_AS(presented_group(out_of_range), doctest::Contains("BadParameter"),
                             group_error);
    }
}

TEST_CASE("presented family orders match the closed forms") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(semidihedral(n).order() == 8 * n);
        CHECK(dicyclic(n).order() == 4 * n);
    }
    for (int n = 1; n <= 8; ++n) CHECK(v_group(n).order() == 8 * n);
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= 8; ++m) CHECK(u_group(n, m).order() == 2 * n * m);
}

TEST_CASE("u_group degenerate and small cases") {
    CHECK(is_isomorphic(u_group(1, 3), symmetric(3)));
    for (int n = 1; n <= 4; ++n) {
        CHECK(u_group(n, 1).is_abelian());
        CHECK(u_group(n, 2).is_abelian());
    }
}

TEST_CASE("v_group(1) is dihedral of order 8") {
    CHECK(is_isomorphic(v_group(1), dihedral(8)));
}

TEST_CASE("semidirect products of cyclic groups") {
    Group r = sdp_cyclic(5, 4, 2);
    CHECK(r.order() == 20);
    CHECK_FALSE(r.is_abelian());
    CHECK(center(r).count() == 1);

    SUBCASE("R matches its two-generator presentation") {
        // x^5 = y^4 = e, x y x^-3 y^-1 = e encodes xy = yx^3.
        Presentation pres;
        pres.generator_count = 2;
        pres.relators = {{1, 1, 1, 1, 1}, {2, 2, 2, 2}, {1, 2, -1, -1, -1, -2}};
        pres.expected_order = 20;
        CHECK(is_isomorphic(r, presented_group(pres)));
    }

    Group g21 = sdp_cyclic(7, 3, 2);
    CHECK(g21.order() == 21);
    CHECK_FALSE(g21.is_abelian());

    SUBCASE("trivial action gives the direct product") {
        Group g = sdp_cyclic(6, 5, 1);
        CHECK(g.is_abelian());
        CHECK(is_isomorphic(g, direct_product(cyclic(6), cyclic(5))));
    }

    CHECK_THROWS_WITH_AS(sdp_cyclic(5, 3, 2), doctest::Contains("BadAction"), group_error);
    CHECK_THROWS_WITH_AS(sdp_cyclic(6, 2, 3), doctest::Contains("BadAction"), group_error);
}

TEST_CASE("holomorphs of small cyclic groups") {
    Group h7 = holomorph_cyclic(7);
    CHECK(h7.order() == 42);
    CHECK_FALSE(h7.is_abelian());

    CHECK(is_isomorphic(holomorph_cyclic(3), symmetric(3)));
    CHECK(is_isomorphic(holomorph_cyclic(2), cyclic(2)));
}

TEST_CASE("direct products: Klein four, S3 x S3, unit laws") {
    CHECK(is_isomorphic(direct_product(cyclic(2), cyclic(2)), elem_abelian(2, 2)));

    Group s3s3 = direct_product(symmetric(3), symmetric(3));
    CHECK(s3s3.order() == 36);
    CHECK(center(s3s3).count() == 1);

    Group g = direct_product(cyclic(1), dihedral(10));
    CHECK(is_isomorphic(g, dihedral(10)));

    CHECK_THROWS_WITH_AS(direct_product(cyclic(200), cyclic(200)),
                         doctest::Contains("OrderCapExceeded"), group_error);
}

TEST_CASE("PSL(2,q) for q in {5,7,8}") {
    Group p5 = psl2(5);
    CHECK(p5.order() == 60);
    CHECK(is_isomorphic(p5, alternating(5)));

    Group p7 = psl2(7);
    CHECK(p7.order() == 168);

    SUBCASE("PSL(2,7) has no proper nontrivial normal subgroup") {
        // Normal closure of any nonidentity element is everything.
        for (int x : {1, 7, 50, 100}) {
            ElementSet conjugates(p7.order());
            for (int c = 0; c < p7.order(); ++c) conjugates.add(p7.conjugate(c, x));
            CHECK(p7.subgroup_generated(conjugates).count() == p7.order());
        }
    }

    CHECK(psl2(8).order() == 504);
    CHECK_THROWS_WITH_AS(psl2(9), doctest::Contains("BadParameter"), group_error);
}

TEST_CASE("spec DSL: parsing, aliases, quotients and errors") {
    CHECK(build_spec("D(8)").order() == 8);
    CHECK(is_isomorphic(build_spec("prod(C(2),C(2),C(2))"), elem_abelian(2, 3)));

    SUBCASE("quotZ(SD(2)) is D8") {
        Group q = build_spec("quotZ(SD(2))");
        CHECK(q.order() == 8);
        CHECK(is_isomorphic(q, dihedral(8)));
    }

    SUBCASE("whitespace-insensitive parsing") {
        GroupSpec a = parse_spec(" prod( C(2) , D( 8 ) ) ");
        GroupSpec b = parse_spec("prod(C(2),D(8))");
        CHECK(a == b);
    }

    SUBCASE("R and G21 atoms") {
        CHECK(build_spec("R").order() == 20);
        CHECK(build_spec("G21").order() == 21);
        CHECK(is_isomorphic(build_spec("R"), build_spec("sdp(5,4,2)")));
    }

    SUBCASE("parse errors carry positions") {
        CHECK_THROWS_WITH_AS(parse_spec("D(8"), doctest::Contains("position"), group_error);
        CHECK_THROWS_WITH_AS(parse_spec("X(3)"), doctest::Contains("ParseError"), group_error);
        CHECK_THROWS_WITH_AS(parse_spec("prod(C(2))"), doctest::Contains("ParseError"),
                             group_error);
        CHECK_THROWS_WITH_AS(parse_spec("D(8) extra"), doctest::Contains("trailing"), group_error);
    }

    SUBCASE("printer and parser round-trip") {
        for (const char* text :
             {"C(12)", "D(8)", "SD(2)", "T(3)", "V(4)", "U(2,3)", "S(4)", "A(5)", "EA(2,3)",
              "Hol(7)", "sdp(5,4,2)", "R", "G21", "PSL2(7)", "prod(C(2),D(8))",
              "quotZ(SD(2))", "prod(C(2),prod(C(3),C(5)),quotZ(D(8)))"}) {
            GroupSpec ast = parse_spec(text);
            CHECK(ast.to_string() == text);
            CHECK(parse_spec(ast.to_string()) == ast);
        }
    }
}

TEST_CASE("malformed spec strings raise parse errors, never crash") {
    for (const char* text :
         {"", "(", ")", "prod", "prod(", "prod()", "quotZ", "quotZ()", "C", "C()", "C(x)",
          "C(-3)", "C(3,4)", "D(8))", "U(2)", "sdp(5,4)", "PSL2", "R(2)", "G21(1)",
          "prod(C(2),)", "quotZ(C(2),C(3))", "C (2) junk", "9", ",", "prod(prod(C(2)))"}) {
        CHECK_THROWS_AS(parse_spec(text), group_error);
    }
}

TEST_CASE("every family constructor output passes full validation") {
    for (const Group& g : {semidihedral(3), dicyclic(5), v_group(3), u_group(2, 5),
                           sdp_cyclic(8, 2, 5), holomorph_cyclic(6)})
        CHECK_NOTHROW(g.validate());
}
