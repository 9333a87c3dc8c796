#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "centra/group.hpp"
#include "centra/presentation.hpp"

namespace centra {

/// Z_n as addition mod n.
Group cyclic(int n);

/// Dihedral group of order m (m even, m >= 4): symmetries of an
/// (m/2)-gon. Note the parameter is the group order, so dihedral(2*k)
/// acts on a k-gon.
Group dihedral(int m);

/// Presented families; parameters follow the order conventions
/// |SD(n)| = 8n, |T(n)| = 4n, |V(n)| = 8n, |U(n,m)| = 2nm.
Group semidihedral(int n); // <a,b | a^{4n} = b^2 = e, bab = a^{2n-1}>, n >= 2
Group dicyclic(int n);     // <a,b | a^{2n} = e, a^n = b^2, b^-1 a b = a^-1>, n >= 2
Group v_group(int n);      // <a,b | a^{2n} = b^4 = e, aba = b^-1, ab^-1 a = b>, n >= 1
Group u_group(int n, int m); // <a,b | a^{2n} = b^m = e, a b a^-1 = b^-1>, n, m >= 1

/// Z_n x| Z_p with action x -> x^k; requires gcd(k, n) = 1 and
/// k^p = 1 (mod n). p may be composite (the order-20 Frobenius group
/// needs p = 4).
Group sdp_cyclic(int n, int p, int k);

/// Affine maps x -> a*x + b on Z_n with a invertible; order n*phi(n).
Group holomorph_cyclic(int n);

Group direct_product(const Group& h, const Group& k,
                     int element_cap = Group::default_element_cap);

Group symmetric(int n);
Group alternating(int n);
Group elem_abelian(int p, int k);

/// PSL(2,q) for q in {5, 7, 8} acting on the projective line (q+1 points).
Group psl2(int q);

/// AST of the group-spec DSL. Grammar:
///   spec  := atom | "prod(" spec ("," spec)+ ")" | "quotZ(" spec ")"
///   atom  := "C(" int ")" | "D(" int ")" | "SD(" int ")" | "T(" int ")"
///          | "V(" int ")" | "U(" int "," int ")" | "S(" int ")" | "A(" int ")"
///          | "EA(" int "," int ")" | "Hol(" int ")"
///          | "sdp(" int "," int "," int ")" | "R" | "G21" | "PSL2(" int ")"
struct GroupSpec {
    enum class Kind {
        cyclic,
        dihedral,
        semidihedral,
        dicyclic,
        vgroup,
        ugroup,
        symmetric,
        alternating,
        elem_abelian,
        hol_cyclic,
        sdp,
        r20,
        g21,
        psl2,
        prod,
        quot_center,
    };

    Kind kind = Kind::cyclic;
    std::vector<int> args;
    std::vector<GroupSpec> children;

    bool operator==(const GroupSpec& other) const = default;

    std::string to_string() const;
};

/// Throws parse_error with a character position on malformed input.
GroupSpec parse_spec(std::string_view text);

Group build(const GroupSpec& spec);

/// Convenience: parse then build.
Group build_spec(std::string_view text);

} // namespace centra
