#include "centra/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "centra/centralizers.hpp"

namespace centra {

namespace {

int mod_pow(long long base, long long exp, long long mod) {
    long long out = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) out = out * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<int>(out);
}

std::vector<int> word_pow(int letter, int count) {
    return std::vector<int>(static_cast<size_t>(count), letter);
}

void append(std::vector<int>& word, const std::vector<int>& tail) {
    word.insert(word.end(), tail.begin(), tail.end());
}

} // namespace

Group cyclic(int n) {
    if (n < 1) throw group_error(errc::bad_parameter, "cyclic order must be >= 1");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return Group::from_cayley_table(table);
}

Group dihedral(int m) {
    if (m < 4 || m % 2 != 0)
        throw group_error(errc::bad_parameter, "dihedral order must be even and >= 4");
    const int k = m / 2;
    // Elements: a^i for i < k, then a^i b; b a = a^-1 b.
    auto rot = [&](int i) { return ((i % k) + k) % k; };
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int i = 0; i < k; ++i) {
        labels[i] = "a^" + std::to_string(i);
        labels[k + i] = "a^" + std::to_string(i) + " b";
        for (int j = 0; j < k; ++j) {
            table[i][j] = rot(i + j);
            table[i][k + j] = k + rot(i + j);
            table[k + i][j] = k + rot(i - j);
            table[k + i][k + j] = rot(i - j);
        }
    }
    return Group::from_cayley_table(table, std::move(labels));
}

Group semidihedral(int n) {
    if (n < 2) throw group_error(errc::bad_parameter, "semidihedral parameter must be >= 2");
    Presentation pres;
    pres.generator_count = 2;
    const int a = 1, b = 2;
    pres.relators.push_back(word_pow(a, 4 * n));
    pres.relators.push_back(word_pow(b, 2));
    std::vector<int> braid{b, a, b};
    append(braid, word_pow(-a, 2 * n - 1));
    pres.relators.push_back(std::move(braid));
    pres.expected_order = 8 * n;
    return presented_group(pres);
}

Group dicyclic(int n) {
    if (n < 2) throw group_error(errc::bad_parameter, "dicyclic parameter must be >= 2");
    Presentation pres;
    pres.generator_count = 2;
    const int a = 1, b = 2;
    pres.relators.push_back(word_pow(a, 2 * n));
    std::vector<int> square = word_pow(a, n);
    append(square, word_pow(-b, 2));
    pres.relators.push_back(std::move(square));
    pres.relators.push_back({-b, a, b, a});
    pres.expected_order = 4 * n;
    return presented_group(pres);
}

Group v_group(int n) {
    if (n < 1) throw group_error(errc::bad_parameter, "v_group parameter must be >= 1");
    Presentation pres;
    pres.generator_count = 2;
    const int a = 1, b = 2;
    pres.relators.push_back(word_pow(a, 2 * n));
    pres.relators.push_back(word_pow(b, 4));
    pres.relators.push_back({a, b, a, b});
    pres.relators.push_back({a, -b, a, -b});
    pres.expected_order = 8 * n;
    return presented_group(pres);
}

Group u_group(int n, int m) {
    if (n < 1 || m < 1) throw group_error(errc::bad_parameter, "u_group parameters must be >= 1");
    Presentation pres;
    pres.generator_count = 2;
    const int a = 1, b = 2;
    pres.relators.push_back(word_pow(a, 2 * n));
    pres.relators.push_back(word_pow(b, m));
    pres.relators.push_back({a, b, -a, b});
    pres.expected_order = 2 * n * m;
    return presented_group(pres);
}

Group sdp_cyclic(int n, int p, int k) {
    if (n < 1 || p < 1) throw group_error(errc::bad_parameter, "sdp parameters must be >= 1");
    k = ((k % n) + n) % n;
    if (n > 1 && std::gcd(k, n) != 1)
        throw group_error(errc::bad_action, "action multiplier is not invertible mod n");
    if (mod_pow(k, p, n) != 1 % n)
        throw group_error(errc::bad_action,
                          "k^p != 1 (mod n): action order does not divide p");

    // Pairs (i, j) with i mod n, j mod p; (i1,j1)*(i2,j2) = (i1 + i2*k^{j1}, j1 + j2).
    std::vector<int> k_pow(p);
    for (int j = 0; j < p; ++j) k_pow[j] = mod_pow(k, j, n);
    const int order = n * p;
    auto idx = [&](int i, int j) { return i * p + j; };
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < p; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < p; ++j2)
                    table[idx(i1, j1)][idx(i2, j2)] =
                        idx((i1 + i2 * k_pow[j1]) % n, (j1 + j2) % p);
    std::vector<std::string> labels(order);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j)
            labels[idx(i, j)] = "x^" + std::to_string(i) + " y^" + std::to_string(j);
    return Group::from_cayley_table(table, std::move(labels));
}

Group holomorph_cyclic(int n) {
    if (n < 2) throw group_error(errc::bad_parameter, "holomorph parameter must be >= 2");
    std::vector<int> units;
    for (int a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) units.push_back(a);

    // Affine maps x -> a*x + b; (a1,b1) o (a2,b2) : x -> a1*a2*x + a1*b2 + b1.
    struct Affine {
        int a, b;
    };
    std::vector<Affine> maps;
    maps.push_back({1, 0});
    for (int a : units)
        for (int b = 0; b < n; ++b)
            if (!(a == 1 && b == 0)) maps.push_back({a, b});

    const int order = static_cast<int>(maps.size());
    auto find_index = [&](int a, int b) {
        for (int i = 0; i < order; ++i)
            if (maps[i].a == a && maps[i].b == b) return i;
        throw group_error(errc::bad_parameter, "affine composition left the holomorph");
    };
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            table[i][j] = find_index(maps[i].a * maps[j].a % n,
                                     (maps[i].a * maps[j].b + maps[i].b) % n);
    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i)
        labels[i] = "x->" + std::to_string(maps[i].a) + "x+" + std::to_string(maps[i].b);
    return Group::from_cayley_table(table, std::move(labels));
}

Group direct_product(const Group& h, const Group& k, int element_cap) {
    const long long order = static_cast<long long>(h.order()) * k.order();
    if (order > element_cap)
        throw group_error(errc::order_cap_exceeded, "product order " + std::to_string(order) +
                              " exceeds cap " + std::to_string(element_cap));
    const int n = static_cast<int>(order);
    const int ko = k.order();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[a][b] = h.mul(a / ko, b / ko) * ko + k.mul(a % ko, b % ko);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a)
        labels[a] = "(" + h.label(a / ko) + ", " + k.label(a % ko) + ")";
    return Group::from_cayley_table(table, std::move(labels));
}

Group symmetric(int n) {
    if (n < 1) throw group_error(errc::bad_parameter, "symmetric degree must be >= 1");
    if (n == 1) return Group::from_permutation_generators(1, {});
    std::vector<int> transposition(n), cycle(n);
    for (int i = 0; i < n; ++i) transposition[i] = cycle[i] = i;
    std::swap(transposition[0], transposition[1]);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    return Group::from_permutation_generators(n, {transposition, cycle});
}

Group alternating(int n) {
    if (n < 1) throw group_error(errc::bad_parameter, "alternating degree must be >= 1");
    if (n <= 2) return Group::from_permutation_generators(1, {});
    std::vector<int> three_cycle(n);
    for (int i = 0; i < n; ++i) three_cycle[i] = i;
    three_cycle[0] = 1;
    three_cycle[1] = 2;
    three_cycle[2] = 0;
    if (n == 3) return Group::from_permutation_generators(n, {three_cycle});
    std::vector<int> big(n);
    for (int i = 0; i < n; ++i) big[i] = i;
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) big[i] = (i + 1) % n;
    } else {
        for (int i = 1; i < n; ++i) big[i] = i % (n - 1) + 1;
    }
    return Group::from_permutation_generators(n, {three_cycle, big});
}

Group elem_abelian(int p, int k) {
    if (p < 2 || k < 1) throw group_error(errc::bad_parameter, "elem_abelian needs p >= 2, k >= 1");
    Group out = cyclic(p);
    for (int i = 1; i < k; ++i) out = direct_product(out, cyclic(p));
    return out;
}

namespace {

// GF(8) as bit triples over x^3 = x + 1.
int gf8_mul(int a, int b) {
    int out = 0;
    while (b) {
        if (b & 1) out ^= a;
        a <<= 1;
        if (a & 8) a ^= 0b1011;
        b >>= 1;
    }
    return out;
}

int gf8_inv(int a) {
    for (int b = 1; b < 8; ++b)
        if (gf8_mul(a, b) == 1) return b;
    throw group_error(errc::bad_parameter, "no inverse in GF(8)");
}

} // namespace

Group psl2(int q) {
    if (q != 5 && q != 7 && q != 8)
        throw group_error(errc::bad_parameter, "psl2 supports q in {5, 7, 8}");
    const int inf = q;
    const int points = q + 1;
    std::vector<int> t(points), w(points);
    if (q == 8) {
        // t: x -> x + 1; w: x -> 1/(g*x + 1) with g a generator of GF(8)*.
        const int g = 2;
        for (int x = 0; x < 8; ++x) {
            t[x] = x ^ 1;
            int d = gf8_mul(g, x) ^ 1;
            w[x] = d == 0 ? inf : gf8_inv(d);
        }
        t[inf] = inf;
        w[inf] = 0;
    } else {
        // t: x -> x + 1; w: x -> -1/x.
        for (int x = 0; x < q; ++x) {
            t[x] = (x + 1) % q;
            if (x == 0) {
                w[x] = inf;
            } else {
                int invx = mod_pow(x, q - 2, q);
                w[x] = (q - invx) % q;
            }
        }
        t[inf] = inf;
        w[inf] = 0;
    }
    return Group::from_permutation_generators(points, {t, w});
}

// ---------------------------------------------------------------------------
// Group-spec DSL

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw group_error(errc::parse_error,
                          what + " at position " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected a name");
        return std::string(text.substr(start, pos - start));
    }

    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }

    std::vector<int> int_args(int count) {
        expect('(');
        std::vector<int> out;
        out.push_back(integer());
        for (int i = 1; i < count; ++i) {
            expect(',');
            out.push_back(integer());
        }
        expect(')');
        return out;
    }

    GroupSpec spec() {
        std::string name = ident();
        GroupSpec node;
        using K = GroupSpec::Kind;
        if (name == "prod") {
            node.kind = K::prod;
            expect('(');
            node.children.push_back(spec());
            expect(',');
            node.children.push_back(spec());
            while (try_consume(',')) node.children.push_back(spec());
            expect(')');
        } else if (name == "quotZ") {
            node.kind = K::quot_center;
            expect('(');
            node.children.push_back(spec());
            expect(')');
        } else if (name == "C") {
            node.kind = K::cyclic;
            node.args = int_args(1);
        } else if (name == "D") {
            node.kind = K::dihedral;
            node.args = int_args(1);
        } else if (name == "SD") {
            node.kind = K::semidihedral;
            node.args = int_args(1);
        } else if (name == "T") {
            node.kind = K::dicyclic;
            node.args = int_args(1);
        } else if (name == "V") {
            node.kind = K::vgroup;
            node.args = int_args(1);
        } else if (name == "U") {
            node.kind = K::ugroup;
            node.args = int_args(2);
        } else if (name == "S") {
            node.kind = K::symmetric;
            node.args = int_args(1);
        } else if (name == "A") {
            node.kind = K::alternating;
            node.args = int_args(1);
        } else if (name == "EA") {
            node.kind = K::elem_abelian;
            node.args = int_args(2);
        } else if (name == "Hol") {
            node.kind = K::hol_cyclic;
            node.args = int_args(1);
        } else if (name == "sdp") {
            node.kind = K::sdp;
            node.args = int_args(3);
        } else if (name == "R") {
            node.kind = K::r20;
        } else if (name == "G21") {
            node.kind = K::g21;
        } else if (name == "PSL2") {
            node.kind = K::psl2;
            node.args = int_args(1);
        } else {
            fail("unknown constructor '" + name + "'");
        }
        return node;
    }
};

} // namespace

GroupSpec parse_spec(std::string_view text) {
    Parser parser{text};
    GroupSpec out = parser.spec();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return out;
}

std::string GroupSpec::to_string() const {
    using K = Kind;
    auto with_args = [&](const char* name) {
        std::ostringstream os;
        os << name << "(";
        for (size_t i = 0; i < args.size(); ++i) {
            if (i) os << ",";
            os << args[i];
        }
        os << ")";
        return os.str();
    };
    switch (kind) {
        case K::cyclic: return with_args("C");
        case K::dihedral: return with_args("D");
        case K::semidihedral: return with_args("SD");
        case K::dicyclic: return with_args("T");
        case K::vgroup: return with_args("V");
        case K::ugroup: return with_args("U");
        case K::symmetric: return with_args("S");
        case K::alternating: return with_args("A");
        case K::elem_abelian: return with_args("EA");
        case K::hol_cyclic: return with_args("Hol");
        case K::sdp: return with_args("sdp");
        case K::r20: return "R";
        case K::g21: return "G21";
        case K::psl2: return with_args("PSL2");
        case K::prod: {
            std::string out = "prod(";
            for (size_t i = 0; i < children.size(); ++i) {
                if (i) out += ",";
                out += children[i].to_string();
            }
            return out + ")";
        }
        case K::quot_center: return "quotZ(" + children[0].to_string() + ")";
    }
    return "?";
}

Group build(const GroupSpec& spec) {
    using K = GroupSpec::Kind;
    switch (spec.kind) {
        case K::cyclic: return cyclic(spec.args[0]);
        case K::dihedral: return dihedral(spec.args[0]);
        case K::semidihedral: return semidihedral(spec.args[0]);
        case K::dicyclic: return dicyclic(spec.args[0]);
        case K::vgroup: return v_group(spec.args[0]);
        case K::ugroup: return u_group(spec.args[0], spec.args[1]);
        case K::symmetric: return symmetric(spec.args[0]);
        case K::alternating: return alternating(spec.args[0]);
        case K::elem_abelian: return elem_abelian(spec.args[0], spec.args[1]);
        case K::hol_cyclic: return holomorph_cyclic(spec.args[0]);
        case K::sdp: return sdp_cyclic(spec.args[0], spec.args[1], spec.args[2]);
        case K::r20: return sdp_cyclic(5, 4, 2);
        case K::g21: return sdp_cyclic(7, 3, 2);
        case K::psl2: return psl2(spec.args[0]);
        case K::prod: {
            Group out = build(spec.children[0]);
            for (size_t i = 1; i < spec.children.size(); ++i)
                out = direct_product(out, build(spec.children[i]));
            return out;
        }
        case K::quot_center: {
            Group inner = build(spec.children[0]);
            return inner.quotient(center(inner));
        }
    }
    throw group_error(errc::bad_parameter, "unhandled spec kind");
}

Group build_spec(std::string_view text) { return build(parse_spec(text)); }

} // namespace centra
