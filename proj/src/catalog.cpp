#include "centra/catalog.hpp"

#include <atomic>
#include <thread>

#include "centra/constructions.hpp"
#include "centra/presentation.hpp"

namespace centra {

namespace {

CatalogEntry dsl_entry(std::string name, std::string spec, int order, std::string notes = "") {
    CatalogEntry e;
    e.name = std::move(name);
    e.spec_text = spec;
    e.order = order;
    e.build = [spec]() { return build_spec(spec); };
    e.notes = std::move(notes);
    return e;
}

Group heisenberg27() {
    // Free 2-generator group of exponent 3: extraspecial of order 27.
    Presentation pres;
    pres.generator_count = 2;
    pres.relators = {
        {1, 1, 1},
        {2, 2, 2},
        {1, 2, 1, 2, 1, 2},
        {1, -2, 1, -2, 1, -2},
    };
    pres.expected_order = 27;
    return presented_group(pres);
}

std::vector<CatalogEntry> make_default_catalog() {
    std::vector<CatalogEntry> out;

    for (int n = 1; n <= 12; ++n)
        out.push_back(dsl_entry("C(" + std::to_string(n) + ")", "C(" + std::to_string(n) + ")", n));

    out.push_back(dsl_entry("EA(2,2)", "EA(2,2)", 4));
    out.push_back(dsl_entry("EA(2,3)", "EA(2,3)", 8));
    out.push_back(dsl_entry("EA(2,4)", "EA(2,4)", 16));
    out.push_back(dsl_entry("EA(3,2)", "EA(3,2)", 9));
    out.push_back(dsl_entry("EA(5,2)", "EA(5,2)", 25));
    out.push_back(dsl_entry("EA(7,2)", "EA(7,2)", 49));

    out.push_back(dsl_entry("D(6)", "D(6)", 6, "isomorphic to S(3) and U(1,3)"));
    out.push_back(dsl_entry("D(8)", "D(8)", 8, "isomorphic to V(1) and U(1,4)"));
    out.push_back(dsl_entry("D(10)", "D(10)", 10, "isomorphic to U(1,5)"));
    out.push_back(dsl_entry("D(12)", "D(12)", 12, "isomorphic to U(1,6) and prod(S(3),C(2))"));
    out.push_back(dsl_entry("D(14)", "D(14)", 14));
    out.push_back(dsl_entry("D(16)", "D(16)", 16));
    out.push_back(dsl_entry("D(20)", "D(20)", 20));
    out.push_back(dsl_entry("D(24)", "D(24)", 24));

    for (int n = 2; n <= 6; ++n)
        out.push_back(dsl_entry("SD(" + std::to_string(n) + ")", "SD(" + std::to_string(n) + ")",
                                8 * n));
    for (int n = 2; n <= 8; ++n)
        out.push_back(dsl_entry("T(" + std::to_string(n) + ")", "T(" + std::to_string(n) + ")",
                                4 * n, n == 2 ? "the quaternion group Q8" : ""));
    for (int n = 1; n <= 6; ++n)
        out.push_back(dsl_entry("V(" + std::to_string(n) + ")", "V(" + std::to_string(n) + ")",
                                8 * n, n == 1 ? "isomorphic to D(8)" : ""));
    for (int n = 1; n <= 3; ++n)
        for (int m = 3; m <= 6; ++m) {
            std::string label =
                "U(" + std::to_string(n) + "," + std::to_string(m) + ")";
            std::string notes;
            if (n == 1) notes = "isomorphic to D(" + std::to_string(2 * m) + ")";
            out.push_back(dsl_entry(label, label, 2 * n * m, notes));
        }

    out.push_back(dsl_entry("S(3)", "S(3)", 6, "isomorphic to D(6)"));
    out.push_back(dsl_entry("S(4)", "S(4)", 24));
    out.push_back(dsl_entry("A(4)", "A(4)", 12));
    out.push_back(dsl_entry("A(5)", "A(5)", 60, "isomorphic to PSL2(5)"));
    out.push_back(dsl_entry("Hol(7)", "Hol(7)", 42));
    out.push_back(dsl_entry("R", "R", 20, "Z5 x| Z4 with faithful action; sdp(5,4,2)"));
    out.push_back(dsl_entry("G21", "G21", 21, "non-abelian of order 21; sdp(7,3,2)"));
    out.push_back(dsl_entry("M16", "sdp(8,2,5)", 16, "modular group of order 16"));

    {
        CatalogEntry heis;
        heis.name = "Heis27";
        heis.spec_text = "pres<a,b | a^3, b^3, (ab)^3, (ab^-1)^3>";
        heis.order = 27;
        heis.build = []() { return heisenberg27(); };
        heis.notes = "extraspecial group of order 27, exponent 3";
        out.push_back(std::move(heis));
    }

    out.push_back(dsl_entry("PSL2(5)", "PSL2(5)", 60, "isomorphic to A(5)"));
    out.push_back(dsl_entry("PSL2(7)", "PSL2(7)", 168));
    out.push_back(dsl_entry("PSL2(8)", "PSL2(8)", 504));

    out.push_back(dsl_entry("S3xS3", "prod(S(3),S(3))", 36, "centerless product"));
    out.push_back(dsl_entry("D8xC2", "prod(D(8),C(2))", 16));

    return out;
}

} // namespace

const std::vector<CatalogEntry>& default_catalog() {
    static const std::vector<CatalogEntry> entries = make_default_catalog();
    return entries;
}

const BuiltItem* BuiltCatalog::find(const std::string& name) const {
    for (const auto& item : items)
        if (item.name == name) return &item;
    return nullptr;
}

std::vector<NamedGroup> BuiltCatalog::named_groups() const {
    std::vector<NamedGroup> out;
    out.reserve(items.size());
    for (const auto& item : items) out.push_back({item.name, &item.group});
    return out;
}

BuiltCatalog build_catalog(int order_cap, int jobs) {
    const auto& entries = default_catalog();

    std::vector<int> selected;
    BuiltCatalog out;
    for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
        if (entries[i].order > order_cap) {
            out.skipped.emplace_back(entries[i].name,
                                     "order " + std::to_string(entries[i].order) +
                                         " above cap " + std::to_string(order_cap));
        } else {
            selected.push_back(i);
        }
    }

    std::vector<std::optional<BuiltItem>> slots(selected.size());
    auto work = [&](int slot) {
        const CatalogEntry& entry = entries[selected[slot]];
        Group g = entry.build();
        Group q = g.quotient(center(g));
        std::optional<CentProfile> profile;
        if (g.order() >= 2) profile = cent_profile(g, entry.name);
        slots[slot] = BuiltItem{entry.name, entry.spec_text, entry.notes,
                                std::move(g), std::move(q), std::move(profile)};
    };

    if (jobs <= 1) {
        for (size_t i = 0; i < slots.size(); ++i) work(static_cast<int>(i));
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> workers;
        int width = std::min<int>(jobs, static_cast<int>(slots.size()));
        workers.reserve(width);
        for (int w = 0; w < width; ++w)
            workers.emplace_back([&]() {
                while (true) {
                    int i = next.fetch_add(1);
                    if (i >= static_cast<int>(slots.size())) break;
                    work(i);
                }
            });
        for (auto& t : workers) t.join();
    }

    out.items.reserve(slots.size());
    for (auto& slot : slots) out.items.push_back(std::move(*slot));
    return out;
}

} // namespace centra
