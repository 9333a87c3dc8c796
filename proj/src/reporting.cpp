#include "centra/reporting.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace centra {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_quote(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

ordered_json report_to_json(const TheoremReport& r) {
    ordered_json j;
    j["theorem_id"] = r.theorem_id;
    j["instances"] = r.instances;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    ordered_json cex = ordered_json::array();
    for (const auto& c : r.counterexamples) {
        ordered_json one;
        one["instance"] = c.instance;
        one["expected"] = c.expected;
        one["got"] = c.got;
        cex.push_back(std::move(one));
    }
    j["counterexamples"] = std::move(cex);
    ordered_json skips = ordered_json::array();
    for (const auto& s : r.skipped) {
        ordered_json one;
        one["instance"] = s.instance;
        one["reason"] = s.reason;
        skips.push_back(std::move(one));
    }
    j["skipped"] = std::move(skips);
    return j;
}

ordered_json profile_to_json(const CentProfile& p) {
    ordered_json j;
    j["group_spec"] = p.group_spec;
    j["order"] = p.order;
    j["center_order"] = p.center_order;
    j["n_cent"] = p.n_cent;
    j["n_2cent"] = p.n_2cent;
    j["delta"] = p.delta;
    j["is_ca"] = p.is_ca;
    j["r"] = p.r; // -1 when undefined (abelian group)
    j["derived_order"] = p.derived_order;
    j["solvable"] = p.solvable;
    j["second_center_order"] = p.second_center_order;
    j["quotient_n_cent"] = p.quotient_n_cent;
    j["quotient_n_2cent"] = p.quotient_n_2cent;
    j["primitive_n"] = p.primitive_n;
    j["primitive_2n"] = p.primitive_2n;
    return j;
}

} // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    throw group_error(errc::bad_parameter, "unknown format " + name);
}

std::string render_suite_reports(const std::vector<TheoremReport>& reports, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json top;
        top["version"] = "report_v1";
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        top["reports"] = std::move(arr);
        return top.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "theorem_id,instances,passed,failed,skipped\r\n";
        for (const auto& r : reports)
            os << csv_quote(r.theorem_id) << "," << r.instances << "," << r.passed << ","
               << r.failed << "," << r.skipped.size() << "\r\n";
        return os.str();
    }
    std::ostringstream os;
    for (const auto& r : reports) {
        os << std::left << std::setw(14) << r.theorem_id << " instances=" << std::setw(5)
           << r.instances << " passed=" << std::setw(5) << r.passed << " failed=" << std::setw(3)
           << r.failed << " skipped=" << r.skipped.size() << "\n";
        for (const auto& c : r.counterexamples)
            os << "    FAIL " << c.instance << "\n         expected: " << c.expected
               << "\n         got:      " << c.got << "\n";
    }
    int total_failed = 0;
    for (const auto& r : reports) total_failed += r.failed;
    os << (total_failed == 0 ? "all verifiers passed\n"
                             : std::to_string(total_failed) + " failures\n");
    return os.str();
}

std::string render_profiles(const std::vector<CentProfile>& profiles, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& p : profiles) arr.push_back(profile_to_json(p));
        return arr.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "group_spec,order,center_order,n_cent,n_2cent,delta,is_ca,r,derived_order,"
              "solvable,second_center_order,quotient_n_cent,quotient_n_2cent,primitive_n,"
              "primitive_2n\r\n";
        for (const auto& p : profiles) {
            os << csv_quote(p.group_spec) << "," << p.order << "," << p.center_order << ","
               << p.n_cent << "," << p.n_2cent << "," << p.delta << "," << (p.is_ca ? 1 : 0) << ","
               << p.r << "," << p.derived_order << "," << (p.solvable ? 1 : 0) << ","
               << p.second_center_order << "," << p.quotient_n_cent << "," << p.quotient_n_2cent
               << "," << (p.primitive_n ? 1 : 0) << "," << (p.primitive_2n ? 1 : 0) << "\r\n";
        }
        return os.str();
    }
    std::ostringstream os;
    for (const auto& p : profiles) {
        os << p.group_spec << ": order=" << p.order << " |Z|=" << p.center_order
           << " |Cent|=" << p.n_cent << " |2-Cent|=" << p.n_2cent << " delta=" << p.delta
           << " CA=" << (p.is_ca ? "yes" : "no");
        if (p.r >= 0) os << " r=" << p.r;
        os << " |G'|=" << p.derived_order << " solvable=" << (p.solvable ? "yes" : "no")
           << " |Z2|=" << p.second_center_order << " quotient |Cent|=" << p.quotient_n_cent
           << " |2-Cent|=" << p.quotient_n_2cent
           << " primitive n=" << (p.primitive_n ? "yes" : "no")
           << " (2,n)=" << (p.primitive_2n ? "yes" : "no") << "\n";
    }
    return os.str();
}

std::string render_catalog(const std::vector<CatalogRow>& rows, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json one;
            one["name"] = row.name;
            one["spec"] = row.spec;
            one["order"] = row.order;
            one["notes"] = row.notes;
            arr.push_back(std::move(one));
        }
        return arr.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "name,spec,order,notes\r\n";
        for (const auto& row : rows)
            os << csv_quote(row.name) << "," << csv_quote(row.spec) << "," << row.order << ","
               << csv_quote(row.notes) << "\r\n";
        return os.str();
    }
    size_t name_width = 4, spec_width = 4;
    for (const auto& row : rows) {
        name_width = std::max(name_width, row.name.size());
        spec_width = std::max(spec_width, row.spec.size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(name_width) + 2) << "name"
       << std::setw(static_cast<int>(spec_width) + 2) << "spec" << std::setw(7) << "order"
       << "notes\n";
    for (const auto& row : rows)
        os << std::left << std::setw(static_cast<int>(name_width) + 2) << row.name
           << std::setw(static_cast<int>(spec_width) + 2) << row.spec << std::setw(7) << row.order
           << row.notes << "\n";
    return os.str();
}

std::string render_conjecture(const ConjectureReport& report, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json top;
        top["version"] = "report_v1";
        ordered_json arr = ordered_json::array();
        for (const auto& e : report.entries) {
            ordered_json one;
            one["name"] = e.name;
            one["n_2cent"] = e.n_2cent;
            arr.push_back(std::move(one));
        }
        top["simple_groups"] = std::move(arr);
        ordered_json merged = ordered_json::array();
        for (const auto& [name, rep] : report.merged) {
            ordered_json one;
            one["name"] = name;
            one["same_class_as"] = rep;
            merged.push_back(std::move(one));
        }
        top["merged_duplicates"] = std::move(merged);
        top["pairwise_distinct"] = report.pairwise_distinct;
        return top.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "name,n_2cent\r\n";
        for (const auto& e : report.entries) os << csv_quote(e.name) << "," << e.n_2cent << "\r\n";
        return os.str();
    }
    std::ostringstream os;
    os << "pair-centralizer counts over catalog simple non-abelian groups\n";
    for (const auto& e : report.entries)
        os << "  " << std::left << std::setw(10) << e.name << " |2-Cent| = " << e.n_2cent << "\n";
    for (const auto& [name, rep] : report.merged)
        os << "  " << name << " shares its isomorphism class with " << rep
           << " (excluded from the distinctness claim)\n";
    os << "pairwise distinct: " << (report.pairwise_distinct ? "yes" : "NO") << "\n";
    return os.str();
}

} // namespace centra
