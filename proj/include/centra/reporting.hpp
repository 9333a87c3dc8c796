#pragma once

#include <string>
#include <vector>

#include "centra/catalog.hpp"
#include "centra/centralizers.hpp"
#include "centra/theorems.hpp"

namespace centra {

enum class OutputFormat { json, text, csv };

OutputFormat parse_format(const std::string& name); // throws bad_parameter

/// Suite report, schema "report_v1": a top-level object with a version
/// field and the report array, stable key order, byte-deterministic.
std::string render_suite_reports(const std::vector<TheoremReport>& reports, OutputFormat format);

std::string render_profiles(const std::vector<CentProfile>& profiles, OutputFormat format);

struct CatalogRow {
    std::string name;
    std::string spec;
    int order = 0;
    std::string notes;
};
std::string render_catalog(const std::vector<CatalogRow>& rows, OutputFormat format);

std::string render_conjecture(const ConjectureReport& report, OutputFormat format);

} // namespace centra
