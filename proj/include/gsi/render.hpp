#pragma once

#include <string>
#include <vector>

#include "gsi/classification.hpp"
#include "gsi/enumeration.hpp"
#include "gsi/even_frobenius.hpp"
#include "gsi/gluing.hpp"
#include "gsi/semigroup.hpp"

namespace gsi {

enum class Format { table, json, csv };

Format parse_format(const std::string& name);  // bad_input on unknown names

std::string angle_brackets(const std::vector<Int>& gens);

// analyze: invariants plus the five classification verdicts
std::string render_analysis(const NumericalSemigroup& s, const ClassificationReport& r, Format f);

// gap partition with frobenius/genus header
std::string render_partition(const GluingSpec& spec, const GsiGapPartition& p, Format f);

// glued semigroup summary
std::string render_gluing(const GluingSpec& spec, const NumericalSemigroup& glued, Format f);

// catalog: table groups by Frobenius number (empty keys shown empty);
// json is one record per line {frobenius, gens, base_gens, d, gamma};
// csv has the same columns with space-separated generator lists
std::string render_catalog(const GsiCatalog& c, Format f);

// even-scan records {f, found, base_gens, d, gamma}
std::string render_scan(const std::vector<EvenScanRecord>& records, Format f);

// single realizability answer for cmd_even
std::string render_witness(const GluingSpec& spec, Format f);

}  // namespace gsi
