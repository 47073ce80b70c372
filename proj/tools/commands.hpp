#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pfstringy/ratfunc.hpp"
#include "pfstringy/report.hpp"

namespace pfs::cli {

enum ExitCode { ok = 0, verification_failed = 1, usage = 2, internal = 3 };

enum class Format { text, json, csv, latex };
Format parse_format(const std::string &text);

/// Inclusive integer ranges given as --grid "n=4..14,e=-4..8".
using GridRanges = std::map<std::string, std::pair<long, long>>;
GridRanges parse_grid(const std::vector<std::string> &specs);

/// LaTeX for a rational function, from its factored rendering.
std::string latex(const RatFunc &f);

/// A computed value: ordered fields for text/csv/latex, `json` as emitted.
struct Result {
    nlohmann::ordered_json json = nlohmann::ordered_json::object();
    std::vector<std::string> rational_fields; // fields holding RatFunc strings
};

std::string render(const Result &r, Format format);
std::string render_reports(const std::vector<VerificationReport> &reports, Format format);

/// Names accepted by `verify --suite`.
const std::vector<std::string> &suite_names();
/// Runs one suite (or "all"); unknown grid keys throw InvariantError.
std::vector<VerificationReport> run_suite(const std::string &suite, const GridRanges &grid, unsigned threads,
                                          bool record_all);

/// Full command line entry point; never throws.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace pfs::cli
