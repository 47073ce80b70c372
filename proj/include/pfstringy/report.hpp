#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pfs {

/// One integer axis of a verification grid, inclusive on both ends.
struct GridAxis {
    std::string name;
    long lo = 0;
    long hi = 0;
    long step = 1;
};

using GridPoint = std::vector<long>;

enum class PointStatus { pass, fail, skip };

struct PointOutcome {
    GridPoint point;
    PointStatus status = PointStatus::pass;
    std::string lhs; // witness values, filled on failure (or when recording all)
    std::string rhs;
    std::string check; // which equality failed
    nlohmann::json labels; // named point, set when the outcome leaves its grid
};

/// Outcome of an identity check over a grid. Points are kept in grid order.
struct VerificationReport {
    std::string identity;
    std::vector<GridAxis> grid;
    nlohmann::json grid_extra = nlohmann::json::object(); // extra grid metadata
    long tested = 0;
    long skipped = 0;
    long failed = 0;
    std::vector<PointOutcome> failures;
    std::vector<PointOutcome> points; // every outcome, only when requested

    bool passed() const { return failed == 0; }
    void add(PointOutcome &&outcome, bool record_all);
};

nlohmann::json point_json(const std::vector<GridAxis> &grid, const GridPoint &point);
nlohmann::json to_json(const VerificationReport &report);

/// All points of the grid in lexicographic order (first axis slowest).
std::vector<GridPoint> grid_points(const std::vector<GridAxis> &axes);

/// Runs `check` on every grid point with `threads` workers (0 = hardware
/// concurrency) and merges the outcomes in grid order.
VerificationReport run_grid(const std::string &identity, const std::vector<GridAxis> &axes,
                            const std::function<PointOutcome(const GridPoint &)> &check, unsigned threads = 1,
                            bool record_all = false);

/// Same as run_grid over an explicit list of points (for grids whose valid
/// region is not a box); `axes` only names and bounds the coordinates.
VerificationReport run_points(const std::string &identity, const std::vector<GridAxis> &axes,
                              const std::vector<GridPoint> &points,
                              const std::function<PointOutcome(const GridPoint &)> &check, unsigned threads = 1,
                              bool record_all = false);

/// Concatenates reports of several identities into one summary.
VerificationReport combine_reports(const std::string &name, const std::vector<VerificationReport> &parts);

} // namespace pfs
