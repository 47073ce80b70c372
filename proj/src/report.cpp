#include "pfstringy/report.hpp"

#include "pfstringy/errors.hpp"
#include "pfstringy/parallel.hpp"

namespace pfs {

void VerificationReport::add(PointOutcome &&outcome, bool record_all) {
    switch (outcome.status) {
    case PointStatus::pass:
        ++tested;
        break;
    case PointStatus::skip:
        ++skipped;
        break;
    case PointStatus::fail:
        ++tested;
        ++failed;
        failures.push_back(outcome);
        break;
    }
    if (record_all) points.push_back(std::move(outcome));
}

nlohmann::json point_json(const std::vector<GridAxis> &grid, const GridPoint &point) {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t i = 0; i < grid.size() && i < point.size(); ++i) j[grid[i].name] = point[i];
    return j;
}

nlohmann::json to_json(const VerificationReport &report) {
    nlohmann::json grid = nlohmann::json::object();
    for (const auto &axis : report.grid) {
        if (axis.step == 1)
            grid[axis.name] = {axis.lo, axis.hi};
        else
            grid[axis.name] = {axis.lo, axis.hi, axis.step};
    }
    for (const auto &[key, value] : report.grid_extra.items()) grid[key] = value;
    nlohmann::json failures = nlohmann::json::array();
    for (const auto &f : report.failures) {
        nlohmann::json where = f.labels.is_null() ? point_json(report.grid, f.point) : f.labels;
        nlohmann::json entry = {{"point", where}, {"lhs", f.lhs}, {"rhs", f.rhs}};
        if (!f.check.empty()) entry["check"] = f.check;
        failures.push_back(entry);
    }
    return {{"identity", report.identity}, {"grid", grid},         {"tested", report.tested},
            {"skipped", report.skipped},   {"failed", report.failed}, {"failures", failures}};
}

std::vector<GridPoint> grid_points(const std::vector<GridAxis> &axes) {
    std::vector<GridPoint> out;
    for (const auto &a : axes)
        if (a.lo > a.hi || a.step < 1) return out;
    GridPoint cur;
    for (const auto &a : axes) cur.push_back(a.lo);
    while (true) {
        out.push_back(cur);
        std::size_t i = axes.size();
        while (i > 0) {
            --i;
            if (cur[i] + axes[i].step <= axes[i].hi) {
                cur[i] += axes[i].step;
                break;
            }
            cur[i] = axes[i].lo;
            if (i == 0) return out;
        }
        if (axes.empty()) return out;
    }
}

VerificationReport run_grid(const std::string &identity, const std::vector<GridAxis> &axes,
                            const std::function<PointOutcome(const GridPoint &)> &check, unsigned threads,
                            bool record_all) {
    return run_points(identity, axes, grid_points(axes), check, threads, record_all);
}

VerificationReport run_points(const std::string &identity, const std::vector<GridAxis> &axes,
                              const std::vector<GridPoint> &points,
                              const std::function<PointOutcome(const GridPoint &)> &check, unsigned threads,
                              bool record_all) {
    auto outcomes = parallel_map<PointOutcome>(points.size(), threads, [&](std::size_t i) {
        PointOutcome o = check(points[i]);
        o.point = points[i];
        return o;
    });
    VerificationReport report;
    report.identity = identity;
    report.grid = axes;
    for (auto &o : outcomes) report.add(std::move(o), record_all);
    return report;
}

VerificationReport combine_reports(const std::string &name, const std::vector<VerificationReport> &parts) {
    VerificationReport out;
    out.identity = name;
    nlohmann::json sub = nlohmann::json::array();
    for (const auto &p : parts) {
        out.tested += p.tested;
        out.skipped += p.skipped;
        out.failed += p.failed;
        for (auto f : p.failures) {
            f.check = p.identity + (f.check.empty() ? "" : ": " + f.check);
            if (f.labels.is_null()) f.labels = point_json(p.grid, f.point);
            out.failures.push_back(f);
        }
        sub.push_back(p.identity);
    }
    out.grid_extra["parts"] = sub;
    return out;
}

} // namespace pfs
