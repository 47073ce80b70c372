#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "pfstringy/errors.hpp"
#include "pfstringy/linear_sections.hpp"
#include "pfstringy/mirror_hpd.hpp"
#include "pfstringy/pfaffian.hpp"
#include "pfstringy/qhypergeom.hpp"

namespace pfs::cli {

Format parse_format(const std::string &text) {
    if (text == "text") return Format::text;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    if (text == "latex") return Format::latex;
    throw InvariantError("unknown output format '" + text + "'");
}

GridRanges parse_grid(const std::vector<std::string> &specs) {
    static const std::regex range(R"(\s*([A-Za-z_]\w*)\s*=\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*)");
    GridRanges out;
    for (const std::string &spec : specs) {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::smatch m;
            if (!std::regex_match(item, m, range)) throw InvariantError("bad grid range '" + item + "', expected key=lo..hi");
            long lo = std::stol(m[2]);
            long hi = m[3].matched ? std::stol(m[3]) : lo;
            if (hi < lo) throw InvariantError("empty grid range '" + item + "'");
            out[m[1]] = {lo, hi};
        }
    }
    return out;
}

namespace {

// Exponents get braces and multiplication signs disappear.
std::string latex_product(const std::string &s) {
    std::string t = std::regex_replace(s, std::regex(R"(\^(-?\d+))"), "^{$1}");
    t = std::regex_replace(t, std::regex(R"(\*)"), " ");
    return t;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string scalar_text(const nlohmann::ordered_json &v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
}

} // namespace

std::string latex(const RatFunc &f) {
    std::string s = f.to_factored_string();
    auto slash = s.find(" / ");
    if (slash == std::string::npos) return latex_product(s);
    std::string num = s.substr(0, slash), den = s.substr(slash + 3);
    auto strip = [](std::string x) {
        if (x.size() >= 2 && x.front() == '(' && x.back() == ')') {
            // Only strip when the outer parentheses enclose everything.
            int depth = 0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                depth += x[i] == '(' ? 1 : x[i] == ')' ? -1 : 0;
                if (depth == 0 && i + 1 < x.size()) return x;
            }
            return x.substr(1, x.size() - 2);
        }
        return x;
    };
    return "\\frac{" + latex_product(strip(num)) + "}{" + latex_product(strip(den)) + "}";
}

std::string render(const Result &r, Format format) {
    std::ostringstream os;
    auto is_rational = [&](const std::string &key) {
        return std::find(r.rational_fields.begin(), r.rational_fields.end(), key) != r.rational_fields.end();
    };
    switch (format) {
    case Format::json:
        os << r.json.dump(2) << "\n";
        break;
    case Format::text:
        for (const auto &[key, value] : r.json.items()) os << key << ": " << scalar_text(value) << "\n";
        break;
    case Format::csv: {
        bool first = true;
        for (const auto &item : r.json.items()) {
            os << (first ? "" : ",") << csv_field(item.key());
            first = false;
        }
        os << "\n";
        first = true;
        for (const auto &item : r.json.items()) {
            os << (first ? "" : ",") << csv_field(scalar_text(item.value()));
            first = false;
        }
        os << "\n";
        break;
    }
    case Format::latex:
        os << "\\begin{tabular}{ll}\n";
        for (const auto &[key, value] : r.json.items()) {
            std::string cell;
            if (is_rational(key))
                cell = "$" + latex(parse_ratfunc(value.get<std::string>())) + "$";
            else
                cell = "\\verb|" + scalar_text(value) + "|";
            os << "\\verb|" << key << "| & " << cell << " \\\\\n";
        }
        os << "\\end{tabular}\n";
        break;
    }
    return os.str();
}

std::string render_reports(const std::vector<VerificationReport> &reports, Format format) {
    std::ostringstream os;
    bool passed = true;
    for (const auto &r : reports) passed = passed && r.passed();
    switch (format) {
    case Format::json: {
        nlohmann::json suites = nlohmann::json::array();
        for (const auto &r : reports) suites.push_back(to_json(r));
        os << nlohmann::json{{"passed", passed}, {"suites", suites}}.dump(2) << "\n";
        break;
    }
    case Format::text: {
        for (const auto &r : reports)
            os << (r.passed() ? "PASS " : "FAIL ") << r.identity << ": tested " << r.tested << ", skipped "
               << r.skipped << ", failed " << r.failed << "\n";
        os << (passed ? "all suites passed" : "verification FAILED") << "\n";
        if (!passed) {
            nlohmann::json failing = nlohmann::json::array();
            for (const auto &r : reports)
                if (!r.passed()) failing.push_back(to_json(r));
            os << failing.dump(2) << "\n";
        }
        break;
    }
    case Format::csv: {
        // One column per coordinate name, in order of first appearance.
        std::vector<std::string> names;
        for (const auto &r : reports)
            for (const auto &a : r.grid)
                if (std::find(names.begin(), names.end(), a.name) == names.end()) names.push_back(a.name);
        os << "suite";
        for (const auto &n : names) os << "," << csv_field(n);
        os << ",status,lhs,rhs\n";
        for (const auto &r : reports) {
            const auto &rows = r.points.empty() ? r.failures : r.points;
            for (const auto &p : rows) {
                os << csv_field(r.identity);
                for (const auto &n : names) {
                    os << ",";
                    for (std::size_t i = 0; i < r.grid.size() && i < p.point.size(); ++i)
                        if (r.grid[i].name == n) os << p.point[i];
                }
                const char *status = p.status == PointStatus::pass ? "pass" : p.status == PointStatus::fail ? "fail" : "skip";
                os << "," << status << "," << csv_field(p.lhs) << "," << csv_field(p.rhs) << "\n";
            }
        }
        break;
    }
    case Format::latex: {
        os << "\\begin{tabular}{lrrr}\n\\hline\nidentity & tested & skipped & failed \\\\\n\\hline\n";
        for (const auto &r : reports)
            os << "\\verb|" << r.identity << "| & " << r.tested << " & " << r.skipped << " & " << r.failed
               << " \\\\\n";
        os << "\\hline\n\\end{tabular}\n";
        break;
    }
    }
    return os.str();
}

namespace {

struct SuiteInfo {
    std::string name;
    std::set<std::string> keys;
};

const std::vector<SuiteInfo> &suites() {
    static const std::vector<SuiteInfo> all{
        {"lemma", {"n"}},
        {"strata", {"n"}},
        {"phi", {"N", "e", "s"}},
        {"abcd", {"n", "a", "b", "d"}},
        {"f", {"n"}},
        {"rewrite", {"n", "odd"}},
        {"cases", {"n", "odd", "m"}},
    };
    return all;
}

std::pair<long, long> range_or(const GridRanges &g, const std::string &key, long lo, long hi) {
    auto it = g.find(key);
    return it == g.end() ? std::make_pair(lo, hi) : it->second;
}

std::vector<VerificationReport> run_one(const std::string &suite, const GridRanges &g, unsigned threads,
                                        bool record_all) {
    std::vector<VerificationReport> out;
    if (suite == "lemma") {
        auto [lo, hi] = range_or(g, "n", 4, 14);
        out.push_back(verify_key_lemma_grid(lo, hi, threads, record_all));
    } else if (suite == "strata") {
        auto [lo, hi] = range_or(g, "n", 4, 14);
        out.push_back(verify_strata_grid(lo, hi, threads, record_all));
    } else if (suite == "phi") {
        IdentityGrid grid;
        std::tie(grid.n_lo, grid.n_hi) = range_or(g, "N", 0, 8);
        std::tie(grid.e_lo, grid.e_hi) = range_or(g, "e", -4, 8);
        for (int id = 1; id <= 4; ++id) out.push_back(verify_identity(id, grid, threads, record_all));
        out.push_back(verify_identity4_specialization(range_or(g, "s", 0, 14).second, threads, record_all));
    } else if (suite == "abcd") {
        auto [lo, hi] = range_or(g, "n", 2, 10);
        out.push_back(verify_abcd_grid(lo, hi, threads, record_all));
        out.push_back(
            verify_combinatorial_grid(range_or(g, "a", 0, 6).second, range_or(g, "b", 0, 9).second, threads, record_all));
        out.push_back(verify_delta_grid(range_or(g, "d", 0, 8).second, record_all));
    } else if (suite == "f") {
        auto [lo, hi] = range_or(g, "n", 2, 12);
        out.push_back(verify_f_grid(lo, hi, threads, record_all));
        out.push_back(verify_inversion_grid(lo, hi, threads, record_all));
    } else if (suite == "rewrite") {
        auto [lo, hi] = range_or(g, "n", 4, 12);
        auto [olo, ohi] = range_or(g, "odd", 5, 9);
        if (lo % 2 != 0) ++lo;
        if (olo % 2 == 0) ++olo;
        out.push_back(verify_rewritten_grid(lo, hi, threads, record_all));
        out.push_back(verify_euler_grid(lo, hi, threads, record_all));
        out.push_back(verify_euler_grid(olo, ohi, threads, record_all));
        out.back().identity += " (odd n)";
        out.push_back(verify_vanishing_grid(lo, hi, record_all));
        out.push_back(verify_vanishing_grid(olo, ohi, record_all));
        out.back().identity += " (odd n)";
    } else if (suite == "cases") {
        auto [lo, hi] = range_or(g, "n", 4, 12);
        auto [olo, ohi] = range_or(g, "odd", 5, 9);
        if (lo % 2 != 0) ++lo;
        if (olo % 2 == 0) ++olo;
        out.push_back(verify_case_grid(lo, hi, threads, record_all));
        out.push_back(verify_case_grid(olo, ohi, threads, record_all));
        out.back().identity += " (odd n)";
        out.push_back(verify_block_identity_grid(range_or(g, "m", 4, 16).second, record_all));
    } else {
        throw InvariantError("unknown suite '" + suite + "'");
    }
    return out;
}

} // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &s : suites()) v.push_back(s.name);
        v.push_back("all");
        return v;
    }();
    return names;
}

std::vector<VerificationReport> run_suite(const std::string &suite, const GridRanges &grid, unsigned threads,
                                          bool record_all) {
    std::set<std::string> allowed;
    bool known = suite == "all";
    for (const auto &s : suites())
        if (suite == "all" || s.name == suite) {
            allowed.insert(s.keys.begin(), s.keys.end());
            known = true;
        }
    if (!known) throw InvariantError("unknown suite '" + suite + "'");
    for (const auto &[key, range] : grid)
        if (!allowed.count(key)) throw InvariantError("grid key '" + key + "' does not apply to suite " + suite);
    if (suite != "all") return run_one(suite, grid, threads, record_all);
    std::vector<VerificationReport> out;
    for (const auto &s : suites()) {
        auto part = run_one(s.name, grid, threads, record_all);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

namespace {

Result rational_result(nlohmann::ordered_json head, const RatFunc &value) {
    Result r;
    r.json = std::move(head);
    r.json["value"] = value.to_string();
    r.json["factored"] = value.to_factored_string();
    r.json["polynomial"] = value.is_polynomial();
    r.rational_fields = {"value", "factored"};
    return r;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact stringy E-functions of Pfaffian varieties and their linear sections"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_name = "text", output_path;
    unsigned threads = 1;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}))
        ->capture_default_str();
    app.add_option("--output,-o", output_path, "Write output to this file instead of standard output");
    app.add_option("--threads", threads, "Worker threads for grid checks (0 = all cores)")->capture_default_str();

    long n = 0, k = 0, i = 0, l = 0;
    std::string kind = "usual", method, side = "X", suite = "all";
    std::vector<std::string> grid_specs;

    auto *stringy = app.add_subcommand("stringy", "Stringy E-function of Pf(2k, C^n)");
    stringy->add_option("--n", n)->required();
    stringy->add_option("--k", k)->required();
    stringy->add_option("--kind", kind)->check(CLI::IsMember({"usual", "modified"}))->capture_default_str();
    stringy->add_option("--method", method)->check(CLI::IsMember({"closed", "strata"}))->default_str("closed");

    auto *cut = app.add_subcommand("cut-f", "Stringy E-function f_{k,i,n} of a hyperplane cut");
    cut->add_option("--n", n)->required();
    cut->add_option("--k", k)->required();
    cut->add_option("--i", i)->required();
    cut->add_option("--method", method)->check(CLI::IsMember({"closed", "recursive"}))->default_str("closed");

    auto *iso = app.add_subcommand("l-iso", "Isotropic 2k-subspaces of a rank-2i form on C^n");
    iso->add_option("--n", n)->required();
    iso->add_option("--k", k)->required();
    iso->add_option("--i", i)->required();

    auto *relate = app.add_subcommand("relate", "Relation between the double mirrors X_W and Y_W");
    relate->add_option("--n", n)->required();
    relate->add_option("--k", k)->required();
    relate->add_option("--l", l)->required();

    auto *sod = app.add_subcommand("sod", "Ambient Lefschetz blocks surviving on one side");
    sod->add_option("--n", n)->required();
    sod->add_option("--k", k)->required();
    sod->add_option("--l", l)->required();
    sod->add_option("--side", side)->check(CLI::IsMember({"X", "Y"}))->capture_default_str();

    auto *verify = app.add_subcommand("verify", "Run identity suites over parameter grids");
    verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
    verify->add_option("--grid", grid_specs, "Ranges such as n=4..14 (repeatable, comma separated)");

    auto *figure = app.add_subcommand("figure-check", "K3 surface / Pfaffian cubic fourfold instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return usage;
    }

    std::string text;
    int code = ok;
    try {
        Format format = parse_format(format_name);
        if (stringy->parsed()) {
            PfaffianSpec spec{n, k};
            DiscrepancyKind dk = parse_kind(kind);
            RatFunc value = method == "strata" ? stringy_pf_strata(spec, dk) : stringy_pf_closed(spec, dk);
            text = render(rational_result({{"n", n}, {"k", k}, {"kind", kind}}, value), format);
        } else if (cut->parsed()) {
            CutSpec spec{n, k, i};
            RatFunc value = method == "recursive" ? f_recursive(spec) : f_closed(spec);
            text = render(rational_result({{"n", n}, {"k", k}, {"i", i}}, value), format);
        } else if (iso->parsed()) {
            text = render(rational_result({{"n", n}, {"k", k}, {"i", i}}, l_iso(k, i, n)), format);
        } else if (relate->parsed()) {
            SectionSpec spec{n, k, l};
            RatFunc rhs = relation_rhs(spec);
            Classification types = classify_types(spec);
            Dimensions dims = section_dimensions(spec);
            Result r;
            r.json = {{"n", n}, {"k", k}, {"l", l}};
            r.json["relation"] = is_even(spec) ? "q^((n-1)k) E(Y) - q^l E(X)" : "q^(nk) E(Y) - q^l E(X)";
            r.json["relation_rhs"] = rhs.to_string();
            r.json["relation_rhs_factored"] = rhs.to_factored_string();
            r.json["euler_gap"] = euler_gap(spec).get_str();
            r.json["X"] = to_string(types.x);
            r.json["Y"] = to_string(types.y);
            r.json["dim_X"] = dims.x;
            r.json["dim_Y"] = dims.y;
            r.json["case"] = case_label(spec);
            r.rational_fields = {"relation_rhs", "relation_rhs_factored"};
            text = render(r, format);
        } else if (sod->parsed()) {
            SectionSpec spec{n, k, l};
            SodPrediction p = sod_predict(spec, parse_side(side));
            if (format == Format::json) {
                text = to_json(p).dump(2) + "\n";
            } else {
                Result r;
                r.json = {{"n", n}, {"k", k}, {"l", l}, {"side", side}};
                r.json["block_count"] = p.block_count();
                r.json["total_size"] = p.total_size();
                std::string prefix = p.side == Side::X ? "A" : "B";
                for (std::size_t g = 0; g < p.blocks.size(); ++g) {
                    const BlockGroup &b = p.blocks[g];
                    std::ostringstream os;
                    os << b.count << " x size " << b.size << ": " << prefix << "_" << b.first_index << "("
                       << b.first_twist << ") .. " << prefix << "_" << b.last_index << "(" << b.last_twist << ")";
                    r.json["group_" + std::to_string(g + 1)] = os.str();
                }
                r.json["residual"] = p.residual;
                text = render(r, format);
            }
        } else if (verify->parsed()) {
            auto reports = run_suite(suite, parse_grid(grid_specs), threads, format == Format::csv);
            text = render_reports(reports, format);
            for (const auto &r : reports)
                if (!r.passed()) code = verification_failed;
        } else if (figure->parsed()) {
            FigureCheck fc = figure_check();
            Result r;
            r.json = {{"n", fc.spec.n}, {"k", fc.spec.k}, {"l", fc.spec.l}};
            r.json["E_X"] = fc.ex.to_string();
            r.json["E_Y"] = fc.ey.to_string();
            r.json["identity"] = fc.display;
            r.json["relation_holds"] = fc.passed;
            r.json["perturbed_relation_holds"] = fc.perturbed_passed;
            r.json["dual_relation_holds"] = fc.dual_passed;
            r.rational_fields = {"E_X", "E_Y"};
            text = render(r, format);
            if (!fc.passed || fc.perturbed_passed || !fc.dual_passed) code = verification_failed;
        }
    } catch (const ZeroDivisionError &e) {
        err << "error: " << e.what() << "\n";
        return internal;
    } catch (const PoleError &e) {
        err << "error: " << e.what() << "\n";
        return internal;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return internal;
    }

    if (output_path.empty()) {
        out << text;
    } else {
        std::ofstream file(output_path);
        if (!file) {
            err << "error: cannot write " << output_path << "\n";
            return usage;
        }
        file << text;
    }
    return code;
}

} // namespace pfs::cli
