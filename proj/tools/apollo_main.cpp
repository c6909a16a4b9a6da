#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "apollo/config_io.hpp"
#include "apollo/fixtures.hpp"
#include "apollo/random_config.hpp"
#include "apollo/svg.hpp"

namespace fs = std::filesystem;
using namespace apollo;

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError(path + ": cannot open");
        buf << in.rdbuf();
    }
    return buf.str();
}

Mode resolve_mode(const ConfigFile& file, const std::string& override_str) {
    if (override_str == "exact") return Mode::Exact;
    if (override_str == "float") return Mode::Float;
    return file.mode;
}

int run_report(const std::string& path, const std::string& mode_str, ReportDetail detail) {
    ConfigFile file = parse_config(read_input(path));
    Analysis a = analyze(file.objects, resolve_mode(file, mode_str),
                         detail == ReportDetail::Solutions);
    std::cout << render_report(a, detail);
    return a.agree ? 0 : 1;
}

int run_render(const std::string& path, const std::string& mode_str,
               const std::string& out_path) {
    ConfigFile file = parse_config(read_input(path));
    Analysis a = analyze(file.objects, resolve_mode(file, mode_str), true);
    std::string title = path == "-" ? std::string() : fs::path(path).stem().string();
    std::string svg = render_svg(a, title);
    if (out_path.empty()) {
        std::cout << svg;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ParseError(out_path + ": cannot open for writing");
        out << svg;
    }
    return a.agree ? 0 : 1;
}

int run_fixtures(const std::string& out_dir) {
    fs::create_directories(out_dir);
    int idx = 0;
    for (const auto& f : fixture_catalog()) {
        // zero-padded index so the directory lists in catalog order
        std::string prefix = (idx < 10 ? "0" : "") + std::to_string(idx) + "-";
        ++idx;
        std::ofstream out(fs::path(out_dir) / (prefix + f.name + ".json"));
        out << write_config(f.config, Mode::Exact);
    }
    std::cout << "wrote " << idx << " configurations to " << out_dir << "\n";
    return 0;
}

std::string count_or_inf(bool inf, int n) {
    return inf ? std::string("infinite") : std::to_string(n);
}

struct BatchTally {
    int analyzed = 0;
    int rejected = 0;
    int agreements = 0;
    std::map<std::string, int> coverage;  // sorted by cell tag
    std::vector<std::string> disagreements;

    void add(const std::string& name, const Analysis& a) {
        ++analyzed;
        ++coverage[cell_tag(a.signature)];
        if (a.agree) {
            ++agreements;
            return;
        }
        disagreements.push_back(
            name + ": table=" +
            count_or_inf(a.expected.kind == Expected::Kind::Infinite, a.expected.count) +
            " engine=" + count_or_inf(a.engine.infinite, a.engine.count) +
            " oracle=" + count_or_inf(a.oracle.infinite, a.oracle.count));
    }
};

// A random draw is degenerate when some predicate is exactly zero: a tangent
// pair, a point common to all three objects, or the full tangent pencil.
bool degenerate_draw(const TopoSignature& s) {
    return s.tangency_points > 0 || s.double_points > 0 || s.triple_tangent;
}

int run_batch(const std::string& dir, std::uint64_t seed, int n, bool allow_degenerate,
              const std::string& mode_str) {
    BatchTally tally;
    std::ostringstream source;

    if (!dir.empty()) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(dir))
            if (e.is_regular_file() && e.path().extension() == ".json")
                files.push_back(e.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw ParseError(dir + ": no .json configuration files");
        for (const auto& p : files) {
            ConfigFile file = parse_config(read_input(p.string()));
            Analysis a = analyze(file.objects, resolve_mode(file, mode_str), false);
            tally.add(p.filename().string(), a);
        }
        source << "directory " << dir;
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pts(0, 3);
        Mode mode = mode_str == "float" ? Mode::Float : Mode::Exact;
        while (tally.analyzed < n) {
            Config<Rat> cfg = random_config(rng, pts(rng));
            Analysis a = analyze(cfg, mode, false);
            if (!allow_degenerate && degenerate_draw(a.signature)) {
                ++tally.rejected;
                continue;
            }
            tally.add("seed=" + std::to_string(seed) +
                          " index=" + std::to_string(tally.analyzed),
                      a);
        }
        source << "random seed=" << seed << " n=" << n;
        if (allow_degenerate) source << " (degenerate draws kept)";
    }

    std::cout << "batch:\n";
    std::cout << "  source: " << source.str() << "\n";
    std::cout << "  analyzed: " << tally.analyzed << "\n";
    if (dir.empty()) std::cout << "  rejected degenerate: " << tally.rejected << "\n";
    std::cout << "  agreements: " << tally.agreements << "\n";
    std::cout << "  disagreements: " << tally.disagreements.size() << "\n";
    std::cout << "coverage:\n";
    for (const auto& [cell, count] : tally.coverage)
        std::cout << "  " << cell << ": " << count << "\n";
    if (!tally.disagreements.empty()) {
        std::sort(tally.disagreements.begin(), tally.disagreements.end());
        std::cout << "disagreements:\n";
        for (const auto& d : tally.disagreements) std::cout << "  " << d << "\n";
    }
    return tally.disagreements.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tangent circles to three circles, points or lines: "
                 "exact counts and verified constructions"};
    app.require_subcommand(1);

    std::string config_path;
    std::string mode_str;
    double tol = -1;
    std::string out_path;
    std::string batch_dir;
    std::uint64_t seed = 1;
    int batch_n = 1000;
    bool allow_degenerate = false;

    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode_str, "arithmetic mode, overrides the file")
            ->check(CLI::IsMember({"exact", "float"}));
        cmd->add_option("--tol", tol, "relative tolerance of float-mode sign decisions")
            ->check(CLI::PositiveNumber);
    };
    auto add_config = [&](CLI::App* cmd) {
        cmd->add_option("config", config_path, "configuration file (JSON), - for stdin")
            ->required();
        add_mode(cmd);
    };

    auto* classify =
        app.add_subcommand("classify", "topological signature and expected solution count");
    auto* count = app.add_subcommand("count", "count solutions three independent ways");
    auto* solve = app.add_subcommand("solve", "count and construct the solutions");
    auto* verify =
        app.add_subcommand("verify", "solve and exit nonzero unless all counts agree");
    auto* batch =
        app.add_subcommand("batch", "analyze many configurations and summarize coverage");
    auto* render =
        app.add_subcommand("render", "draw the configuration and its solutions as SVG");
    auto* fixtures =
        app.add_subcommand("fixtures", "write the built-in configuration catalog");

    add_config(classify);
    add_config(count);
    add_config(solve);
    add_config(verify);
    add_config(render);
    render->add_option("--out", out_path, "output SVG path (default stdout)");
    add_mode(batch);
    batch->add_option("--dir", batch_dir, "directory of configuration files (*.json)");
    batch->add_option("--seed", seed, "random stream seed");
    batch->add_option("-n,--runs", batch_n, "number of random configurations")
        ->check(CLI::PositiveNumber);
    batch->add_flag("--allow-degenerate", allow_degenerate,
                    "keep random draws with exact tangencies or common points");
    fixtures->add_option("--out", out_path, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    if (tol > 0) FloatKernel::tolerance() = tol;

    try {
        if (app.got_subcommand(classify))
            return run_report(config_path, mode_str, ReportDetail::Signature);
        if (app.got_subcommand(count))
            return run_report(config_path, mode_str, ReportDetail::Counts);
        if (app.got_subcommand(solve))
            return run_report(config_path, mode_str, ReportDetail::Solutions);
        if (app.got_subcommand(verify))
            return run_report(config_path, mode_str, ReportDetail::Solutions);
        if (app.got_subcommand(batch))
            return run_batch(batch_dir, seed, batch_n, allow_degenerate, mode_str);
        if (app.got_subcommand(render)) return run_render(config_path, mode_str, out_path);
        if (app.got_subcommand(fixtures)) return run_fixtures(out_path);
    } catch (const InternalInconsistencyError& e) {
        // a structural invariant failed: that is a disagreement, not bad input
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
