// fxent: batch regularity analysis of exchange-rate CSVs.
// Subcommands: ingest, returns, stats, entropy, compare.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fxent/entropy.hpp"
#include "fxent/error.hpp"
#include "fxent/ingest.hpp"
#include "fxent/regime.hpp"
#include "fxent/render.hpp"
#include "fxent/series.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

struct RunConfig {
    std::vector<std::string> inputs;  // PATH=LABEL (label optional)
    std::string stat = "sampen";      // apen | sampen | both
    int m = 2;
    double r = 0.0;
    double r_factor = 0.0;
    std::string preset;               // gfc | covid19
    std::string pre_window;           // START:END
    std::string post_window;
    std::string format = "markdown";
    std::string date_format = "iso";
    std::string slice_mode = "returns-then-slice";
    bool emit_plot_data = false;
    bool excess_kurtosis = false;
    std::string date_column = "Date";
    std::string price_column = "Price";
    std::string delimiter = ",";
};

struct LabeledSeries {
    std::string label;
    fxent::DatedSeries series;
};

fxent::OutputFormat parse_format(const std::string& f) {
    if (f == "csv") return fxent::OutputFormat::csv;
    if (f == "json") return fxent::OutputFormat::json;
    return fxent::OutputFormat::markdown;
}

std::string label_from_path(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = name.find_last_of('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

std::vector<LabeledSeries> load_inputs(const RunConfig& cfg) {
    fxent::ColumnConfig columns;
    columns.date_column = cfg.date_column;
    columns.price_column = cfg.price_column;
    columns.delimiter = cfg.delimiter.empty() ? ',' : cfg.delimiter[0];
    columns.date_format =
        cfg.date_format == "us" ? fxent::DateFormat::us : fxent::DateFormat::iso;

    std::vector<LabeledSeries> out;
    for (const auto& spec : cfg.inputs) {
        auto eq = spec.find('=');
        const std::string path = eq == std::string::npos ? spec : spec.substr(0, eq);
        const std::string label =
            eq == std::string::npos ? label_from_path(path) : spec.substr(eq + 1);
        std::ifstream file(path);
        if (!file)
            throw fxent::Error("cannot open input file '" + path + "'");
        auto rows = fxent::parse_csv(file, columns);
        out.push_back({label, fxent::normalize(std::move(rows), label)});
    }
    std::sort(out.begin(), out.end(),
              [](const LabeledSeries& a, const LabeledSeries& b) { return a.label < b.label; });
    return out;
}

fxent::EntropyParams entropy_params(const RunConfig& cfg) {
    fxent::EntropyParams params;
    params.m = cfg.m;
    if (cfg.r > 0.0)
        params.r = cfg.r;
    else
        params.r_factor = cfg.r_factor > 0.0 ? cfg.r_factor : 0.2;
    return params;
}

std::vector<fxent::Statistic> selected_stats(const RunConfig& cfg) {
    if (cfg.stat == "both") return {fxent::Statistic::apen, fxent::Statistic::sampen};
    if (cfg.stat == "apen") return {fxent::Statistic::apen};
    return {fxent::Statistic::sampen};
}

fxent::DateWindow parse_window_spec(const std::string& label, const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw fxent::ConfigError("window '" + label + "' must be START:END, got '" +
                                 spec + "'");
    return fxent::make_window(label, spec.substr(0, colon), spec.substr(colon + 1));
}

void run_ingest(const RunConfig& cfg) {
    const auto inputs = load_inputs(cfg);
    for (const auto& [label, series] : inputs) {
        if (inputs.size() > 1) std::cout << "# " << label << '\n';
        std::cout << fxent::to_canonical_csv(series);
    }
}

void run_returns(const RunConfig& cfg) {
    for (const auto& [label, series] : load_inputs(cfg)) {
        const auto returns = fxent::log_returns(series);
        std::cout << fxent::to_plot_csv(returns);
        (void)cfg.emit_plot_data;  // plot data is the only returns output format
    }
}

void run_stats(const RunConfig& cfg) {
    std::vector<fxent::NamedStats> rows;
    for (const auto& [label, series] : load_inputs(cfg)) {
        const auto returns = fxent::log_returns(series);
        rows.push_back({label, fxent::descriptive_stats(returns.values)});
    }
    std::cout << fxent::render_stats(rows, parse_format(cfg.format), cfg.excess_kurtosis);
}

void run_entropy(const RunConfig& cfg) {
    const auto params = entropy_params(cfg);
    const auto stats = selected_stats(cfg);
    std::vector<fxent::NamedEntropy> rows;
    for (const auto& [label, series] : load_inputs(cfg)) {
        const auto returns = fxent::log_returns(series);
        for (auto statistic : stats)
            rows.push_back({label, fxent::compute_entropy(returns.values, statistic, params)});
    }
    std::cout << fxent::render_entropy(rows, parse_format(cfg.format));
}

void run_compare(const RunConfig& cfg) {
    fxent::CrisisPreset preset;
    if (!cfg.preset.empty()) {
        preset = fxent::crisis_preset(cfg.preset == "gfc" ? fxent::CrisisName::gfc
                                                          : fxent::CrisisName::covid19);
    } else {
        preset = {"custom", parse_window_spec("pre", cfg.pre_window),
                  parse_window_spec("post", cfg.post_window)};
    }
    const auto mode = cfg.slice_mode == "slice-then-returns"
                          ? fxent::SliceMode::slice_then_returns
                          : fxent::SliceMode::returns_then_slice;
    const auto params = entropy_params(cfg);
    const auto format = parse_format(cfg.format);
    const auto inputs = load_inputs(cfg);

    for (auto statistic : selected_stats(cfg)) {
        std::vector<fxent::WindowComparison> rows;
        for (const auto& [label, series] : inputs)
            rows.push_back(fxent::compare_windows(series, preset, statistic, params, mode));
        std::cout << fxent::render_comparisons(rows, format);
        std::cout << fxent::render_summary(fxent::summarize_hypothesis(rows, statistic),
                                           format);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropy-based regularity analysis of exchange-rate time series"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", cfg.inputs, "Input CSV as PATH=LABEL (repeatable)")
            ->required();
        cmd->add_option("--date-format", cfg.date_format, "Input date format")
            ->check(CLI::IsMember({"iso", "us"}));
        cmd->add_option("--date-column", cfg.date_column, "Date column name");
        cmd->add_option("--price-column", cfg.price_column, "Price column name");
        cmd->add_option("--delimiter", cfg.delimiter, "Field delimiter");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"csv", "json", "markdown"}));
    };
    auto add_entropy_params = [&](CLI::App* cmd) {
        cmd->add_option("--stat", cfg.stat, "Statistic")
            ->check(CLI::IsMember({"apen", "sampen", "both"}));
        cmd->add_option("--m", cfg.m, "Embedding length")->check(CLI::PositiveNumber);
        auto* r_opt =
            cmd->add_option("--r", cfg.r, "Explicit tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--r-factor", cfg.r_factor, "Tolerance as multiple of window sd")
            ->check(CLI::PositiveNumber)
            ->excludes(r_opt);
    };

    auto* ingest = app.add_subcommand("ingest", "Validate and re-export as canonical CSV");
    add_common(ingest);

    auto* returns = app.add_subcommand("returns", "Emit daily log returns");
    add_common(returns);
    returns->add_flag("--emit-plot-data", cfg.emit_plot_data,
                      "Emit two-column date,log_return CSV");

    auto* stats = app.add_subcommand("stats", "Descriptive statistics of log returns");
    add_common(stats);
    add_format(stats);
    stats->add_flag("--excess-kurtosis", cfg.excess_kurtosis,
                    "Report kurtosis minus 3 instead of the raw convention");

    auto* entropy = app.add_subcommand("entropy", "ApEn/SampEn of the full return series");
    add_common(entropy);
    add_format(entropy);
    add_entropy_params(entropy);

    auto* compare = app.add_subcommand("compare", "Pre/post crisis entropy comparison");
    add_common(compare);
    add_format(compare);
    add_entropy_params(compare);
    auto* preset_opt = compare->add_option("--preset", cfg.preset, "Crisis window preset")
                           ->check(CLI::IsMember({"gfc", "covid19"}));
    auto* pre_opt = compare->add_option("--pre", cfg.pre_window,
                                        "Pre window START:END (ISO date or YYYY-MM)");
    auto* post_opt =
        compare->add_option("--post", cfg.post_window, "Post window START:END");
    preset_opt->excludes(pre_opt)->excludes(post_opt);
    pre_opt->needs(post_opt);
    post_opt->needs(pre_opt);
    compare->add_option("--slice-mode", cfg.slice_mode, "Window slicing strategy")
        ->check(CLI::IsMember({"returns-then-slice", "slice-then-returns"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsageError;
    }

    try {
        if (*compare && cfg.preset.empty() && cfg.pre_window.empty()) {
            std::cerr << "compare: either --preset or --pre/--post is required\n";
            return kExitUsageError;
        }
        if (*ingest) run_ingest(cfg);
        else if (*returns) run_returns(cfg);
        else if (*stats) run_stats(cfg);
        else if (*entropy) run_entropy(cfg);
        else if (*compare) run_compare(cfg);
    } catch (const fxent::ConfigError& e) {
        std::cerr << "fxent: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const fxent::Error& e) {
        std::cerr << "fxent: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "fxent: " << e.what() << '\n';
        return kExitDataError;
    }
    return kExitSuccess;
}
