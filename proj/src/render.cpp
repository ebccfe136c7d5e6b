#include "fxent/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace fxent {

namespace {

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// Mean and sd of daily returns need 5 digits to be visible.
std::string fixed5(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", v);
    return buf;
}

std::string full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Pipe-delimited table with padded columns.
std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());

    auto emit_row = [&](std::ostringstream& out, const std::vector<std::string>& cells) {
        out << '|';
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << ' ' << cells[c] << std::string(widths[c] - cells[c].size(), ' ') << " |";
        }
        out << '\n';
    };

    std::ostringstream out;
    emit_row(out, header);
    out << '|';
    for (std::size_t c = 0; c < header.size(); ++c)
        out << ' ' << std::string(widths[c], '-') << " |";
    out << '\n';
    for (const auto& row : rows) emit_row(out, row);
    return out.str();
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t c = 0; c < header.size(); ++c)
        out << (c ? "," : "") << header[c];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << '\n';
    }
    return out.str();
}

std::string render_generic(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& text_rows,
                           const nlohmann::ordered_json& json_rows, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: return csv_table(header, text_rows);
        case OutputFormat::markdown: return markdown_table(header, text_rows);
        default: return json_rows.dump(2) + "\n";
    }
}

}  // namespace

std::string render_comparisons(const std::vector<WindowComparison>& rows,
                               OutputFormat format) {
    std::vector<std::vector<std::string>> text_rows;
    nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        text_rows.push_back({row.series_id, fixed4(row.pre_value),
                             fixed4(row.post_value), to_string(row.change)});
        json_rows.push_back({{"series", row.series_id},
                             {"statistic", to_string(row.statistic)},
                             {"pre", row.pre_value},
                             {"post", row.post_value},
                             {"change", to_string(row.change)},
                             {"pre_r", row.pre_params.r.value_or(0.0)},
                             {"post_r", row.post_params.r.value_or(0.0)},
                             {"m", row.pre_params.m}});
    }
    return render_generic({"series", "pre", "post", "change"}, text_rows, json_rows,
                          format);
}

std::string render_stats(const std::vector<NamedStats>& rows, OutputFormat format,
                         bool excess_kurtosis) {
    const double kurt_shift = excess_kurtosis ? 3.0 : 0.0;
    const std::string kurt_name = excess_kurtosis ? "excess_kurtosis" : "kurtosis";
    std::vector<std::vector<std::string>> text_rows;
    nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        const auto& s = row.stats;
        text_rows.push_back({row.series_id, fixed5(s.mean), fixed5(s.std_dev),
                             fixed4(s.skewness), fixed4(s.kurtosis - kurt_shift)});
        json_rows.push_back({{"series", row.series_id},
                             {"mean", s.mean},
                             {"std_dev", s.std_dev},
                             {"skewness", s.skewness},
                             {kurt_name, s.kurtosis - kurt_shift}});
    }
    return render_generic({"series", "mean", "std_dev", "skewness", kurt_name},
                          text_rows, json_rows, format);
}

std::string render_entropy(const std::vector<NamedEntropy>& rows, OutputFormat format) {
    std::vector<std::vector<std::string>> text_rows;
    nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        const auto& res = row.result;
        text_rows.push_back({row.series_id, to_string(res.kind), fixed4(res.value),
                             std::to_string(res.params.m), full(res.params.r.value_or(0.0)),
                             std::to_string(res.n)});
        json_rows.push_back(
            {{"series", row.series_id},
             {"statistic", to_string(res.kind)},
             {"value", res.value},
             {"m", res.params.m},
             {"r", res.params.r.value_or(0.0)},
             {"n", res.n},
             {"matches_m", res.counts.template_len_m_matches},
             {"matches_m_plus_1", res.counts.template_len_m_plus_1_matches},
             {"engine", res.engine == Engine::fast ? "fast" : "oracle"}});
    }
    return render_generic({"series", "statistic", "value", "m", "r", "n"}, text_rows,
                          json_rows, format);
}

std::string render_summary(const HypothesisSummary& summary, OutputFormat format) {
    if (format == OutputFormat::json) {
        nlohmann::ordered_json j = {{"statistic", to_string(summary.statistic)},
                                    {"decreases", summary.decreases},
                                    {"total", summary.total},
                                    {"supports_hypothesis", summary.supports_hypothesis}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << to_string(summary.statistic) << ": " << summary.decreases << " of "
        << summary.total << " decreased; regularity hypothesis "
        << (summary.supports_hypothesis ? "supported" : "not supported") << '\n';
    return out.str();
}

std::string to_plot_csv(const ReturnSeries& returns) {
    std::ostringstream out;
    out << "date,log_return\n";
    out.precision(17);
    for (std::size_t k = 0; k < returns.dates.size(); ++k)
        out << format_date(returns.dates[k]) << ',' << returns.values[k] << '\n';
    return out.str();
}

}  // namespace fxent
