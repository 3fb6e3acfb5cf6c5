#include "uilab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

namespace uilab {

namespace {

namespace fs = std::filesystem;

bool wildcard_match(const std::string& pattern, const std::string& text) {
    size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

std::string fmt(double v, int digits = 1) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

struct CheckpointRow {
    std::string agent;
    Mode mode = Mode::Structured;
    Level level = Level::Abundant;
    uint64_t seed = 0;
    int step = 0;
    int ufo = 0;
    double hufo = 0.0;
    double uft = 0.0;
    int d3c = -1;  // -1 = not applicable
};

int d3c_at(const TrajectoryLog& log, int step) {
    std::vector<DomSnapshot> snaps;
    for (const auto& e : log.steps) {
        if (e.index > step) break;
        snaps.push_back(e.snapshot);
    }
    return d3c(std::span<const DomSnapshot>(snaps), 2);
}

std::vector<CheckpointRow> checkpoint_rows(const std::vector<TrajectoryLog>& logs,
                                           const MetricConfig& metrics) {
    std::vector<CheckpointRow> rows;
    for (const auto& log : logs) {
        const auto& curve = log.manifest.mode == Mode::Structured ? log.ufo_structured
                                                                  : log.ufo_screen;
        for (int step : log.manifest.checkpoints) {
            CheckpointRow row;
            row.agent = log.manifest.agent;
            row.mode = log.manifest.mode;
            row.level = log.manifest.level;
            row.seed = log.manifest.seed;
            row.step = step;
            row.ufo = curve_value_at(curve, step);
            row.hufo = hufo(row.ufo, row.mode, metrics);
            int acted = curve_value_at(log.acted_distinct, step);
            row.uft = step > 0 ? static_cast<double>(acted) / step : 0.0;
            if (row.mode == Mode::Structured) row.d3c = d3c_at(log, step);
            rows.push_back(row);
        }
    }
    return rows;
}

// hufo-vs-step line chart, one polyline per agent (seed-averaged).
void write_svg_chart(const std::string& path, Mode mode, Level level,
                     const std::vector<const TrajectoryLog*>& logs,
                     const MetricConfig& metrics) {
    constexpr int W = 860, H = 520, L = 70, B = 460, R = 620, T = 40;
    static const char* kPalette[] = {"#4063d8", "#c93c20", "#2c8c5a", "#8338ec",
                                     "#f18f01", "#5f7470", "#bb4d9c", "#2a9d8f"};

    std::map<std::string, std::vector<const TrajectoryLog*>> by_agent;
    long budget = 0;
    for (const auto* log : logs) {
        by_agent[log->manifest.agent].push_back(log);
        budget = std::max(budget, log->manifest.budget);
    }
    if (budget == 0) budget = 1;

    double ymax = 1.0;
    std::map<std::string, std::vector<double>> series;
    for (const auto& [agent, group] : by_agent) {
        std::vector<double> avg(static_cast<size_t>(budget), 0.0);
        for (const auto* log : group) {
            const auto& curve = mode == Mode::Structured ? log->ufo_structured
                                                         : log->ufo_screen;
            for (long t = 0; t < budget; ++t) {
                avg[t] += hufo(curve_value_at(curve, static_cast<int>(t + 1)), mode, metrics);
            }
        }
        for (double& v : avg) v /= static_cast<double>(group.size());
        if (!avg.empty()) ymax = std::max(ymax, avg.back());
        series[agent] = std::move(avg);
    }
    ymax *= 1.1;

    std::ofstream out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " " << H
        << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
    out << "<text x=\"" << L << "\" y=\"22\" font-size=\"16\">hUFO vs step - "
        << mode_name(mode) << " / " << level_name(level) << "</text>\n";
    out << "<line x1=\"" << L << "\" y1=\"" << B << "\" x2=\"" << R << "\" y2=\"" << B
        << "\" stroke=\"#333\"/>\n";
    out << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << B
        << "\" stroke=\"#333\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        double v = ymax * i / 4.0;
        int y = B - static_cast<int>((B - T) * i / 4.0);
        out << "<text x=\"8\" y=\"" << y + 4 << "\">" << fmt(v) << "</text>\n";
        out << "<line x1=\"" << L << "\" y1=\"" << y << "\" x2=\"" << R << "\" y2=\"" << y
            << "\" stroke=\"#ddd\"/>\n";
    }
    for (long s = 0; s <= budget; s += std::max<long>(1, budget / 4)) {
        int x = L + static_cast<int>((R - L) * static_cast<double>(s) / budget);
        out << "<text x=\"" << x - 10 << "\" y=\"" << B + 20 << "\">" << s << "</text>\n";
    }

    int color = 0, legend_y = T + 10;
    for (const auto& [agent, curve] : series) {
        const char* stroke = kPalette[color % 8];
        out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.6\" points=\"";
        long stride = std::max<long>(1, budget / 240);
        for (long t = 0; t < budget; t += stride) {
            double x = L + (R - L) * static_cast<double>(t + 1) / budget;
            double y = B - (B - T) * (curve[t] / ymax);
            out << fmt(x) << "," << fmt(y) << " ";
        }
        out << "\"/>\n";
        out << "<rect x=\"" << R + 16 << "\" y=\"" << legend_y - 10
            << "\" width=\"12\" height=\"12\" fill=\"" << stroke << "\"/>\n";
        out << "<text x=\"" << R + 34 << "\" y=\"" << legend_y << "\">" << agent << "</text>\n";
        legend_y += 20;
        ++color;
    }
    out << "</svg>\n";
}

}  // namespace

std::vector<std::string> expand_glob(const std::string& pattern) {
    fs::path p(pattern);
    fs::path dir = p.parent_path();
    std::string file_pattern = p.filename().string();
    if (dir.empty()) dir = ".";
    std::vector<std::string> out;
    if (!fs::exists(dir)) return out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (wildcard_match(file_pattern, entry.path().filename().string())) {
            out.push_back(entry.path().string());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void write_report(const std::vector<TrajectoryLog>& logs, const ReportOptions& options) {
    fs::create_directories(options.out_dir);
    auto rows = checkpoint_rows(logs, options.metrics);

    {
        std::ofstream out(fs::path(options.out_dir) / "report.csv");
        out << "agent,mode,level,seed,step,ufo,hufo,uft,d3c\n";
        for (const auto& r : rows) {
            out << r.agent << "," << mode_name(r.mode) << "," << level_name(r.level) << ","
                << r.seed << "," << r.step << "," << r.ufo << "," << fmt(r.hufo) << ","
                << fmt(r.uft, 4) << "," << (r.d3c >= 0 ? std::to_string(r.d3c) : "") << "\n";
        }
    }

    {
        // Per-level scores at the last checkpoint plus level averages at
        // every checkpoint, one row per (agent, mode).
        std::vector<int> checkpoints = options.metrics.checkpoints;
        int final_step = checkpoints.empty() ? 2000 : checkpoints.back();

        std::map<std::pair<std::string, Mode>, std::map<Level, std::map<int, std::vector<double>>>>
            hufo_cell, uft_cell;
        for (const auto& r : rows) {
            hufo_cell[{r.agent, r.mode}][r.level][r.step].push_back(r.hufo);
            uft_cell[{r.agent, r.mode}][r.level][r.step].push_back(r.uft);
        }

        std::ofstream out(fs::path(options.out_dir) / "summary.csv");
        out << "agent,mode";
        for (Level l : {Level::Abundant, Level::Moderate, Level::Sparse}) {
            out << ",hufo_" << level_name(l) << "_" << final_step;
        }
        for (int c : checkpoints) out << ",hufo_avg_" << c;
        for (Level l : {Level::Abundant, Level::Moderate, Level::Sparse}) {
            out << ",uft_" << level_name(l) << "_" << final_step;
        }
        for (int c : checkpoints) out << ",uft_avg_" << c;
        out << "\n";

        for (const auto& [key, by_level] : hufo_cell) {
            out << key.first << "," << mode_name(key.second);
            auto cell_mean = [](auto& table, Level l, int step) {
                auto lit = table.find(l);
                if (lit == table.end()) return std::string();
                auto sit = lit->second.find(step);
                if (sit == lit->second.end()) return std::string();
                return fmt(mean(sit->second));
            };
            auto level_avg = [&](auto& table, int step) {
                std::vector<double> vals;
                for (const auto& [level, by_step] : table) {
                    auto sit = by_step.find(step);
                    if (sit != by_step.end()) vals.push_back(mean(sit->second));
                }
                return vals.empty() ? std::string() : fmt(mean(vals));
            };
            for (Level l : {Level::Abundant, Level::Moderate, Level::Sparse}) {
                out << "," << cell_mean(by_level, l, final_step);
            }
            for (int c : checkpoints) out << "," << level_avg(by_level, c);
            auto& uft_by_level = uft_cell[key];
            for (Level l : {Level::Abundant, Level::Moderate, Level::Sparse}) {
                out << "," << cell_mean(uft_by_level, l, final_step);
            }
            for (int c : checkpoints) out << "," << level_avg(uft_by_level, c);
            out << "\n";
        }
    }

    std::map<std::pair<Mode, Level>, std::vector<const TrajectoryLog*>> charts;
    for (const auto& log : logs) {
        charts[{log.manifest.mode, log.manifest.level}].push_back(&log);
    }
    for (const auto& [key, group] : charts) {
        std::string name = "curves_" + mode_name(key.first) + "_" + level_name(key.second) +
                           ".svg";
        write_svg_chart((fs::path(options.out_dir) / name).string(), key.first, key.second,
                        group, options.metrics);
    }
}

void write_report(const ReportOptions& options) {
    std::vector<TrajectoryLog> logs;
    for (const auto& path : expand_glob(options.glob)) {
        logs.push_back(read_log(path));
    }
    write_report(logs, options);
}

}  // namespace uilab
