#include "svol/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace svol {

namespace {

std::string instance_text(const CheckInstance& inst) {
    std::ostringstream out;
    out << "n=" << inst.n;
    if (inst.k > 0) out << " k=" << inst.k;
    out << " metric=" << inst.metric << " seed=" << inst.seed;
    if (!inst.detail.empty()) out << " " << inst.detail;
    return out.str();
}

/// Leading terms of a rendered polynomial, with a pointer to the full record
/// when truncated.
std::string residual_summary(const std::string& residual) {
    if (residual == "0") return "0";
    int terms = 1;
    std::size_t pos = 0;
    while (terms < 3) {
        std::size_t plus = residual.find(" + ", pos);
        std::size_t minus = residual.find(" - ", pos);
        std::size_t next = std::min(plus, minus);
        if (next == std::string::npos) return residual;
        pos = next + 3;
        ++terms;
    }
    std::size_t plus = residual.find(" + ", pos);
    std::size_t minus = residual.find(" - ", pos);
    std::size_t next = std::min(plus, minus);
    if (next == std::string::npos) return residual;
    return residual.substr(0, next) + " ... (see structured report)";
}

}  // namespace

std::string render_report(const std::vector<CheckReport>& reports, const std::string& format) {
    if (format == "structured") {
        nlohmann::json arr = nlohmann::json::array();
        for (const CheckReport& r : reports) {
            arr.push_back({{"check", r.check_name},
                           {"n", r.instance.n},
                           {"k", r.instance.k},
                           {"metric", r.instance.metric},
                           {"seed", r.instance.seed},
                           {"detail", r.instance.detail},
                           {"status", status_name(r.status)},
                           {"residual", r.residual},
                           {"elapsed_seconds", r.elapsed_seconds},
                           {"provenance", r.provenance}});
        }
        return arr.dump(2) + "\n";
    }
    if (format != "text") throw usage_error("render_report: format must be 'text' or 'structured'");

    std::vector<std::array<std::string, 4>> rows;
    rows.push_back({"check", "instance", "status", "residual"});
    for (const CheckReport& r : reports)
        rows.push_back({r.check_name, instance_text(r.instance), status_name(r.status),
                        residual_summary(r.residual)});

    std::array<std::size_t, 4> width{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());

    std::ostringstream out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < 4; ++c) {
            out << rows[i][c];
            if (c < 3) out << std::string(width[c] - rows[i][c].size() + 2, ' ');
        }
        out << "\n";
        if (i == 0) {
            for (std::size_t c = 0; c < 4; ++c) {
                out << std::string(width[c], '-');
                if (c < 3) out << "  ";
            }
            out << "\n";
        }
    }
    return out.str();
}

void write_report_atomically(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw usage_error("cannot open '" + tmp + "' for writing");
        f << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw usage_error("cannot rename report into place at '" + path + "'");
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (r.status == CheckReport::Status::fail) return false;
    return true;
}

}  // namespace svol
