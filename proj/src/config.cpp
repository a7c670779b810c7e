#include "svol/config.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "svol/checks.hpp"
#include "svol/poly_parse.hpp"

namespace svol {

using nlohmann::json;

namespace {

[[noreturn]] void bad_config(const std::string& msg) { throw validation_error("config: " + msg); }

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            bad_config("unknown key '" + it.key() + "' in " + where);
    }
}

MetricDescriptor parse_metric(const json& j) {
    MetricDescriptor md;
    if (j.is_string()) {
        md.flavor = MetricDescriptor::Flavor::builtin;
        md.builtin_name = j.get<std::string>();
        if (md.builtin_name != "euclidean" && md.builtin_name != "diag_1px1")
            bad_config("unknown builtin metric '" + md.builtin_name + "'");
        return md;
    }
    if (!j.is_object() || j.size() != 1)
        bad_config("each metric must be a builtin name or a one-key object");
    if (j.contains("random")) {
        const json& r = j.at("random");
        reject_unknown_keys(r, {"seed", "taylor_degree"}, "metrics.random");
        md.flavor = MetricDescriptor::Flavor::random;
        md.random_seed = r.at("seed").get<std::uint64_t>();
        md.random_taylor_degree = r.value("taylor_degree", 2);
        if (md.random_taylor_degree < 0) bad_config("taylor_degree must be >= 0");
        return md;
    }
    if (j.contains("inline")) {
        const json& r = j.at("inline");
        reject_unknown_keys(r, {"n", "entries"}, "metrics.inline");
        md.flavor = MetricDescriptor::Flavor::inline_entries;
        md.inline_n = r.at("n").get<int>();
        for (const json& e : r.at("entries")) {
            if (!e.is_array() || e.size() != 3)
                bad_config("inline entries must be [row, col, polynomial] triples");
            md.inline_entries.emplace_back(e[0].get<int>(), e[1].get<int>(),
                                           e[2].get<std::string>());
        }
        // Validate eagerly so config errors surface before the run starts.
        md.realize(md.inline_n);
        return md;
    }
    bad_config("metric object must contain 'random' or 'inline'");
}

json metric_to_json(const MetricDescriptor& md) {
    switch (md.flavor) {
        case MetricDescriptor::Flavor::builtin:
            return md.builtin_name;
        case MetricDescriptor::Flavor::random:
            return json{{"random",
                         {{"seed", md.random_seed}, {"taylor_degree", md.random_taylor_degree}}}};
        case MetricDescriptor::Flavor::inline_entries: {
            json entries = json::array();
            for (const auto& [r, c, text] : md.inline_entries)
                entries.push_back(json::array({r, c, text}));
            return json{{"inline", {{"n", md.inline_n}, {"entries", entries}}}};
        }
    }
    bad_config("corrupt metric descriptor");
}

}  // namespace

std::string MetricDescriptor::label() const {
    switch (flavor) {
        case Flavor::builtin:
            return builtin_name;
        case Flavor::random:
            return "random(seed=" + std::to_string(random_seed) +
                   ",deg=" + std::to_string(random_taylor_degree) + ")";
        case Flavor::inline_entries:
            return "inline(n=" + std::to_string(inline_n) + ")";
    }
    return "?";
}

std::optional<MetricSpec> MetricDescriptor::realize(int n) const {
    switch (flavor) {
        case Flavor::builtin: {
            VarTablePtr table = ambient_table(n);
            int cap = 1;
            std::vector<Poly> entries(static_cast<std::size_t>(n) * n, Poly(table, cap));
            for (int a = 0; a < n; ++a)
                entries[static_cast<std::size_t>(a) * n + a] = Poly::constant(table, cap, 1);
            if (builtin_name == "diag_1px1")
                entries[0] = entries[0] + Poly::variable(table, cap, 0);
            return validate_metric(n, std::move(entries));
        }
        case Flavor::random:
            return random_metric(n, random_taylor_degree, random_seed);
        case Flavor::inline_entries: {
            if (n != inline_n) return std::nullopt;
            VarTablePtr table = ambient_table(n);
            int cap = 8;
            std::vector<Poly> entries(static_cast<std::size_t>(n) * n, Poly(table, cap));
            for (const auto& [r, c, text] : inline_entries) {
                if (r < 0 || c < 0 || r >= n || c >= n || r > c)
                    throw validation_error("config: inline metric indices must satisfy 0 <= row <= col < n");
                Poly p = parse_poly(text, table, cap);
                entries[static_cast<std::size_t>(r) * n + c] = p;
                entries[static_cast<std::size_t>(c) * n + r] = p;
            }
            return validate_metric(n, std::move(entries));
        }
    }
    return std::nullopt;
}

RunConfig default_config() {
    RunConfig c;
    c.checks = all_check_names();
    c.n_values = {1, 2, 3};
    c.k_values = {1, 2, 3};
    MetricDescriptor euclid;
    euclid.builtin_name = "euclidean";
    MetricDescriptor diag;
    diag.builtin_name = "diag_1px1";
    MetricDescriptor rnd;
    rnd.flavor = MetricDescriptor::Flavor::random;
    rnd.random_seed = 7;
    rnd.random_taylor_degree = 2;
    c.metrics = {euclid, diag, rnd};
    c.seeds = {1, 2};
    return c;
}

RunConfig parse_config(const std::string& source_text) {
    json j;
    try {
        j = json::parse(source_text);
    } catch (const json::parse_error& e) {
        // Convert the byte offset into 1-based line/column.
        int line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < source_text.size(); ++i) {
            if (source_text[i] == '\n') ++line, col = 1;
            else ++col;
        }
        throw parse_error("config is not well-formed JSON", line, col);
    }
    if (!j.is_object()) bad_config("top level must be an object");
    reject_unknown_keys(j, {"checks", "n_values", "k_values", "metrics", "seeds", "output"},
                        "config");

    RunConfig c = default_config();
    if (j.contains("checks")) {
        c.checks.clear();
        for (const json& e : j.at("checks")) {
            std::string name = e.get<std::string>();
            const auto& names = all_check_names();
            if (std::find(names.begin(), names.end(), name) == names.end()) {
                std::string valid;
                for (const std::string& v : names) valid += (valid.empty() ? "" : ", ") + v;
                bad_config("unknown check '" + name + "'; valid names: " + valid);
            }
            c.checks.push_back(std::move(name));
        }
    }
    if (j.contains("n_values")) c.n_values = j.at("n_values").get<std::vector<int>>();
    if (j.contains("k_values")) c.k_values = j.at("k_values").get<std::vector<int>>();
    for (int n : c.n_values)
        if (n < 1) bad_config("n_values must be >= 1");
    for (int k : c.k_values)
        if (k < 1) bad_config("k_values must be >= 1");
    if (j.contains("metrics")) {
        c.metrics.clear();
        for (const json& e : j.at("metrics")) c.metrics.push_back(parse_metric(e));
        if (c.metrics.empty()) bad_config("metrics must be non-empty");
    }
    if (j.contains("seeds")) c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    if (c.seeds.empty()) bad_config("seeds must be non-empty");
    if (j.contains("output")) {
        const json& o = j.at("output");
        reject_unknown_keys(o, {"path", "format"}, "output");
        c.output.path = o.value("path", std::string());
        c.output.format = o.value("format", std::string("text"));
        if (c.output.format != "text" && c.output.format != "structured")
            bad_config("output.format must be 'text' or 'structured'");
    }
    return c;
}

std::string render_config(const RunConfig& c) {
    json j;
    j["checks"] = c.checks;
    j["n_values"] = c.n_values;
    j["k_values"] = c.k_values;
    json metrics = json::array();
    for (const MetricDescriptor& md : c.metrics) metrics.push_back(metric_to_json(md));
    j["metrics"] = metrics;
    j["seeds"] = c.seeds;
    j["output"] = {{"path", c.output.path}, {"format", c.output.format}};
    return j.dump(2);
}

std::string RunConfig::digest() const {
    // FNV-1a over the canonical rendering. The output settings do not affect
    // check results, so they are excluded.
    RunConfig canonical = *this;
    canonical.output = OutputConfig{};
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : render_config(canonical)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace svol
