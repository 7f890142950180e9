// gwloc: exact equivariant graph-sum engine for disk invariants of the
// projective line and genus-zero invariants of the associated toric surface.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "gwloc/correspondence.hpp"

namespace {

constexpr const char* kEngineVersion = "gwloc 1.0.0";

constexpr int kExitFailure = 1;
constexpr int kExitVanishing = 2;
constexpr int kExitIntegrity = 3;
constexpr int kExitCacheMismatch = 4;

std::pair<int, int> parse_beta(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--beta", "expected two comma-separated degrees, e.g. 2,1");
    try {
        int d1 = std::stoi(text.substr(0, comma));
        int d2 = std::stoi(text.substr(comma + 1));
        if (d1 < 0 || d2 < 0) throw std::invalid_argument("negative");
        return {d1, d2};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--beta", "expected two nonnegative integers, e.g. 2,1");
    }
}

std::vector<gwloc::Insertion> parse_insertions(const std::string& text, bool allow_alpha0) {
    std::vector<gwloc::Insertion> ins;
    if (text.empty()) return ins;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        auto colon = item.find(':');
        try {
            if (colon == std::string::npos) throw std::invalid_argument("no colon");
            int alpha = std::stoi(item.substr(0, colon));
            int a = std::stoi(item.substr(colon + 1));
            int lo = allow_alpha0 ? 0 : 1;
            if (alpha < lo || alpha > 2 || a < 0) throw std::invalid_argument("range");
            ins.push_back({alpha, a});
        } catch (const std::exception&) {
            throw CLI::ValidationError(
                "--insertions",
                "expected comma-separated alpha:a pairs with alpha in {" +
                    std::string(allow_alpha0 ? "0,1,2" : "1,2") + "} and a >= 0, e.g. \"1:0,2:1\"");
        }
    }
    return ins;
}

std::string ins_text(const std::vector<gwloc::Insertion>& ins) {
    std::string s;
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ins[i].alpha) + ":" + std::to_string(ins[i].a);
    }
    return s;
}

// Append-only JSON-lines store keyed by (side, beta, insertions). A fresh
// computation must match any existing record byte for byte.
class CacheStore {
public:
    explicit CacheStore(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        std::string line;
        long lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(line);
            } catch (const std::exception&) {
                throw std::runtime_error("cache file " + path_ + ": malformed line " +
                                         std::to_string(lineno));
            }
            if (!j.contains("key") || !j.contains("value"))
                throw std::runtime_error("cache file " + path_ + ": incomplete record at line " +
                                         std::to_string(lineno));
            records_[j["key"].get<std::string>()] = j["value"].get<std::string>();
        }
    }

    // Returns the stored value string; throws CacheMismatchError if a record
    // exists and disagrees with the fresh computation.
    std::string reconcile(const std::string& key, const std::string& computed) {
        auto it = records_.find(key);
        if (it != records_.end()) {
            if (it->second != computed)
                throw gwloc::CacheMismatchError("cache record for \"" + key + "\" holds \"" +
                                                it->second + "\" but recomputation gives \"" +
                                                computed + "\"");
            return it->second;
        }
        nlohmann::ordered_json j;
        j["key"] = key;
        j["value"] = computed;
        j["engine_version"] = kEngineVersion;
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cannot open cache file " + path_);
        out << j.dump() << "\n";
        records_[key] = computed;
        return computed;
    }

private:
    std::string path_;
    std::map<std::string, std::string> records_;
};

void print_value(const std::string& format, std::pair<int, int> beta,
                 const std::vector<gwloc::Insertion>& ins, const std::string& value) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["beta"] = {beta.first, beta.second};
        auto ja = nlohmann::ordered_json::array();
        for (const auto& i : ins) {
            nlohmann::ordered_json ji;
            ji["alpha"] = i.alpha;
            ji["a"] = i.a;
            ja.push_back(std::move(ji));
        }
        j["insertions"] = std::move(ja);
        j["value"] = value;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << value << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact disk and closed Gromov-Witten invariants via decorated graph sums"};
    app.require_subcommand(1);

    std::string beta_text, insertions_text, cache_path, side = "open", format = "text";
    bool restricted = false;
    gwloc::SweepOptions sweep_opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--beta", beta_text, "curve class d1,d2")->required();
        cmd->add_option("--insertions", insertions_text,
                        "descendant insertions as alpha:a pairs, e.g. \"1:0,2:1\"");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* disk_cmd = app.add_subcommand("disk", "disk invariant of (d+, d-)");
    add_common(disk_cmd);
    disk_cmd->add_option("--cache", cache_path, "JSON-lines result cache");

    auto* closed_cmd = app.add_subcommand("closed", "closed invariant of (d1, d2)");
    add_common(closed_cmd);
    closed_cmd->add_flag("--restrict", restricted, "restrict to u1 + u2 = 0, u1 = u");
    closed_cmd->add_option("--cache", cache_path, "JSON-lines result cache");

    auto* verify_cmd = app.add_subcommand("verify", "verify the correspondence at one point");
    add_common(verify_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "verify every identity over a degree sweep");
    sweep_cmd->add_option("--max-total-degree", sweep_opt.max_total_degree, "bound on d1 + d2");
    sweep_cmd->add_option("--max-markings", sweep_opt.max_markings, "bound on n");
    sweep_cmd->add_option("--max-descendant", sweep_opt.max_descendant, "bound on each a_i");
    sweep_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* graphs_cmd = app.add_subcommand("graphs", "dump decorated graphs as JSON lines");
    add_common(graphs_cmd);
    graphs_cmd->add_option("--side", side, "which target")
        ->check(CLI::IsMember({"open", "closed"}));

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<CacheStore> cache;
        if (!cache_path.empty()) cache.emplace(cache_path);

        if (disk_cmd->parsed()) {
            auto beta = parse_beta(beta_text);
            auto ins = parse_insertions(insertions_text, false);
            std::string value = gwloc::disk_invariant(beta, ins).str();
            if (cache)
                value = cache->reconcile("open beta=" + beta_text + " ins=" + ins_text(ins),
                                         value);
            print_value(format, beta, ins, value);
        } else if (closed_cmd->parsed()) {
            auto beta = parse_beta(beta_text);
            auto ins = parse_insertions(insertions_text, true);
            std::string value = restricted
                                    ? gwloc::closed_invariant_restricted(beta, ins).str()
                                    : gwloc::closed_invariant(beta, ins).canonical_string();
            if (cache)
                value = cache->reconcile(
                    std::string(restricted ? "closed-restricted" : "closed") + " beta=" +
                        beta_text + " ins=" + ins_text(ins),
                    value);
            print_value(format, beta, ins, value);
        } else if (verify_cmd->parsed()) {
            auto beta = parse_beta(beta_text);
            auto ins = parse_insertions(insertions_text, false);
            auto rep = gwloc::verify_correspondence(beta, ins);
            std::cout << (format == "json" ? gwloc::report_json(rep) + "\n"
                                           : gwloc::report_text(rep));
            return rep.equal ? 0 : kExitFailure;
        } else if (sweep_cmd->parsed()) {
            auto res = gwloc::run_sweep(sweep_opt, std::cout, format);
            return res.all_pass() ? 0 : kExitFailure;
        } else if (graphs_cmd->parsed()) {
            auto beta = parse_beta(beta_text);
            auto ins = parse_insertions(insertions_text, side == "closed");
            int n = static_cast<int>(ins.size());
            auto graphs = side == "open" ? gwloc::enumerate_open_graphs(n, beta)
                                         : gwloc::enumerate_closed_graphs(n, beta);
            for (const auto& g : graphs) std::cout << gwloc::graph_json(g) << "\n";
        }
        return 0;
    } catch (const gwloc::VanishingDegreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVanishing;
    } catch (const gwloc::CacheMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCacheMismatch;
    } catch (const gwloc::IntegrityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
