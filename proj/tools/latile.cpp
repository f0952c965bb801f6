// latile: analyze, tile and verify clusters from the command line.
//
// Exit codes: 0 ok, 1 verification failed, 2 parse error, 3 search
// exhausted (unknown), 4 precondition violated, 5 internal error.

#include <iostream>

#include <CLI11.hpp>

#include "latile_io.hpp"

namespace {

using namespace latile;
using io::Json;

enum Exit { kOk = 0, kVerifyFail = 1, kParse = 2, kUnknown = 3, kPrecondition = 4, kInternal = 5 };

void emit(const Json& payload, const std::string& out_path) {
    const std::string text = io::dump(payload);
    std::cout << text;
    if (!out_path.empty()) io::write_file(out_path, text);
}

int cmd_analyze(const std::string& cluster_path, long prime, long cap, const std::string& out,
                const std::string& tiling_out, bool experimental) {
    const Cluster f = io::read_cluster_file(cluster_path);
    const Classification c = classify(f, Integer(prime), ClassifyOptions{cap, experimental});
    const Json report = io::to_json(c);
    emit(report, out);
    if (!tiling_out.empty() && !report["tiling"].is_null()) io::write_file(tiling_out, io::dump(report["tiling"]));
    return kOk;
}

int cmd_tile(const std::string& cluster_path, long max_index, const std::string& out) {
    const Cluster f = io::read_cluster_file(cluster_path);
    if (f.dim() == 1) {
        const OneDimReport r = tile_1d(f);
        Json words = Json::array();
        for (const auto& w : r.tilings) words.push_back(w);
        Json payload{{"status", r.exact ? "found" : "unknown"},
                     {"uniform_period", io::to_json(r.uniform_period)},
                     {"words", words}};
        if (!r.exact) {
            payload["note"] = "not exact: the transfer graph has no cycles";
            emit(payload, "");
            return kUnknown;
        }
        const Json tiling = io::to_json(tiling_from_word(r.tilings.front(), f));
        payload["tiling"] = tiling;
        emit(payload, "");
        if (!out.empty()) io::write_file(out, io::dump(tiling));
        return kOk;
    }
    const auto t = search_fully_periodic(f, max_index);
    if (!t) {
        emit(Json{{"status", "unknown"}, {"note", "search cap exhausted"}, {"max_index", max_index}}, "");
        return kUnknown;
    }
    const Json tiling = io::to_json(*t);
    emit(Json{{"status", "found"}, {"tiling", tiling}}, "");
    if (!out.empty()) io::write_file(out, io::dump(tiling));
    return kOk;
}

int cmd_verify(const std::string& cluster_path, const std::string& tiling_path, long alpha) {
    const Cluster f = io::read_cluster_file(cluster_path);
    const PeriodicTiling t = io::read_tiling_file(tiling_path);
    if (t.dim() != f.dim()) throw io::ParseError("tiling and cluster dimensions differ");
    const bool valid = verify_tiling(f, t);
    Json payload{{"valid", valid}};
    bool ok = valid;
    if (alpha != 0) {
        if (alpha < 0 || gcd_of(Integer(alpha), Integer(static_cast<unsigned long>(f.size()))) != 1)
            throw std::domain_error("alpha must be positive and coprime to |F|");
        const bool dilated = valid && dilation_check(f, t, Integer(alpha));
        payload["alpha"] = alpha;
        payload["dilation_valid"] = dilated;
        ok = ok && dilated;
    }
    emit(payload, "");
    return ok ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic tilings of Z^3 by clusters of size p^2"};
    app.require_subcommand(1);

    std::string cluster_path, tiling_path, out, tiling_out;
    long prime = 0, cap = 64, max_index = 64, alpha = 0;
    bool experimental = false;

    auto* analyze = app.add_subcommand("analyze", "classify a cluster and build a tiling when possible");
    analyze->add_option("cluster", cluster_path, "cluster file")->required();
    analyze->add_option("--prime", prime, "prime p with |F| = p^2")->required();
    analyze->add_option("--search-cap", cap, "largest lattice index tried by tiling searches");
    analyze->add_option("--out", out, "also write the report here");
    analyze->add_option("--tiling-out", tiling_out, "write the embedded tiling here");
    analyze->add_flag("--experimental", experimental, "accept |F| = p^k");

    auto* tile = app.add_subcommand("tile", "search for a fully periodic tiling");
    tile->add_option("cluster", cluster_path, "cluster file")->required();
    tile->add_option("--max-index", max_index, "largest lattice index tried");
    tile->add_option("--out", out, "write the tiling here");

    auto* verify = app.add_subcommand("verify", "check a tiling, optionally after dilation");
    verify->add_option("cluster", cluster_path, "cluster file")->required();
    verify->add_option("tiling", tiling_path, "tiling file")->required();
    verify->add_option("--alpha", alpha, "dilation factor coprime to |F|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(cluster_path, prime, cap, out, tiling_out, experimental);
        if (tile->parsed()) return cmd_tile(cluster_path, max_index, out);
        return cmd_verify(cluster_path, tiling_path, alpha);
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
