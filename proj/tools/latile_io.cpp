#include "latile_io.hpp"

#include <fstream>
#include <sstream>

namespace latile::io {

Cluster parse_cluster(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<IntVec> points;
    std::size_t line_no = 0, dim = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::vector<Integer> coords;
        std::string tok;
        while (fields >> tok) {
            Integer v;
            if (v.set_str(tok, 10) != 0) throw ParseError("line " + std::to_string(line_no) + ": not an integer: " + tok);
            coords.push_back(v);
        }
        if (dim == 0) dim = coords.size();
        if (coords.size() != dim)
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) + " coordinates");
        points.emplace_back(std::move(coords));
    }
    if (points.empty()) throw ParseError("no points");
    if (dim > 3) throw ParseError("dimension must be 1, 2 or 3");
    try {
        return Cluster(std::move(points));
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

Cluster read_cluster_file(const std::string& path) { return parse_cluster(read_file(path)); }

Json to_json(const Integer& n) {
    // long is 64 bits on the supported platforms.
    if (fits_long(n)) return Json(static_cast<std::int64_t>(n.get_si()));
    return Json(n.get_str());
}

Json to_json(const Rational& q) { return Json{{"num", to_json(q.get_num())}, {"den", to_json(q.get_den())}}; }

Json to_json(const IntVec& v) {
    Json out = Json::array();
    for (const auto& c : v.coords()) out.push_back(to_json(c));
    return out;
}

Json to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

Json to_json(const RationalTorusPoint& p) {
    Json out = Json::array();
    for (const auto& c : p.coords()) out.push_back(to_json(c));
    return out;
}

Json to_json(const PeriodicTiling& t) {
    Json reps = Json::array();
    for (const auto& r : t.reps) reps.push_back(to_json(r));
    return Json{{"dim", t.dim()}, {"period", to_json(t.period.basis())}, {"reps", reps}};
}

Json to_json(const PrismDecomposition& p) {
    Json offsets = Json::array(), foundation = Json::array();
    for (const auto& k : p.offsets) offsets.push_back(to_json(k));
    for (const auto& a : p.foundation) foundation.push_back(to_json(a));
    return Json{{"base", to_json(p.base.basis())},
                {"axis", to_json(p.axis)},
                {"translate", to_json(p.translate)},
                {"offsets", offsets},
                {"foundation", foundation}};
}

Json to_json(const RationalLineFamily& f) {
    Json lines = Json::array();
    for (const auto& l : f.lines()) lines.push_back(Json{{"point", to_json(l.rho)}, {"direction", to_json(l.v)}});
    return Json{{"modulus", to_json(f.modulus())}, {"lines", lines}};
}

namespace {

Json optional_json(const std::optional<PrismDecomposition>& p) { return p ? to_json(*p) : Json(nullptr); }

struct WitnessJson {
    Json witness;
    const std::optional<PeriodicTiling>* tiling = nullptr;

    void operator()(const Case1Witness& w) {
        witness = Json{{"g0", to_json(w.g0)}, {"g1", to_json(w.g1)}, {"normal", to_json(w.normal)},
                       {"prism", optional_json(w.prism)}};
        tiling = &w.tiling;
    }
    void operator()(const Case21Witness& w) {
        witness = Json{{"g0", to_json(w.g0)},
                       {"scaling", to_json(w.scaling)},
                       {"line", Json{{"point", to_json(w.line.rho)}, {"direction", to_json(w.line.v)}}},
                       {"prism", optional_json(w.prism)}};
        tiling = &w.tiling;
    }
    void operator()(const Case22Witness& w) {
        witness = Json{{"g0", to_json(w.g0)}, {"scaling", to_json(w.scaling)}, {"family", to_json(w.family)},
                       {"note", w.note}};
    }
    void operator()(const Case3Witness& w) {
        Json families = Json::array();
        for (const auto& f : w.families) families.push_back(Json{{"h", to_json(f.h)}, {"family", to_json(f.family)}});
        witness = Json{{"families", families}, {"note", w.note}};
    }
};

}  // namespace

Json to_json(const Classification& c) {
    Json points = Json::array(), delta = Json::array(), divisible = Json::array();
    for (const auto& x : c.cluster.points()) points.push_back(to_json(x));
    for (const auto& g : c.delta.vectors) delta.push_back(to_json(g));
    for (const auto& g : c.divisible_dirs) divisible.push_back(to_json(g));
    WitnessJson w;
    std::visit(w, c.witness);
    Json out{{"cluster", points},
             {"prime", to_json(c.p)},
             {"translation", to_json(c.translation)},
             {"case", to_string(c.tag)},
             {"delta", delta},
             {"divisible_dirs", divisible},
             {"witness", w.witness}};
    if (w.tiling) {
        out["tiling_status"] = w.tiling->has_value() ? "found" : "unknown";
        out["tiling"] = w.tiling->has_value() ? to_json(**w.tiling) : Json(nullptr);
    } else {
        out["tiling_status"] = "not_constructed";
        out["tiling"] = nullptr;
    }
    return out;
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) == 0) return v;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

IntVec vector_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) throw ParseError("expected an integer vector of length " + std::to_string(dim));
    std::vector<Integer> coords;
    for (const auto& c : j) coords.push_back(integer_from_json(c));
    return IntVec(std::move(coords));
}

PeriodicTiling tiling_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("period") || !j.contains("reps"))
        throw ParseError("tiling must have dim, period and reps");
    const Integer d = integer_from_json(j["dim"]);
    if (d < 1 || d > 3) throw ParseError("tiling dimension must be 1, 2 or 3");
    const std::size_t dim = d.get_ui();
    const Json& rows = j["period"];
    if (!rows.is_array() || rows.size() != dim) throw ParseError("period must have dim rows");
    std::vector<IntVec> row_vecs;
    for (const auto& r : rows) row_vecs.push_back(vector_from_json(r, dim));
    const Sublattice period = Sublattice::from_matrix(IntMatrix::from_rows(row_vecs, dim));
    if (!period.is_full_rank()) throw ParseError("period lattice is not full rank");
    if (!j["reps"].is_array()) throw ParseError("reps must be a list");
    std::vector<IntVec> reps;
    for (const auto& r : j["reps"]) reps.push_back(vector_from_json(r, dim));
    return PeriodicTiling::make(period, std::move(reps));
}

PeriodicTiling read_tiling_file(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return tiling_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace latile::io
