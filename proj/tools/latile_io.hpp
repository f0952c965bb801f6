#pragma once

// File formats for the command-line tool: cluster text files, tiling JSON
// and classification reports. All numbers are exact; integers that do not
// fit in 64 bits are written as decimal strings, rationals as {num, den}.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "latile/trichotomy.hpp"

namespace latile::io {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One point per line, whitespace separated; '#' starts a comment line.
Cluster parse_cluster(const std::string& text);
Cluster read_cluster_file(const std::string& path);

Json to_json(const Integer& n);
Json to_json(const Rational& q);
Json to_json(const IntVec& v);
Json to_json(const IntMatrix& m);  // list of rows
Json to_json(const RationalTorusPoint& p);
Json to_json(const PeriodicTiling& t);
Json to_json(const PrismDecomposition& p);
Json to_json(const RationalLineFamily& f);
Json to_json(const Classification& c);

Integer integer_from_json(const Json& j);
IntVec vector_from_json(const Json& j, std::size_t dim);
PeriodicTiling tiling_from_json(const Json& j);
PeriodicTiling read_tiling_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

}  // namespace latile::io
