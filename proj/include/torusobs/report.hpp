#pragma once

#include <string>

#include <json.hpp>

#include "torusobs/clusters.hpp"
#include "torusobs/lattice.hpp"
#include "torusobs/observability.hpp"
#include "torusobs/spectral.hpp"
#include "torusobs/turan.hpp"

namespace torusobs::report {

// Canonical serialization: object keys sorted, floats at 17 significant
// digits, nonfinite values as strings, newline-terminated.  Byte-stable
// across platforms and runs.
std::string canonical_json(const nlohmann::json& j);

// One CSV line; numeric formatting matches canonical_json.
std::string csv_row(const std::vector<nlohmann::json>& cells);

std::string format_double(double v);

std::string sha256_hex(const std::string& bytes);

nlohmann::json to_json(const lattice::SphereSet& s);
nlohmann::json to_json(const lattice::CapStatistics& c);
nlohmann::json to_json(const lattice::PrimeProduct& p);
nlohmann::json to_json(const spectral::MomentMatrix& m);
nlohmann::json to_json(const spectral::RationalVector& v, const std::vector<Point>& points);
nlohmann::json to_json(const spectral::GammaBounds& b);
nlohmann::json to_json(const obs::FamilyReport& f);
nlohmann::json to_json(const obs::ExponentTables& t);
nlohmann::json to_json(const clusters::Partition& p);
nlohmann::json to_json(const clusters::ArcCheck& a);
nlohmann::json to_json(const turan::RatioReport& r);

std::string csv(const lattice::SphereSet& s);
std::string csv(const obs::FamilyReport& f, int d);
std::string csv(const std::vector<clusters::ArcCheck>& checks);
std::string csv(const std::vector<turan::ScalingRow>& rows);

// Reproducible-run record; the digest is the SHA-256 of the canonical output
// bytes, so a replay reproducing the digest reproduces the artifact.
struct RunManifest {
    std::vector<std::string> argv;
    nlohmann::json params;
    std::uint64_t seed = 0;
    std::string version;
    std::string timestamp;
    std::string output_digest;

    nlohmann::json to_json() const;
};

}  // namespace torusobs::report
