#include "torusobs/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>

namespace torusobs::report {

std::string format_double(double v) {
    if (std::isnan(v)) return "\"nan\"";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void dump(const nlohmann::json& j, std::string& out) {
    using value_t = nlohmann::json::value_t;
    switch (j.type()) {
        case value_t::null:
            out += "null";
            break;
        case value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        case value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            break;
        case value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            break;
        case value_t::number_float:
            out += format_double(j.get<double>());
            break;
        case value_t::string: {
            // nlohmann's own escaping, which is stable
            out += nlohmann::json(j.get<std::string>()).dump();
            break;
        }
        case value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += ',';
                first = false;
                dump(e, out);
            }
            out += ']';
            break;
        }
        case value_t::object: {
            // nlohmann objects iterate in sorted key order already
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::json(it.key()).dump();
                out += ':';
                dump(it.value(), out);
            }
            out += '}';
            break;
        }
        default:
            out += "null";
    }
}

std::string cell(const nlohmann::json& v) {
    if (v.is_number_float()) {
        std::string s = format_double(v.get<double>());
        if (s.front() == '"') s = s.substr(1, s.size() - 2);
        return s;
    }
    if (v.is_string()) return v.get<std::string>();
    std::string out;
    dump(v, out);
    return out;
}

}  // namespace

std::string canonical_json(const nlohmann::json& j) {
    std::string out;
    dump(j, out);
    out += '\n';
    return out;
}

std::string csv_row(const std::vector<nlohmann::json>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cell(cells[i]);
    }
    out += '\n';
    return out;
}

// ---------------------------------------------------------------------------
// SHA-256 (FIPS 180-4), self-contained.

namespace {

inline std::uint32_t rotr(std::uint32_t x, int n) {
    return (x >> n) | (x << (32 - n));
}

constexpr std::uint32_t K[64] = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
    0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
    0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
    0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
    0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
    0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
    0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
    0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

}  // namespace

std::string sha256_hex(const std::string& bytes) {
    std::uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                          0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    std::string msg = bytes;
    const std::uint64_t bitlen = static_cast<std::uint64_t>(bytes.size()) * 8;
    msg += static_cast<char>(0x80);
    while (msg.size() % 64 != 56) msg += '\0';
    for (int i = 7; i >= 0; --i)
        msg += static_cast<char>((bitlen >> (8 * i)) & 0xff);

    for (std::size_t off = 0; off < msg.size(); off += 64) {
        std::uint32_t w[64];
        for (int i = 0; i < 16; ++i)
            w[i] = (static_cast<std::uint8_t>(msg[off + 4 * i]) << 24) |
                   (static_cast<std::uint8_t>(msg[off + 4 * i + 1]) << 16) |
                   (static_cast<std::uint8_t>(msg[off + 4 * i + 2]) << 8) |
                   static_cast<std::uint8_t>(msg[off + 4 * i + 3]);
        for (int i = 16; i < 64; ++i) {
            const std::uint32_t s0 =
                rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            const std::uint32_t s1 =
                rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5],
                      g = h[6], hh = h[7];
        for (int i = 0; i < 64; ++i) {
            const std::uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            const std::uint32_t ch = (e & f) ^ (~e & g);
            const std::uint32_t t1 = hh + S1 + ch + K[i] + w[i];
            const std::uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            const std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            const std::uint32_t t2 = S0 + maj;
            hh = g;
            g = f;
            f = e;
            e = d + t1;
            d = c;
            c = b;
            b = a;
            a = t1 + t2;
        }
        h[0] += a; h[1] += b; h[2] += c; h[3] += d;
        h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
    }

    char out[65];
    for (int i = 0; i < 8; ++i) std::snprintf(out + 8 * i, 9, "%08x", h[i]);
    return std::string(out, 64);
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json points_json(const std::vector<Point>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) {
        nlohmann::json row = nlohmann::json::array();
        for (auto c : p) row.push_back(c);
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace

nlohmann::json to_json(const lattice::SphereSet& s) {
    return {{"d", s.d}, {"n", s.n}, {"points", points_json(s.points)}};
}

nlohmann::json to_json(const lattice::CapStatistics& c) {
    nlohmann::json j{{"R", c.R},
                     {"count_lower", c.count_lower},
                     {"density", c.density}};
    j["count_exact"] = c.count_exact ? nlohmann::json(*c.count_exact)
                                     : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const lattice::PrimeProduct& p) {
    nlohmann::json primes = nlohmann::json::array();
    for (auto q : p.primes) primes.push_back(q);
    return {{"m", p.m},
            {"primes", primes},
            {"omega", p.omega},
            {"product", p.product.get_str()}};
}

nlohmann::json to_json(const spectral::MomentMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& mi : m.rows) {
        nlohmann::json a = nlohmann::json::array();
        for (int x : mi.alpha) a.push_back(x);
        rows.push_back(std::move(a));
    }
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols.size(); ++j)
            r.push_back(m.entries.at(i, j).get_str());
        entries.push_back(std::move(r));
    }
    return {{"rows", rows},
            {"cols", points_json(m.cols)},
            {"entries", entries},
            {"reduced", m.reduced},
            {"degree_cap", m.degree_cap}};
}

nlohmann::json to_json(const spectral::RationalVector& v,
                       const std::vector<Point>& points) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& q : v) entries.push_back(q.get_str());
    return {{"points", points_json(points)}, {"entries", entries}};
}

nlohmann::json to_json(const spectral::GammaBounds& b) {
    nlohmann::json j{{"lower", b.lower}, {"upper_M", b.upper_M}};
    j["upper_D"] = b.upper_D ? nlohmann::json(*b.upper_D) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const obs::FamilyReport& f) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : f.params) params[k] = v;
    nlohmann::json notes = nlohmann::json::array();
    for (const auto& s : f.notes) notes.push_back(s);
    nlohmann::json j{{"family", f.family}, {"params", params}, {"n", f.n},
                     {"count", f.count},   {"r", f.r},          {"measured", f.measured},
                     {"notes", notes}};
    j["bound"] = f.bound ? nlohmann::json(*f.bound) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const obs::ExponentTables& t) {
    nlohmann::json delta = nlohmann::json::object();
    for (const auto& [m, v] : t.delta_cc) delta[std::to_string(m)] = v;
    nlohmann::json j{{"h", t.h},
                     {"delta_cc", delta},
                     {"nazarov_floor", t.nazarov_floor}};
    j["phi"] = t.phi ? nlohmann::json(*t.phi) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const clusters::Partition& p) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : p.components) comps.push_back(points_json(c));
    return {{"rho", p.rho}, {"components", comps}};
}

nlohmann::json to_json(const clusters::ArcCheck& a) {
    nlohmann::json viols = nlohmann::json::array();
    for (const auto& v : a.violations)
        viols.push_back({{"n", v.n},
                         {"start_index", v.start_index},
                         {"arc_length", v.arc_length}});
    return {{"n", a.n}, {"m", a.m}, {"threshold", a.threshold}, {"violations", viols}};
}

nlohmann::json to_json(const turan::RatioReport& r) {
    nlohmann::json j{{"terms", r.terms},
                     {"set", r.set_desc},
                     {"measured_ratio", r.measured_ratio}};
    j["per_term_exponent"] = r.per_term_exponent
                                 ? nlohmann::json(*r.per_term_exponent)
                                 : nlohmann::json(nullptr);
    return j;
}

std::string csv(const lattice::SphereSet& s) {
    std::string out;
    for (int c = 1; c <= s.d; ++c) {
        if (c > 1) out += ',';
        out += "k" + std::to_string(c);
    }
    out += '\n';
    for (const auto& p : s.points) {
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (c) out += ',';
            out += std::to_string(p[c]);
        }
        out += '\n';
    }
    return out;
}

std::string csv(const obs::FamilyReport& f, int d) {
    std::string out = "family,d,n,r,measured,bound\n";
    out += csv_row({f.family, d, f.n, f.r, f.measured,
                    f.bound ? nlohmann::json(*f.bound) : nlohmann::json(nullptr)});
    return out;
}

std::string csv(const std::vector<clusters::ArcCheck>& checks) {
    std::string out = "n,threshold,m,violations\n";
    for (const auto& a : checks)
        out += csv_row({a.n, a.threshold, a.m, a.violations.size()});
    return out;
}

std::string csv(const std::vector<turan::ScalingRow>& rows) {
    std::string out = "n,r,measured,analytic,log_diff\n";
    for (const auto& r : rows)
        out += csv_row({r.n, r.r, r.measured, r.analytic, r.log_diff});
    return out;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& s : argv) a.push_back(s);
    return {{"argv", a},       {"params", params},       {"seed", seed},
            {"version", version}, {"timestamp", timestamp}, {"output_digest", output_digest}};
}

}  // namespace torusobs::report
