#pragma once

// Golden certificate data: the reference objects every pipeline stage is
// compared against. Loaded from checksummed files; any byte drift in the
// data directory fails the load.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cuboid/digest.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/integer.hpp"
#include "cuboid/mpoly.hpp"
#include "cuboid/polyjson.hpp"
#include "cuboid/rational.hpp"
#include "cuboid/upoly.hpp"

namespace cuboid {

struct GoldenBracket {
    std::string poly;  // "P6" | "P28"
    Rat lo;
    Rat hi;
    int sign_lo = 0;
    int sign_hi = 0;
};

struct GoldenSample {
    std::string interval;
    Rat s;
    std::size_t expected_real_roots = 0;
};

struct GoldenFactor {
    UPolyZ poly;
    unsigned exponent = 1;
};

struct DiscExponents {
    unsigned s = 0, s_minus_1 = 0, s_plus_1 = 0, p6 = 0, p28 = 0;
};

struct GoldenData {
    MPoly E2, E3, F, f;
    UPolyZ P6, P28;
    Int disc_constant_C;
    DiscExponents exponents;
    std::vector<GoldenBracket> brackets;
    std::vector<GoldenSample> samples;
    std::vector<GoldenFactor> f1_factors;
    std::map<std::string, std::string> checksums;  // file name -> verified sha256

    static GoldenData load(const std::filesystem::path& dir);
};

inline GoldenData GoldenData::load(const std::filesystem::path& dir) {
    GoldenData g;

    // Verify the manifest before trusting any file.
    std::ifstream manifest(dir / "MANIFEST.sha256");
    if (!manifest) throw DataError("missing " + (dir / "MANIFEST.sha256").string());
    std::string line;
    while (std::getline(manifest, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string hash, name;
        ls >> hash >> name;
        if (hash.size() != 64 || name.empty())
            throw DataError("malformed manifest line: " + line);
        std::string actual = file_sha256((dir / name).string());
        if (actual != hash)
            throw DataError("checksum mismatch for " + name + " (expected " + hash +
                            ", got " + actual + ")");
        g.checksums[name] = hash;
    }
    for (const char* required :
         {"E2.json", "E3.json", "F.json", "f.json", "P6.json", "P28.json", "golden.json"})
        if (!g.checksums.count(required))
            throw DataError(std::string("manifest does not cover ") + required);

    g.E2 = mpoly_from_json(read_json_file((dir / "E2.json").string()));
    g.E3 = mpoly_from_json(read_json_file((dir / "E3.json").string()));
    g.F = mpoly_from_json(read_json_file((dir / "F.json").string()));
    g.f = mpoly_from_json(read_json_file((dir / "f.json").string()));
    g.P6 = upoly_from_json(read_json_file((dir / "P6.json").string()));
    g.P28 = upoly_from_json(read_json_file((dir / "P28.json").string()));

    nlohmann::json meta = read_json_file((dir / "golden.json").string());
    g.disc_constant_C = Int::from_string(meta.at("disc_constant_C").get<std::string>());
    const auto& ex = meta.at("disc_exponents");
    g.exponents = {ex.at("s").get<unsigned>(), ex.at("s_minus_1").get<unsigned>(),
                   ex.at("s_plus_1").get<unsigned>(), ex.at("P6").get<unsigned>(),
                   ex.at("P28").get<unsigned>()};
    for (const auto& b : meta.at("brackets"))
        g.brackets.push_back({b.at("poly").get<std::string>(),
                              Rat::from_string(b.at("lo").get<std::string>()),
                              Rat::from_string(b.at("hi").get<std::string>()),
                              b.at("sign_lo").get<int>(), b.at("sign_hi").get<int>()});
    for (const auto& s : meta.at("samples"))
        g.samples.push_back({s.at("interval").get<std::string>(),
                             Rat::from_string(s.at("s").get<std::string>()),
                             s.at("expected_real_roots").get<std::size_t>()});
    for (const auto& fc : meta.at("f1_factors"))
        g.f1_factors.push_back({upoly_from_json(fc.at("poly")), fc.at("exponent").get<unsigned>()});

    if (g.brackets.size() != 5) throw DataError("expected 5 golden brackets");
    if (g.samples.size() != 7) throw DataError("expected 7 golden samples");
    if (g.f1_factors.size() != 3) throw DataError("expected 3 golden f(1,y) factors");
    return g;
}

}  // namespace cuboid
