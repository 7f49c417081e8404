#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sblom/blom_classic.hpp"
#include "sblom/policy.hpp"
#include "sblom/simplex.hpp"

namespace sblom {

// Everything the KDC persists: public parameters, the two master secrets,
// the public directory of points, provisioning tokens, the channel policy
// and the admin token. Stored as one JSON document; the file is written
// owner-only because it holds the master secrets.
//
// An uninitialized state (no params/masters yet) is representable so a
// server can answer ServerNotInitialized instead of crashing.
struct KdcState {
    std::optional<FieldParams> params;
    std::optional<MasterSecret> master;          // simplex h over Z_{p-1}
    std::optional<SymBivarPoly> classic_master;  // baseline f over Z_p
    PointRegistry registry;
    std::map<std::string, std::vector<unsigned char>> tokens;
    PolicyMatrix policy;
    std::vector<unsigned char> admin_token;

    bool initialized() const { return params && master; }

    nlohmann::json to_json() const;
    static KdcState from_json(const nlohmann::json& j);

    void save(const std::string& path) const; // 0600, atomic rename
    static KdcState load(const std::string& path);
};

// Fresh deployment: safe-prime params, simplex master and classic master of
// the same degree, admin token. Everything drawn from `rng`.
KdcState init_state(unsigned bits, std::size_t degree, Rng& rng);

} // namespace sblom
