#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hyperlat/quotient.hpp"
#include "hyperlat/salem.hpp"
#include "hyperlat/weyl.hpp"

namespace hyperlat {

struct Caps {
    long order = kDefaultOrderCap;
    long walk = kDefaultWalkCap;
};

// Interior data carried along a transfer when an interior (ample) vector is
// supplied: its image in the sublattice basis, the wall bounds used by the
// chamber checks, and the verdicts themselves.
struct ChamberSection {
    IntVec ample;              // ambient coordinates
    Int scaling;               // minimal s with s * basis^-1 * ample integral
    IntVec ample_sub;          // scaled image in sublattice coordinates
    IntVec base_sub;           // walk base point (defaults to ample_sub)
    std::vector<IntVec> word;  // reflections applied to the base, in order
    IntVec walked_base;        // image of the base under the word
    Int ambient_wall_bound;    // 2(s^2 - pq) for (ample, f ample)
    Int sub_wall_bound;        // 2(s^2 - pq) for (ample_sub, h ample_sub)
    bool ambient_fixed = false;
    bool sub_fixed = false;
};

struct TransferCertificate {
    std::string schema;
    std::string tool_version;
    Lattice lattice;
    IntMatrix basis;
    Int index;
    IntMatrix f;
    FactorReport f_report;
    long m = 0;
    IntMatrix h;       // f^m
    IntMatrix h_sub;   // basis^-1 * h * basis
    FactorReport h_report;
    std::optional<ChamberSection> chamber;
    std::string content_hash;  // sha256 of the canonical JSON minus this field
};

struct AlignResult {
    Int scaling;
    LatticeVector ample_sub;
    WeylWord word;
    LatticeVector walked_base;
};

// Push an interior vector of the ambient lattice into the sublattice: scale
// by the least s making the coordinates integral, then walk a base point
// (default: the scaled vector itself) into its chamber.
AlignResult align_interior(const Embedding& e, const LatticeVector& ample,
                           const std::optional<LatticeVector>& base = std::nullopt,
                           long walk_cap = kDefaultWalkCap);

// The full pipeline: Salem degree of f, minimal stabilizing power m, the
// restriction h of f^m to the sublattice, degree equality, and (with an
// interior vector) chamber fixedness on both sides. require_chamber turns a
// failed chamber verdict into an error; otherwise it is recorded and the
// transfer continues.
TransferCertificate transfer_salem(const Lattice& l, const Isometry& f, const Embedding& e,
                                   const std::optional<LatticeVector>& ample,
                                   const Caps& caps = {}, bool require_chamber = true);

nlohmann::json certificate_to_json(const TransferCertificate& c);
TransferCertificate certificate_from_json(const nlohmann::json& j);

// Sorted-key, compact, integer-exact serialization; hashing and the on-disk
// format both use it, so equal content gives equal bytes.
std::string canonical_dump(const nlohmann::json& j);
std::string sha256_hex(const std::string& data);
std::string certificate_hash(nlohmann::json cert);  // ignores any "content_hash"

// Atomic write (temp file + rename) of the canonical form.
void write_certificate_file(const nlohmann::json& cert, const std::string& path);

// Recompute every claim in the certificate and compare. Structural problems
// throw MalformedCertificate; any mismatch returns false with a reason.
bool verify_certificate(const nlohmann::json& j, std::string* why = nullptr,
                        const Caps& caps = {});

}  // namespace hyperlat
