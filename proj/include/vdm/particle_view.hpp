#pragma once

#include "vdm/opinion.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace vdm {

// Coupled random-walk picture of a configuration: one particle per
// (edge, level) where the endpoint profiles disagree. xi holds the level
// occupation bits per edge, zeta the per-edge pile size (= popcount of xi
// = Hamming distance across the edge).
struct ParticleView {
    std::vector<std::uint64_t> xi;
    std::vector<std::uint8_t> zeta;

    bool operator==(const ParticleView&) const = default;
};

ParticleView derive(std::span<const Profile> opinions, const LatticeSpec& lattice);

enum class EdgeClass : std::uint8_t { Empty, Live, Blockade };

inline EdgeClass classify_edge(int zeta, int theta) {
    if (zeta == 0) return EdgeClass::Empty;
    return zeta <= theta ? EdgeClass::Live : EdgeClass::Blockade;
}

std::vector<EdgeClass> classify(const ParticleView& view, int theta);

// Parity of the particle count at one level; identically 0 on a ring.
int level_parity(const ParticleView& view, int level);

std::int64_t total_particles(const ParticleView& view);

struct Densities {
    double active_per_edge = 0;    // particles on live edges / edges
    double frozen_per_edge = 0;    // particles on blockades / edges
    double blockade_fraction = 0;  // blockades / edges
};

Densities densities(const ParticleView& view, int theta);

}  // namespace vdm
