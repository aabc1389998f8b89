#include "vdm/particle_view.hpp"

namespace vdm {

ParticleView derive(std::span<const Profile> opinions, const LatticeSpec& lattice) {
    ParticleView view;
    int edges = lattice.edge_count();
    view.xi.resize(static_cast<std::size_t>(edges));
    view.zeta.resize(static_cast<std::size_t>(edges));
    for (int e = 0; e < edges; ++e) {
        Profile left = opinions[static_cast<std::size_t>(e)];
        Profile right = opinions[static_cast<std::size_t>((e + 1) % lattice.sites)];
        view.xi[static_cast<std::size_t>(e)] = left ^ right;
        view.zeta[static_cast<std::size_t>(e)] =
            static_cast<std::uint8_t>(std::popcount(left ^ right));
    }
    return view;
}

std::vector<EdgeClass> classify(const ParticleView& view, int theta) {
    std::vector<EdgeClass> out(view.zeta.size());
    for (std::size_t e = 0; e < view.zeta.size(); ++e)
        out[e] = classify_edge(view.zeta[e], theta);
    return out;
}

int level_parity(const ParticleView& view, int level) {
    std::uint64_t acc = 0;
    for (std::uint64_t bits : view.xi) acc ^= bits;
    return static_cast<int>((acc >> level) & 1u);
}

std::int64_t total_particles(const ParticleView& view) {
    std::int64_t n = 0;
    for (auto z : view.zeta) n += z;
    return n;
}

Densities densities(const ParticleView& view, int theta) {
    Densities d;
    if (view.zeta.empty()) return d;
    std::int64_t active = 0, frozen = 0, blockades = 0;
    for (auto z : view.zeta) {
        if (z == 0) continue;
        if (z <= theta) {
            active += z;
        } else {
            frozen += z;
            ++blockades;
        }
    }
    double edges = static_cast<double>(view.zeta.size());
    d.active_per_edge = static_cast<double>(active) / edges;
    d.frozen_per_edge = static_cast<double>(frozen) / edges;
    d.blockade_fraction = static_cast<double>(blockades) / edges;
    return d;
}

}  // namespace vdm
