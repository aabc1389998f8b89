#pragma once

#include "vdm/rational.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace vdm {

// One opinion profile: bit i is the binary stance on issue i. Profiles are
// capped at 64 issues so a profile is one machine word and the opinion
// distance is an XOR plus a popcount.
using Profile = std::uint64_t;

enum class Dynamics { Deffuant, Axelrod };

struct ModelParams {
    int features = 2;    // F, number of issues, 1..64
    int threshold = 1;   // theta, confidence threshold, 0..F
    Dynamics dynamics = Dynamics::Deffuant;

    void validate() const;
    Profile mask() const {
        return features >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << features) - 1);
    }
};

inline int hamming(Profile u, Profile v) { return std::popcount(u ^ v); }

enum class Boundary { Ring, Interval };

struct LatticeSpec {
    int sites = 1024;
    Boundary boundary = Boundary::Ring;

    void validate() const;  // needs at least 3 sites
    int edge_count() const { return boundary == Boundary::Ring ? sites : sites - 1; }

    // Neighbor of `site` in direction dir (+1/-1); empty when the arrow
    // points outside an interval.
    std::optional<int> neighbor(int site, int dir) const {
        if (boundary == Boundary::Ring) return (site + dir + sites) % sites;
        int y = site + dir;
        if (y < 0 || y >= sites) return std::nullopt;
        return y;
    }

    // Edge index between `site` and site+dir. Edge e joins sites e and e+1
    // (mod L on a ring). Caller guarantees the neighbor exists.
    int edge_between(int site, int dir) const {
        return dir > 0 ? site : (boundary == Boundary::Ring ? (site - 1 + sites) % sites : site - 1);
    }

    // The edge one step beyond `edge` in direction dir; empty when a particle
    // would leave an interval.
    std::optional<int> outward_edge(int edge, int dir) const {
        if (boundary == Boundary::Ring) {
            int e = edge_count();
            return (edge + dir + e) % e;
        }
        int e2 = edge + dir;
        if (e2 < 0 || e2 >= edge_count()) return std::nullopt;
        return e2;
    }
};

enum class InitKind { Uniform, Biased };

// Initial product measure: Uniform puts mass 2^-F on every profile; Biased
// puts mass 1/2 - (2^(F-1)-1) rho on each of the two extreme profiles
// (all-zeros, all-ones) and rho on everything else, rho in [0, 2^-F).
struct InitSpec {
    InitKind kind = InitKind::Uniform;
    Rational rho{0};

    void validate(int features) const;
};

Profile sample_site(const InitSpec& init, int features, std::mt19937_64& rng);

// Exact single-site probability of drawing profile u.
Rational profile_prob(const InitSpec& init, int features, Profile u);

std::vector<Profile> sample_lattice(const InitSpec& init, int features, int sites,
                                    std::mt19937_64& rng);

// P(zeta_0(e) = j): the initial pile-size law of an edge.
// Uniform measure: C(F, j) 2^-F.
Rational pile_pmf_uniform(int features, int j);

// Biased measure: pair counting over profiles at Hamming distance j; the
// j = 0 mass is the complement so the pmf sums to one exactly.
Rational pile_pmf_biased(int features, const Rational& rho, int j);

}  // namespace vdm
