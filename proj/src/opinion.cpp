#include "vdm/opinion.hpp"

#include "vdm/rng.hpp"

#include <stdexcept>
#include <string>

namespace vdm {

void ModelParams::validate() const {
    if (features < 1 || features > 64)
        throw std::invalid_argument("features must be in [1, 64], got " + std::to_string(features));
    if (threshold < 0 || threshold > features)
        throw std::invalid_argument("threshold must be in [0, F], got " + std::to_string(threshold));
}

void LatticeSpec::validate() const {
    if (sites < 3) throw std::invalid_argument("lattice needs at least 3 sites");
}

void InitSpec::validate(int features) const {
    if (kind == InitKind::Biased) {
        if (rho < 0 || rho >= pow2(-features))
            throw std::invalid_argument("biased init requires rho in [0, 2^-F)");
    }
}

namespace {

// Mass on each of the two designated extreme profiles.
Rational extreme_mass(int features, const Rational& rho) {
    return Rational(1, 2) - (pow2(features - 1) - 1) * rho;
}

}  // namespace

Profile sample_site(const InitSpec& init, int features, std::mt19937_64& rng) {
    ModelParams check{features, 0};
    check.validate();
    init.validate(features);
    Profile mask = check.mask();
    if (init.kind == InitKind::Uniform) return rng() & mask;

    double p_extreme = to_double(extreme_mass(features, init.rho));
    double u = uniform01(rng);
    if (u < p_extreme) return 0;
    if (u < 2 * p_extreme) return mask;
    // Remaining mass is uniform over the 2^F - 2 interior profiles, which are
    // exactly the values 1 .. 2^F - 2.
    std::uint64_t interior = mask - 1;
    if (interior == 0) return 0;  // F = 1 has no interior profiles
    return 1 + uniform_below(rng, interior);
}

Rational profile_prob(const InitSpec& init, int features, Profile u) {
    init.validate(features);
    if (init.kind == InitKind::Uniform) return pow2(-features);
    ModelParams check{features, 0};
    if (u == 0 || u == check.mask()) return extreme_mass(features, init.rho);
    return init.rho;
}

std::vector<Profile> sample_lattice(const InitSpec& init, int features, int sites,
                                    std::mt19937_64& rng) {
    std::vector<Profile> profiles(static_cast<std::size_t>(sites));
    for (auto& p : profiles) p = sample_site(init, features, rng);
    return profiles;
}

Rational pile_pmf_uniform(int features, int j) {
    ModelParams check{features, 0};
    check.validate();
    if (j < 0 || j > features) throw std::out_of_range("pile size out of [0, F]");
    return Rational(binomial(features, j)) * pow2(-features);
}

Rational pile_pmf_biased(int features, const Rational& rho, int j) {
    ModelParams check{features, 0};
    check.validate();
    if (j < 0 || j > features) throw std::out_of_range("pile size out of [0, F]");
    InitSpec spec{InitKind::Biased, rho};
    spec.validate(features);

    Rational a = extreme_mass(features, rho);
    auto mass_at = [&](int k) -> Rational {
        if (k == features) {
            // Of the pairs at full distance, exactly two are the ordered
            // extreme pairs; the rest carry rho^2 each.
            return 2 * a * a + (pow2(features) - 2) * rho * rho;
        }
        // 0 < k < F: 4 C(F,k) ordered pairs include one extreme profile.
        Rational c(binomial(features, k));
        return 4 * c * a * rho + (pow2(features) - 4) * c * rho * rho;
    };

    if (j > 0) return mass_at(j);
    Rational rest = 0;
    for (int k = 1; k <= features; ++k) rest += mass_at(k);
    return 1 - rest;
}

}  // namespace vdm
