#pragma once

#include <cstdint>

#include "sinrmc/geometry.hpp"
#include "sinrmc/radial_intensity.hpp"
#include "sinrmc/rng.hpp"

namespace sinrmc {

/// Poisson variate: sequential inversion below mean 30, Hormann's PTRS above.
std::uint64_t sample_poisson(Rng& rng, double mean);

/// Appends a homogeneous PPP realization on `window` to `out`.
void append_homogeneous(const Window& window, double intensity, Rng& rng,
                        std::vector<Point2>& out);

PointPattern sample_homogeneous(const Window& window, double intensity, std::uint64_t seed,
                                PointLabel label = PointLabel::kTransmitter);

/// Appends an inhomogeneous PPP with intensity profile(|p - c| / radius_scale)
/// on the disk, by thinning a homogeneous process at profile.sup_value().
void append_radial(const Window& disk, const RadialIntensity& profile, double radius_scale,
                   Rng& rng, std::vector<Point2>& out);

PointPattern sample_radial(const Window& disk, const RadialIntensity& profile,
                           double radius_scale, std::uint64_t seed,
                           PointLabel label = PointLabel::kTransmitter);

}  // namespace sinrmc
