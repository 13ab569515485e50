#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cler/data.h"

namespace cler {

struct Image {
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<double> pixels;  // row-major

  double at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
};

Image image_from(std::span<const double> flat, std::size_t height, std::size_t width);

// Rotation about the image center with bilinear interpolation and zero fill.
// Positive angles (radians) turn the content counter-clockwise as displayed.
// Angle 0 is an exact copy. Requires a square image.
Image rotate_image(const Image& img, double angle);

enum class CorruptionKind {
  kGaussianNoise,
  kShotNoise,
  kImpulseNoise,
  kBoxBlur,
  kMotionBlur,
  kContrast,
  kBrightness,
  kPixelate,
};

inline constexpr std::array<CorruptionKind, 8> kAllCorruptions = {
    CorruptionKind::kGaussianNoise, CorruptionKind::kShotNoise, CorruptionKind::kImpulseNoise,
    CorruptionKind::kBoxBlur,       CorruptionKind::kMotionBlur, CorruptionKind::kContrast,
    CorruptionKind::kBrightness,    CorruptionKind::kPixelate,
};

std::string_view to_string(CorruptionKind kind);
CorruptionKind parse_corruption_kind(std::string_view name);

// Strength parameter behind each (kind, severity 1..5) cell:
//   gaussian_noise  noise sigma             0.04 0.08 0.12 0.16 0.20
//   shot_noise      photon count lambda     60   25   12   5    3
//   impulse_noise   salt-and-pepper rate    0.03 0.06 0.09 0.17 0.27
//   box_blur        kernel radius (px)      1    2    3    4    5
//   motion_blur     horizontal length (px)  3    5    7    9    11
//   contrast        contrast factor         0.4  0.3  0.2  0.1  0.05
//   brightness      additive offset         0.1  0.2  0.3  0.4  0.5
//   pixelate        block size (px)         2    3    4    5    6
double corruption_parameter(CorruptionKind kind, int severity);

// Deterministic given seed; output clipped to [0, 1].
Image corrupt(const Image& img, CorruptionKind kind, int severity, std::uint64_t seed);

// Applies corrupt() to every example; example i uses a seed derived from
// (seed, i). Requires image geometry on the dataset.
Dataset corrupt_dataset(const Dataset& data, CorruptionKind kind, int severity,
                        std::uint64_t seed);

}  // namespace cler
