#include "fusebench/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fusebench/colorspace.hpp"
#include "fusebench/error.hpp"

namespace fusebench {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// std::uniform_real_distribution is implementation-defined; this mapping is
// not, so the scene is identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) {
    return std::min(hi, lo + static_cast<int>(uniform() * (hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

using Rgb = std::array<double, 3>;

// Land-cover spectra: water, forest, crop, soil, urban, sand.
constexpr std::array<Rgb, 6> kCover{{
    {40, 70, 110},
    {50, 105, 55},
    {120, 160, 70},
    {150, 110, 80},
    {140, 135, 130},
    {200, 185, 150},
}};
constexpr Rgb kRoad{175, 172, 168};
constexpr Rgb kTextureWeight{0.6, 1.0, 0.4};
constexpr Rgb kGradientDirection{0.6, -1.0, 0.4};

struct Wave {
  double kx, ky, phase, amplitude;
};

std::vector<Wave> random_waves(Rng& rng, int count, double min_wavelength,
                               double max_wavelength, double falloff) {
  std::vector<Wave> waves;
  waves.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double angle = rng.uniform(0, kTwoPi);
    const double wavelength = rng.uniform(min_wavelength, max_wavelength);
    const double k = kTwoPi / wavelength;
    waves.push_back({k * std::cos(angle), k * std::sin(angle), rng.uniform(0, kTwoPi),
                     std::pow(wavelength, falloff)});
  }
  return waves;
}

Band wave_field(const std::vector<Wave>& waves, int w, int h) {
  Band out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double v = 0.0;
      for (const Wave& wv : waves) v += wv.amplitude * std::sin(wv.kx * x + wv.ky * y + wv.phase);
      out.at(x, y) = v;
    }
  }
  return out;
}

void gaussian_blur(Band& band, double sigma) {
  if (sigma <= 0.0) return;
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps(2 * radius + 1);
  double norm = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    taps[i + radius] = std::exp(-0.5 * i * i / (sigma * sigma));
    norm += taps[i + radius];
  }
  for (double& t : taps) t /= norm;

  const int w = band.width();
  const int h = band.height();
  Band tmp(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double s = 0.0;
      for (int i = -radius; i <= radius; ++i) s += taps[i + radius] * band.clamped(x + i, y);
      tmp.at(x, y) = s;
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double s = 0.0;
      for (int i = -radius; i <= radius; ++i) s += taps[i + radius] * tmp.clamped(x, y + i);
      band.at(x, y) = s;
    }
  }
}

}  // namespace

MultibandImage synthetic_scene(const SceneOptions& options) {
  const int w = options.width;
  const int h = options.height;
  if (w < 1 || h < 1) throw DimensionError("scene dimensions must be positive");
  Rng rng(options.seed);

  struct Site {
    double x, y;
    Rgb color;
  };
  const int site_count = std::max(4, static_cast<int>(w * h / options.field_area));
  std::vector<Site> sites;
  sites.reserve(site_count);
  for (int i = 0; i < site_count; ++i) {
    Site s{rng.uniform(0, w), rng.uniform(0, h), kCover[rng.integer(0, 5)]};
    for (double& c : s.color) c += rng.uniform(-12, 12);
    sites.push_back(s);
  }

  struct Rect {
    int x0, y0, x1, y1;
    Rgb color;
  };
  std::vector<Rect> buildings;
  const int building_count =
      options.building_area > 0 ? static_cast<int>(w * h / options.building_area) : 0;
  for (int i = 0; i < building_count; ++i) {
    const int bw = rng.integer(2, 9);
    const int bh = rng.integer(2, 9);
    const int x0 = rng.integer(0, std::max(0, w - bw));
    const int y0 = rng.integer(0, std::max(0, h - bh));
    const double level = rng.uniform(90, 230);
    buildings.push_back({x0, y0, x0 + bw, y0 + bh,
                         {level + rng.uniform(-10, 10), level + rng.uniform(-10, 10),
                          level + rng.uniform(-10, 10)}});
  }

  struct Road {
    double nx, ny, offset, half_width;
  };
  std::vector<Road> roads;
  const int road_count = std::max(2, (w + h) / 150);
  for (int i = 0; i < road_count; ++i) {
    const double angle = rng.uniform(0, std::numbers::pi);
    const double nx = std::cos(angle);
    const double ny = std::sin(angle);
    roads.push_back({nx, ny, nx * rng.uniform(0, w) + ny * rng.uniform(0, h), rng.uniform(0.8, 2.2)});
  }

  // In-field texture: many short waves, amplitude ~ wavelength (red-ish
  // spectrum), scaled to unit standard deviation.
  Band texture = wave_field(random_waves(rng, 48, 3.0, 60.0, 1.0), w, h);
  {
    double ss = 0.0;
    for (double v : texture.samples()) ss += v * v;
    const double scale = 1.0 / std::sqrt(ss / static_cast<double>(texture.size()) + 1e-300);
    for (double& v : texture.samples()) v *= scale;
  }
  // Broad spectral gradient, scaled to peak magnitude 1.
  Band moisture = wave_field(random_waves(rng, 3, 175.0, 350.0, 0.0), w, h);
  {
    double peak = 0.0;
    for (double v : moisture.samples()) peak = std::max(peak, std::abs(v));
    if (peak > 0.0) {
      for (double& v : moisture.samples()) v /= peak;
    }
  }
  Rgb direction = kGradientDirection;
  {
    const double n = std::hypot(direction[0], direction[1], direction[2]);
    for (double& d : direction) d /= n;
  }

  std::vector<Band> bands(3, Band(w, h, 0.0, 255));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Site* nearest = &sites.front();
      double best = 1e300;
      for (const Site& s : sites) {
        const double d = (s.x - x) * (s.x - x) + (s.y - y) * (s.y - y);
        if (d < best) {
          best = d;
          nearest = &s;
        }
      }
      Rgb px = nearest->color;
      const double shade = 0.85 + 0.3 * (static_cast<double>(x) / w) * (static_cast<double>(y) / h);
      for (int c = 0; c < 3; ++c) {
        px[c] = px[c] * shade + options.texture * kTextureWeight[c] * texture.at(x, y);
      }
      for (const Road& r : roads) {
        if (std::abs(r.nx * x + r.ny * y - r.offset) <= r.half_width) px = kRoad;
      }
      for (const Rect& b : buildings) {
        if (x >= b.x0 && x < b.x1 && y >= b.y0 && y < b.y1) px = b.color;
      }
      for (int c = 0; c < 3; ++c) bands[c].at(x, y) = px[c];
    }
  }

  for (int c = 0; c < 3; ++c) {
    gaussian_blur(bands[c], options.blur_sigma);
    auto s = bands[c].samples();
    auto m = moisture.samples();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double v = s[i] + options.gradient * direction[c] * m[i] +
                       rng.uniform(-options.noise, options.noise);
      s[i] = std::clamp(std::round(v), 16.0, 240.0);
    }
  }
  return MultibandImage(std::move(bands));
}

DegradedPair degrade(const MultibandImage& reference, int factor) {
  require_band_count(reference, 3, "degrade");
  if (factor < 1) throw ParameterError("degrade factor must be >= 1");
  if (reference.width() % factor != 0 || reference.height() % factor != 0) {
    throw DimensionError("reference " + std::to_string(reference.width()) + "x" +
                         std::to_string(reference.height()) + " is not divisible by factor " +
                         std::to_string(factor));
  }
  return {intensity_of(reference), downsample_box(reference, factor)};
}

}  // namespace fusebench
