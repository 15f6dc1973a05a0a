#include "qbos/density.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qbos {

namespace {
constexpr double kPi = std::numbers::pi;

// Scan resolution and headroom for the auto-computed theta envelope of
// ThetaMarginal rejection sampling.
constexpr int kEnvelopeScanPoints = 8192;
constexpr double kEnvelopeMargin = 1.25;
}  // namespace

StrategyDensity StrategyDensity::point_mass(const StrategyAngles& angles) {
  StrategyDensity d;
  d.family_ = DensityFamily::PointMass;
  d.point_ = angles;
  return d;
}

StrategyDensity StrategyDensity::haar_uniform() {
  StrategyDensity d;
  d.family_ = DensityFamily::HaarUniform;
  return d;
}

StrategyDensity StrategyDensity::euler_uniform() {
  StrategyDensity d;
  d.family_ = DensityFamily::EulerUniform;
  return d;
}

StrategyDensity StrategyDensity::theta_marginal(std::function<double(double)> h) {
  if (!h) {
    throw std::invalid_argument("theta_marginal: density callback required");
  }
  StrategyDensity d;
  d.family_ = DensityFamily::ThetaMarginal;
  d.theta_density_ = std::move(h);
  return d;
}

StrategyDensity StrategyDensity::custom(
    std::function<double(const StrategyAngles&)> f, double envelope) {
  if (!f) {
    throw std::invalid_argument("custom density: density callback required");
  }
  if (!(std::isfinite(envelope) && envelope > 0.0)) {
    std::ostringstream msg;
    msg << "custom density: envelope must be a finite positive bound on "
        << "f * |sin theta|, got " << envelope;
    throw std::invalid_argument(msg.str());
  }
  StrategyDensity d;
  d.family_ = DensityFamily::Custom;
  d.custom_density_ = std::move(f);
  d.envelope_ = envelope;
  return d;
}

const StrategyAngles& StrategyDensity::point() const {
  if (family_ != DensityFamily::PointMass) {
    throw std::logic_error("point() is only defined for point-mass densities");
  }
  return point_;
}

double StrategyDensity::haar_relative(const StrategyAngles& a) const {
  switch (family_) {
    case DensityFamily::HaarUniform:
      return 1.0;
    case DensityFamily::EulerUniform:
      return 2.0 / (kPi * std::abs(std::sin(a.theta)));
    case DensityFamily::ThetaMarginal:
      return theta_density_(a.theta);
    case DensityFamily::Custom:
      return custom_density_(a);
    case DensityFamily::PointMass:
      break;
  }
  throw std::logic_error(
      "haar_relative() is not defined for point-mass densities");
}

std::string StrategyDensity::label() const {
  switch (family_) {
    case DensityFamily::PointMass: {
      std::ostringstream out;
      out << "point:" << point_.theta << "," << point_.phi << "," << point_.psi;
      return out.str();
    }
    case DensityFamily::HaarUniform:
      return "haar-uniform";
    case DensityFamily::EulerUniform:
      return "euler-uniform";
    case DensityFamily::ThetaMarginal:
      return "theta-marginal";
    case DensityFamily::Custom:
      return "custom";
  }
  return "unknown";
}

std::vector<StrategyAngles> StrategyDensity::sample(const SampleStream& stream,
                                                    std::size_t count) const {
  std::vector<StrategyAngles> out;
  out.reserve(count);

  switch (family_) {
    case DensityFamily::PointMass: {
      out.assign(count, point_);
      return out;
    }
    case DensityFamily::HaarUniform:
      return haar_sample(stream, count);
    case DensityFamily::EulerUniform: {
      UniformStream u(stream);
      for (std::size_t i = 0; i < count; ++i) {
        const double theta = -kPi + 2.0 * kPi * u.next_unit();
        const double phi = -kPi + 2.0 * kPi * u.next_unit();
        const double psi = -kPi + 2.0 * kPi * u.next_unit();
        out.emplace_back(theta, phi, psi);
      }
      return out;
    }
    case DensityFamily::ThetaMarginal: {
      // Rejection on theta against a uniform proposal; target Lebesgue
      // density q(theta) = h(theta)|sin theta|/4.
      double bound = 0.0;
      for (int i = 0; i < kEnvelopeScanPoints; ++i) {
        const double t = -kPi + (i + 0.5) * (2.0 * kPi / kEnvelopeScanPoints);
        const double q = theta_density_(t) * std::abs(std::sin(t)) * 0.25;
        if (!std::isfinite(q) || q < 0.0) {
          throw std::invalid_argument(
              "theta_marginal: h(theta)|sin theta| must be finite and "
              "non-negative");
        }
        bound = std::max(bound, q);
      }
      if (bound <= 0.0) {
        throw std::invalid_argument("theta_marginal: density is identically 0");
      }
      bound *= kEnvelopeMargin;

      UniformStream u(stream);
      while (out.size() < count) {
        const double t = -kPi + 2.0 * kPi * u.next_unit();
        const double q = theta_density_(t) * std::abs(std::sin(t)) * 0.25;
        if (q > bound) {
          throw std::runtime_error(
              "theta_marginal: scanned envelope exceeded during sampling");
        }
        if (u.next_unit() * bound >= q) {
          continue;
        }
        const double phi = -kPi + 2.0 * kPi * u.next_unit();
        const double psi = -kPi + 2.0 * kPi * u.next_unit();
        out.emplace_back(t, phi, psi);
      }
      return out;
    }
    case DensityFamily::Custom: {
      // Rejection in Lebesgue coordinates: acceptance ratio
      // f(U)|sin theta| / envelope.
      UniformStream u(stream);
      while (out.size() < count) {
        const StrategyAngles candidate(-kPi + 2.0 * kPi * u.next_unit(),
                                       -kPi + 2.0 * kPi * u.next_unit(),
                                       -kPi + 2.0 * kPi * u.next_unit());
        const double mass =
            custom_density_(candidate) * std::abs(std::sin(candidate.theta));
        if (!std::isfinite(mass) || mass < 0.0) {
          throw std::runtime_error(
              "custom density: non-finite or negative value during sampling");
        }
        if (mass > envelope_) {
          throw std::runtime_error(
              "custom density: envelope exceeded during sampling");
        }
        if (u.next_unit() * envelope_ < mass) {
          out.push_back(candidate);
        }
      }
      return out;
    }
  }
  throw std::logic_error("unreachable density family");
}

std::vector<StrategyAngles> density_sample(const StrategyDensity& d,
                                           const SampleStream& stream,
                                           std::size_t count) {
  return d.sample(stream, count);
}

std::vector<WeightedAngles> quadrature_nodes(const StrategyDensity& d,
                                             int resolution) {
  if (d.is_point_mass()) {
    return {WeightedAngles{d.point(), 1.0}};
  }
  if (resolution < 8) {
    throw std::invalid_argument(
        "quadrature_nodes: resolution must be at least 8 per axis");
  }

  const auto cells = theta_cells(resolution);
  const double h = 2.0 * kPi / resolution;
  const double axis_weight = 1.0 / resolution;

  std::vector<WeightedAngles> nodes;
  if (d.phi_free()) {
    nodes.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int i = 0; i < resolution; ++i) {
      const double theta = cells.midpoints[i];
      double theta_weight = 0.0;
      switch (d.family()) {
        case DensityFamily::HaarUniform:
          theta_weight = cells.masses[i];
          break;
        case DensityFamily::EulerUniform:
          // f * dU reduces to the uniform Lebesgue cell mass h / (2 pi).
          theta_weight = axis_weight;
          break;
        case DensityFamily::ThetaMarginal:
          theta_weight = d.haar_relative(StrategyAngles(theta, 0.0, 0.0)) *
                         cells.masses[i];
          break;
        default:
          throw std::logic_error("unexpected phi-free family");
      }
      for (int k = 0; k < resolution; ++k) {
        const double psi = -kPi + (k + 0.5) * h;
        nodes.push_back(
            WeightedAngles{StrategyAngles(theta, 0.0, psi),
                           theta_weight * axis_weight});
      }
    }
    return nodes;
  }

  nodes.reserve(static_cast<std::size_t>(resolution) * resolution * resolution);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      for (int k = 0; k < resolution; ++k) {
        const StrategyAngles a(cells.midpoints[i], -kPi + (j + 0.5) * h,
                               -kPi + (k + 0.5) * h);
        const double w =
            d.haar_relative(a) * cells.masses[i] * axis_weight * axis_weight;
        nodes.push_back(WeightedAngles{a, w});
      }
    }
  }
  return nodes;
}

}  // namespace qbos
