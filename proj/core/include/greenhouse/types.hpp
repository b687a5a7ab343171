#pragma once

#include <array>
#include <cstddef>

namespace greenhouse {

// State vector x:
//   [0] lettuce dry matter          kg m^-2
//   [1] indoor CO2 concentration    kg m^-3
//   [2] indoor air temperature      degC
//   [3] indoor humidity             kg m^-3
using State = std::array<double, 4>;

// Control vector u:
//   [0] CO2 supply rate             mg m^-2 s^-1
//   [1] ventilation rate            mm s^-1
//   [2] heating power               W m^-2
using Control = std::array<double, 3>;

// Measurement vector y:
//   [0] dry matter                  g m^-2
//   [1] indoor CO2                  ppm * 10^3
//   [2] indoor air temperature      degC
//   [3] relative humidity           %
using Measurement = std::array<double, 4>;

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;   // row-major d(out)/d(in)
using Mat43 = std::array<std::array<double, 3>, 4>;  // 4 outputs x 3 inputs

// One exogenous weather sample.
struct WeatherRecord {
  double t_s = 0.0;        // timestamp, seconds
  double rad_W_m2 = 0.0;   // d1: incoming radiation
  double co2_kg_m3 = 0.0;  // d2: outdoor CO2 concentration
  double temp_C = 0.0;     // d3: outdoor temperature
  double hum_kg_m3 = 0.0;  // d4: outdoor humidity

  double d(std::size_t i) const {
    switch (i) {
      case 0: return rad_W_m2;
      case 1: return co2_kg_m3;
      case 2: return temp_C;
      default: return hum_kg_m3;
    }
  }
  double& d(std::size_t i) {
    switch (i) {
      case 0: return rad_W_m2;
      case 1: return co2_kg_m3;
      case 2: return temp_C;
      default: return hum_kg_m3;
    }
  }
};

// Hard box on the actuators (Eq. bounds shared by simulator, MPC and agent).
struct ControlBounds {
  Control lo{0.0, 0.0, 0.0};
  Control hi{1.2, 7.5, 150.0};
};

inline Control clamp_control(const Control& u, const ControlBounds& b) {
  Control out = u;
  for (std::size_t j = 0; j < 3; ++j) {
    if (out[j] < b.lo[j]) out[j] = b.lo[j];
    if (out[j] > b.hi[j]) out[j] = b.hi[j];
  }
  return out;
}

// Canopy / exchange flux terms of the continuous-time model.
struct FluxSet {
  double phot_c = 0.0;    // gross canopy photosynthesis, kg m^-2 s^-1
  double vent_c = 0.0;    // CO2 mass exchange through the vents
  double vent_h = 0.0;    // H2O mass exchange through the vents
  double transp_h = 0.0;  // canopy transpiration
  double phi = 0.0;       // denominator of the photosynthesis expression
};

}  // namespace greenhouse
