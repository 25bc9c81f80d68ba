#pragma once

// Text literals for spaces, points, vectors, rays, functions and budgets.
//
//   space     e2 e3 h2 h3 spd2 spd3 h2xr
//   point     Euclidean   comma list                      "1,2"
//             hyperbolic  ambient:x1,..,xn,t | polar:r,theta (n = 2) | spatial x1,..,xn
//             SPD         row-major upper triangle        "2,0.5,1"
//             product     factor literals joined by ';'   "polar:1,0;0.5"
//   vector    ambient coordinates, or coefficients in tangent_basis(base)
//   ray       POINT:VECTOR
//   function  radial:quadratic:A | radial:power:Q | radial:linear:C | radial:expm1 |
//             busemann:RAY | halfdistsq | logdet | gram:Z:X
//   budget    key=value,... over the SearchBudget fields

#include "hadamard/functions.hpp"
#include "hadamard/search.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hadamard::cli {

/// Malformed input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SpaceDescriptor parse_space(const std::string& name, double k = 1.0);

std::vector<double> parse_numbers(const std::string& text, char sep = ',');
Point parse_point(const SpaceDescriptor& space, const std::string& text);
Tangent parse_vector(const Point& base, const std::string& text);
Ray parse_ray(const SpaceDescriptor& space, const std::string& text);
/// Radial functions and halfdistsq are centred at p.
FunctionSpec parse_function(const SpaceDescriptor& space, const std::string& text, const Point& p);
SearchBudget parse_budget(const std::string& text, SearchBudget base = {});

/// Ambient coordinates as a comma list with 17 significant digits.
std::string format_coords(const Eigen::VectorXd& v);

}  // namespace hadamard::cli
