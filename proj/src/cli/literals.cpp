#include "hadamard/cli/literals.hpp"

#include "hadamard/errors.hpp"
#include "hadamard/horoball.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hadamard::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

double parse_double(const std::string& token) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + token + "'");
  }
  while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
  if (used != token.size()) throw UsageError("not a number: '" + token + "'");
  return v;
}

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Point parse_point_unchecked(const SpaceDescriptor& space, const std::string& text) {
  switch (space.kind()) {
    case SpaceKind::Euclidean: {
      const auto v = parse_numbers(text);
      if (static_cast<int>(v.size()) != space.dim()) {
        throw UsageError("expected " + std::to_string(space.dim()) + " coordinates in '" + text + "'");
      }
      return make_point(space, to_vector(v));
    }
    case SpaceKind::Hyperbolic: {
      const int n = space.dim();
      const double k = space.k();
      if (starts_with(text, "ambient:")) {
        const auto v = parse_numbers(text.substr(8));
        if (static_cast<int>(v.size()) != n + 1) throw UsageError("ambient literal needs n+1 entries");
        return make_point(space, to_vector(v));
      }
      if (starts_with(text, "polar:")) {
        if (n != 2) throw UsageError("polar literals are for H2 only");
        const auto v = parse_numbers(text.substr(6));
        if (v.size() != 2 || v[0] < 0) throw UsageError("polar literal is r,theta with r >= 0");
        const Point o = origin(space);
        Eigen::VectorXd dir = Eigen::VectorXd::Zero(3);
        dir << std::cos(v[1]), std::sin(v[1]), 0.0;
        return exp(o, Tangent{o, v[0] * dir});
      }
      const auto v = parse_numbers(text);
      if (static_cast<int>(v.size()) != n) {
        throw UsageError("hyperbolic literal needs n spatial entries, ambient: or polar:");
      }
      Eigen::VectorXd c(n + 1);
      c.head(n) = to_vector(v);
      c(n) = std::sqrt(c.head(n).squaredNorm() + 1.0 / (k * k));
      return make_point(space, c);
    }
    case SpaceKind::SPD: {
      const int n = space.order();
      const auto v = parse_numbers(text);
      if (static_cast<int>(v.size()) != n * (n + 1) / 2) {
        throw UsageError("SPD literal needs the " + std::to_string(n * (n + 1) / 2) +
                         " upper-triangle entries, row-major");
      }
      Eigen::MatrixXd m(n, n);
      std::size_t idx = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = v[idx++];
      }
      return make_spd_point(space, m);
    }
    case SpaceKind::Product: {
      const auto parts = split(text, ';');
      if (parts.size() != 2) throw UsageError("product literal needs two factors separated by ';'");
      return join_points(space, parse_point(space.first(), parts[0]),
                         parse_point(space.second(), parts[1]));
    }
  }
  throw UsageError("unsupported space");
}

}  // namespace

SpaceDescriptor parse_space(const std::string& name, double k) {
  if (!(k > 0)) throw UsageError("--k must be positive");
  if (name == "e2") return SpaceDescriptor::euclidean(2);
  if (name == "e3") return SpaceDescriptor::euclidean(3);
  if (name == "h2") return SpaceDescriptor::hyperbolic(2, k);
  if (name == "h3") return SpaceDescriptor::hyperbolic(3, k);
  if (name == "spd2") return SpaceDescriptor::spd(2);
  if (name == "spd3") return SpaceDescriptor::spd(3);
  if (name == "h2xr") {
    return SpaceDescriptor::product(SpaceDescriptor::hyperbolic(2, k), SpaceDescriptor::euclidean(1));
  }
  throw UsageError("unknown space '" + name + "' (e2, e3, h2, h3, spd2, spd3, h2xr)");
}

std::vector<double> parse_numbers(const std::string& text, char sep) {
  if (text.empty()) throw UsageError("empty number list");
  std::vector<double> out;
  for (const auto& tok : split(text, sep)) out.push_back(parse_double(tok));
  return out;
}

Point parse_point(const SpaceDescriptor& space, const std::string& text) {
  try {
    return parse_point_unchecked(space, text);
  } catch (const InvalidPoint& e) {
    throw UsageError("malformed point '" + text + "': " + e.what());
  }
}

Tangent parse_vector(const Point& base, const std::string& text) {
  const SpaceDescriptor& s = base.space;
  if (s.kind() == SpaceKind::Product && text.find(';') != std::string::npos) {
    const auto parts = split(text, ';');
    if (parts.size() != 2) throw UsageError("product vector needs two factors separated by ';'");
    return join_tangents(base, parse_vector(factor_point(base, 0), parts[0]),
                         parse_vector(factor_point(base, 1), parts[1]));
  }
  const auto v = parse_numbers(text);
  const int n = static_cast<int>(v.size());
  try {
    if (n == s.ambient_size()) return make_tangent(base, to_vector(v));
    if (n == s.dim()) return from_coefficients(base, tangent_basis(base), to_vector(v));
  } catch (const NotTangent& e) {
    throw UsageError("malformed vector '" + text + "': " + e.what());
  }
  throw UsageError("vector '" + text + "' needs " + std::to_string(s.ambient_size()) +
                   " ambient or " + std::to_string(s.dim()) + " basis coefficients");
}

Ray parse_ray(const SpaceDescriptor& space, const std::string& text) {
  std::string last_error = "no ':' separator";
  for (std::size_t pos = text.find(':'); pos != std::string::npos; pos = text.find(':', pos + 1)) {
    try {
      const Point p = parse_point(space, text.substr(0, pos));
      return make_ray(p, parse_vector(p, text.substr(pos + 1)));
    } catch (const std::exception& e) {
      last_error = e.what();
    }
  }
  throw UsageError("malformed ray '" + text + "': " + last_error);
}

FunctionSpec parse_function(const SpaceDescriptor& space, const std::string& text, const Point& p) {
  if (text == "halfdistsq") return FunctionSpec::half_dist_sq(p);
  if (text == "logdet") {
    if (space.kind() != SpaceKind::SPD) throw UsageError("logdet needs an SPD space");
    return FunctionSpec::logdet(space);
  }
  if (text == "radial:expm1") return FunctionSpec::radial(HSpec::expm1(), p);
  try {
    if (starts_with(text, "radial:quadratic:")) {
      return FunctionSpec::radial(HSpec::quadratic(parse_double(text.substr(17))), p);
    }
    if (starts_with(text, "radial:power:")) {
      return FunctionSpec::radial(HSpec::power(parse_double(text.substr(13))), p);
    }
    if (starts_with(text, "radial:linear:")) {
      return FunctionSpec::radial(HSpec::linear(parse_double(text.substr(14))), p);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad profile parameter: ") + e.what());
  }
  if (starts_with(text, "busemann:")) return FunctionSpec::busemann(parse_ray(space, text.substr(9)));
  if (starts_with(text, "gram:")) {
    const std::string rest = text.substr(5);
    for (std::size_t pos = rest.find(':'); pos != std::string::npos; pos = rest.find(':', pos + 1)) {
      try {
        return FunctionSpec::gram(parse_point(space, rest.substr(0, pos)),
                                  parse_point(space, rest.substr(pos + 1)));
      } catch (const UsageError&) {
      }
    }
    throw UsageError("malformed gram spec '" + text + "'");
  }
  throw UsageError("unknown function spec '" + text + "'");
}

SearchBudget parse_budget(const std::string& text, SearchBudget b) {
  if (text.empty()) return b;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("budget entry '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const double v = parse_double(item.substr(eq + 1));
    auto as_int = [&] {
      if (v != std::floor(v)) throw UsageError("budget " + key + " must be an integer");
      return static_cast<int>(v);
    };
    if (key == "t_max") b.t_max = v;
    else if (key == "sphere_samples") b.sphere_samples = as_int();
    else if (key == "t_samples") b.t_samples = as_int();
    else if (key == "refine_iters") b.refine_iters = as_int();
    else if (key == "tol") b.tol = v;
    else if (key == "divergence_slack") b.divergence_slack = v;
    else if (key == "sample_radius") b.sample_radius = v;
    else if (key == "n_samples") b.n_samples = as_int();
    else if (key == "max_doublings") b.max_doublings = as_int();
    else if (key == "seed") b.seed = static_cast<std::uint64_t>(as_int());
    else throw UsageError("unknown budget key '" + key + "'");
  }
  try {
    b.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return b;
}

std::string format_coords(const Eigen::VectorXd& v) {
  std::string out;
  char buf[32];
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", v(i));
    if (i) out += ',';
    out += buf;
  }
  return out;
}

}  // namespace hadamard::cli
