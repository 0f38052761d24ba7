#include "slicebench/math/rng.hpp"

#include <cmath>

#include "slicebench/errors.hpp"

namespace slicebench {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t root_seed, std::uint64_t stream_id)
    : root_seed_(root_seed), stream_id_(stream_id) {
  const std::uint64_t mixed =
      splitmix64(splitmix64(root_seed) ^ splitmix64(stream_id + 0x9e3779b97f4a7c15ULL));
  engine_.seed(mixed);
}

double RngStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

Vector standard_normal_vector(int dim, RngStream& rng) {
  Vector z(dim);
  for (int i = 0; i < dim; ++i) z[i] = rng.normal();
  return z;
}

Vector unit_sphere_vector(int dim, RngStream& rng) {
  if (dim < 1) throw ContractError("unit_sphere_vector: dim must be positive");
  Vector z = standard_normal_vector(dim, rng);
  double n = z.norm();
  while (n == 0.0) {  // probability zero, but keep the contract airtight
    z = standard_normal_vector(dim, rng);
    n = z.norm();
  }
  return z / n;
}

}  // namespace slicebench
