#ifndef SLICEBENCH_MATH_RNG_HPP
#define SLICEBENCH_MATH_RNG_HPP

#include <cstdint>
#include <random>

#include "slicebench/types.hpp"

namespace slicebench {

// Seedable random stream with explicit sub-stream addressing.
//
// Derivation (fixed for this library): the mt19937_64 engine is seeded with
//   splitmix64(splitmix64(root_seed) ^ splitmix64(stream_id + 0x9e3779b97f4a7c15))
// so chains indexed by stream_id can run in any order or in parallel and
// still draw identical sequences. Uniforms take the top 53 engine bits;
// normals use the Marsaglia polar transform with one cached spare. Equal
// (root_seed, stream_id) therefore reproduce draws bit-for-bit within a
// build; bit-exactness across standard libraries or platforms is not a goal
// (the polar transform goes through libm).
class RngStream {
 public:
  RngStream(std::uint64_t root_seed, std::uint64_t stream_id);

  std::uint64_t root_seed() const { return root_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform01();
  // Uniform on (0, 1]; safe operand for log().
  double uniform_open01() { return 1.0 - uniform01(); }
  // Uniform on [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Standard normal (Marsaglia polar, spare cached across calls).
  double normal();

 private:
  std::mt19937_64 engine_;
  std::uint64_t root_seed_;
  std::uint64_t stream_id_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// d independent standard-normal entries.
Vector standard_normal_vector(int dim, RngStream& rng);

// Uniform direction on the unit sphere in R^d.
Vector unit_sphere_vector(int dim, RngStream& rng);

// SplitMix64 step; the seed/stream mixing function documented above.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace slicebench

#endif
