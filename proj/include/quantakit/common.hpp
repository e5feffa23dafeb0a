#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quantakit {

using Name = std::string;

/// Resource caps for enumerations and derived constructions.
/// The presheaf guard may be overridden by CLI flag or QUANTAKIT_MAX_PRESHEAVES;
/// the flag wins over the environment.
struct Guards {
  long long max_presheaves = 65536;   // raw presheaf count estimate, per type
  int max_derived_objects = 64;       // object cap for derived quantaloids
  long long max_derived_hom = 4096;   // hom cap for derived quantaloids
  long long max_search = 65536;       // family search / uniqueness enumeration cap
  long long sample_threshold = 4096;  // enumerations above this are sampled
  int sample_size = 256;
};

/// Deterministic splitmix64 stream. All sampling goes through this so that
/// reports are byte-identical across platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // modulo bias is irrelevant at fixture scale
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  uint64_t state_;
};

}  // namespace quantakit
