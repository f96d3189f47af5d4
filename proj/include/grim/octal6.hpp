#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace grim {

class Solver;

// Sprague-Grundy values of Octal .6 (equivalently Grim on paths) for heap
// sizes 1..max_n. values[0] is padding and always 0.
struct SGSequence {
  std::vector<std::uint16_t> values;

  std::size_t max_n() const { return values.empty() ? 0 : values.size() - 1; }
  std::uint16_t operator[](std::size_t n) const { return values.at(n); }
  bool operator==(const SGSequence&) const = default;
};

struct Octal6Options {
  // Iterate only splits a <= b (the xor is symmetric). Off iterates every
  // ordered split; both must give identical sequences.
  bool half_splits = true;
  // Called with the current n every `progress_every` values, and at the end.
  std::function<void(std::size_t)> progress;
  std::size_t progress_every = 10000;
};

SGSequence octal6_sequence(std::size_t max_n, const Octal6Options& options = {});

// Continues `seq` in place up to max_n (no-op if already long enough).
void extend_octal6(SGSequence& seq, std::size_t max_n,
                   const Octal6Options& options = {});

// Heap sizes n >= 2 with value 0, ascending. n = 1 is not a playable
// position and is never reported.
std::vector<std::size_t> zeros(const SGSequence& seq);

// File layout: the 8 bytes "OCT6SGV1", then values[1..max_n] as little-endian
// uint16.
inline constexpr char kOctal6Magic[9] = "OCT6SGV1";
void save_sequence(const SGSequence& seq, const std::filesystem::path& path);
SGSequence load_sequence(const std::filesystem::path& path);

struct PathEquivalenceReport {
  std::size_t max_n = 0;
  std::size_t checked = 0;
  struct Mismatch {
    std::size_t n;
    std::uint32_t path_value;
    std::uint32_t octal_value;
  };
  std::vector<Mismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

// Compares the generic solver on path:n with the octal recurrence for every
// 2 <= n <= max_n.
PathEquivalenceReport path_equivalence_check(std::size_t max_n, Solver& solver);
PathEquivalenceReport path_equivalence_check(std::size_t max_n);

}  // namespace grim
