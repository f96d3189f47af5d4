#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "grim/graph.hpp"

namespace grim {

inline constexpr std::size_t kDefaultCanonicalCap = 16;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : std::runtime_error(what + ": size " + std::to_string(size) +
                           " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

// Exact isomorphism-class fingerprint: the graph6 text of the canonically
// relabeled graph, followed by "|c0,c1,..." when vertex colors were given.
struct CanonicalKey {
  std::string bytes;

  auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const {
    return std::hash<std::string>{}(k.bytes);
  }
};

struct CanonicalLabeling {
  CanonicalKey key;
  // order[p] is the position in g.vertices() of the vertex placed at
  // canonical position p.
  std::vector<std::size_t> order;
};

// Colors (one per entry of g.vertices()) seed the refinement and are part of
// the key; isomorphisms must preserve them. Empty span means uncolored.
CanonicalLabeling canonical_labeling(const Graph& g,
                                     std::span<const std::uint32_t> colors = {},
                                     std::size_t cap = kDefaultCanonicalCap);

CanonicalKey canonical_form(const Graph& g,
                            std::size_t cap = kDefaultCanonicalCap);

CanonicalKey canonical_form(const Graph& g,
                            std::span<const std::uint32_t> colors,
                            std::size_t cap = kDefaultCanonicalCap);

}  // namespace grim
