#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grim/graph.hpp"
#include "grim/octal6.hpp"
#include "grim/solver.hpp"

namespace grim {

enum class Predicted { N, P, Unknown };

const char* to_string(Predicted p);

// Closed-form outcome claim. `rule` names the result applied; `witness` is a
// strategy hint and is empty for Unknown.
struct Prediction {
  Predicted outcome = Predicted::Unknown;
  std::string rule;
  std::string witness;
};

// Decision table for complete multipartite graphs; the first matching rule
// wins. Throws std::invalid_argument on an empty list or a zero part.
Prediction classify_multipartite(std::vector<std::size_t> parts);

// Paths, cycles and wheels by their closed forms; complete, star and kpartite
// through classify_multipartite. Even paths are P if in the known zero list,
// otherwise decided by `sequence` when it covers them, otherwise Unknown.
Prediction classify_family(std::string_view spec,
                           const SGSequence* sequence = nullptr);

// Heap sizes n <= 10^7 at which path:n is a P position.
std::span<const std::size_t> known_path_zeros();

// An involution on the vertices of one graph. image[i] is the image of
// domain[i]; domain is sorted.
struct Involution {
  std::vector<VertexId> domain;
  std::vector<VertexId> image;

  VertexId operator()(VertexId v) const;
  std::size_t fixed_points() const;
};

struct NearInvolution {
  Involution sigma;
  VertexId fixed_vertex;
};

inline constexpr std::size_t kDefaultAutomorphismCap = 12;

// An automorphism of order 2 with no fixed point and no edge v-sigma(v).
std::optional<Involution> find_pairing_involution(
    const Graph& g, std::size_t cap = kDefaultAutomorphismCap);

// An automorphism of order 2 fixing exactly one vertex, with no edge
// v-sigma(v). Deleting the fixed vertex first is a winning move.
std::optional<NearInvolution> find_near_involution(
    const Graph& g, std::size_t cap = kDefaultAutomorphismCap);

// Checks sigma is an involutive automorphism of g with no v-sigma(v) edge and
// exactly `fixed` fixed points.
bool is_qualifying_involution(const Graph& g, const Involution& sigma,
                              std::size_t fixed);

// Componentwise map on cartesian_product(g, h).
Involution product_involution(const Graph& g, const Involution& sg,
                              const Graph& h, const Involution& sh);

struct VerificationReport {
  std::string suite;
  std::size_t size_bound = 0;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return failed == 0 && instances > 0; }
};

struct VerifyOptions {
  std::size_t threads = 1;
};

const std::vector<std::string>& verify_suites();

// Enumerates every instance of `suite` within `size_bound` vertices and
// checks the closed-form claim against the solver. Throws
// std::invalid_argument for an unknown suite.
VerificationReport verify(std::string_view suite, std::size_t size_bound,
                          const VerifyOptions& options = {});

std::string describe_parts(std::span<const std::size_t> parts);

}  // namespace grim
