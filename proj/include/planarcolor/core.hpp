#ifndef PLANARCOLOR_CORE_HPP
#define PLANARCOLOR_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace planarcolor {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

enum class Errc {
  invalid_vertex,
  asymmetric_adjacency,
  euler_violation,
  disconnected,
  too_few_vertices,
  partial_coloring,
  precondition_violated,
  lemma2_violation,
  path_too_short,
  too_many_shortest_paths,
  region_too_large,
  not_a_tree,
  p_not_contained,
  separating_cycle_for_p,
  improper_precoloring,
  branch_too_short,
  nice_union_violation,
  ambiguous_region,
  forbidden_configuration,
  bad_parameters,
  internal_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_vertex: return "InvalidVertex";
    case Errc::asymmetric_adjacency: return "AsymmetricAdjacency";
    case Errc::euler_violation: return "EulerViolation";
    case Errc::disconnected: return "Disconnected";
    case Errc::too_few_vertices: return "TooFewVertices";
    case Errc::partial_coloring: return "PartialColoring";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::lemma2_violation: return "Lemma2Violation";
    case Errc::path_too_short: return "PathTooShort";
    case Errc::too_many_shortest_paths: return "TooManyShortestPaths";
    case Errc::region_too_large: return "RegionTooLarge";
    case Errc::not_a_tree: return "NotATree";
    case Errc::p_not_contained: return "PNotContained";
    case Errc::separating_cycle_for_p: return "SeparatingCycleForP";
    case Errc::improper_precoloring: return "ImproperPrecoloring";
    case Errc::branch_too_short: return "BranchTooShort";
    case Errc::nice_union_violation: return "NiceUnionViolation";
    case Errc::ambiguous_region: return "AmbiguousRegion";
    case Errc::forbidden_configuration: return "ForbiddenConfiguration";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

/// Reducible configurations D (K4 minus an edge) and W (6-wheel).
enum class ConfigKind { D, W };

/// Raised when a pipeline stumbles on a reducible configuration whose absence
/// was a precondition.  Carries the witness so the caller can reduce and retry.
class FoundConfiguration : public Error {
 public:
  FoundConfiguration(ConfigKind kind, VertexSet witness, const std::string& msg)
      : Error(Errc::forbidden_configuration, msg), kind_(kind), witness_(std::move(witness)) {}
  ConfigKind kind() const { return kind_; }
  const VertexSet& witness() const { return witness_; }

 private:
  ConfigKind kind_;
  VertexSet witness_;
};

// ---- sorted-vector set helpers ------------------------------------------

inline VertexSet make_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool set_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep = " ") {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

/// splitmix64; identical sequences on every platform.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint32_t below(uint32_t n) { return n == 0 ? 0 : static_cast<uint32_t>(next() % n); }
  bool coin() { return (next() & 1) != 0; }
};

}  // namespace planarcolor

#endif  // PLANARCOLOR_CORE_HPP
