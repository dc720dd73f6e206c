#ifndef COTLAB_QUIVER_HPP
#define COTLAB_QUIVER_HPP

#include <string>
#include <utility>
#include <vector>

namespace cotlab {

// A quiver whose underlying graph is a type-A path. Vertices are 0..n-1;
// arrows are ordered (source, target) pairs, one per edge of the path.
struct Quiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;

  // Throws std::invalid_argument unless the underlying graph is a connected
  // path with every vertex of degree <= 2 and no multiple edges.
  void validate() const;
};

// Path 0 -> 1 -> ... -> n-1.
Quiver linear_quiver(int n);

// Orientation string: "linear", or one char per edge {i, i+1}; '1'/'>' points
// i -> i+1, '0'/'<' points i+1 -> i.
Quiver quiver_from_orientation(int n, const std::string& orientation);

// Reads {"type":"A","n":...,"orientation":...} or {"vertex_count":...,
// "arrows":[[s,t],...]} (1-based vertices). Throws on malformed input.
Quiver quiver_from_json(const std::string& json_text);

std::string orientation_string(const Quiver& q);

}  // namespace cotlab

#endif
