#include "cotlab/quiver.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace cotlab {

void Quiver::validate() const {
  if (n < 1) throw std::invalid_argument("quiver must have at least one vertex");
  if (int(arrows.size()) != n - 1)
    throw std::invalid_argument("type-A quiver on n vertices needs n-1 arrows");
  std::vector<int> degree(n, 0);
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (auto [s, t] : arrows) {
    if (s < 0 || s >= n || t < 0 || t >= n || s == t)
      throw std::invalid_argument("arrow endpoints out of range");
    if (seen[s][t] || seen[t][s]) throw std::invalid_argument("multiple edge");
    seen[s][t] = true;
    ++degree[s];
    ++degree[t];
  }
  for (int v = 0; v < n; ++v)
    if (degree[v] > 2) throw std::invalid_argument("vertex of degree > 2");
  // Connectivity: n-1 edges, no multi-edges and degrees <= 2 force a path
  // once the edge set is connected.
  std::vector<bool> reach(n, false);
  std::vector<int> stack{0};
  reach[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [s, t] : arrows) {
      int w = -1;
      if (s == v) w = t;
      if (t == v) w = s;
      if (w >= 0 && !reach[w]) {
        reach[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (!reach[v]) throw std::invalid_argument("underlying graph not connected");
}

Quiver linear_quiver(int n) {
  Quiver q;
  q.n = n;
  for (int i = 0; i + 1 < n; ++i) q.arrows.emplace_back(i, i + 1);
  q.validate();
  return q;
}

Quiver quiver_from_orientation(int n, const std::string& orientation) {
  if (orientation == "linear") return linear_quiver(n);
  if (int(orientation.size()) != n - 1)
    throw std::invalid_argument("orientation string must have n-1 characters");
  Quiver q;
  q.n = n;
  for (int i = 0; i + 1 < n; ++i) {
    char c = orientation[i];
    if (c == '1' || c == '>')
      q.arrows.emplace_back(i, i + 1);
    else if (c == '0' || c == '<')
      q.arrows.emplace_back(i + 1, i);
    else
      throw std::invalid_argument("orientation characters must be 0/1 or </>");
  }
  q.validate();
  return q;
}

Quiver quiver_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (j.contains("type")) {
    if (j.at("type").get<std::string>() != "A")
      throw std::invalid_argument("only type A is supported");
    int n = j.at("n").get<int>();
    std::string orientation = j.value("orientation", std::string("linear"));
    return quiver_from_orientation(n, orientation);
  }
  Quiver q;
  q.n = j.at("vertex_count").get<int>();
  for (const auto& a : j.at("arrows"))
    q.arrows.emplace_back(a.at(0).get<int>() - 1, a.at(1).get<int>() - 1);
  q.validate();
  return q;
}

std::string orientation_string(const Quiver& q) {
  std::string s;
  for (auto [src, tgt] : q.arrows) s += (src < tgt) ? '1' : '0';
  return s;
}

}  // namespace cotlab
