#include "qsplit/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace qsplit {

void Quiver::add_vertex(const std::string& name) {
  require(!name.empty(), errc::parse_error, "empty vertex name");
  require(!has_vertex(name), errc::duplicate_identifier,
          "vertex '" + name + "' already exists");
  vertices_.push_back(name);
}

void Quiver::add_arrow(const std::string& name, const std::string& source,
                       const std::string& target) {
  require(!name.empty(), errc::parse_error, "empty arrow name");
  require(!has_arrow(name), errc::duplicate_identifier,
          "arrow '" + name + "' already exists");
  require(has_vertex(source), errc::unknown_vertex,
          "arrow '" + name + "' starts at unknown vertex '" + source + "'");
  require(has_vertex(target), errc::unknown_vertex,
          "arrow '" + name + "' ends at unknown vertex '" + target + "'");
  arrows_.push_back({name, source, target});
}

bool Quiver::has_vertex(const std::string& name) const {
  return std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end();
}

bool Quiver::has_arrow(const std::string& name) const {
  return std::any_of(arrows_.begin(), arrows_.end(),
                     [&](const Arrow& a) { return a.name == name; });
}

int Quiver::vertex_index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  require(it != vertices_.end(), errc::unknown_vertex,
          "vertex '" + name + "'");
  return static_cast<int>(it - vertices_.begin());
}

int Quiver::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return static_cast<int>(i);
  fail(errc::unknown_arrow, "arrow '" + name + "'");
}

const Arrow& Quiver::arrow(const std::string& name) const {
  return arrows_[arrow_index(name)];
}

std::vector<std::string> Quiver::arrows_from(const std::string& v) const {
  vertex_index(v);
  std::vector<std::string> out;
  for (const Arrow& a : arrows_)
    if (a.source == v) out.push_back(a.name);
  return out;
}

std::vector<std::string> Quiver::arrows_into(const std::string& v) const {
  vertex_index(v);
  std::vector<std::string> out;
  for (const Arrow& a : arrows_)
    if (a.target == v) out.push_back(a.name);
  return out;
}

std::string Path::str() const {
  if (trivial()) return "e(" + source + ")";
  std::string s;
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += '.';
    s += arrows[i];
  }
  return s;
}

Path trivial_path(const std::string& vertex) { return Path{vertex, {}}; }

void validate_path(const Quiver& q, const Path& p) {
  require(q.has_vertex(p.source), errc::unknown_vertex,
          "path source '" + p.source + "'");
  std::string at = p.source;
  for (const std::string& name : p.arrows) {
    require(q.has_arrow(name), errc::unknown_arrow,
            "path arrow '" + name + "'");
    const Arrow& a = q.arrow(name);
    require(a.source == at, errc::invalid_path,
            "arrow '" + name + "' does not continue the path at vertex '" +
              at + "'");
    at = a.target;
  }
}

std::string path_end(const Quiver& q, const Path& p) {
  if (p.trivial()) return p.source;
  return q.arrow(p.arrows.back()).target;
}

Path compose(const Quiver& q, const Path& p, const Path& r) {
  require(path_end(q, p) == r.source, errc::not_composable,
          "cannot compose " + p.str() + " with " + r.str() + ": ends at '" +
            path_end(q, p) + "', next starts at '" + r.source + "'");
  Path out = p;
  out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
  return out;
}

bool contains_subpath(const Path& p, const Path& g) {
  require(g.length() >= 1, errc::precondition_failed,
          "subpath query needs length >= 1");
  if (g.length() > p.length()) return false;
  for (size_t i = 0; i + g.arrows.size() <= p.arrows.size(); ++i)
    if (std::equal(g.arrows.begin(), g.arrows.end(), p.arrows.begin() + i))
      return true;
  return false;
}

bool is_suffix_of(const std::vector<std::string>& g,
                  const std::vector<std::string>& p) {
  if (g.size() > p.size()) return false;
  return std::equal(g.rbegin(), g.rend(), p.rbegin());
}

std::vector<Quiver> connected_components(const Quiver& q) {
  int n = static_cast<int>(q.vertices().size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arrow& a : q.arrows()) {
    int u = find(q.vertex_index(a.source));
    int v = find(q.vertex_index(a.target));
    if (u != v) parent[std::max(u, v)] = std::min(u, v);
  }
  std::vector<int> roots;
  std::vector<int> comp_of(n);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      comp_of[i] = static_cast<int>(roots.size());
      roots.push_back(r);
    } else {
      comp_of[i] = static_cast<int>(it - roots.begin());
    }
  }
  std::vector<Quiver> out(roots.size());
  for (int i = 0; i < n; ++i) out[comp_of[i]].add_vertex(q.vertices()[i]);
  for (const Arrow& a : q.arrows())
    out[comp_of[q.vertex_index(a.source)]].add_arrow(a.name, a.source,
                                                     a.target);
  return out;
}

std::string ShapeResult::str() const {
  switch (shape) {
    case QuiverShape::linear_a: return "LinearA(" + std::to_string(n) + ")";
    case QuiverShape::cycle_a_tilde:
      return "CycleATilde(" + std::to_string(n) + ")";
    case QuiverShape::other: return "Other";
  }
  return "Other";
}

ShapeResult classify_shape(const Quiver& q) {
  require(connected_components(q).size() == 1, errc::not_connected,
          "shape classification needs a connected quiver");
  int n = static_cast<int>(q.vertices().size());
  int m = static_cast<int>(q.arrows().size());
  for (const std::string& v : q.vertices()) {
    if (q.arrows_from(v).size() > 1 || q.arrows_into(v).size() > 1)
      return {QuiverShape::other, n};
  }
  // All degrees <= 1 and connected: a line (n-1 arrows) or a cycle (n arrows).
  if (m == n - 1) return {QuiverShape::linear_a, n};
  if (m == n) return {QuiverShape::cycle_a_tilde, n};
  return {QuiverShape::other, n};
}

}  // namespace qsplit
