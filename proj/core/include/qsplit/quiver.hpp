#pragma once

#include <string>
#include <vector>

#include "qsplit/error.hpp"

namespace qsplit {

struct Arrow {
  std::string name;
  std::string source;
  std::string target;

  bool operator==(const Arrow& o) const = default;
};

// Finite quiver: named vertices and arrows, parallel arrows and loops allowed.
// Iteration order is insertion order everywhere, which makes every algorithm
// downstream deterministic. Immutable by convention once handed to a
// Presentation.
class Quiver {
 public:
  void add_vertex(const std::string& name);
  void add_arrow(const std::string& name, const std::string& source,
                 const std::string& target);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool has_vertex(const std::string& name) const;
  bool has_arrow(const std::string& name) const;
  int vertex_index(const std::string& name) const;  // throws UnknownVertex
  int arrow_index(const std::string& name) const;   // throws UnknownArrow
  const Arrow& arrow(const std::string& name) const;

  // S(v): arrows starting at v; E(v): arrows ending at v. A loop at v is in both.
  std::vector<std::string> arrows_from(const std::string& v) const;
  std::vector<std::string> arrows_into(const std::string& v) const;

  bool operator==(const Quiver& o) const {
    return vertices_ == o.vertices_ && arrows_ == o.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// A path is its source vertex plus an arrow-name sequence; the empty sequence
// is the trivial path e_v. Composition reads left-to-right: in "a.b" the
// arrow a is traversed first.
struct Path {
  std::string source;
  std::vector<std::string> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }

  bool operator==(const Path& o) const = default;
  bool operator<(const Path& o) const {
    if (source != o.source) return source < o.source;
    return arrows < o.arrows;
  }

  std::string str() const;  // "e(v)" or "a.b.c"
};

Path trivial_path(const std::string& vertex);

// Throws InvalidPath if the arrow chain does not compose in q.
void validate_path(const Quiver& q, const Path& p);
std::string path_end(const Quiver& q, const Path& p);

Path compose(const Quiver& q, const Path& p, const Path& r);

// True iff g's arrow sequence occurs contiguously inside p's. g must have
// length >= 1.
bool contains_subpath(const Path& p, const Path& g);
bool is_suffix_of(const std::vector<std::string>& g,
                  const std::vector<std::string>& p);

// Partition by the underlying undirected graph; components ordered by their
// smallest vertex, each keeping the original insertion orders.
std::vector<Quiver> connected_components(const Quiver& q);

enum class QuiverShape { linear_a, cycle_a_tilde, other };

struct ShapeResult {
  QuiverShape shape;
  int n;  // vertex count; meaningful for the two recognized shapes

  std::string str() const;
};

// Recognizes linearly oriented A_n and cyclically oriented Ã_n quivers.
// Requires q connected (throws NotConnected).
ShapeResult classify_shape(const Quiver& q);

}  // namespace qsplit
