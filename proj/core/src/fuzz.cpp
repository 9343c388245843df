#include "qsplit/fuzz.hpp"

#include <algorithm>

namespace qsplit {

uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t n) { return next() % n; }

namespace {

std::string arrow_name(int i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i = i / 26 - 1;
  } while (i >= 0);
  return s;
}

}  // namespace

Presentation fuzz_presentation(uint64_t seed, const FuzzLimits& limits) {
  SplitMix64 rng(seed * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull);
  int nv = 1 + static_cast<int>(rng.below(std::max(limits.max_vertices, 1)));
  int na = static_cast<int>(rng.below(std::max(limits.max_arrows, 1) + 1));

  Quiver q;
  for (int i = 0; i < nv; ++i) q.add_vertex(std::to_string(i + 1));
  for (int i = 0; i < na; ++i) {
    std::string src = std::to_string(1 + rng.below(nv));
    std::string tgt = std::to_string(1 + rng.below(nv));
    q.add_arrow(arrow_name(i), src, tgt);
  }

  // Choose a partial successor map on arrows: injective, defined on
  // composable pairs only. This enforces the one-continuation /
  // one-predecessor condition by construction.
  int m = static_cast<int>(q.arrows().size());
  std::vector<int> succ(m, -1);
  std::vector<bool> claimed(m, false);
  for (int i = 0; i < m; ++i) {
    std::vector<int> candidates;
    for (int j = 0; j < m; ++j)
      if (!claimed[j] && q.arrows()[i].target == q.arrows()[j].source)
        candidates.push_back(j);
    if (candidates.empty()) continue;
    // Roughly one arrow in four keeps no continuation.
    if (rng.below(4) == 0) continue;
    int pick = candidates[rng.below(candidates.size())];
    succ[i] = pick;
    claimed[pick] = true;
  }

  std::vector<Relation> rels;
  auto add_monomial = [&](const std::vector<int>& arrows) {
    Path p{q.arrows()[arrows.front()].source, {}};
    for (int a : arrows) p.arrows.push_back(q.arrows()[a].name);
    rels.push_back({{{Scalar(1), p}}});
  };

  // Every composable pair off the successor map becomes a length-2 relation.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (q.arrows()[i].target == q.arrows()[j].source && succ[i] != j)
        add_monomial({i, j});

  // Cut every cycle of the successor map: one rotation relation per start
  // keeps the algebra finite dimensional while all chosen pairs stay nonzero.
  std::vector<bool> on_cycle(m, false);
  for (int i = 0; i < m; ++i) {
    if (on_cycle[i]) continue;
    std::vector<int> walk;
    std::vector<int> where(m, -1);
    int cur = i;
    while (cur >= 0 && where[cur] < 0) {
      where[cur] = static_cast<int>(walk.size());
      walk.push_back(cur);
      cur = succ[cur];
    }
    if (cur < 0 || on_cycle[cur]) continue;
    std::vector<int> cycle(walk.begin() + where[cur], walk.end());
    for (int a : cycle) on_cycle[a] = true;
    for (size_t s = 0; s < cycle.size(); ++s) {
      std::vector<int> rot;
      for (size_t k = 0; k <= cycle.size(); ++k)
        rot.push_back(cycle[(s + k) % cycle.size()]);
      add_monomial(rot);
    }
  }

  // A few extra relations along surviving chains for variety.
  int extras = static_cast<int>(rng.below(3));
  for (int e = 0; e < extras && m > 0; ++e) {
    int start = static_cast<int>(rng.below(m));
    int len = 2 + static_cast<int>(rng.below(3));
    std::vector<int> chain = {start};
    while (static_cast<int>(chain.size()) < len && succ[chain.back()] >= 0)
      chain.push_back(succ[chain.back()]);
    if (static_cast<int>(chain.size()) >= 2) add_monomial(chain);
  }

  Presentation out(std::move(q), std::move(rels),
                   "fuzz_" + std::to_string(seed));
  require(out.is_monomial() && out.is_special_multiserial(),
          errc::internal_invariant_violation,
          "fuzz generator produced a bad presentation");
  return out;
}

}  // namespace qsplit
