#include "tri/chain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tri {

std::string_view to_string(SimplexKind k) {
  switch (k) {
    case SimplexKind::FaceUp: return "U";
    case SimplexKind::FaceDown: return "D";
    case SimplexKind::EdgeH: return "Eh";
    case SimplexKind::EdgeV: return "Ev";
    case SimplexKind::EdgeD: return "Ed";
    case SimplexKind::Vertex: return "V";
  }
  return "?";
}

Int Chain::at(const SimplexId& s) const {
  const auto it = cells_.find(s);
  return it == cells_.end() ? 0 : it->second;
}

void Chain::add(const SimplexId& s, Int multiplicity) {
  if (multiplicity == 0) return;
  if (mode_ == Mode::N2 && !s.is_face()) {
    throw std::invalid_argument("N2 chains carry faces only");
  }
  auto [it, inserted] = cells_.try_emplace(s, multiplicity);
  if (!inserted) {
    it->second = checked_add(it->second, multiplicity);
    if (it->second == 0) cells_.erase(it);
  }
}

void Chain::check_mode(const Chain& other) const {
  if (mode_ != other.mode_) throw std::invalid_argument("cannot combine N2 and N20 chains");
}

Chain& Chain::operator+=(const Chain& other) {
  check_mode(other);
  for (const auto& [s, m] : other.cells_) add(s, m);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  check_mode(other);
  for (const auto& [s, m] : other.cells_) add(s, checked_neg(m));
  return *this;
}

Chain operator*(Int k, const Chain& c) {
  Chain out(c.mode_);
  if (k == 0) return out;
  for (const auto& [s, m] : c.cells_) out.cells_.emplace(s, checked_mul(k, m));
  return out;
}

std::vector<std::pair<SimplexId, Int>> Chain::sorted_entries() const {
  std::vector<std::pair<SimplexId, Int>> out(cells_.begin(), cells_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void accumulate(Chain& acc, const PlacedTriangle& p, Int sign) {
  for_each_simplex(p, acc.mode(), [&](const SimplexId& s) { acc.add(s, sign); });
}

Chain face_chain(const PlacedTriangle& p) { return triangle_chain(p, 1, Mode::N2); }

Chain n20_chain(const PlacedTriangle& p, Int sign) { return triangle_chain(p, sign, Mode::N20); }

Chain triangle_chain(const PlacedTriangle& p, Int sign, Mode mode) {
  Chain c(mode);
  accumulate(c, p, sign);
  return c;
}

OrthoPair project_n2(const Chain& c) {
  OrthoPair out;
  for (const auto& [s, m] : c) {
    if (s.kind == SimplexKind::FaceUp) {
      out.s2 = checked_add(out.s2, m);
      out.s1 = checked_add(out.s1, m);
    } else if (s.kind == SimplexKind::FaceDown) {
      out.s2 = checked_add(out.s2, m);
      out.s1 = checked_sub(out.s1, m);
    }
  }
  return out;
}

TriVec3 project_n20(const Chain& c) {
  if (c.mode() != Mode::N20) throw std::invalid_argument("project_n20 needs an N20 chain");
  const OrthoPair faces = project_n2(c);
  Int euler = 0;
  for (const auto& [s, m] : c) euler = s.is_edge() ? checked_sub(euler, m) : checked_add(euler, m);
  return {faces.s2, faces.s1, euler};
}

TriVec3 project(const Chain& c) {
  if (c.mode() == Mode::N20) return project_n20(c);
  const OrthoPair p = project_n2(c);
  return {p.s2, p.s1, 0};
}

Chain geom_check(std::span<const SignedPlacement> terms, const SignedPlacement& target, Mode mode) {
  Chain residual(mode);
  for (const SignedPlacement& t : terms) accumulate(residual, t.tri, t.sign);
  accumulate(residual, target.tri, checked_neg(target.sign));
  return residual;
}

std::vector<SignedPlacement> eq8_terms(const Eq8Layout& layout) {
  std::vector<SignedPlacement> out;
  out.reserve(kEq8Slots.size());
  for (std::size_t i = 0; i < kEq8Slots.size(); ++i) out.push_back({slot_sign(kEq8Slots[i]), layout.terms[i]});
  return out;
}

namespace {

struct PreparedTerm {
  Int sign;
  Int size;
  std::vector<SimplexId> simplices;  // at anchor (0,0)
};

class Searcher {
 public:
  Searcher(std::vector<PreparedTerm> terms, const PlacedTriangle& target, Int radius, Mode mode)
      : terms_(std::move(terms)) {
    for_each_simplex(target, mode, [&](const SimplexId& s) { bump(s, -1); });
    for (Int di = -radius; di <= radius; ++di) {
      for (Int dj = -radius; dj <= radius; ++dj) window_.push_back(target.anchor + LatticeCoord{di, dj});
    }
    suffix_mass_.assign(terms_.size() + 1, 0);
    for (std::size_t i = terms_.size(); i-- > 0;) {
      suffix_mass_[i] = suffix_mass_[i + 1] + static_cast<Int>(terms_[i].simplices.size());
    }
    chosen_.assign(terms_.size(), 0);
  }

  bool run() { return dfs(0); }

  std::vector<LatticeCoord> anchors() const {
    std::vector<LatticeCoord> out;
    for (std::size_t idx : chosen_) out.push_back(window_[idx]);
    return out;
  }

 private:
  void bump(const SimplexId& s, Int delta) {
    Int& v = residual_[s];
    l1_ -= v < 0 ? -v : v;
    v += delta;
    l1_ += v < 0 ? -v : v;
  }

  void apply(const PreparedTerm& t, const LatticeCoord& at, Int direction) {
    for (const SimplexId& s : t.simplices) bump({s.kind, s.at + at}, direction * t.sign);
  }

  bool dfs(std::size_t depth) {
    if (depth == terms_.size()) return l1_ == 0;
    const PreparedTerm& t = terms_[depth];
    std::size_t start = 0;
    if (depth > 0 && terms_[depth - 1].sign == t.sign && terms_[depth - 1].size == t.size) {
      start = chosen_[depth - 1];
    }
    for (std::size_t idx = start; idx < window_.size(); ++idx) {
      apply(t, window_[idx], 1);
      if (l1_ <= suffix_mass_[depth + 1]) {
        chosen_[depth] = idx;
        if (dfs(depth + 1)) return true;
      }
      apply(t, window_[idx], -1);
    }
    return false;
  }

  std::vector<PreparedTerm> terms_;
  std::vector<LatticeCoord> window_;
  std::vector<Int> suffix_mass_;
  std::vector<std::size_t> chosen_;
  std::unordered_map<SimplexId, Int, SimplexHash> residual_;
  Int l1_ = 0;
};

}  // namespace

std::optional<std::vector<SignedPlacement>> placement_search(std::span<const SearchTerm> terms,
                                                             const PlacedTriangle& target,
                                                             const SearchOptions& options) {
  if (options.window_radius < 0) throw std::invalid_argument("window radius must be non-negative");
  std::vector<PreparedTerm> prepared;
  std::vector<std::size_t> trivial;  // terms whose chain is empty in this mode
  for (std::size_t i = 0; i < terms.size(); ++i) {
    PreparedTerm p{terms[i].sign, terms[i].size, {}};
    for_each_simplex(placed(0, 0, p.size), options.mode, [&](const SimplexId& s) { p.simplices.push_back(s); });
    if (p.simplices.empty()) {
      trivial.push_back(i);
    } else {
      prepared.push_back(std::move(p));
    }
  }
  const double cells = static_cast<double>(2 * options.window_radius + 1);
  const double configurations = std::pow(cells * cells, static_cast<double>(prepared.size()));
  if (configurations > options.budget) {
    throw BudgetExceeded("placement search space " + std::to_string(configurations) + " exceeds budget " +
                         std::to_string(options.budget));
  }

  // Heavier terms first; identical terms adjacent so symmetric permutations are skipped.
  std::vector<std::size_t> order(prepared.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = prepared[a];
    const auto& y = prepared[b];
    if (x.simplices.size() != y.simplices.size()) return x.simplices.size() > y.simplices.size();
    if (x.size != y.size) return x.size > y.size;
    return x.sign > y.sign;
  });
  std::vector<PreparedTerm> ordered;
  for (std::size_t i : order) ordered.push_back(prepared[i]);

  Searcher searcher(ordered, target, options.window_radius, options.mode);
  if (!searcher.run()) return std::nullopt;

  const auto anchors = searcher.anchors();
  std::vector<SignedPlacement> out;
  for (std::size_t i = 0; i < ordered.size(); ++i) out.push_back({ordered[i].sign, {anchors[i], ordered[i].size}});
  for (std::size_t i : trivial) out.push_back({terms[i].sign, {target.anchor, terms[i].size}});
  return out;
}

namespace {

/// Points of T(anchor, n), n >= 1, with the number of unit up cells covering each.
template <class F>
void for_each_point_coverage(const LatticeCoord& anchor, Int n, F&& f) {
  for (Int i = 0; i <= n; ++i) {
    for (Int j = 0; i + j <= n; ++j) {
      const bool on_i = i == 0, on_j = j == 0, on_diag = i + j == n;
      const int boundary_sides = on_i + on_j + on_diag;
      const int coverage = boundary_sides == 0 ? 3 : (boundary_sides == 1 ? 2 : 1);
      f(anchor + LatticeCoord{i, j}, coverage);
    }
  }
}

}  // namespace

std::vector<SignedPlacement> eq26_witness(const LatticeCoord& anchor, Int n) {
  if (n < 1) throw std::invalid_argument("eq26 witness needs n >= 1");
  std::vector<SignedPlacement> out;
  for_each_simplex(PlacedTriangle{anchor, n}, Mode::N2, [&](const SimplexId& s) {
    if (s.kind == SimplexKind::FaceUp) {
      out.push_back({1, {s.at, 1}});
    } else {
      out.push_back({1, {s.at + LatticeCoord{1, 1}, -1}});
    }
  });
  for_each_point_coverage(anchor, n, [&](const LatticeCoord& p, int coverage) {
    for (int extra = 1; extra < coverage; ++extra) out.push_back({-1, {p, 0}});
  });
  return out;
}

std::vector<SignedPlacement> eq30_witness(const LatticeCoord& anchor, Int n) {
  if (n < 1) throw std::invalid_argument("eq30 witness needs n >= 1");
  std::vector<SignedPlacement> out;
  for_each_simplex(PlacedTriangle{anchor, n}, Mode::N2, [&](const SimplexId& s) {
    if (s.kind == SimplexKind::FaceUp) {
      out.push_back({1, {s.at, 1}});
      return;
    }
    // b_{1,0} = <-1> - 3<0>: the open down cell minus its three corners.
    out.push_back({1, {s.at + LatticeCoord{1, 1}, -1}});
    out.push_back({-1, {s.at + LatticeCoord{1, 0}, 0}});
    out.push_back({-1, {s.at + LatticeCoord{0, 1}, 0}});
    out.push_back({-1, {s.at + LatticeCoord{1, 1}, 0}});
  });
  for_each_point_coverage(anchor, n, [&](const LatticeCoord& p, int coverage) {
    if (coverage == 3) out.push_back({1, {p, 0}});
  });
  return out;
}

}  // namespace tri
