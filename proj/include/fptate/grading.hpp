#pragma once

#include <algorithm>
#include <string>

namespace fptate {

/// Bigrading (s, t): s is the filtration coordinate, t the internal degree.
/// All sign rules use the total degree s + t.
struct Bidegree {
  int s = 0;
  int t = 0;

  int total() const { return s + t; }

  Bidegree operator+(Bidegree o) const { return {s + o.s, t + o.t}; }
  Bidegree operator-(Bidegree o) const { return {s - o.s, t - o.t}; }
  Bidegree operator*(int k) const { return {s * k, t * k}; }

  bool operator==(const Bidegree&) const = default;
  bool operator<(const Bidegree& o) const { return s != o.s ? s < o.s : t < o.t; }
};

/// +1 for even total degree, -1 for odd. Safe for negative inputs.
inline int parity_sign(int total_degree) { return (total_degree % 2) ? -1 : 1; }
inline bool is_odd(int total_degree) { return (total_degree % 2) != 0; }

/// Closed rectangle of bidegrees, inclusive on all four bounds.
struct Window {
  int s_min = 0;
  int s_max = -1;
  int t_min = 0;
  int t_max = -1;

  bool empty() const { return s_min > s_max || t_min > t_max; }
  bool contains(int s, int t) const { return s >= s_min && s <= s_max && t >= t_min && t <= t_max; }
  bool contains(Bidegree d) const { return contains(d.s, d.t); }

  long cell_count() const {
    if (empty()) return 0;
    return static_cast<long>(s_max - s_min + 1) * (t_max - t_min + 1);
  }

  /// Shrink by ds on both s-ends and dt on both t-ends; may become empty.
  Window shrink(int ds, int dt) const { return {s_min + ds, s_max - ds, t_min + dt, t_max - dt}; }

  Window intersect(const Window& o) const {
    return {std::max(s_min, o.s_min), std::min(s_max, o.s_max),
            std::max(t_min, o.t_min), std::min(t_max, o.t_max)};
  }

  bool operator==(const Window&) const = default;
};

inline std::string to_string(Bidegree d) {
  return "(" + std::to_string(d.s) + "," + std::to_string(d.t) + ")";
}

inline std::string to_string(const Window& w) {
  return "s=" + std::to_string(w.s_min) + ":" + std::to_string(w.s_max) +
         ",t=" + std::to_string(w.t_min) + ":" + std::to_string(w.t_max);
}

} // namespace fptate
