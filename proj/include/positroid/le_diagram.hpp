#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ground_subset.hpp"

namespace positroid {

/// A filled box of a diagram, addressed by its sink row s and source
/// column h. A box (s, h) exists precisely when s is a sink label, h a
/// source label, and s < h.
struct dot {
  int s = 0;
  int h = 0;
  [[nodiscard]] auto operator<=>(const dot&) const = default;
};

/// An exclusion-rule violation: `box` is empty, `above` is a dot higher up
/// in the same column, `left` is a dot further left in the same row.
struct le_violation {
  dot box;
  dot above;
  dot left;
};

namespace detail {

/// All exclusion-rule violations of a candidate filling, each reported for
/// the offending empty box with one witness pair of dots. Assumes the dots
/// are structurally valid boxes of the path.
inline std::vector<le_violation> find_violations(
    const std::string& path, const std::vector<dot>& dots) {
  std::vector<le_violation> out;
  const int n = static_cast<int>(path.size());
  auto has_dot = [&](int s, int h) {
    return std::binary_search(dots.begin(), dots.end(), dot{s, h});
  };
  for (int s = 1; s <= n; ++s) {
    if (path[static_cast<std::size_t>(s - 1)] != 'V') continue;
    for (int h = s + 1; h <= n; ++h) {
      if (path[static_cast<std::size_t>(h - 1)] != 'H') continue;
      if (has_dot(s, h)) continue;
      // Empty box (s, h): look for a dot above (same column, smaller row
      // label) and a dot to its left (same row, larger column label).
      int above = 0, left = 0;
      for (const dot& d : dots) {
        if (d.h == h && d.s < s && above == 0) above = d.s;
        if (d.s == s && d.h > h && left == 0) left = d.h;
      }
      if (above != 0 && left != 0)
        out.push_back({dot{s, h}, dot{above, h}, dot{s, left}});
    }
  }
  return out;
}

}  // namespace detail

/// Carries the full list of exclusion-rule violations found in a filling.
struct le_error : domain_error {
  le_error(std::string msg, std::vector<le_violation> v)
      : domain_error(std::move(msg)), violations(std::move(v)) {}
  std::vector<le_violation> violations;
};

/// An immutable diagram: a lattice path with labels 1..n read NE to SW
/// ('V' = sink edge, 'H' = source edge) and a set of dots filling boxes,
/// subject to the exclusion rule enforced at construction: no box may be
/// empty while having a dot above it in its column and a dot to its left
/// in its row.
class le_diagram {
 public:
  le_diagram(int n, std::string path, std::vector<dot> dots)
      : n_(n), path_(std::move(path)), dots_(std::move(dots)) {
    if (n_ < 1 || n_ > 64)
      throw domain_error("n must lie in 1..64, got " + std::to_string(n_));
    if (static_cast<int>(path_.size()) != n_)
      throw domain_error("path has " + std::to_string(path_.size()) +
                         " steps, expected n = " + std::to_string(n_));
    for (char c : path_)
      if (c != 'V' && c != 'H')
        throw domain_error(std::string("path step '") + c +
                           "' is neither V nor H");
    std::sort(dots_.begin(), dots_.end());
    for (std::size_t i = 0; i + 1 < dots_.size(); ++i)
      if (dots_[i] == dots_[i + 1])
        throw domain_error("duplicate dot (" + std::to_string(dots_[i].s) +
                           "," + std::to_string(dots_[i].h) + ")");
    for (const dot& d : dots_) {
      if (d.s < 1 || d.s > n_ || d.h < 1 || d.h > n_)
        throw domain_error("dot (" + std::to_string(d.s) + "," +
                           std::to_string(d.h) + ") out of range 1.." +
                           std::to_string(n_));
      if (!is_sink(d.s))
        throw domain_error("dot (" + std::to_string(d.s) + "," +
                           std::to_string(d.h) + "): " + std::to_string(d.s) +
                           " is not a sink label");
      if (!is_source(d.h))
        throw domain_error("dot (" + std::to_string(d.s) + "," +
                           std::to_string(d.h) + "): " + std::to_string(d.h) +
                           " is not a source label");
      if (d.s >= d.h)
        throw domain_error("dot (" + std::to_string(d.s) + "," +
                           std::to_string(d.h) +
                           "): sink label must precede source label");
    }
    auto viols = detail::find_violations(path_, dots_);
    if (!viols.empty()) {
      std::string msg = "exclusion rule violated at empty box (" +
                        std::to_string(viols.front().box.s) + "," +
                        std::to_string(viols.front().box.h) + ")";
      if (viols.size() > 1)
        msg += " and " + std::to_string(viols.size() - 1) + " more";
      throw le_error(std::move(msg), std::move(viols));
    }
    for (char c : path_) r_ += c == 'V' ? 1 : 0;
  }

  [[nodiscard]] int n() const { return n_; }
  /// Number of sinks; the rank of the diagram's matroid.
  [[nodiscard]] int r() const { return r_; }
  [[nodiscard]] const std::string& path() const { return path_; }
  /// Sorted by (s, h).
  [[nodiscard]] const std::vector<dot>& dots() const { return dots_; }

  [[nodiscard]] bool is_sink(int label) const {
    return label >= 1 && label <= n_ &&
           path_[static_cast<std::size_t>(label - 1)] == 'V';
  }
  [[nodiscard]] bool is_source(int label) const {
    return label >= 1 && label <= n_ &&
           path_[static_cast<std::size_t>(label - 1)] == 'H';
  }

  [[nodiscard]] ground_subset sinks() const {
    ground_subset s;
    for (int i = 1; i <= n_; ++i)
      if (is_sink(i)) s.insert(i);
    return s;
  }
  [[nodiscard]] ground_subset sources() const {
    return sinks().complement_in(n_);
  }

  [[nodiscard]] bool box_exists(int s, int h) const {
    return is_sink(s) && is_source(h) && s < h;
  }
  [[nodiscard]] bool has_dot(int s, int h) const {
    return std::binary_search(dots_.begin(), dots_.end(), dot{s, h});
  }

  [[nodiscard]] bool operator==(const le_diagram& o) const {
    return n_ == o.n_ && path_ == o.path_ && dots_ == o.dots_;
  }

  /// Compact single-line form "n r path s,h;s,h;..." used in logs and
  /// failure reports.
  [[nodiscard]] std::string summary() const {
    std::string out =
        std::to_string(n_) + " " + std::to_string(r_) + " " + path_;
    for (std::size_t i = 0; i < dots_.size(); ++i) {
      out += i == 0 ? " " : ";";
      out += std::to_string(dots_[i].s) + "," + std::to_string(dots_[i].h);
    }
    return out;
  }

 private:
  int n_;
  int r_ = 0;
  std::string path_;
  std::vector<dot> dots_;
};

/// Parses the .led text format:
///   line 1: "n r"
///   line 2: path string of V/H
///   then one dot "s h" per line.
/// '#' starts a comment; blank lines are skipped.
inline le_diagram parse_led(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    auto flush = [&] {
      std::size_t b = cur.find_first_not_of(" \t\r");
      std::size_t e = cur.find_last_not_of(" \t\r");
      if (b != std::string::npos) lines.push_back(cur.substr(b, e - b + 1));
      cur.clear();
    };
    for (char c : text) {
      if (c == '\n') {
        flush();
      } else {
        cur += c;
      }
    }
    flush();
    for (std::string& l : lines) {
      std::size_t hash = l.find('#');
      if (hash != std::string::npos) l.erase(hash);
      std::size_t e = l.find_last_not_of(" \t");
      l.erase(e == std::string::npos ? 0 : e + 1);
    }
    std::erase_if(lines, [](const std::string& l) { return l.empty(); });
  }
  if (lines.size() < 2) throw parse_error("expected header line and path line");

  int n = 0, r = 0;
  {
    std::istringstream is(lines[0]);
    std::string extra;
    if (!(is >> n >> r) || (is >> extra))
      throw parse_error("header must be 'n r', got '" + lines[0] + "'");
  }
  const std::string& path = lines[1];

  std::vector<dot> dots;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    std::istringstream is(lines[i]);
    dot d;
    std::string extra;
    if (!(is >> d.s >> d.h) || (is >> extra))
      throw parse_error("dot line must be 's h', got '" + lines[i] + "'");
    dots.push_back(d);
  }

  try {
    le_diagram out(n, path, std::move(dots));
    if (out.r() != r)
      throw domain_error("header declares r = " + std::to_string(r) +
                         " but path has " + std::to_string(out.r()) +
                         " sinks");
    return out;
  } catch (const le_error&) {
    throw;
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

/// Inverse of parse_led; output re-parses to an equal diagram.
inline std::string to_led(const le_diagram& d) {
  std::string out =
      std::to_string(d.n()) + " " + std::to_string(d.r()) + "\n" + d.path() +
      "\n";
  for (const dot& t : d.dots())
    out += std::to_string(t.s) + " " + std::to_string(t.h) + "\n";
  return out;
}

}  // namespace positroid
