#include "grpstat/perm.hpp"

#include <numeric>
#include <sstream>

#include "grpstat/error.hpp"

namespace grpstat {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InvalidArgument("permutation image list is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::from_images_unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree) throw InvalidArgument("cycle point out of range");
      if (used[x]) throw InvalidArgument("cycles are not disjoint");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return from_images_unchecked(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Point>(i);
  }
  return from_images_unchecked(std::move(inv));
}

Point Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::uint64_t Permutation::element_order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    bool first = true;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out << ' ';
      out << x;
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation& Permutation::operator*=(const Permutation& q) {
  if (q.degree() != degree()) throw InvalidArgument("degree mismatch in compose");
  for (auto& x : images_) x = q.images_[x];
  return *this;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidArgument("degree mismatch in compose");
  std::vector<Point> images(p.degree());
  const auto& pi = p.images();
  const auto& qi = q.images();
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = qi[pi[x]];
  return Permutation::from_images_unchecked(std::move(images));
}

std::vector<Point> apply(const Permutation& g, std::span<const Point> tuple) {
  std::vector<Point> out;
  out.reserve(tuple.size());
  for (Point x : tuple) out.push_back(g(x));
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace grpstat
