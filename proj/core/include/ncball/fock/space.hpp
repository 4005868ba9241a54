#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ncball::fock {

/// One tensor factor of a space. Truncated axes are Fock levels cut at
/// extent; untruncated axes are finite block labels (direct-sum summands)
/// and are never shrunk by an interior margin.
struct Axis {
  int extent = 1;
  bool truncated = true;

  friend bool operator==(const Axis&, const Axis&) = default;
};

/// Tensor product of axes with basis vectors enumerated in row-major order
/// (the first axis varies slowest). H_m cut at N is TruncatedSpace(m, N);
/// the zero-axis space is one-dimensional.
class TruncatedSpace {
 public:
  TruncatedSpace() = default;
  TruncatedSpace(int m, int cutoff);
  explicit TruncatedSpace(std::vector<Axis> axes);

  /// Untruncated axis with count blocks, for direct sums.
  static TruncatedSpace blocks(int count);

  int m() const noexcept { return static_cast<int>(axes_.size()); }
  const std::vector<Axis>& axes() const noexcept { return axes_; }
  int extent(int axis) const { return axes_.at(static_cast<std::size_t>(axis)).extent; }
  std::size_t dimension() const noexcept { return dimension_; }

  std::size_t index(const std::vector<int>& multi) const;
  std::vector<int> multi_index(std::size_t index) const;

  /// Axes of *this followed by axes of other.
  TruncatedSpace tensor(const TruncatedSpace& other) const;

  std::string to_string() const;

  friend bool operator==(const TruncatedSpace& a, const TruncatedSpace& b) {
    return a.axes_ == b.axes_;
  }

 private:
  std::vector<Axis> axes_;
  std::size_t dimension_ = 1;
};

/// Diagonal 0/1 selector of basis vectors whose truncated coordinates all
/// satisfy k_i <= extent - 1 - margin_i. Block axes are never restricted.
class InteriorProjector {
 public:
  InteriorProjector(const TruncatedSpace& space, int margin);
  /// One margin per axis; entries for block axes are ignored.
  InteriorProjector(const TruncatedSpace& space, std::vector<int> margins);

  const TruncatedSpace& space() const noexcept { return space_; }
  bool contains(std::size_t index) const { return selected_[index] != 0; }
  /// Selected basis indices in increasing order.
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  TruncatedSpace space_;
  std::vector<char> selected_;
  std::vector<std::size_t> indices_;
};

}  // namespace ncball::fock
