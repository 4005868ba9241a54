#include "ncball/fock/space.hpp"

#include "ncball/error.hpp"

namespace ncball::fock {

TruncatedSpace::TruncatedSpace(int m, int cutoff) {
  if (m < 0) throw_invalid("number of indices must be nonnegative");
  if (cutoff < 1) throw_invalid("cutoff must be at least 1, got " + std::to_string(cutoff));
  axes_.assign(static_cast<std::size_t>(m), Axis{cutoff, true});
  for (int i = 0; i < m; ++i) dimension_ *= static_cast<std::size_t>(cutoff);
}

TruncatedSpace::TruncatedSpace(std::vector<Axis> axes) : axes_(std::move(axes)) {
  for (const auto& a : axes_) {
    if (a.extent < 1) throw_invalid("axis extent must be at least 1");
    dimension_ *= static_cast<std::size_t>(a.extent);
  }
}

TruncatedSpace TruncatedSpace::blocks(int count) { return TruncatedSpace({Axis{count, false}}); }

std::size_t TruncatedSpace::index(const std::vector<int>& multi) const {
  if (multi.size() != axes_.size()) throw_invalid("multi-index has the wrong length");
  std::size_t idx = 0;
  for (std::size_t a = 0; a < axes_.size(); ++a) {
    if (multi[a] < 0 || multi[a] >= axes_[a].extent) throw_invalid("multi-index out of range");
    idx = idx * static_cast<std::size_t>(axes_[a].extent) + static_cast<std::size_t>(multi[a]);
  }
  return idx;
}

std::vector<int> TruncatedSpace::multi_index(std::size_t index) const {
  if (index >= dimension_) throw_invalid("basis index out of range");
  std::vector<int> multi(axes_.size());
  for (std::size_t a = axes_.size(); a-- > 0;) {
    const auto e = static_cast<std::size_t>(axes_[a].extent);
    multi[a] = static_cast<int>(index % e);
    index /= e;
  }
  return multi;
}

TruncatedSpace TruncatedSpace::tensor(const TruncatedSpace& other) const {
  std::vector<Axis> axes = axes_;
  axes.insert(axes.end(), other.axes_.begin(), other.axes_.end());
  return TruncatedSpace(std::move(axes));
}

std::string TruncatedSpace::to_string() const {
  if (axes_.empty()) return "C";
  std::string out;
  for (const auto& a : axes_) {
    if (!out.empty()) out += " x ";
    out += (a.truncated ? "l2<" : "C^") + std::to_string(a.extent) + (a.truncated ? ">" : "");
  }
  return out;
}

InteriorProjector::InteriorProjector(const TruncatedSpace& space, int margin)
    : InteriorProjector(space, std::vector<int>(static_cast<std::size_t>(space.m()), margin)) {}

InteriorProjector::InteriorProjector(const TruncatedSpace& space, std::vector<int> margins)
    : space_(space) {
  if (margins.size() != static_cast<std::size_t>(space.m()))
    throw_invalid("one margin per axis is required");
  for (int m : margins)
    if (m < 0) throw_invalid("interior margin must be nonnegative");
  selected_.assign(space.dimension(), 0);
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    const auto multi = space.multi_index(i);
    bool inside = true;
    for (std::size_t a = 0; a < multi.size() && inside; ++a) {
      const Axis& axis = space.axes()[a];
      if (axis.truncated && multi[a] > axis.extent - 1 - margins[a]) inside = false;
    }
    if (inside) {
      selected_[i] = 1;
      indices_.push_back(i);
    }
  }
}

}  // namespace ncball::fock
