#pragma once

#include <cstdint>
#include <vector>

namespace latq {

/// Subset of a lattice carrier {0,...,n-1}, stored as a dense bit vector.
/// Membership tests and the set algebra are O(n/64); values are plain data
/// and totally ordered (lexicographically on words) so they can key maps.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (int i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int e) const { return (bits_[e >> 6] >> (e & 63)) & 1; }
  void insert(int e) { bits_[e >> 6] |= uint64_t{1} << (e & 63); }
  void erase(int e) { bits_[e >> 6] &= ~(uint64_t{1} << (e & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : bits_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : bits_)
      if (w) return false;
    return true;
  }
  bool is_full() const { return count() == n_; }

  bool is_subset_of(const ElementSet& o) const {
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet complement() const {
    ElementSet r(n_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
    r.trim();
    return r;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.bits_ < b.bits_;
  }

  /// Smallest member, or -1 when empty.
  int min() const {
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) return int(i * 64 + __builtin_ctzll(bits_[i]));
    return -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int e = 0; e < n_; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int e = 0; e < n_; ++e)
      if (contains(e)) f(e);
  }

 private:
  void trim() {
    if (n_ & 63) bits_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> bits_;
};

}  // namespace latq
