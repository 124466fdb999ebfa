#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sunforge/bitfam/bit_vector.hpp"
#include "sunforge/bitfam/q_vector.hpp"

namespace sunforge {

/**
 * Ordered set of distinct vectors sharing one length and alphabet.
 *
 * Insertion order is kept so that member indices (0-based) are stable
 * witness coordinates. Duplicate inserts are rejected.
 */
template <class Vector>
class BasicFamily {
 public:
  using value_type = Vector;
  using const_iterator = typename std::vector<Vector>::const_iterator;

  explicit BasicFamily(std::size_t n, unsigned q = 2) : n_(n), q_(q) {
    if (n == 0 || n > BitVector::kMaxLength) throw std::invalid_argument("family length must be in [1, 4096]");
  }

  /// Throws std::invalid_argument on a duplicate or mismatched member.
  BasicFamily(std::size_t n, std::vector<Vector> members, unsigned q = 2) : BasicFamily(n, q) {
    members_.reserve(members.size());
    for (auto& v : members)
      if (!insert(std::move(v))) throw std::invalid_argument("duplicate family member");
  }

  /// Appends `v` unless already present. Returns whether it was added.
  bool insert(Vector v) {
    if (v.size() != n_) throw std::invalid_argument("family member has length " + std::to_string(v.size()) +
                                                    ", expected " + std::to_string(n_));
    if (alphabet_of(v) != q_) throw std::invalid_argument("family member alphabet mismatch");
    auto [it, added] = index_.try_emplace(v, members_.size());
    if (!added) return false;
    members_.push_back(std::move(v));
    return true;
  }

  /// Removes the member at `index`; later members shift down by one.
  void erase(std::size_t index) {
    if (index >= members_.size()) throw std::out_of_range("family index out of range");
    members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(index));
    index_.clear();
    for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], i);
  }

  std::size_t n() const noexcept { return n_; }
  unsigned q() const noexcept { return q_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  const Vector& operator[](std::size_t i) const { return members_.at(i); }
  std::span<const Vector> members() const noexcept { return members_; }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  bool contains(const Vector& v) const { return index_.count(v) != 0; }

  std::optional<std::size_t> index_of(const Vector& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Same members regardless of order.
  bool same_members(const BasicFamily& other) const {
    if (other.n_ != n_ || other.q_ != q_ || other.size() != size()) return false;
    for (const auto& v : members_)
      if (!other.contains(v)) return false;
    return true;
  }

  friend bool operator==(const BasicFamily& a, const BasicFamily& b) {
    return a.n_ == b.n_ && a.q_ == b.q_ && a.members_ == b.members_;
  }

 private:
  std::size_t n_;
  unsigned q_;
  std::vector<Vector> members_;
  std::unordered_map<Vector, std::size_t> index_;
};

using Family = BasicFamily<BitVector>;
using QFamily = BasicFamily<QVector>;

/// Pattern classes: near-sunflower, focal, and the one-sided b-focal kinds.
enum class Kind { ns, ff, bff0, bff1 };

inline std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::ns: return "ns";
    case Kind::ff: return "ff";
    case Kind::bff0: return "bff0";
    case Kind::bff1: return "bff1";
  }
  return "?";
}

inline Kind parse_kind(std::string_view s) {
  if (s == "ns") return Kind::ns;
  if (s == "ff") return Kind::ff;
  if (s == "bff0") return Kind::bff0;
  if (s == "bff1") return Kind::bff1;
  throw std::invalid_argument("unknown kind '" + std::string(s) + "' (expected ns, ff, bff0, bff1)");
}

struct Params {
  std::size_t n = 1;
  std::size_t r = 3;
  unsigned q = 2;
  std::size_t k = 0;
  unsigned b = 1;

  void validate() const {
    if (r < 3) throw std::invalid_argument("r must be >= 3");
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (k > n) throw std::invalid_argument("k must be <= n");
    if (b > 1) throw std::invalid_argument("b must be 0 or 1");
  }
};

/// Coordinate-wise complement of every member; order is preserved.
inline Family complement_family(const Family& f) {
  Family out(f.n());
  for (const auto& v : f) out.insert(~v);
  return out;
}

namespace detail {

/// Validates a tuple of member indices: in range and pairwise distinct.
inline void check_tuple(std::size_t family_size, std::span<const std::size_t> indices) {
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] >= family_size)
      throw std::out_of_range("member index " + std::to_string(indices[a]) + " out of range (family size " +
                              std::to_string(family_size) + ")");
    for (std::size_t b = 0; b < a; ++b)
      if (indices[a] == indices[b])
        throw std::invalid_argument("duplicate member index " + std::to_string(indices[a]));
  }
}

}  // namespace detail
}  // namespace sunforge
