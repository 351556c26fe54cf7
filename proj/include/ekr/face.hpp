#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ekr {

using Vertex = std::uint32_t;

/// Compile-time storage capacity of a Face, in vertices.
inline constexpr std::size_t kMaxFaceWidth = 256;
inline constexpr std::size_t kDefaultFaceWidth = 128;

/// Runtime vertex limit for complexes. Defaults to 128 and may be overridden
/// through the EKR_FACE_WIDTH environment variable (1..256).
std::size_t face_width();

/// Throws CapExceeded if a complex on `n_vertices` vertices does not fit.
void check_face_width(std::size_t n_vertices);

/// A finite set of vertices stored as a fixed-width bit vector.
///
/// Faces are ordered lexicographically on their sorted vertex lists, so
/// {0,1} < {0,1,2} < {0,2} < {1}. The empty face sorts first.
class Face {
 public:
  static constexpr std::size_t kWords = kMaxFaceWidth / 64;

  Face() = default;
  Face(std::initializer_list<Vertex> vertices);

  static Face from_vertices(std::span<const Vertex> vertices);

  bool contains(Vertex v) const {
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v);
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  Face with(Vertex v) const {
    Face f = *this;
    f.insert(v);
    return f;
  }
  Face without(Vertex v) const {
    Face f = *this;
    f.erase(v);
    return f;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  int dim() const { return static_cast<int>(size()) - 1; }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const Face& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const Face& other) const {
    return is_subset_of(other) && *this != other;
  }
  bool intersects(const Face& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  std::size_t intersection_size(const Face& other) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < kWords; ++i)
      n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return n;
  }

  Face operator&(const Face& o) const {
    Face r;
    for (std::size_t i = 0; i < kWords; ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  Face operator|(const Face& o) const {
    Face r;
    for (std::size_t i = 0; i < kWords; ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }
  /// Set difference.
  Face operator-(const Face& o) const {
    Face r;
    for (std::size_t i = 0; i < kWords; ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }
  Face& operator&=(const Face& o) { return *this = *this & o; }
  Face& operator|=(const Face& o) { return *this = *this | o; }
  Face& operator-=(const Face& o) { return *this = *this - o; }

  /// Smallest vertex. Undefined on the empty face.
  Vertex front() const;
  /// Largest vertex. Undefined on the empty face.
  Vertex back() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const auto bit = static_cast<Vertex>(std::countr_zero(w));
        fn(static_cast<Vertex>(i * 64) + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> vertices() const;
  std::string to_string() const;

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

  friend bool operator==(const Face&, const Face&) = default;
  friend std::strong_ordering operator<=>(const Face& a, const Face& b);

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

/// Sorts and deduplicates in canonical order.
void canonicalize(std::vector<Face>& faces);

/// Keeps only the inclusion-maximal faces, canonically ordered.
std::vector<Face> maximal_antichain(std::vector<Face> faces);

/// Keeps only the inclusion-minimal faces, canonically ordered.
std::vector<Face> minimal_antichain(std::vector<Face> faces);

/// Calls `fn` on every k-element subset of `face`.
void for_each_subset_of_size(const Face& face, std::size_t k,
                             const std::function<void(const Face&)>& fn);

}  // namespace ekr
