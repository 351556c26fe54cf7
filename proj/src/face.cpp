#include "ekr/face.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "ekr/error.hpp"

namespace ekr {

std::size_t face_width() {
  const char* env = std::getenv("EKR_FACE_WIDTH");
  if (env == nullptr || *env == '\0') return kDefaultFaceWidth;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > static_cast<long>(kMaxFaceWidth)) {
    throw InvalidInput("EKR_FACE_WIDTH must be an integer in 1.." +
                       std::to_string(kMaxFaceWidth) + ", got '" + env + "'");
  }
  return static_cast<std::size_t>(value);
}

void check_face_width(std::size_t n_vertices) {
  const std::size_t width = face_width();
  if (n_vertices > width) {
    throw CapExceeded("complex has " + std::to_string(n_vertices) +
                      " vertices but the face width is " + std::to_string(width) +
                      " (set EKR_FACE_WIDTH, at most " + std::to_string(kMaxFaceWidth) + ")");
  }
}

Face::Face(std::initializer_list<Vertex> vertices) {
  for (Vertex v : vertices) insert(v);
}

Face Face::from_vertices(std::span<const Vertex> vertices) {
  Face f;
  for (Vertex v : vertices) f.insert(v);
  return f;
}

void Face::insert(Vertex v) {
  if (v >= kMaxFaceWidth) {
    throw CapExceeded("vertex id " + std::to_string(v) + " exceeds face capacity " +
                      std::to_string(kMaxFaceWidth));
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

Vertex Face::front() const {
  for (std::size_t i = 0; i < kWords; ++i)
    if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
  return 0;
}

Vertex Face::back() const {
  for (std::size_t i = kWords; i-- > 0;)
    if (words_[i]) return static_cast<Vertex>(i * 64 + 63 - std::countl_zero(words_[i]));
  return 0;
}

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string Face::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](Vertex v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

// Lexicographic order of sorted vertex lists. Let x be the lowest vertex in
// exactly one of the two faces; everything below x is a shared prefix. The
// face containing x is smaller unless the other face has nothing above x, in
// which case the other face is a proper prefix.
std::strong_ordering operator<=>(const Face& a, const Face& b) {
  std::size_t word = Face::kWords;
  for (std::size_t i = 0; i < Face::kWords; ++i) {
    if (a.words_[i] != b.words_[i]) {
      word = i;
      break;
    }
  }
  if (word == Face::kWords) return std::strong_ordering::equal;
  const std::uint64_t diff = a.words_[word] ^ b.words_[word];
  const int bit = std::countr_zero(diff);
  const bool x_in_a = (a.words_[word] >> bit) & 1U;
  const Face& other = x_in_a ? b : a;
  bool other_has_more = false;
  const std::uint64_t above = (bit == 63) ? 0 : (~std::uint64_t{0} << (bit + 1));
  if (other.words_[word] & above) other_has_more = true;
  for (std::size_t i = word + 1; i < Face::kWords && !other_has_more; ++i)
    if (other.words_[i]) other_has_more = true;
  const bool a_less = x_in_a ? other_has_more : !other_has_more;
  return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto w : f.words()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void canonicalize(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

std::vector<Face> maximal_antichain(std::vector<Face> faces) {
  canonicalize(faces);
  // Larger faces first so each candidate only needs checking against kept ones.
  std::stable_sort(faces.begin(), faces.end(),
                   [](const Face& x, const Face& y) { return x.size() > y.size(); });
  std::vector<Face> kept;
  for (const Face& f : faces) {
    bool dominated = false;
    for (const Face& k : kept) {
      if (f.is_subset_of(k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Face> minimal_antichain(std::vector<Face> faces) {
  canonicalize(faces);
  std::stable_sort(faces.begin(), faces.end(),
                   [](const Face& x, const Face& y) { return x.size() < y.size(); });
  std::vector<Face> kept;
  for (const Face& f : faces) {
    bool dominated = false;
    for (const Face& k : kept) {
      if (k.is_subset_of(f)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

namespace {

void subsets_rec(const std::vector<Vertex>& verts, std::size_t start, std::size_t remaining,
                 Face& current, const std::function<void(const Face&)>& fn) {
  if (remaining == 0) {
    fn(current);
    return;
  }
  for (std::size_t i = start; i + remaining <= verts.size(); ++i) {
    current.insert(verts[i]);
    subsets_rec(verts, i + 1, remaining - 1, current, fn);
    current.erase(verts[i]);
  }
}

}  // namespace

void for_each_subset_of_size(const Face& face, std::size_t k,
                             const std::function<void(const Face&)>& fn) {
  const auto verts = face.vertices();
  if (k > verts.size()) return;
  Face current;
  subsets_rec(verts, 0, k, current, fn);
}

}  // namespace ekr
