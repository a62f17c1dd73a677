#pragma once

// Split vector bundles O(a_1) + ... + O(a_r) on P^1 and the dimension counts
// built from their cohomology: Hilbert scheme dimensions of scrolls and
// Veronese varieties, Fano scheme components, normal bundle sections.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mindeg/error.hpp"
#include "mindeg/polyring.hpp"
#include "mindeg/scrolls.hpp"

namespace mindeg {

/// Multiset of line bundle degrees, kept in nonincreasing order.
class SplitBundle {
 public:
  explicit SplitBundle(std::vector<int> degrees) : deg_(std::move(degrees)) {
    if (deg_.empty()) throw Error(ErrorKind::InvalidArgument, "a split bundle has rank at least 1");
    std::sort(deg_.begin(), deg_.end(), std::greater<>());
  }
  static SplitBundle parse(std::string_view text) {
    std::vector<int> d;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        d.push_back(std::stoi(item, &used));
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad bundle '" + std::string(text) + "'");
      }
    }
    return SplitBundle(std::move(d));
  }
  static SplitBundle of_scroll(const ScrollType& s) { return SplitBundle(s.parts()); }

  std::size_t rank() const { return deg_.size(); }
  const std::vector<int>& degrees() const { return deg_; }
  long first_chern() const { return std::accumulate(deg_.begin(), deg_.end(), 0L); }
  bool is_balanced() const { return deg_.front() - deg_.back() <= 1; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < deg_.size(); ++i) s += (i ? " + O(" : "O(") + std::to_string(deg_[i]) + ")";
    return s;
  }

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

 private:
  std::vector<int> deg_;
};

inline long h0(const SplitBundle& b) {
  long s = 0;
  for (int a : b.degrees()) s += std::max(0, a + 1);
  return s;
}
inline long h1(const SplitBundle& b) {
  long s = 0;
  for (int a : b.degrees()) s += std::max(0, -a - 1);
  return s;
}
inline long euler_characteristic(const SplitBundle& b) {
  long s = 0;
  for (int a : b.degrees()) s += a + 1;
  return s;
}

inline SplitBundle dual(const SplitBundle& b) {
  std::vector<int> d;
  for (int a : b.degrees()) d.push_back(-a);
  return SplitBundle(std::move(d));
}

inline SplitBundle twist(const SplitBundle& b, int c) {
  std::vector<int> d;
  for (int a : b.degrees()) d.push_back(a + c);
  return SplitBundle(std::move(d));
}

/// End E = E ⊗ E^∨: degrees a_i - a_j over all ordered pairs.
inline SplitBundle end_bundle(const SplitBundle& b) {
  std::vector<int> d;
  for (int a : b.degrees())
    for (int c : b.degrees()) d.push_back(a - c);
  return SplitBundle(std::move(d));
}

/// Sym^m E: one summand per size-m multiset of summands, of degree their sum.
inline SplitBundle sym(const SplitBundle& b, int m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "negative symmetric power");
  const auto& a = b.degrees();
  std::vector<int> out;
  auto rec = [&](auto&& self, std::size_t start, int left, int acc) -> void {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i < a.size(); ++i) self(self, i, left - 1, acc + a[i]);
  };
  rec(rec, 0, m, 0);
  return SplitBundle(std::move(out));
}

/// (d+k)^2 - k^2 - 3.
inline long scroll_hilb_dim(int d, int k) {
  if (k < 1 || d < k) throw Error(ErrorKind::InvalidArgument, "scroll_hilb_dim needs d >= k >= 1");
  return static_cast<long>(d + k) * (d + k) - static_cast<long>(k) * k - 3;
}

inline ScrollType balanced_type(int d, int k) {
  if (k < 1 || d < k) throw Error(ErrorKind::InvalidArgument, "balanced_type needs d >= k >= 1");
  std::vector<int> parts(static_cast<std::size_t>(k), d / k);
  for (int i = 0; i < d % k; ++i) ++parts[static_cast<std::size_t>(i)];
  return ScrollType(std::move(parts));
}

/// h^0(End E) + 2 for the balanced E; equals k^2 + 2.
inline long balanced_aut_dim(int d, int k) { return h0(end_bundle(SplitBundle::of_scroll(balanced_type(d, k)))) + 2; }

/// The scroll Hilbert scheme dimension reassembled from bundle data:
/// dim PGL_{n+1} minus the automorphisms of the balanced scroll.
struct ScrollHilbPieces {
  long pgl_dim = 0;      // (n+1)^2 - 1
  long h0_end = 0;       // h^0(End E), E balanced
  long chi_end = 0;      // χ(End E) = k^2
  long tangent_h0 = 0;   // h^0(End E) + 2
  long dim = 0;          // pgl_dim - tangent_h0
};

inline ScrollHilbPieces scroll_hilb_pieces(int d, int k) {
  SplitBundle e = SplitBundle::of_scroll(balanced_type(d, k));
  SplitBundle end = end_bundle(e);
  ScrollHilbPieces p;
  const long n = d + k - 1;
  p.pgl_dim = (n + 1) * (n + 1) - 1;
  p.h0_end = h0(end);
  p.chi_end = euler_characteristic(end);
  p.tangent_h0 = p.h0_end + 2;
  p.dim = p.pgl_dim - p.tangent_h0;
  return p;
}

/// With C = C(n+d, d): dim Hilb = dim PGL_C - dim PGL_{n+1} = C^2 - (n+1)^2.
inline long veronese_hilb_dim(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorKind::InvalidArgument, "veronese needs n, d >= 1");
  long c = binomial(n + d, d).get_si();
  return c * c - static_cast<long>(n + 1) * (n + 1);
}

/// C + n + 1 = dim / codim, where codim = C - 1 - n.
inline long veronese_point_count(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorKind::InvalidArgument, "veronese needs n, d >= 1");
  return binomial(n + d, d).get_si() + n + 1;
}

inline long veronese_codim(int n, int d) { return binomial(n + d, d).get_si() - 1 - n; }

enum class FanoComponentKind { Ruling, Directrix };

inline std::string_view to_string(FanoComponentKind k) { return k == FanoComponentKind::Ruling ? "ruling" : "directrix"; }

struct FanoComponent {
  FanoComponentKind kind;
  long dim;
  friend bool operator==(const FanoComponent&, const FanoComponent&) = default;
};

/// Number of unit blocks a_i = 1.
inline int unit_blocks(const ScrollType& s) {
  return static_cast<int>(std::count(s.parts().begin(), s.parts().end(), 1));
}

inline long normal_sections_large_plane(int k, int t) {
  if (t < 1 || t > k - 1) throw Error(ErrorKind::OutOfRange, "plane dimension t must lie in [1, k-1]");
  return 1 + static_cast<long>(t + 1) * (k - t - 1);
}

/// h^0(E^∨(1)) - 1. The h^0 counts unit blocks, so -1 means there are no
/// lines of the first type.
inline long normal_sections_small_line(const ScrollType& s) {
  return h0(twist(dual(SplitBundle::of_scroll(s)), 1)) - 1;
}

/// Components of the Fano scheme of t-planes on a smooth scroll: planes in a
/// ruling fiber (a Grassmannian bundle over P^1), plus a P^{j-1} of lines
/// when t = 1 and j = #{a_i = 1} >= 1.
inline std::vector<FanoComponent> fano_component_dims(const ScrollType& s, int t) {
  const int k = s.dim();
  std::vector<FanoComponent> out{{FanoComponentKind::Ruling, normal_sections_large_plane(k, t)}};
  if (t == 1) {
    long small = normal_sections_small_line(s);
    if (small >= 0) out.push_back({FanoComponentKind::Directrix, small});
  }
  return out;
}

}  // namespace mindeg
