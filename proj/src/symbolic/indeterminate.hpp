#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace jetvar {

// Declaration order is the fixed total order on kinds used by every
// canonical ordering in the library.
enum class VarKind : std::uint8_t {
  BaseCoord = 0,     // x^lambda
  ConnJet = 1,       // a^r_{Lambda;mu}
  MatterJet = 2,     // z^A_Lambda
  BackgroundFn = 3,  // B^r_{Lambda;mu}, a function of x only
  GaugeParam = 4,    // xi^r_Lambda, a function of x only
  AuxScalar = 5,     // t
};

/// A single indeterminate, packed into a 51-bit integer key.
///
/// Layout, most significant first:
///   kind:3 | index:8 | mu+1:4 | order:4 | d0:4 d1:4 ... d7:4
/// so that comparing keys compares (kind, index, mu, |Lambda|, Lambda)
/// lexicographically. `index` is lambda for BaseCoord, r for ConnJet /
/// BackgroundFn / GaugeParam and A for MatterJet. The derivative multi-index
/// is stored sorted ascending.
class Indeterminate {
 public:
  static constexpr int kMaxIndex = 255;
  static constexpr int kMaxBase = 15;  // base indices live in [0, 15)
  static constexpr int kMaxOrder = 8;

  constexpr Indeterminate() = default;
  static Indeterminate from_key(std::uint64_t key) {
    Indeterminate v;
    v.key_ = key;
    return v;
  }

  static Indeterminate base(int lambda);
  static Indeterminate conn(int r, int mu, std::span<const int> deriv = {});
  static Indeterminate matter(int A, std::span<const int> deriv = {});
  static Indeterminate background(int r, int mu, std::span<const int> deriv = {});
  static Indeterminate gauge(int r, std::span<const int> deriv = {});
  static Indeterminate aux_t();

  std::uint64_t key() const { return key_; }
  VarKind kind() const { return static_cast<VarKind>(key_ >> 48); }
  int index() const { return static_cast<int>((key_ >> 40) & 0xff); }
  int mu() const { return static_cast<int>((key_ >> 36) & 0xf) - 1; }
  int order() const { return static_cast<int>((key_ >> 32) & 0xf); }
  int deriv(int i) const { return static_cast<int>((key_ >> (28 - 4 * i)) & 0xf); }
  std::vector<int> deriv_indices() const;

  /// Jet coordinates of the fields: ConnJet and MatterJet.
  bool is_field_jet() const { return kind() == VarKind::ConnJet || kind() == VarKind::MatterJet; }
  /// B and xi: functions of the base coordinates, with no differentials of their own.
  bool is_function_symbol() const {
    return kind() == VarKind::BackgroundFn || kind() == VarKind::GaugeParam;
  }
  /// Same symbol with the derivative multi-index extended by lambda.
  Indeterminate raised(int lambda) const;
  /// Same symbol with the derivative multi-index dropped.
  Indeterminate underived() const;

  std::string to_string() const;

  friend constexpr auto operator<=>(Indeterminate a, Indeterminate b) { return a.key_ <=> b.key_; }
  friend constexpr bool operator==(Indeterminate a, Indeterminate b) { return a.key_ == b.key_; }

 private:
  static Indeterminate make(VarKind kind, int index, int mu, std::span<const int> deriv);
  std::uint64_t key_ = 0;
};

struct IndeterminateHash {
  std::size_t operator()(Indeterminate v) const noexcept {
    return std::hash<std::uint64_t>{}(v.key());
  }
};

}  // namespace jetvar
