#include "symbolic/indeterminate.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace jetvar {

Indeterminate Indeterminate::make(VarKind kind, int index, int mu, std::span<const int> deriv) {
  if (index < 0 || index > kMaxIndex)
    throw Error(ErrorCode::IndexOutOfRange, "fiber index " + std::to_string(index));
  if (mu < -1 || mu >= kMaxBase)
    throw Error(ErrorCode::IndexOutOfRange, "base index " + std::to_string(mu));
  if (deriv.size() > static_cast<std::size_t>(kMaxOrder))
    throw Error(ErrorCode::JetOrderExceeded,
                "derivative order " + std::to_string(deriv.size()) + " exceeds encoding limit");
  int sorted[kMaxOrder];
  std::copy(deriv.begin(), deriv.end(), sorted);
  std::sort(sorted, sorted + deriv.size());
  std::uint64_t key = (std::uint64_t(kind) << 48) | (std::uint64_t(index) << 40) |
                      (std::uint64_t(mu + 1) << 36) | (std::uint64_t(deriv.size()) << 32);
  for (std::size_t i = 0; i < deriv.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= kMaxBase)
      throw Error(ErrorCode::IndexOutOfRange, "derivative index " + std::to_string(sorted[i]));
    key |= std::uint64_t(sorted[i]) << (28 - 4 * i);
  }
  return from_key(key);
}

Indeterminate Indeterminate::base(int lambda) {
  if (lambda < 0 || lambda >= kMaxBase)
    throw Error(ErrorCode::IndexOutOfRange, "base index " + std::to_string(lambda));
  return make(VarKind::BaseCoord, lambda, -1, {});
}

Indeterminate Indeterminate::conn(int r, int mu, std::span<const int> deriv) {
  if (mu < 0) throw Error(ErrorCode::IndexOutOfRange, "connection needs mu >= 0");
  return make(VarKind::ConnJet, r, mu, deriv);
}

Indeterminate Indeterminate::matter(int A, std::span<const int> deriv) {
  return make(VarKind::MatterJet, A, -1, deriv);
}

Indeterminate Indeterminate::background(int r, int mu, std::span<const int> deriv) {
  if (mu < 0) throw Error(ErrorCode::IndexOutOfRange, "background needs mu >= 0");
  return make(VarKind::BackgroundFn, r, mu, deriv);
}

Indeterminate Indeterminate::gauge(int r, std::span<const int> deriv) {
  return make(VarKind::GaugeParam, r, -1, deriv);
}

Indeterminate Indeterminate::aux_t() { return make(VarKind::AuxScalar, 0, -1, {}); }

std::vector<int> Indeterminate::deriv_indices() const {
  std::vector<int> out(order());
  for (int i = 0; i < order(); ++i) out[i] = deriv(i);
  return out;
}

Indeterminate Indeterminate::raised(int lambda) const {
  auto d = deriv_indices();
  d.push_back(lambda);
  return make(kind(), index(), mu(), d);
}

Indeterminate Indeterminate::underived() const { return make(kind(), index(), mu(), {}); }

std::string Indeterminate::to_string() const {
  auto deriv_text = [this] {
    std::string s = "D=(";
    for (int i = 0; i < order(); ++i) {
      if (i) s += ',';
      s += std::to_string(deriv(i));
    }
    return s + ")";
  };
  switch (kind()) {
    case VarKind::BaseCoord: return "x[" + std::to_string(index()) + "]";
    case VarKind::ConnJet:
      return "a[r=" + std::to_string(index()) + ";mu=" + std::to_string(mu()) + ";" + deriv_text() + "]";
    case VarKind::MatterJet: return "z[A=" + std::to_string(index()) + ";" + deriv_text() + "]";
    case VarKind::BackgroundFn:
      return "B[r=" + std::to_string(index()) + ";mu=" + std::to_string(mu()) + ";" + deriv_text() + "]";
    case VarKind::GaugeParam: return "xi[r=" + std::to_string(index()) + ";" + deriv_text() + "]";
    case VarKind::AuxScalar: return "t";
  }
  return "?";
}

}  // namespace jetvar
