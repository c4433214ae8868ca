#include "forms/chart.hpp"

#include <functional>
#include <string>

#include "common/error.hpp"

namespace jetvar {

std::vector<std::vector<int>> multi_indices(int base_dim, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < base_dim; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

bool deriv_in_range(Indeterminate v, int base_dim) {
  for (int i = 0; i < v.order(); ++i)
    if (v.deriv(i) >= base_dim) return false;
  return true;
}

}  // namespace

bool Chart::is_coordinate(Indeterminate v) const {
  switch (v.kind()) {
    case VarKind::BaseCoord: return v.index() < base_dim;
    case VarKind::ConnJet:
      return v.index() < conn_dim && v.mu() < base_dim && v.order() <= jet_order &&
             deriv_in_range(v, base_dim);
    case VarKind::MatterJet:
      return v.index() < matter_dim && v.order() <= jet_order && deriv_in_range(v, base_dim);
    default: return false;
  }
}

void Chart::require_in_chart(Indeterminate v) const {
  if (v.kind() == VarKind::AuxScalar) return;
  if (v.is_function_symbol()) {
    if (!deriv_in_range(v, base_dim) || (v.kind() == VarKind::BackgroundFn && v.mu() >= base_dim))
      throw Error(ErrorCode::IndexOutOfRange, v.to_string() + " has a base index outside the chart");
    return;
  }
  if (is_coordinate(v)) return;
  if (v.is_field_jet() && v.order() > jet_order)
    throw Error(ErrorCode::JetOrderExceeded,
                v.to_string() + " exceeds chart jet order " + std::to_string(jet_order));
  throw Error(ErrorCode::IndexOutOfRange, v.to_string() + " is not a coordinate of the chart");
}

std::vector<Indeterminate> Chart::coordinates() const {
  std::vector<Indeterminate> out;
  for (int l = 0; l < base_dim; ++l) out.push_back(Indeterminate::base(l));
  for (int ord = 0; ord <= jet_order; ++ord) {
    for (const auto& d : multi_indices(base_dim, ord)) {
      for (int r = 0; r < conn_dim; ++r)
        for (int mu = 0; mu < base_dim; ++mu) out.push_back(Indeterminate::conn(r, mu, d));
      for (int A = 0; A < matter_dim; ++A) out.push_back(Indeterminate::matter(A, d));
    }
  }
  return out;
}

}  // namespace jetvar
