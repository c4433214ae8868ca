#pragma once

#include <vector>

#include "symbolic/indeterminate.hpp"

namespace jetvar {

/// Coordinate chart on a jet manifold of the connection bundle (plus an
/// optional matter block). Coordinates are x^lambda and every field jet
/// a^r_{Lambda;mu}, z^A_Lambda with |Lambda| <= jet_order. Background and
/// gauge-parameter symbols are functions of x: they have no differentials
/// and are differentiated through the rule s_Lambda -> s_{Lambda+lambda}.
/// The auxiliary scalar t is a constant on the chart.
struct Chart {
  int base_dim = 0;
  int conn_dim = 0;
  int matter_dim = 0;
  int jet_order = 0;

  bool is_coordinate(Indeterminate v) const;
  /// Throws JetOrderExceeded / IndexOutOfRange if a field jet or base
  /// coordinate lies outside this chart.
  void require_in_chart(Indeterminate v) const;
  std::vector<Indeterminate> coordinates() const;
};

/// All sorted multi-indices over [0, base_dim) of the given length.
std::vector<std::vector<int>> multi_indices(int base_dim, int length);

}  // namespace jetvar
