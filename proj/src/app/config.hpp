#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cs/chern_simons.hpp"

namespace jetvar {

struct AlgebraSpec {
  std::string name;  // builtin name, or the optional label of an explicit algebra
  bool builtin = true;
  int dim = 0;
  std::vector<StructureConstant> entries;
};

struct InvariantSpec {
  enum class Kind { Killing, U1Su2Cubic, Unit, Explicit };
  Kind kind = Kind::Killing;
  int degree = 0;
  std::vector<std::pair<std::vector<int>, Rational>> entries;
  bool symmetrize = false;
};

struct InvariantSectorSpec {
  bool enabled = false;
  bool builtin_model = false;  // the charged doublet
  int matter_dim = 0;
  std::string density;
  std::vector<std::pair<int, std::string>> variations;
};

struct RunConfig {
  AlgebraSpec algebra;
  InvariantSpec invariant;
  int k = 2;
  Background background = Background::Zero;
  Rational h{1};
  int jet_order = 3;
  bool gauge_zero = false;
  InvariantSectorSpec sector;
  int selftest_instances = 120;
  std::vector<int> selftest_dims{1, 2, 3};

  int matter_dim() const { return sector.enabled ? sector.matter_dim : 0; }
  /// "algebra=.. dim=.. k=.." summary line.
  std::string summary() const;
};

/// Parses a JSON document. Syntax errors carry line and column; schema
/// errors carry the JSON pointer of the offending value. Both raise
/// ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

/// Builds and validates the algebra (AntisymmetryViolation, JacobiViolation).
LieAlgebraData build_algebra(const AlgebraSpec& spec);
/// Builds the tensor of degree k (SymmetryViolation for an unsymmetrized
/// non-symmetric explicit tensor).
InvariantTensor build_invariant(const InvariantSpec& spec, const LieAlgebraData& g, int k);

CSData build_cs(const RunConfig& cfg);

}  // namespace jetvar
