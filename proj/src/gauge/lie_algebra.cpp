#include "gauge/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "common/error.hpp"

namespace jetvar {

namespace {

std::string triple(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

}  // namespace

bool LieAlgebraData::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v.is_zero(); });
}

LieAlgebraData LieAlgebraData::from_dense(int dim, std::vector<Rational> c, std::string name) {
  if (dim < 1 || dim > 64) throw Error(ErrorCode::InvalidArgument, "algebra dimension " + std::to_string(dim));
  if (c.size() != static_cast<std::size_t>(dim) * dim * dim)
    throw Error(ErrorCode::InvalidArgument, "structure constant table has wrong size");
  LieAlgebraData g;
  g.dim_ = dim;
  g.c_ = std::move(c);
  g.name_ = std::move(name);
  for (int r = 0; r < dim; ++r)
    for (int p = 0; p < dim; ++p)
      for (int q = p; q < dim; ++q)
        if (g.c(r, p, q) != -g.c(r, q, p))
          throw Error(ErrorCode::AntisymmetryViolation,
                      "c^" + std::to_string(r) + "_{" + std::to_string(p) + std::to_string(q) +
                          "} != -c^" + std::to_string(r) + "_{" + std::to_string(q) + std::to_string(p) + "}");
  // Jacobi: sum_s c^s_{pq} c^r_{st} + c^s_{qt} c^r_{sp} + c^s_{tp} c^r_{sq} = 0
  for (int p = 0; p < dim; ++p)
    for (int q = p + 1; q < dim; ++q)
      for (int t = q + 1; t < dim; ++t)
        for (int r = 0; r < dim; ++r) {
          Rational sum;
          for (int s = 0; s < dim; ++s) {
            sum += g.c(s, p, q) * g.c(r, s, t);
            sum += g.c(s, q, t) * g.c(r, s, p);
            sum += g.c(s, t, p) * g.c(r, s, q);
          }
          if (!sum.is_zero())
            throw Error(ErrorCode::JacobiViolation, "triple " + triple(p, q, t) + " component r=" +
                                                        std::to_string(r) + " residual " + sum.to_string());
        }
  return g;
}

LieAlgebraData load_lie_algebra(int dim, const std::vector<StructureConstant>& entries, std::string name) {
  if (dim < 1 || dim > 64) throw Error(ErrorCode::InvalidArgument, "algebra dimension " + std::to_string(dim));
  std::vector<Rational> c(static_cast<std::size_t>(dim) * dim * dim);
  for (const auto& e : entries) {
    if (e.r < 0 || e.p < 0 || e.q < 0 || e.r >= dim || e.p >= dim || e.q >= dim)
      throw Error(ErrorCode::IndexOutOfRange, "structure constant index " + triple(e.r, e.p, e.q));
    c[(static_cast<std::size_t>(e.r) * dim + e.p) * dim + e.q] = e.value;
  }
  return LieAlgebraData::from_dense(dim, std::move(c), std::move(name));
}

LieAlgebraData direct_sum(const LieAlgebraData& a, const LieAlgebraData& b) {
  int n = a.dim() + b.dim();
  std::vector<Rational> c(static_cast<std::size_t>(n) * n * n);
  auto at = [n](int r, int p, int q) { return (static_cast<std::size_t>(r) * n + p) * n + q; };
  for (int r = 0; r < a.dim(); ++r)
    for (int p = 0; p < a.dim(); ++p)
      for (int q = 0; q < a.dim(); ++q) c[at(r, p, q)] = a.c(r, p, q);
  int o = a.dim();
  for (int r = 0; r < b.dim(); ++r)
    for (int p = 0; p < b.dim(); ++p)
      for (int q = 0; q < b.dim(); ++q) c[at(r + o, p + o, q + o)] = b.c(r, p, q);
  return LieAlgebraData::from_dense(n, std::move(c), a.name() + "+" + b.name());
}

LieAlgebraData builtin_algebra(const std::string& name) {
  auto plus = name.find('+');
  if (plus != std::string::npos)
    return direct_sum(builtin_algebra(name.substr(0, plus)), builtin_algebra(name.substr(plus + 1)));
  if (name == "u1") return LieAlgebraData::from_dense(1, {Rational(0)}, "u1");
  if (name.rfind("u1^", 0) == 0) {
    int m = 0;
    try {
      m = std::stoi(name.substr(3));
    } catch (...) {
      throw Error(ErrorCode::ConfigError, "bad algebra name '" + name + "'");
    }
    if (m < 1 || m > 64) throw Error(ErrorCode::ConfigError, "bad algebra name '" + name + "'");
    return LieAlgebraData::from_dense(m, std::vector<Rational>(static_cast<std::size_t>(m) * m * m), name);
  }
  if (name == "su2" || name == "so3") {
    // c^r_{pq} = epsilon_{rpq}
    std::vector<Rational> c(27);
    auto set = [&](int r, int p, int q, int v) { c[(r * 3 + p) * 3 + q] = Rational(v); };
    const int perms[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& e : perms) {
      set(e[0], e[1], e[2], 1);
      set(e[0], e[2], e[1], -1);
    }
    return LieAlgebraData::from_dense(3, std::move(c), name);
  }
  throw Error(ErrorCode::ConfigError, "unknown algebra '" + name + "'");
}

RationalMatrix killing_form(const LieAlgebraData& g) {
  int m = g.dim();
  RationalMatrix k(m, std::vector<Rational>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Rational sum;
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
          const Rational& x = g.c(p, a, q);
          if (x.is_zero()) continue;
          sum += x * g.c(q, b, p);
        }
      k[a][b] = sum;
    }
  return k;
}

// --- InvariantTensor ------------------------------------------------------------

InvariantTensor::InvariantTensor(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 1 || degree < 1) throw Error(ErrorCode::InvalidArgument, "tensor shape");
  std::size_t n = 1;
  for (int i = 0; i < degree; ++i) n *= static_cast<std::size_t>(dim);
  data_.assign(n, Rational(0));
}

std::size_t InvariantTensor::flat(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw Error(ErrorCode::InvalidArgument, "tensor index has wrong length");
  std::size_t f = 0;
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw Error(ErrorCode::IndexOutOfRange, "tensor index " + std::to_string(i));
    f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return f;
}

void InvariantTensor::set_symmetric(std::vector<int> idx, const Rational& v) {
  std::sort(idx.begin(), idx.end());
  do {
    set(idx, v);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

InvariantTensor InvariantTensor::scaled(const Rational& s) const {
  InvariantTensor out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

std::vector<std::pair<std::vector<int>, Rational>> InvariantTensor::nonzero() const {
  std::vector<std::pair<std::vector<int>, Rational>> out;
  std::vector<int> idx(degree_, 0);
  for (std::size_t f = 0; f < data_.size(); ++f) {
    if (!data_[f].is_zero()) out.emplace_back(idx, data_[f]);
    for (int i = degree_ - 1; i >= 0; --i) {
      if (++idx[i] < dim_) break;
      idx[i] = 0;
    }
  }
  return out;
}

bool InvariantTensor::is_symmetric() const {
  try {
    require_symmetric();
  } catch (const Error&) {
    return false;
  }
  return true;
}

void InvariantTensor::require_symmetric() const {
  for (const auto& [idx, v] : nonzero()) {
    std::vector<int> perm = idx;
    std::sort(perm.begin(), perm.end());
    do {
      if (at(perm) != v) {
        std::ostringstream os;
        os << "b(";
        for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
        os << ") = " << v.to_string() << " but b(";
        for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? "," : "") << perm[i];
        os << ") = " << at(perm).to_string();
        throw Error(ErrorCode::SymmetryViolation, os.str());
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

InvariantTensor tensor_from_matrix(const RationalMatrix& m) {
  int d = static_cast<int>(m.size());
  InvariantTensor b(d, 2);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) b.set({i, j}, m[i][j]);
  return b;
}

std::vector<InvarianceResidual> invariance_residuals(const LieAlgebraData& g, const InvariantTensor& b) {
  if (b.dim() != g.dim()) throw Error(ErrorCode::InvalidArgument, "tensor and algebra dimensions differ");
  std::vector<InvarianceResidual> out;
  int m = g.dim(), k = b.degree();
  std::vector<int> s(k, 0);
  while (true) {
    for (int p = 0; p < m; ++p) {
      Rational sum;
      for (int j = 0; j < k; ++j) {
        std::vector<int> idx = s;
        for (int r = 0; r < m; ++r) {
          const Rational& c = g.c(r, p, s[j]);
          if (c.is_zero()) continue;
          idx[j] = r;
          sum += b.at(idx) * c;
        }
      }
      if (!sum.is_zero()) {
        std::vector<int> where{p};
        where.insert(where.end(), s.begin(), s.end());
        out.push_back({where, sum});
      }
    }
    int i = k - 1;
    while (i >= 0 && ++s[i] == m) s[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

InvariantTensor u1_su2_cubic(const LieAlgebraData& g) {
  if (g.dim() != 4) throw Error(ErrorCode::ConfigError, "u1_su2_cubic needs the 4-dimensional u1+su2");
  RationalMatrix kappa = killing_form(g);
  InvariantTensor b(4, 3);
  b.set({0, 0, 0}, Rational(1));
  for (int i = 1; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      if (!kappa[i][j].is_zero()) b.set_symmetric({0, i, j}, kappa[i][j]);
  return b;
}

}  // namespace jetvar
