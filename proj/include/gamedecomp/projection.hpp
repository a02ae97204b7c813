// Copyright 2026 The gamedecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Orthogonal projections onto the standard subspaces of the game space.
//
// Notation used below (all operators are orthogonal projections under the
// counting-measure inner product):
//
//   T_l f      average of a tensor along axis l, broadcast back over the axis
//   Lambda f   (T_1 f^(1), ..., T_n f^(n))          projector onto E
//   Avg f      (mean_i f^(i), ..., mean_i f^(i))    projector onto C
//   Q v        prod_l (I - T_l) v                   full-interaction part of v
//
// Subspaces: C common interest, Z zero-sum, N normalized, E non-strategic.

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gamedecomp/error.hpp"
#include "gamedecomp/game.hpp"

namespace gamedecomp {

// ---------------------------------------------------------------------------
// Tensor operators.

// T_axis: replaces every entry by the mean of its fiber along `axis`.
inline Tensor axis_average(const StrategySpace& space, const Tensor& v, std::size_t axis) {
  Tensor out(v.size());
  for_each_fiber(space, axis, [&](std::size_t base, std::size_t stride, std::size_t length) {
    double sum = 0.0;
    for (std::size_t k = 0; k < length; ++k) sum += v[base + k * stride];
    const double mean = sum / static_cast<double>(length);
    for (std::size_t k = 0; k < length; ++k) out[base + k * stride] = mean;
  });
  return out;
}

// (I - T_axis) v.
inline Tensor remove_axis_average(const StrategySpace& space, const Tensor& v, std::size_t axis) {
  Tensor out(v.size());
  for_each_fiber(space, axis, [&](std::size_t base, std::size_t stride, std::size_t length) {
    double sum = 0.0;
    for (std::size_t k = 0; k < length; ++k) sum += v[base + k * stride];
    const double mean = sum / static_cast<double>(length);
    for (std::size_t k = 0; k < length; ++k) out[base + k * stride] = v[base + k * stride] - mean;
  });
  return out;
}

// Q v = prod_l (I - T_l) v. The factors commute.
inline Tensor full_interaction(const StrategySpace& space, Tensor v) {
  for (std::size_t l = 0; l < space.players(); ++l) v = remove_axis_average(space, v, l);
  return v;
}

// Hoeffding (functional ANOVA) term for the coordinate subset `mask`:
//   prod_{l in mask} (I - T_l) prod_{l not in mask} T_l v.
// The term does not depend on any coordinate outside the mask, and the terms
// over all 2^n masks sum back to v.
inline Tensor anova_term(const StrategySpace& space, Tensor v, unsigned long mask) {
  for (std::size_t l = 0; l < space.players(); ++l) {
    v = (mask >> l & 1UL) ? remove_axis_average(space, v, l) : axis_average(space, v, l);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Closed-form projectors.

inline Game project_E(const Game& f) {
  std::vector<Tensor> out(f.players());
  for (std::size_t i = 0; i < f.players(); ++i) out[i] = axis_average(f.space(), f.payoff(i), i);
  return Game(f.space(), std::move(out));
}

inline Game project_N(const Game& f) {
  std::vector<Tensor> out(f.players());
  for (std::size_t i = 0; i < f.players(); ++i) {
    out[i] = remove_axis_average(f.space(), f.payoff(i), i);
  }
  return Game(f.space(), std::move(out));
}

inline Tensor player_average(const Game& f) {
  Tensor mean(f.profile_count(), 0.0);
  for (const Tensor& t : f.payoffs()) {
    for (std::size_t s = 0; s < mean.size(); ++s) mean[s] += t[s];
  }
  const double n = static_cast<double>(f.players());
  for (double& x : mean) x /= n;
  return mean;
}

inline Game project_C(const Game& f) { return Game::common(f.space(), player_average(f)); }

inline Game project_Z(const Game& f) {
  const Tensor mean = player_average(f);
  std::vector<Tensor> out = f.payoffs();
  for (Tensor& t : out) {
    for (std::size_t s = 0; s < t.size(); ++s) t[s] -= mean[s];
  }
  return Game(f.space(), std::move(out));
}

// Projection onto N ∩ C: the player average followed by Q. Q acts the same
// way on every component, so it commutes with the averaging map and the
// composition is again an orthogonal projection.
inline Game project_NC(const Game& f) {
  return Game::common(f.space(), full_interaction(f.space(), player_average(f)));
}

// ---------------------------------------------------------------------------
// Constraint-kernel projector.
//
// A game is flattened player-major: coordinate i * |S| + s holds f^(i)(s).

struct LinearFunctional {
  std::vector<std::pair<std::size_t, double>> terms;
};

class ConstraintSet {
 public:
  explicit ConstraintSet(StrategySpace space) : space_(std::move(space)) {}

  const StrategySpace& space() const noexcept { return space_; }
  const std::vector<LinearFunctional>& functionals() const noexcept { return functionals_; }
  std::size_t size() const noexcept { return functionals_.size(); }
  std::size_t dimension() const noexcept { return space_.players() * space_.profile_count(); }

  void add(LinearFunctional functional) {
    for (const auto& [coord, coef] : functional.terms) {
      if (coord >= dimension()) throw InvalidInput("constraint coordinate out of range");
      (void)coef;
    }
    functionals_.push_back(std::move(functional));
  }

  ConstraintSet& append(const ConstraintSet& other) {
    require_same_shape(space_, other.space_);
    functionals_.insert(functionals_.end(), other.functionals_.begin(), other.functionals_.end());
    return *this;
  }

  std::size_t coord(std::size_t player, std::size_t profile) const {
    return player * space_.profile_count() + profile;
  }

  // sum_i g^(i)(s) = 0 for every s.
  static ConstraintSet zero_sum(const StrategySpace& space) {
    ConstraintSet set(space);
    for (std::size_t s = 0; s < space.profile_count(); ++s) {
      LinearFunctional fn;
      for (std::size_t i = 0; i < space.players(); ++i) fn.terms.emplace_back(set.coord(i, s), 1.0);
      set.add(std::move(fn));
    }
    return set;
  }

  // g^(i)(s) = g^(0)(s) for every i > 0 and s.
  static ConstraintSet common_interest(const StrategySpace& space) {
    ConstraintSet set(space);
    for (std::size_t i = 1; i < space.players(); ++i) {
      for (std::size_t s = 0; s < space.profile_count(); ++s) {
        set.add({{{set.coord(i, s), 1.0}, {set.coord(0, s), -1.0}}});
      }
    }
    return set;
  }

  // Own-axis sums of g^(i) vanish for every opponent profile.
  static ConstraintSet normalized(const StrategySpace& space) {
    ConstraintSet set(space);
    for (std::size_t i = 0; i < space.players(); ++i) {
      for_each_fiber(space, i, [&](std::size_t base, std::size_t stride, std::size_t length) {
        LinearFunctional fn;
        for (std::size_t k = 0; k < length; ++k) fn.terms.emplace_back(set.coord(i, base + k * stride), 1.0);
        set.add(std::move(fn));
      });
    }
    return set;
  }

  // g^(i) constant along the own axis.
  static ConstraintSet non_strategic(const StrategySpace& space) {
    ConstraintSet set(space);
    for (std::size_t i = 0; i < space.players(); ++i) {
      for_each_fiber(space, i, [&](std::size_t base, std::size_t stride, std::size_t length) {
        for (std::size_t k = 1; k < length; ++k) {
          set.add({{{set.coord(i, base + k * stride), 1.0}, {set.coord(i, base), -1.0}}});
        }
      });
    }
    return set;
  }

 private:
  StrategySpace space_;
  std::vector<LinearFunctional> functionals_;
};

// Size caps for the dense constraint factorization.
struct ProjectorLimits {
  std::size_t max_payoff_entries = 50'000;
  std::size_t max_constraint_cells = 25'000'000;
};

// Orthogonal projector onto the common kernel of a constraint set:
//   P f = f - U U^T f,
// where U is an orthonormal basis of the constraint row space obtained from a
// column-pivoted Householder QR of the transposed constraint matrix.
class KernelProjector {
 public:
  explicit KernelProjector(const ConstraintSet& constraints, ProjectorLimits limits = {})
      : space_(constraints.space()) {
    const std::size_t dim = constraints.dimension();
    if (dim > limits.max_payoff_entries) {
      throw CapacityExceeded("game has " + std::to_string(dim) + " payoff entries; the dense "
                             "projector is capped at " + std::to_string(limits.max_payoff_entries) +
                             ", use a smaller game");
    }
    const std::size_t rows = constraints.size();
    if (rows != 0 && dim > limits.max_constraint_cells / rows) {
      throw CapacityExceeded("constraint matrix of " + std::to_string(rows) + " x " +
                             std::to_string(dim) + " exceeds the configured cap of " +
                             std::to_string(limits.max_constraint_cells) + " cells, use a smaller game");
    }
    if (rows == 0) return;
    Eigen::MatrixXd at = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                               static_cast<Eigen::Index>(rows));
    for (std::size_t r = 0; r < rows; ++r) {
      for (const auto& [c, coef] : constraints.functionals()[r].terms) {
        at(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r)) += coef;
      }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(at);
    qr.setThreshold(1e-10);
    const Eigen::Index rank = qr.rank();
    basis_ = qr.householderQ() * Eigen::MatrixXd::Identity(at.rows(), rank);
  }

  std::size_t rank() const noexcept { return static_cast<std::size_t>(basis_.cols()); }
  const StrategySpace& space() const noexcept { return space_; }

  Game operator()(const Game& f) const {
    require_same_shape(space_, f.space());
    const std::size_t m = f.profile_count();
    Eigen::VectorXd x(static_cast<Eigen::Index>(f.players() * m));
    for (std::size_t i = 0; i < f.players(); ++i) {
      for (std::size_t s = 0; s < m; ++s) x(static_cast<Eigen::Index>(i * m + s)) = f(i, s);
    }
    if (basis_.cols() > 0) x -= basis_ * (basis_.transpose() * x);
    std::vector<Tensor> out(f.players(), Tensor(m));
    for (std::size_t i = 0; i < f.players(); ++i) {
      for (std::size_t s = 0; s < m; ++s) out[i][s] = x(static_cast<Eigen::Index>(i * m + s));
    }
    return Game(f.space(), std::move(out));
  }

 private:
  StrategySpace space_;
  Eigen::MatrixXd basis_;
};

inline Game generic_project(const ConstraintSet& constraints, const Game& f,
                            ProjectorLimits limits = {}) {
  return KernelProjector(constraints, limits)(f);
}

// ---------------------------------------------------------------------------
// Named subspaces and a uniform projector handle.

enum class Subspace { kC, kZ, kN, kE, kNC, kNZ };

inline const char* to_string(Subspace s) {
  switch (s) {
    case Subspace::kC: return "C";
    case Subspace::kZ: return "Z";
    case Subspace::kN: return "N";
    case Subspace::kE: return "E";
    case Subspace::kNC: return "NC";
    case Subspace::kNZ: return "NZ";
  }
  return "?";
}

inline ConstraintSet constraints_for(Subspace s, const StrategySpace& space) {
  switch (s) {
    case Subspace::kC: return ConstraintSet::common_interest(space);
    case Subspace::kZ: return ConstraintSet::zero_sum(space);
    case Subspace::kN: return ConstraintSet::normalized(space);
    case Subspace::kE: return ConstraintSet::non_strategic(space);
    case Subspace::kNC: return ConstraintSet::normalized(space).append(ConstraintSet::common_interest(space));
    case Subspace::kNZ: return ConstraintSet::normalized(space).append(ConstraintSet::zero_sum(space));
  }
  throw InvalidInput("unknown subspace");
}

inline Game project_NZ(const Game& f, ProjectorLimits limits = {}) {
  return generic_project(constraints_for(Subspace::kNZ, f.space()), f, limits);
}

enum class ProjectorKind { kE, kN, kC, kZ, kNC, kGeneric };

// Either one of the closed forms above or a constraint-kernel projector.
class Projector {
 public:
  static Projector closed_form(ProjectorKind kind) {
    if (kind == ProjectorKind::kGeneric) throw InvalidInput("generic projector needs constraints");
    return Projector(kind, nullptr);
  }
  static Projector generic(const ConstraintSet& constraints, ProjectorLimits limits = {}) {
    return Projector(ProjectorKind::kGeneric, std::make_shared<const KernelProjector>(constraints, limits));
  }
  // Closed form where one exists; N ∩ Z always goes through the kernel projector.
  static Projector for_subspace(Subspace s, const StrategySpace& space) {
    switch (s) {
      case Subspace::kC: return closed_form(ProjectorKind::kC);
      case Subspace::kZ: return closed_form(ProjectorKind::kZ);
      case Subspace::kN: return closed_form(ProjectorKind::kN);
      case Subspace::kE: return closed_form(ProjectorKind::kE);
      case Subspace::kNC: return closed_form(ProjectorKind::kNC);
      case Subspace::kNZ: return generic(constraints_for(s, space));
    }
    throw InvalidInput("unknown subspace");
  }

  ProjectorKind kind() const noexcept { return kind_; }

  Game operator()(const Game& f) const {
    switch (kind_) {
      case ProjectorKind::kE: return project_E(f);
      case ProjectorKind::kN: return project_N(f);
      case ProjectorKind::kC: return project_C(f);
      case ProjectorKind::kZ: return project_Z(f);
      case ProjectorKind::kNC: return project_NC(f);
      case ProjectorKind::kGeneric: return (*kernel_)(f);
    }
    throw InternalConsistencyError("unhandled projector kind");
  }

 private:
  Projector(ProjectorKind kind, std::shared_ptr<const KernelProjector> kernel)
      : kind_(kind), kernel_(std::move(kernel)) {}

  ProjectorKind kind_;
  std::shared_ptr<const KernelProjector> kernel_;
};

}  // namespace gamedecomp
