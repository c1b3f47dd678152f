// Copyright 2026 The qlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLAB_TOPOLOGY_HPP_
#define QLAB_TOPOLOGY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "qlab/elem_set.hpp"
#include "qlab/lattice.hpp"
#include "qlab/quantale.hpp"

namespace qlab {

inline constexpr std::size_t kDefaultGuard = 16;

// Closed sets are the up-sets (ClosedUp) or the down-sets (ClosedDown) of
// the point order.
enum class Orientation { ClosedUp, ClosedDown };

// A finite Alexandrov space over a partial order on point indices. ids[i] is
// the element (or ideal generator) the point stands for in its source.
class FiniteSpace {
 public:
  FiniteSpace(std::vector<Elem> ids, std::vector<std::string> labels,
              std::vector<ElemSet> up, Orientation orientation);

  std::size_t size() const { return ids_.size(); }
  ElemSet all() const { return ElemSet::range(size()); }
  const std::vector<Elem>& ids() const { return ids_; }
  Elem id(std::size_t i) const { return ids_[i]; }
  std::optional<std::size_t> index_of_id(Elem id) const;
  const std::vector<std::string>& labels() const { return labels_; }
  Orientation orientation() const { return orientation_; }
  bool leq(std::size_t i, std::size_t j) const { return up_[i].contains(j); }
  ElemSet up(std::size_t i) const { return up_[i]; }
  ElemSet down(std::size_t i) const { return down_[i]; }

  ElemSet up_closure(ElemSet s) const;
  ElemSet down_closure(ElemSet s) const;
  ElemSet closure(ElemSet s) const;
  // Smallest open set containing s.
  ElemSet open_hull(ElemSet s) const;
  bool is_closed(ElemSet s) const;
  bool is_open(ElemSet s) const { return is_closed(all() - s); }
  ElemSet min_neighbourhood(std::size_t i) const { return open_hull(ElemSet::single(i)); }
  // i lies in the closure of {j}.
  bool specializes(std::size_t i, std::size_t j) const;
  // Point ids of a set of indices.
  ElemSet id_set(ElemSet s) const;
  // Indices of the points whose ids lie in s.
  ElemSet from_ids(ElemSet ids) const;

 private:
  std::vector<Elem> ids_;
  std::vector<std::string> labels_;
  std::vector<ElemSet> up_, down_;
  Orientation orientation_;
};

// Spec(A) ordered as in A; closed sets V(a) are the up-sets.
FiniteSpace zariski_space(const Quantale& A);
// Same points, closed sets are the down-sets.
FiniteSpace flat_space(const Quantale& A);
// Prime ideals of L ordered by inclusion, closed sets V(x) are up-sets.
// ids are ideal generators.
FiniteSpace ideal_zariski_space(const FiniteLattice& L);
FiniteSpace ideal_flat_space(const FiniteLattice& L);
FiniteSpace subspace(const FiniteSpace& X, ElemSet points);
// Topology generated by a family of open sets. Throws AxiomFailure if the
// result is not T0.
FiniteSpace from_open_basis(std::vector<Elem> ids, std::vector<std::string> labels,
                            const std::vector<ElemSet>& basis);

// Guarded enumerations; throw TooLarge beyond the guard.
std::vector<ElemSet> closed_sets(const FiniteSpace& X, std::size_t guard = kDefaultGuard);
std::vector<ElemSet> open_sets(const FiniteSpace& X, std::size_t guard = kDefaultGuard);
std::vector<ElemSet> clopens(const FiniteSpace& X, std::size_t guard = kDefaultGuard);

bool is_normal_space(const FiniteSpace& X, std::size_t guard = kDefaultGuard);
bool is_compact(const FiniteSpace& X);

struct SeparationFlags {
  bool t1 = false;
  bool hausdorff = false;
  bool zero_dimensional = false;
  bool totally_separated = false;
  bool totally_disconnected = false;
  bool compact = false;
  bool boolean_space = false;
};

SeparationFlags separation_flags(const FiniteSpace& X, std::size_t guard = kDefaultGuard);
bool is_connected_subset(const FiniteSpace& X, ElemSet s);

// A homeomorphism as f[i] = index in Y, or nothing.
std::optional<std::vector<std::size_t>> homeomorphic(const FiniteSpace& X, const FiniteSpace& Y,
                                                     std::size_t guard = kDefaultGuard);
// Continuity through the specialization order.
bool is_continuous(const FiniteSpace& X, const FiniteSpace& Y, const std::vector<std::size_t>& f);
// Continuity by pulling back every closed set.
bool is_continuous_by_preimage(const FiniteSpace& X, const FiniteSpace& Y,
                               const std::vector<std::size_t>& f,
                               std::size_t guard = kDefaultGuard);
bool is_homeomorphism(const FiniteSpace& X, const FiniteSpace& Y,
                      const std::vector<std::size_t>& f);

// A continuous r: X -> S (S a set of indices of X) fixing S pointwise. r[i] is
// an index of X.
std::optional<std::vector<std::size_t>> retraction_exists(const FiniteSpace& X, ElemSet s,
                                                          std::size_t guard = kDefaultGuard);

std::vector<std::string> labels(const FiniteSpace& X, ElemSet s);

}  // namespace qlab

#endif  // QLAB_TOPOLOGY_HPP_
