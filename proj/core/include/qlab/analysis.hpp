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

#ifndef QLAB_ANALYSIS_HPP_
#define QLAB_ANALYSIS_HPP_

#include <string>
#include <vector>

#include "qlab/classify.hpp"
#include "qlab/lattice.hpp"
#include "qlab/purity.hpp"
#include "qlab/quantale.hpp"
#include "qlab/reticulation.hpp"
#include "qlab/topology.hpp"

namespace qlab {

struct AnalysisOptions {
  // Largest space on which set families are enumerated.
  std::size_t guard = kDefaultGuard;
};

// Everything the theorem checks share about one quantale, computed once.
// Holds internal pointers, so it is neither copied nor moved.
class Analysis {
 public:
  explicit Analysis(Quantale A, std::string id = {}, AnalysisOptions opt = {});
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const std::string& id() const { return id_; }
  std::size_t guard() const { return opt_.guard; }

  const Quantale& q() const { return q_; }
  const Reticulation& ret() const { return ret_; }
  // L(A)
  const FiniteLattice& lat() const { return ret_.lattice(); }
  const PurityTables& purity() const { return pur_; }
  const SubQuantale& vir() const { return vir_; }
  // R(A)
  const SubQuantale& radical() const { return rad_; }
  // [rho(0))
  const Interval& above_radical() const { return above_; }

  const FiniteSpace& zariski() const { return zar_; }
  const FiniteSpace& flat() const { return flat_; }
  const FiniteSpace& vir_zariski() const { return vir_zar_; }
  const FiniteSpace& lattice_zariski() const { return lat_zar_; }
  const std::vector<PrimeIdealRecord>& lattice_primes() const { return lat_primes_; }

  const ClassFlags& flags() const { return flags_; }
  const LatticeFlags& lattice_flags() const { return lat_flags_; }

  // Indices in zariski()/flat() of a set of m-primes.
  ElemSet points(ElemSet primes) const { return zar_.from_ids(primes); }
  const std::string& name(Elem a) const { return q_.name(a); }

 private:
  std::string id_;
  AnalysisOptions opt_;
  Quantale q_;
  Reticulation ret_;
  PurityTables pur_;
  SubQuantale vir_;
  SubQuantale rad_;
  Interval above_;
  FiniteSpace zar_, flat_, vir_zar_, lat_zar_;
  std::vector<PrimeIdealRecord> lat_primes_;
  ClassFlags flags_;
  LatticeFlags lat_flags_;
};

// The class predicates without the implication assertion of classify().
ClassFlags class_flags(const Quantale& A);

}  // namespace qlab

#endif  // QLAB_ANALYSIS_HPP_
