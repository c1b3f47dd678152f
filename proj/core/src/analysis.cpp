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

#include "qlab/analysis.hpp"

#include <utility>

namespace qlab {

ClassFlags class_flags(const Quantale& A) {
  ClassFlags f;
  f.semiprime = is_semiprime(A);
  f.normal = is_normal_quantale(A);
  f.mp = is_mp_quantale(A);
  f.pf = is_pf_quantale(A);
  f.purified = is_purified(A);
  f.pp = is_pp_quantale(A);
  f.hyperarchimedean = is_hyperarchimedean(A);
  return f;
}

Analysis::Analysis(Quantale A, std::string id, AnalysisOptions opt)
    : id_(std::move(id)),
      opt_(opt),
      q_(std::move(A)),
      ret_(q_),
      pur_(purity_tables(q_)),
      vir_(vir_frame(q_)),
      rad_(radical_frame(q_)),
      above_(interval_quantale(q_, q_.radical(q_.bot()))),
      zar_(zariski_space(q_)),
      flat_(flat_space(q_)),
      vir_zar_(zariski_space(vir_.q)),
      lat_zar_(ideal_zariski_space(ret_.lattice())),
      lat_primes_(prime_spectrum_lattice(ret_.lattice())),
      flags_(class_flags(q_)) {
  const FiniteLattice& L = ret_.lattice();
  lat_flags_.normal = is_normal_lattice(L);
  lat_flags_.conormal = is_conormal_lattice(L);
  lat_flags_.stone = is_stone_lattice(L);
}

}  // namespace qlab
