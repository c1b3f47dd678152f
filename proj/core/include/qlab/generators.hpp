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

#ifndef QLAB_GENERATORS_HPP_
#define QLAB_GENERATORS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlab/quantale.hpp"

namespace qlab {

// A poset on {0, ..., n-1}; less holds the strict pairs (i, j), i < j in the
// order. Need not be transitively closed.
struct Poset {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> less;
};

// Ideals of Z_n: divisors d of n in increasing order, d = n written (0).
Quantale gen_zn(unsigned n);
// The frame of down-sets of a poset under inclusion, multiplication = meet.
// Down-sets are named by their points (letters a, b, ...), the empty one 0.
FiniteLattice downset_lattice(const Poset& P);
Quantale gen_downset_frame(const Poset& P);
// The k-element chain 0 < 1 < ... < k-1 (named 0, c1, ..., 1).
FiniteLattice chain_lattice(std::size_t k);

// Named fixtures: TWO, CHAIN3, BOOL4, WEDGE5, Z12.
Quantale fixture(const std::string& name);
const std::vector<std::string>& fixture_names();

// All posets on n points up to isomorphism, naturally labelled.
std::vector<Poset> posets_up_to_iso(std::size_t n);

// Every quantale on L, in a fixed order, until the visitor returns false or
// cap tables have been produced. Returns how many were produced.
std::size_t enumerate_quantales(const FiniteLattice& L, std::size_t cap,
                                const std::function<bool(Quantale)>& visit);
std::vector<Quantale> enumerate_quantales(const FiniteLattice& L, std::size_t cap);

// Seeded search for a valid table. Nothing if the lattice carries no
// quantale; throws BudgetExhausted if budget candidate tables run out first.
std::optional<Quantale> random_quantale(const FiniteLattice& L, std::uint64_t seed,
                                        std::size_t budget = 100000);

}  // namespace qlab

#endif  // QLAB_GENERATORS_HPP_
