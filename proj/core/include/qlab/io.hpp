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

#ifndef QLAB_IO_HPP_
#define QLAB_IO_HPP_

#include <string>

#include "qlab/lattice.hpp"
#include "qlab/quantale.hpp"
#include "qlab/reticulation.hpp"
#include "qlab/topology.hpp"

namespace qlab {

// LAT 1 / elements / names / leq lines; '#' starts a comment. Throws
// ParseError for malformed text, and the lattice errors of
// FiniteLattice::build for well-formed non-lattices.
FiniteLattice parse_lat(const std::string& text);
// QNT 1, a LAT block (its own "LAT 1" line optional), then mult and n rows.
// Axiom violations surface as the errors of Quantale::build.
Quantale parse_qnt(const std::string& text);

std::string emit_lat(const FiniteLattice& L);
std::string emit_qnt(const Quantale& A);

// Hasse diagrams, cover edges only.
std::string emit_dot(const FiniteLattice& L, const std::string& title = "L");
// with_mult adds each element's square as an external label.
std::string emit_dot(const Quantale& A, bool with_mult, const std::string& title = "A");
std::string emit_dot(const FiniteSpace& X, const std::string& title = "X");
// A and L(A) side by side, lambda as dashed edges.
std::string emit_dot(const Reticulation& R);

// Throws InvalidArgument if the file cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace qlab

#endif  // QLAB_IO_HPP_
