// Copyright 2026 The Singleshot Authors
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


#ifndef _SINGLESHOT_COLEX_BUILDERS_H
#define _SINGLESHOT_COLEX_BUILDERS_H

#include "singleshot/colex/colex.h"

namespace singleshot {

/// Tetrahedral complex of distance d (odd, at least 3) with four free boundary regions.
DualComplex tetrahedral_complex(size_t d);
/// Closed complex on a 3-torus of linear size L (even, at least 4).
DualComplex torus_complex(size_t L);
/// Slab between two red boundary planes, periodic in-plane with period L (at least 4).
/// Both regions are frozen; `layers` sets the thickness.
DualComplex frozen_slab_complex(size_t L, size_t layers);
/// Two copies of the complex with corresponding external vertices identified and made internal.
DualComplex glue_with_mirror(const DualComplex &complex);

Colex build_tetrahedral(size_t d);
Colex build_closed_3torus(size_t L);
Colex build_frozen_slab(size_t L, size_t layers);
Colex build_glued_tetrahedral(size_t d);

/// Builds a colex by family name: "tetrahedral" (size = d), "torus" (size = L),
/// "frozen-slab" (size = L, one layer) or "glued-tetrahedral" (size = d).
Colex build_colex_family(const std::string &family, size_t size);

}  // namespace singleshot

#endif
