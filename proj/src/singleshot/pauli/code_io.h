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

#ifndef _SINGLESHOT_PAULI_CODE_IO_H
#define _SINGLESHOT_PAULI_CODE_IO_H

#include <string>

#include "singleshot/pauli/subsystem_code.h"

namespace singleshot {

/// Formats one operator as `X:<indices>;Z:<indices>` with comma-separated increasing indices.
std::string format_pauli_sparse(const PauliOperator &p);
/// Inverse of format_pauli_sparse. Throws std::invalid_argument on malformed text.
PauliOperator parse_pauli_sparse(const std::string &text, size_t n);

/// Line-oriented code text:
///
///     <n> <k> [distance=<d>]
///     [STAB]
///     X:...;Z:...
///     [GAUGE]
///     ...
///     [LOGICAL]
///     ...
///
/// Blank lines and lines starting with '#' are ignored when parsing.
std::string write_code_text(const SubsystemCode &code);
SubsystemCode parse_code_text(const std::string &text);

}  // namespace singleshot

#endif
