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

#ifndef _SINGLESHOT_ORACLE_COSET_H
#define _SINGLESHOT_ORACLE_COSET_H

#include <string>

#include "singleshot/noise/pauli_channel.h"
#include "singleshot/oracle/minimal_repair.h"
#include "singleshot/pauli/subsystem_code.h"

namespace singleshot {

enum class CosetClass { STABILIZER, GAUGE, LOGICAL, DETECTABLE };

std::string coset_class_name(CosetClass c);

/// Classifies e by dense elimination against S, G and the commutant of S:
/// DETECTABLE if it anticommutes with a stabilizer generator, else the smallest of S, G containing it,
/// else LOGICAL. Throws OracleBudgetError for n > 2048.
CosetClass coset_check(const PauliOperator &e, const SubsystemCode &code);

/// Exact failure probability of ideal correction by direct enumeration of the explicit channel.
/// Throws OracleBudgetError above `max_entries` entries and std::invalid_argument for iid channels.
double exhaustive_fail(
    const SubsystemCode &code, const PauliChannel &channel, const CorrectionTable &table, size_t max_entries = 1 << 20);

}  // namespace singleshot

#endif
