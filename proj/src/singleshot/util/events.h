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


#ifndef _SINGLESHOT_UTIL_EVENTS_H
#define _SINGLESHOT_UTIL_EVENTS_H

#include <stdexcept>

namespace singleshot {

/// Signals a detected violation of a global constraint; the trial is discarded.
struct NonSyndromeEvent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace singleshot

#endif
