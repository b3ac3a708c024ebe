// Copyright 2026 The ftopo Authors
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

#ifndef FTOPO_CORE_VERSION_HPP
#define FTOPO_CORE_VERSION_HPP

#include <string_view>

#ifndef FTOPO_VERSION
#define FTOPO_VERSION "0.0.0"
#endif

namespace ftopo {
inline constexpr std::string_view kToolkitVersion = FTOPO_VERSION;
}

#endif  // FTOPO_CORE_VERSION_HPP
