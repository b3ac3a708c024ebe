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

#ifndef FTOPO_CORE_ERRORS_HPP
#define FTOPO_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ftopo {

// Base of every exception thrown by the core. The C API maps each subclass
// onto one ftopo_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid graph construction: self-loop, duplicate edge, endpoint out of range.
class GraphError : public Error {
 public:
  using Error::Error;
};

// Vertex index outside [0, vertex_count).
class IndexError : public Error {
 public:
  using Error::Error;
};

// Family or theorem parameters outside their stated domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (family spec, edge list, expectations file).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Unknown theorem id, family name, index name.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Invalid sweep configuration, rejected before any evaluation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// An exact value does not fit in the signed 64-bit accumulator.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace ftopo

#endif  // FTOPO_CORE_ERRORS_HPP
