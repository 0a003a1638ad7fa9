/*
   Copyright 2026 The lietype Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIETYPE_ERRORS_HPP
#define LIETYPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lietype {

/// Caller passed arguments that do not fit together (mixed fields, bad degrees, ...).
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined input, e.g. inverting zero.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A requested enumeration would exceed the configured size bound.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An internal cross-check failed: two routes that must agree did not.
class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// The numerical eigen-solver could not separate the class-matrix spectrum.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw UsageError(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw ConsistencyError(what);
}

}  // namespace lietype

#endif
