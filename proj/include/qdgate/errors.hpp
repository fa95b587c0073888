// Copyright 2026 The qdgate Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qdgate {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input matrix fails a Hermiticity / trace / positivity requirement.
class InvalidOperatorError : public Error {
 public:
  using Error::Error;
};

/// Dressed frame requested at Omega = Delta = 0.
class UndefinedFrameError : public Error {
 public:
  using Error::Error;
};

/// Integration or root-finding failure. Carries the simulation time when
/// the failure is tied to a point of the trajectory.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double time_ps = 0.0)
      : Error(what), time_ps_(time_ps) {}
  double time_ps() const noexcept { return time_ps_; }

 private:
  double time_ps_;
};

/// Bad configuration: unknown key, wrong type, out-of-range physical value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdgate
