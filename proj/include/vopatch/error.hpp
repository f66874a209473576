/*
 * Copyright (c) 2026  The vopatch authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace vopatch {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// geometry
struct PlaneBehindCamera : Error {
  using Error::Error;
};

// imaging
struct SingularHomography : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

// autodiff
struct ShapeMismatch : Error {
  using Error::Error;
};
struct NotOnTape : Error {
  using Error::Error;
};
struct NonScalarOutput : Error {
  using Error::Error;
};

// vo
struct DegenerateNormalEquations : Error {
  using Error::Error;
};

// criteria
struct LengthMismatch : Error {
  using Error::Error;
};
struct EmptyTrajectory : Error {
  using Error::Error;
};

// navigation
struct DegeneratePath : Error {
  using Error::Error;
};

// harness
struct InsufficientGroups : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace vopatch
