// Copyright 2026 The nuqsim Authors
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

#ifndef NUQSIM_NUQSIM_HPP
#define NUQSIM_NUQSIM_HPP

// Umbrella header for the whole library.

#include "nuqsim/circuits.hpp"
#include "nuqsim/decomp.hpp"
#include "nuqsim/experiment.hpp"
#include "nuqsim/linalg.hpp"
#include "nuqsim/neutrino.hpp"
#include "nuqsim/qsim.hpp"
#include "nuqsim/rng.hpp"
#include "nuqsim/tolerances.hpp"

#endif  // NUQSIM_NUQSIM_HPP
