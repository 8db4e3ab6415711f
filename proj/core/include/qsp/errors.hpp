// Copyright 2026 The QSP Authors
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

#ifndef QSP_ERRORS_HPP
#define QSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsp {

/// Raised by classify_dynamics for a nonnegative matrix that falls in none of the four regimes.
struct UnclassifiedDynamics : std::domain_error {
    using std::domain_error::domain_error;
};

/// The exhaustive path enumeration would visit more weighted paths than its configured cap.
struct OracleBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural claim about the event matrix was contradicted by the constructed matrices.
struct EnsembleFalsified : std::logic_error {
    using std::logic_error::logic_error;
};

/// No Hamiltonian reproduces the given transition matrix.
struct NoEquivalentHamiltonian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace qsp

#endif
