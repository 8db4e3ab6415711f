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

#ifndef QSP_QSP_HPP
#define QSP_QSP_HPP

#include "qsp/born_ensemble.hpp"
#include "qsp/core_process.hpp"
#include "qsp/equivalence.hpp"
#include "qsp/errors.hpp"
#include "qsp/path_oracle.hpp"
#include "qsp/schrodinger.hpp"
#include "qsp/types.hpp"

#endif
