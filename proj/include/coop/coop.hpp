// Copyright 2026 The Coopetition Authors
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

// Umbrella header.

#ifndef COOP_COOP_HPP_
#define COOP_COOP_HPP_

#include "coop/algebraic_nash.hpp"
#include "coop/classify.hpp"
#include "coop/equilibria.hpp"
#include "coop/error.hpp"
#include "coop/game.hpp"
#include "coop/generators.hpp"
#include "coop/io.hpp"
#include "coop/lp.hpp"
#include "coop/nash.hpp"
#include "coop/polynomial.hpp"
#include "coop/rational.hpp"
#include "coop/tmcoe.hpp"

#endif  // COOP_COOP_HPP_
