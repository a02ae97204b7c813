// Copyright 2026 The gamedecomp Authors
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

#pragma once

#include "gamedecomp/catalog.hpp"
#include "gamedecomp/classifiers.hpp"
#include "gamedecomp/decomposition.hpp"
#include "gamedecomp/equilibrium.hpp"
#include "gamedecomp/error.hpp"
#include "gamedecomp/game.hpp"
#include "gamedecomp/json_io.hpp"
#include "gamedecomp/linalg.hpp"
#include "gamedecomp/mixed_profile.hpp"
#include "gamedecomp/payoff.hpp"
#include "gamedecomp/projection.hpp"
#include "gamedecomp/strategy_space.hpp"
