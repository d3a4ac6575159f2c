// Copyright 2026 The obsim Authors
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

#pragma once

#include "obsim/core/errors.hpp"
#include "obsim/core/model.hpp"
#include "obsim/core/random.hpp"
#include "obsim/core/state.hpp"
#include "obsim/exemplars/elastic.hpp"
#include "obsim/exemplars/solid.hpp"
#include "obsim/exemplars/wood.hpp"
#include "obsim/machines/quantum_machine.hpp"
#include "obsim/machines/sawtooth.hpp"
#include "obsim/product/ndc_theorem.hpp"
#include "obsim/product/product_observation.hpp"
#include "obsim/stats/sweep.hpp"
#include "obsim/stats/trials.hpp"
#include "obsim/stats/wilson.hpp"
#include "obsim/taxonomy/suite.hpp"
#include "obsim/taxonomy/taxonomy.hpp"
