// SPDX-License-Identifier: Apache-2.0
//
// beamsquint - mmWave beam-squint simulation and KPI analysis toolkit
// Copyright (C) 2026 The beamsquint authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef BEAMSQUINT_BEAMSQUINT_HPP
#define BEAMSQUINT_BEAMSQUINT_HPP

#include "array_engine.hpp"
#include "design_explorer.hpp"
#include "error.hpp"
#include "io/format.hpp"
#include "io/measurements.hpp"
#include "io/report.hpp"
#include "io/scenario.hpp"
#include "lens_engine.hpp"
#include "link_budget.hpp"
#include "pattern_core.hpp"
#include "squint_metrics.hpp"

#endif
