/*
 * Copyright 2026 The coalition-var Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef COALITION_VAR_COALITION_VAR_HPP
#define COALITION_VAR_COALITION_VAR_HPP

#include "coalition_var/analysis.hpp"
#include "coalition_var/coalition.hpp"
#include "coalition_var/error.hpp"
#include "coalition_var/exact.hpp"
#include "coalition_var/game.hpp"
#include "coalition_var/io.hpp"
#include "coalition_var/properties.hpp"
#include "coalition_var/random.hpp"
#include "coalition_var/sample_stats.hpp"
#include "coalition_var/sampling.hpp"
#include "coalition_var/sweep.hpp"
#include "coalition_var/weighting.hpp"

#endif  // COALITION_VAR_COALITION_VAR_HPP
