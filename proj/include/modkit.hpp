/*
 * Copyright 2026 The modkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Umbrella header for the library (the CLI lives in modkit/app.hpp).

#include "modkit/analytics.hpp"
#include "modkit/corpus.hpp"
#include "modkit/csv.hpp"
#include "modkit/dataset_io.hpp"
#include "modkit/error.hpp"
#include "modkit/eval.hpp"
#include "modkit/experiment.hpp"
#include "modkit/models.hpp"
#include "modkit/random.hpp"
#include "modkit/textprep.hpp"
#include "modkit/utf8.hpp"
#include "modkit/vectorize.hpp"
#include "modkit/wordpiece.hpp"
