/*
 *   Copyright 2026 The geu Authors
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

/**
 * @file geu.hpp
 *
 * Umbrella header for the library. The command line layer (cli.hpp) is not
 * included here.
 */

#pragma once

#include "algebra.hpp"
#include "check.hpp"
#include "decision.hpp"
#include "domain.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "measures.hpp"
#include "rational.hpp"
#include "relation.hpp"
#include "savage.hpp"
#include "situation.hpp"
#include "subset.hpp"
#include "synthesis.hpp"
#include "value.hpp"
#include "witness.hpp"
