// Copyright 2026 The Kugiri Authors
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

#ifndef KUGIRI_KUGIRI_HPP_
#define KUGIRI_KUGIRI_HPP_

#include "kugiri/corpus.hpp"
#include "kugiri/decision_tree.hpp"
#include "kugiri/eval.hpp"
#include "kugiri/learner.hpp"
#include "kugiri/max_entropy.hpp"
#include "kugiri/model_io.hpp"
#include "kugiri/patterns.hpp"
#include "kugiri/rule_methods.hpp"
#include "kugiri/rulebase.hpp"
#include "kugiri/synthetic.hpp"

#endif  // KUGIRI_KUGIRI_HPP_
