/*
 * Copyright 2026 The SIG Authors.
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

#ifndef SIG_FOREST_IO_H_
#define SIG_FOREST_IO_H_

#include <string>
#include <string_view>

#include "sig/forest.h"

namespace sig {

// Forest interchange document:
//   {"feature_names":[...],"class_names":[...],"trees":[{"root":0,"nodes":[
//     {"id":0,"kind":"split","feature":2,"threshold":0.5,"left":1,"right":2},
//     {"id":1,"kind":"leaf","class_counts":[3,0]}, ...]}]}
// Thresholds carry 17 significant digits. Node ids within a tree must be
// exactly 0..n-1. Training params are not part of the document; an imported
// forest carries default params.
std::string ExportForest(const Forest& forest);
Forest ImportForest(std::string_view document);

}  // namespace sig

#endif  // SIG_FOREST_IO_H_
