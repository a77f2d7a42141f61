// Copyright 2026 The lingate Authors
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

#include <functional>

namespace lingate::detail {

/// Runs task(0..count-1) on up to `threads` workers (0 = hardware count).
/// The first exception thrown by any task is rethrown after all workers join.
void run_indexed(int count, int threads, const std::function<void(int)>& task);

}  // namespace lingate::detail
