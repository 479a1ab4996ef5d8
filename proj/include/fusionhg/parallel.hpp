// Copyright 2026 The fusionhg Authors
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

#ifndef FUSIONHG_PARALLEL_HPP_
#define FUSIONHG_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace fusionhg {

// Thread count used when a caller passes 0: $FUSIONHG_THREADS if set and
// positive, otherwise std::thread::hardware_concurrency().
unsigned default_threads();

// Runs body(begin, end) over contiguous blocks of [0, count) on up to
// `threads` threads. The first exception thrown by any block is rethrown.
void parallel_for_blocks(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace fusionhg

#endif  // FUSIONHG_PARALLEL_HPP_
