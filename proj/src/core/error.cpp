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

#include "fusionhg/error.hpp"

namespace fusionhg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return "usage";
    case ErrorKind::label_domain: return "label-domain";
    case ErrorKind::axiom_violation: return "axiom-violation";
    case ErrorKind::invalid_table: return "invalid-table";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::numeric: return "numeric";
    case ErrorKind::internal_invariant: return "internal-invariant";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return 2;
    case ErrorKind::label_domain: return 3;
    case ErrorKind::invalid_table: return 4;
    case ErrorKind::capacity: return 5;
    case ErrorKind::numeric: return 6;
    case ErrorKind::internal_invariant: return 7;
    case ErrorKind::axiom_violation: return 8;
  }
  return 1;
}

}  // namespace fusionhg
