/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The headpoint Authors.
 * SPDX-License-Identifier: Apache-2.0
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

#include <stdexcept>
#include <string>

namespace headpoint {

enum class Errc {
  invalid_argument,
  invalid_pose,
  non_monotone_time,
  duplicate_id,
  out_of_bounds,
  overlap,
  protocol,
  state,
  incomplete_session,
  degenerate,
  parse,
  version,
  metadata,
  io,
};

const char* errc_name(Errc code) noexcept;

// Single exception type for the core; the C API maps code() onto hp_status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace headpoint
