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

#include "headpoint/error.hpp"

namespace headpoint {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::invalid_pose: return "invalid_pose";
    case Errc::non_monotone_time: return "non_monotone_time";
    case Errc::duplicate_id: return "duplicate_id";
    case Errc::out_of_bounds: return "out_of_bounds";
    case Errc::overlap: return "overlap";
    case Errc::protocol: return "protocol";
    case Errc::state: return "state";
    case Errc::incomplete_session: return "incomplete_session";
    case Errc::degenerate: return "degenerate";
    case Errc::parse: return "parse";
    case Errc::version: return "version";
    case Errc::metadata: return "metadata";
    case Errc::io: return "io";
  }
  return "unknown";
}

}  // namespace headpoint
