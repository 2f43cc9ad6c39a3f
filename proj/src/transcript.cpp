// Copyright 2026 The hechordal Authors
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

#include <cmath>
#include <sstream>

#include "hechordal/protocol.hpp"
#include "json.hpp"

namespace hechordal {

std::string Transcript::to_jsonl(bool include_timing) const {
  std::ostringstream out;
  for (const auto& r : rounds) {
    nlohmann::ordered_json line;
    line["round"] = r.round;
    line["scores"] = r.scores;
    line["mask"] = r.mask;
    line["surviving"] = r.surviving;
    line["bytes_sent"] = r.bytes_sent;
    line["bytes_received"] = r.bytes_received;
    line["millis"] = include_timing ? std::round(r.millis * 1000.0) / 1000.0 : 0.0;
    out << line.dump() << '\n';
  }
  if (verdict) {
    nlohmann::ordered_json line;
    line["verdict"] = outcome_name(verdict->outcome);
    line["rounds_used"] = verdict->rounds_used;
    if (verdict->outcome == Outcome::aborted) {
      line["reason"] = abort_reason_name(verdict->reason);
      line["detail"] = verdict->detail;
    }
    out << line.dump() << '\n';
  }
  return out.str();
}

}  // namespace hechordal
