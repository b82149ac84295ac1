// Copyright 2026 The ctxcompile Authors
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

#ifndef CTXCOMPILE_SERIALIZE_H
#define CTXCOMPILE_SERIALIZE_H

#include <json.hpp>
#include <string>

#include "ctxcompile/event_graph.h"
#include "ctxcompile/graph.h"
#include "ctxcompile/ortho_rep.h"
#include "ctxcompile/quantum_sim.h"
#include "ctxcompile/theta.h"

namespace ctx {

using Json = nlohmann::json;

/// Deterministic text: object keys sorted, floats with 17 significant
/// digits (always containing '.' or an exponent), non-finite floats as
/// null. indent < 0 gives a single line.
std::string dump_json(const Json &j, int indent = 2);

Json to_json(const Graph &g);
Json to_json(const EventGraph &eg);
Json to_json(const EventLabel &label);
/// Complex entries as [re, im].
Json to_json(const OrthoRep &rep);
Json to_json(const OrthoRepReport &report);
Json to_json(const FeasibilityReport &report);
/// X is included (row-major) only with `with_matrix`.
Json to_json(const SdpSolution &solution, bool with_matrix);
Json to_json(const NoiseModel &noise);
Json to_json(const SignalingEntry &entry);
Json to_json(const SignalingSummary &summary);
/// Counts, estimates with standard errors, the S estimate and both
/// signaling tables. `g` must be the graph the record was sampled on.
Json to_json(const ExperimentRecord &record, const Graph &g);

/// Inverse of to_json(OrthoRep). Accepts real numbers in place of [re, im].
/// Throws std::invalid_argument on malformed input.
OrthoRep ortho_rep_from_json(const Json &j);

}  // namespace ctx

#endif
