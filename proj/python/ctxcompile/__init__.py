# Copyright 2026 The ctxcompile Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independence number, Lovasz theta and two-point contextuality experiments."""

from ._core import (
    DEFAULT_ALPHA_LIMIT,
    DEFAULT_TOLERANCE,
    MAX_ALPHA_CAPACITY,
    EventGraph,
    ExtractionError,
    Graph,
    OrthoRep,
    ParseError,
    SdpSolution,
    SizeLimitError,
    brute_force_alpha,
    build_two_point_graph,
    catalog_entries,
    catalog_graph,
    certify,
    complement,
    complete_graph,
    cycle_graph,
    emit_graph,
    empty_graph,
    exact_S,
    expand_weighted,
    extract_ortho_rep,
    independence_number,
    joint_probs,
    kcbs_rep,
    max_noncontextual_value,
    odd_cycle_theta,
    parse_graph,
    petersen_graph,
    run_experiment,
    stream_seed,
    theta,
    verify_ortho_rep,
)

__version__ = "0.1.0"


def from_networkx(nx_graph):
    """Graph from a networkx graph whose nodes are relabelled 0..n-1 in
    iteration order."""
    index = {node: k for k, node in enumerate(nx_graph.nodes)}
    edges = [(index[a], index[b]) for a, b in nx_graph.edges if a != b]
    return Graph(len(index), edges)
