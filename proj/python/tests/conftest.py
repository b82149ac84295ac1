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

import itertools
import random

import numpy as np
import pytest


def random_edges(n, p, rng):
    return [(a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p]


def brute_alpha(n, edges):
    adj = {(a, b) for a, b in edges} | {(b, a) for a, b in edges}
    best = 0
    for mask in range(1 << n):
        members = [v for v in range(n) if mask >> v & 1]
        if len(members) > best and all((a, b) not in adj for a, b in itertools.combinations(members, 2)):
            best = len(members)
    return best


def cvxpy_theta(n, edges):
    """max <J, X> s.t. tr X = 1, X_ij = 0 on edges, X psd, solved by a
    generic conic solver."""
    cp = pytest.importorskip("cvxpy")
    X = cp.Variable((n, n), symmetric=True)
    constraints = [X >> 0, cp.trace(X) == 1] + [X[a, b] == 0 for a, b in edges]
    problem = cp.Problem(cp.Maximize(cp.sum(X)), constraints)
    problem.solve(solver=cp.CLARABEL)
    return problem.value


@pytest.fixture
def rng():
    return random.Random(2026)


@pytest.fixture
def np_rng():
    return np.random.default_rng(2026)
