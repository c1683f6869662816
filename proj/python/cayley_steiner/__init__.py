# Copyright 2026 The cayley-steiner Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Burnt pancake and godan graphs, connectivity, and internally edge-disjoint S-trees."""

import json

from ._core import (
    BurntPancakeNetwork,
    ConstructionError,
    GodanNetwork,
    Graph,
    alternating_network,
    burnt_pancake,
    godan,
    lower_bound_lemma2,
    stree_packing,
    upper_bound_lemma1,
    vertex_connectivity,
)
from ._core import certify_json as _certify_json


def certify(family, n, sample=0, seed=0, workers=1):
    """Certify a family at n and return the certificate as a dict."""
    return json.loads(_certify_json(family, n, sample, seed, workers))


__all__ = [
    "BurntPancakeNetwork",
    "ConstructionError",
    "GodanNetwork",
    "Graph",
    "alternating_network",
    "burnt_pancake",
    "certify",
    "godan",
    "lower_bound_lemma2",
    "stree_packing",
    "upper_bound_lemma1",
    "vertex_connectivity",
]
