# Copyright 2026 The conid Authors
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

"""Exact conclusive-identification toolkit (Python bindings)."""

from ._core import (
    Channel,
    ConidError,
    Graph,
    IdentificationScheme,
    VectorSystem,
    __version__,
    assisted_ci,
    builtin_system,
    canonical_channel,
    certify_orthogonal_rank,
    chromatic_number,
    ci_unassisted,
    clique_number,
    confusability_graph,
    conormal_power,
    conormal_product,
    diameter,
    family,
    fractional_chromatic,
    hadamard_clique,
    identity_channel,
    independence_number,
    is_orthogonal_representation,
    is_snfc,
    ks_colorable,
    min_classical_assistance,
    newman_graph,
    newman_qa_bound,
    orthogonality_graph,
    parity_obstruction,
    pentagon_variant,
    quantum_assisted_ci,
    quantum_protocol_outcome,
    run_cli,
    scheme_from_coloring,
    simulate,
    strong_product,
    superactivation_gap,
    support_graph,
    tensor_product,
    verify_scheme,
    zero_error_index,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
