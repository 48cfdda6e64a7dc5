# Copyright 2026 The wigner-codes Authors
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

"""Face operators, mutually unbiased bases and discrete Wigner functions over GF(q)."""

from ._core import (
    Field,
    MubSet,
    coset_leaders,
    conjugate_label,
    distances,
    dwf,
    face_operator,
    field,
    hamming_codewords,
    jamiolkowski_state,
    negativity,
    purity_stats,
    run_cli,
    simplex_codewords,
    simplex_generator,
    stab_polytope_min,
    stabilizer_count,
    verify_all,
    wh_orbit,
)

__all__ = [
    "Field",
    "MubSet",
    "coset_leaders",
    "conjugate_label",
    "distances",
    "dwf",
    "face_operator",
    "field",
    "hamming_codewords",
    "jamiolkowski_state",
    "negativity",
    "purity_stats",
    "run_cli",
    "simplex_codewords",
    "simplex_generator",
    "stab_polytope_min",
    "stabilizer_count",
    "verify_all",
    "wh_orbit",
]
