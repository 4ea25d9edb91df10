# Copyright 2026 The Authors.
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

"""Rainbow independent sets in the intersection of two matroids."""

from rainbow._core import (
    ContractError,
    DomainError,
    Family,
    GenerationError,
    Instance,
    LimitError,
    ParseError,
    ValidationError,
    bound_floor,
    brute_force_max,
    check_bound,
    check_rainbow,
    cyclic_latin,
    generate,
    generator_names,
    latin_family,
    parse,
    property_suite,
    serialize,
    solve,
    verify,
)

__all__ = [
    "ContractError",
    "DomainError",
    "Family",
    "GenerationError",
    "Instance",
    "LimitError",
    "ParseError",
    "ValidationError",
    "bound_floor",
    "brute_force_max",
    "check_bound",
    "check_rainbow",
    "cyclic_latin",
    "generate",
    "generator_names",
    "latin_family",
    "parse",
    "property_suite",
    "serialize",
    "solve",
    "verify",
]
