# Copyright 2026 gaussquot developers
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

from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum
import os

from gaussquot.errors import PreconditionError
from gaussquot.number.sieve import DEFAULT_SEGMENT_SIZE

DEFAULT_BUDGET = 2*10**8
DEFAULT_TOLERANCE = 1e-9
MAX_TOLERANCE = 1e-3
DEFAULT_MAX_ITERATIONS = 40

class OutputFormat(Enum):
    CSV = 'csv'
    JSON = 'json'

    def __str__(self):
        return self.value

@dataclass(frozen=True)
class EstimatorConfig:
    ''' Settings for the log-integral quadrature. The lower
    limit of the integral is always 2.
    '''
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        if not 0 < self.tolerance <= MAX_TOLERANCE:
            raise PreconditionError('Quadrature tolerance {} is not in (0, {}].'.format(
                self.tolerance, MAX_TOLERANCE))

@dataclass(frozen=True)
class SearchConfig:
    ''' Settings for the quotient search loop.

    `pi3_gap` is the estimated number of primes = 3 (mod 4)
    that must fit between |gamma|/R and |gamma|/r before the
    first window is searched.
    '''
    growth: float = 2.0
    max_iterations: int = DEFAULT_MAX_ITERATIONS
    pi3_gap: float = 4.0
    budget: int = DEFAULT_BUDGET
    segment_size: int = DEFAULT_SEGMENT_SIZE

    def __post_init__(self):
        if self.growth <= 1:
            raise PreconditionError('Growth factor must be above 1, got {}.'.format(self.growth))
        if self.max_iterations < 1:
            raise PreconditionError('Iteration cap must be positive, got {}.'.format(self.max_iterations))
        if self.pi3_gap <= 0:
            raise PreconditionError('Prime gap target must be positive, got {}.'.format(self.pi3_gap))
        if self.budget < 1 or self.segment_size < 1:
            raise PreconditionError('Budget and segment size must be positive.')

def _default_threads() -> int:
    return os.cpu_count() or 1

@dataclass(frozen=True)
class CliConfig:
    threads: int = field(default_factory=_default_threads)
    workload_budget: int = DEFAULT_BUDGET
    sieve_segment_size: int = DEFAULT_SEGMENT_SIZE
    output_format: OutputFormat = OutputFormat.CSV
    quadrature_tol: float = DEFAULT_TOLERANCE
    max_iterations: int = DEFAULT_MAX_ITERATIONS

    def __post_init__(self):
        for name in ('threads', 'workload_budget', 'sieve_segment_size', 'max_iterations'):
            if getattr(self, name) < 1:
                raise PreconditionError('--{} must be positive, got {}.'.format(
                    name.replace('_', '-'), getattr(self, name)))
        if not isinstance(self.output_format, OutputFormat):
            raise PreconditionError('Unknown output format {}.'.format(self.output_format))
        # Validates the tolerance range
        self.estimator

    @property
    def estimator(self) -> EstimatorConfig:
        return EstimatorConfig(self.quadrature_tol)

    @property
    def search(self) -> SearchConfig:
        return SearchConfig(
            max_iterations=self.max_iterations,
            budget=self.workload_budget,
            segment_size=self.sieve_segment_size,
        )
