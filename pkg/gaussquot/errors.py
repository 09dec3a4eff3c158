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
from typing import Any

class GaussQuotError(Exception):
    ''' Base class for every error a caller can trigger.

    `exit_code` is what the CLI exits with when the error
    reaches it.
    '''
    exit_code = 3

class PreconditionError(GaussQuotError, ValueError):
    exit_code = 1

class AngleParseError(PreconditionError):
    def __init__(self, text: str, token: str):
        self.text = text
        self.token = token
        super().__init__("Malformed angle '{}': unexpected token '{}'.".format(text, token))

class BoundsError(PreconditionError):
    pass

class ZeroInputError(PreconditionError):
    pass

class ResourceError(GaussQuotError):
    exit_code = 2

class GuardError(ResourceError):
    pass

class WorkloadBudgetError(ResourceError):
    def __init__(self, estimated: int, budget: int):
        self.estimated = estimated
        self.budget = budget
        super().__init__(
            'Workload of {} lattice points exceeds the budget of {}.'.format(estimated, budget))

class IterationCapError(ResourceError):
    def __init__(self, trace: Any):
        self.trace = trace
        super().__init__(
            'Search stopped at the iteration cap ({} iterations, threshold {:.10g}).'.format(
                trace.iterations, trace.threshold))

class VerificationError(GaussQuotError):
    exit_code = 3
