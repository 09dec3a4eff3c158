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

''' Main-term estimates for prime counts: the expected number
of Gaussian primes in a sector and the asymptotic count of
rational primes = 3 (mod 4).
'''

from __future__ import annotations
import math

from scipy.integrate import quad
from scipy.special import expi

from gaussquot.config import EstimatorConfig
from gaussquot.errors import PreconditionError
from gaussquot.gaussian import Sector

LOWER_LIMIT = 2
_LOG_LOWER = math.log(LOWER_LIMIT)
_QUAD_SUBDIVISIONS = 200

DEFAULT_ESTIMATOR = EstimatorConfig()

def _integrand(t: float) -> float:
    return math.exp(t)/t

def log_integral_from_2(u: float, config: EstimatorConfig = DEFAULT_ESTIMATOR) -> float:
    ''' Integral of 1/log(x) over [2, u].

    Integrated in t = log(x), where the integrand e^t/t is
    smooth and the interval stays short even for large u.
    '''
    if u < LOWER_LIMIT:
        raise PreconditionError('Log-integral needs u >= {}, got {}.'.format(LOWER_LIMIT, u))
    if u == LOWER_LIMIT:
        return 0.0

    value, _ = quad(
        _integrand, _LOG_LOWER, math.log(u),
        epsabs=0.0,
        epsrel=config.tolerance,
        limit=_QUAD_SUBDIVISIONS,
    )
    return float(value)

def log_integral_closed_form(u: float) -> float:
    ''' Same integral through the exponential integral,
    li(u) - li(2) = Ei(log u) - Ei(log 2).
    '''
    if u < LOWER_LIMIT:
        raise PreconditionError('Log-integral needs u >= {}, got {}.'.format(LOWER_LIMIT, u))
    return float(expi(math.log(u)) - expi(_LOG_LOWER))

def kubilyus_estimate(s: Sector, u: float, config: EstimatorConfig = DEFAULT_ESTIMATOR) -> float:
    ''' Expected number of Gaussian primes with norm <= u and
    argument in s: (2/pi)*width*li_2(u).
    '''
    return 2/math.pi*s.width*log_integral_from_2(u, config)

def pi3_estimate(x: float) -> float:
    if x <= 2:
        raise PreconditionError('pi3 estimate needs x > 2, got {}.'.format(x))
    return x/(2*math.log(x))

def round_half_away(x: float) -> int:
    return int(math.copysign(math.floor(abs(x) + 0.5), x))
