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

''' Census tables: the two published sector tables and
user-defined ones read from JSON.
'''

from __future__ import annotations
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple
from enum import Enum
from fractions import Fraction
import json

from gaussquot.census import CensusResult, sector_census
from gaussquot.config import DEFAULT_BUDGET, EstimatorConfig
from gaussquot.errors import PreconditionError, ResourceError
from gaussquot.estimate import DEFAULT_ESTIMATOR
from gaussquot.gaussian import Angle, Real, Sector, format_angle, parse_angle

class CaptionMode(Enum):
    DERIVED_WIDTH = 'derived-width'
    PRINTED_CAPTION = 'printed-caption'

    def __str__(self):
        return self.value

class PublishedRow(NamedTuple):
    rho: int
    N: int
    K: int

FIG2A_ROWS = (
    PublishedRow(100, 50, 53),
    PublishedRow(500, 946, 940),
    PublishedRow(1000, 3327, 3346),
    PublishedRow(5000, 66712, 66651),
    PublishedRow(10000, 245085, 245200),
    PublishedRow(25000, 1384746, 1385602),
    PublishedRow(50000, 5168740, 5167941),
)

FIG2B_ROWS = (
    PublishedRow(1000, 0, 5),
    PublishedRow(5000, 0, 100),
    PublishedRow(10000, 369, 367),
    PublishedRow(50000, 7823, 7732),
    PublishedRow(100000, 28964, 28971),
    PublishedRow(250000, 167197, 167099),
    PublishedRow(500000, 632781, 631552),
)

# [pi/47, 2pi/47] matches every published K of the first table;
# the bounds printed with it, [pi/24, 2pi/47], are only pi/1128 wide.
FIG2A_DERIVED = (Fraction(1, 47), Fraction(2, 47))
FIG2A_PRINTED = (Fraction(1, 24), Fraction(2, 47))
FIG2B_BOUNDS = (Fraction(1, 31415), Fraction(2, 31415))

class TableSpec(NamedTuple):
    name: str
    sector: Sector
    rhos: Tuple[Real, ...]
    caption_mode: Optional[CaptionMode] = None
    published: Tuple[PublishedRow, ...] = ()

    def published_row(self, rho: Real) -> Optional[PublishedRow]:
        for row in self.published:
            if row.rho == rho:
                return row
        return None

    def header(self) -> str:
        return 'table={} caption_mode={} alpha={} beta={}'.format(
            self.name,
            self.caption_mode or 'none',
            format_angle(self.sector.alpha),
            format_angle(self.sector.beta),
        )

    def to_obj(self) -> Dict[str, Any]:
        return {
            'table': self.name,
            'caption_mode': str(self.caption_mode) if self.caption_mode else None,
            'alpha': format_angle(self.sector.alpha),
            'beta': format_angle(self.sector.beta),
        }

def _ratio_sector(bounds: Tuple[Fraction, Fraction]) -> Sector:
    return Sector.between(Angle.from_ratio(bounds[0]), Angle.from_ratio(bounds[1]))

def fig2a_spec(caption_mode: CaptionMode = CaptionMode.DERIVED_WIDTH) -> TableSpec:
    bounds = FIG2A_DERIVED if caption_mode == CaptionMode.DERIVED_WIDTH else FIG2A_PRINTED
    return TableSpec(
        'fig2a',
        _ratio_sector(bounds),
        tuple(row.rho for row in FIG2A_ROWS),
        caption_mode,
        FIG2A_ROWS,
    )

def fig2b_spec() -> TableSpec:
    return TableSpec(
        'fig2b',
        _ratio_sector(FIG2B_BOUNDS),
        tuple(row.rho for row in FIG2B_ROWS),
        None,
        FIG2B_ROWS,
    )

def custom_spec(sector: Sector, rhos: Sequence[Real]) -> TableSpec:
    if not rhos:
        raise PreconditionError('A custom table needs at least one rho.')
    return TableSpec('custom', sector, tuple(rhos))

def _parse_rho(value: Any) -> Real:
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise PreconditionError('Invalid rho value {!r}.'.format(value))
    try:
        rho = Fraction(value) if isinstance(value, str) else value
    except ValueError:
        raise PreconditionError('Invalid rho value {!r}.'.format(value))
    if rho < 1:
        raise PreconditionError('Census radius must be at least 1, got {}.'.format(value))
    return rho

def load_custom_spec(path: str) -> TableSpec:
    ''' Read {"alpha": ..., "beta": ..., "rho": [...]} with
    angles in the usual angle grammar.
    '''
    try:
        with open(path) as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise PreconditionError('Cannot read table spec {}: {}'.format(path, e))

    if not isinstance(data, dict):
        raise PreconditionError('Table spec {} must be a JSON object.'.format(path))
    missing = [k for k in ('alpha', 'beta', 'rho') if k not in data]
    if missing:
        raise PreconditionError('Table spec {} is missing {}.'.format(path, ', '.join(missing)))

    rhos = data['rho'] if isinstance(data['rho'], list) else [data['rho']]
    sector = Sector.between(parse_angle(str(data['alpha'])), parse_angle(str(data['beta'])))
    return custom_spec(sector, [_parse_rho(r) for r in rhos])

def table_spec(
    name: str,
    caption_mode: CaptionMode = CaptionMode.DERIVED_WIDTH,
    custom_path: Optional[str] = None,
) -> TableSpec:
    if name == 'fig2a':
        return fig2a_spec(caption_mode)
    if name == 'fig2b':
        return fig2b_spec()
    if name == 'custom':
        if custom_path is None:
            raise PreconditionError('The custom table needs --spec FILE.')
        return load_custom_spec(custom_path)
    raise PreconditionError('Unknown table {}.'.format(name))

def caption_note(spec: TableSpec) -> Optional[str]:
    if spec.caption_mode == CaptionMode.PRINTED_CAPTION:
        return ('Printed fig2a bounds give a sector of width pi/1128; '
            'its K column sits far below the published one (width pi/47).')
    return None

class TableRow(NamedTuple):
    rho: Real
    result: Optional[CensusResult]
    skipped: Optional[str] = None

class Comparison(NamedTuple):
    published_N: int
    published_K: int
    dN: int
    dK: int

    def to_obj(self):
        return {
            'published_N': self.published_N,
            'published_K': self.published_K,
            'dN': self.dN,
            'dK': self.dK,
        }

def compare_row(spec: TableSpec, result: CensusResult) -> Optional[Comparison]:
    row = spec.published_row(result.rho)
    if row is None:
        return None
    return Comparison(row.N, row.K, result.N - row.N, result.K_rounded - row.K)

def census_table_rows(
    spec: TableSpec,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    estimator: EstimatorConfig = DEFAULT_ESTIMATOR,
    rho_max: Optional[Real] = None,
    skip_over_budget: bool = True,
) -> List[TableRow]:
    ''' One row per rho. Rows above rho_max, and rows over the
    workload budget when skip_over_budget is set, come back
    without a result and with the reason.
    '''
    rows = []
    for rho in spec.rhos:
        if rho_max is not None and rho > rho_max:
            rows.append(TableRow(rho, None, 'rho above {}'.format(rho_max)))
            continue
        try:
            rows.append(TableRow(rho, sector_census(spec.sector, rho, budget, workers, estimator)))
        except ResourceError as e:
            if not skip_over_budget:
                raise
            rows.append(TableRow(rho, None, str(e)))
    return rows

def census_table(
    spec: TableSpec,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    estimator: EstimatorConfig = DEFAULT_ESTIMATOR,
) -> List[CensusResult]:
    rows = census_table_rows(spec, budget, workers, estimator, skip_over_budget=False)
    results = [row.result for row in rows]
    assert all(r is not None for r in results)
    return [r for r in results if r is not None]
