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
from typing import Any, Dict, Iterable, List, Optional, Sequence, TextIO
from fractions import Fraction
import json

from gaussquot.config import OutputFormat

Record = Dict[str, Any]

def sig10(x) -> float:
    ''' x rounded to 10 significant digits. '''
    return float('{:.10g}'.format(float(x)))

def format_cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return '{:.10g}'.format(value)
    if isinstance(value, Fraction):
        return str(value)
    return str(value)

def csv_lines(
    columns: Sequence[str],
    records: Iterable[Record],
    comments: Sequence[str] = (),
    trailer: Sequence[str] = (),
) -> List[str]:
    ''' Rows of the given columns, with optional `# ...` lines
    before the header and after the last row.
    '''
    lines = ['# {}'.format(c) for c in comments]
    lines.append(','.join(columns))
    for record in records:
        lines.append(','.join(format_cell(record.get(c)) for c in columns))
    lines.extend('# {}'.format(t) for t in trailer)
    return lines

def json_text(payload: Any) -> str:
    return json.dumps(payload, indent=4)

def render(
    output_format: OutputFormat,
    columns: Sequence[str],
    records: List[Record],
    meta: Optional[Record] = None,
    comments: Sequence[str] = (),
    trailer: Sequence[str] = (),
) -> str:
    ''' The full payload for one command.

    JSON output is a single object when there is exactly one
    record and no metadata, otherwise {"meta": ..., "records": [...]}.
    '''
    if output_format == OutputFormat.JSON:
        if meta is None and len(records) == 1:
            return json_text(records[0]) + '\n'
        payload: Record = dict(meta or {})
        payload['records'] = records
        return json_text(payload) + '\n'

    return '\n'.join(csv_lines(columns, records, comments, trailer)) + '\n'

def write_payload(text: str, out: TextIO):
    out.write(text)
    out.flush()
