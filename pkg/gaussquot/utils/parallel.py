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
from typing import Callable, Iterable, List, TypeVar
from concurrent.futures import ProcessPoolExecutor

from gaussquot.utils.spinner import sp

T = TypeVar('T')
R = TypeVar('R')

def map_tasks(
    func: Callable[[T], R],
    tasks: Iterable[T],
    workers: int = 1,
    text: str = '',
) -> List[R]:
    ''' Apply func to every task, in worker processes when
    workers > 1. Results come back in task order whatever the
    worker count, so combining them is deterministic.

    func and the tasks must be picklable.
    '''
    tasks = list(tasks)
    if workers <= 1 or len(tasks) <= 1:
        return [func(task) for task in sp(type='bar', items=tasks, text=text)]

    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as executor:
        return list(sp(type='bar',
            items=executor.map(func, tasks),
            total=len(tasks),
            text=text,
        ))
