# Copyright 2020 Vasily Rudchenko - dot2bgraph
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
from typing import List, NamedTuple, Tuple

import numpy as np
from PIL import Image

from gaussquot.errors import GuardError, PreconditionError
from gaussquot.number.primality import PrimeTag, classify_tags, gaussian_prime_mask
from gaussquot.utils.color import AXIS, BACKGROUND, RGB, class_color, hex_color

PADDING = 2
SCATTER_MAX_BOUND = 5000

class ScatterPoint(NamedTuple):
    a: int
    b: int
    tag: PrimeTag

    def to_obj(self):
        return {'a': self.a, 'b': self.b, 'class': str(self.tag), 'color': hex_color(class_color(self.tag))}

def scatter_points(bound: int) -> List[ScatterPoint]:
    ''' Every Gaussian prime with |a|, |b| <= bound, ordered
    by a and then b.
    '''
    if bound < 0:
        raise PreconditionError('Scatter bound must be non-negative, got {}.'.format(bound))
    if bound > SCATTER_MAX_BOUND:
        raise GuardError('Scatter bound {} is above the limit of {}.'.format(bound, SCATTER_MAX_BOUND))

    coords = np.arange(-bound, bound + 1, dtype=np.int64)
    a, b = np.meshgrid(coords, coords, indexing='ij')
    a, b = a.ravel(), b.ravel()

    mask = gaussian_prime_mask(a, b)
    tags = classify_tags(a, b, mask)
    return [
        ScatterPoint(x, y, tag)
        for x, y, tag in zip(a[mask].tolist(), b[mask].tolist(), tags)
    ]

def _generate_pixels(points: List[ScatterPoint], bound: int) -> Tuple[List[RGB], Tuple[int, int]]:
    side = 2*bound + 1 + 2*PADDING
    center = bound + PADDING

    img = [[BACKGROUND for j in range(side)] for i in range(side)]

    for i in range(PADDING, side - PADDING):
        img[i][center] = AXIS
        img[center][i] = AXIS

    for point in points:
        # Image rows grow downwards, b grows upwards
        y = center - point.b
        x = center + point.a

        img[y][x] = class_color(point.tag)

    return [pixel for row in img for pixel in row], (side, side)

def scatter2image(points: List[ScatterPoint], bound: int) -> Image.Image:
    pixels, dimension = _generate_pixels(points, bound)

    image = Image.new('RGB', dimension)
    image.putdata(pixels)

    return image
