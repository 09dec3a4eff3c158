# Copyright 2021 Vasily Rudchenko - dot2bgraph
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

from typing import Tuple

from gaussquot.number.primality import PrimeTag

RGB = Tuple[int, int, int]

BACKGROUND: RGB = (255, 255, 255)
AXIS: RGB = (221, 221, 221)

_CLASS_COLORS = {
    PrimeTag.INERT:    (204,  51,  51),
    PrimeTag.SPLIT:    (  0,   0,   0),
    PrimeTag.RAMIFIED: ( 51,  51, 204),
}

def class_color(tag: PrimeTag) -> RGB:
    ''' Pixel colour of a Gaussian prime by class. '''
    assert tag.is_prime, 'Only primes are drawn'
    return _CLASS_COLORS[tag]

def hex_color(color: RGB) -> str:
    packed = (
        (color[0] << 16) |
        (color[1] <<  8) |
        (color[2] <<  0)
    )
    return '#{:06x}'.format(packed)
