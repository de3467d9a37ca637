#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Regenerates tests/data/filter_n16_*.txt.

Inputs are multiples of 1/64 so they are exact in single precision and in
decimal. The expected output is the circular convolution evaluated as an
exact rational direct sum, shared with no C++ code.
"""
import random
from fractions import Fraction
from pathlib import Path

N = 16
rng = random.Random(20240916)


def sample():
    return (Fraction(rng.randint(-64, 64), 64), Fraction(rng.randint(-64, 64), 64))


s = [sample() for _ in range(N)]
h = [sample() for _ in range(N)]
y = []
for k in range(N):
    re = im = Fraction(0)
    for j in range(N):
        a, b = s[j]
        c, d = h[(k - j) % N]
        re += a * c - b * d
        im += a * d + b * c
    y.append((re, im))

out = Path(__file__).resolve().parent.parent / "tests" / "data"
for name, vec in (("s", s), ("taps", h), ("expected", y)):
    lines = [f"{float(re)!r} {float(im)!r}" for re, im in vec]
    (out / f"filter_n16_{name}.txt").write_text("\n".join(lines) + "\n")
