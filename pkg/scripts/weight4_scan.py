"""Compute A4 of C three ways and time each: MacWilliams, syndrome scan, brute 4-subset scan."""
import time
from itertools import combinations

from framecert import codes
from framecert.gf2 import Gf2Vector


def timed(label, fn):
    start = time.perf_counter()
    value = fn()
    print(f"{label:<28} {value:>6}  {1000 * (time.perf_counter() - start):8.1f} ms")
    return value


def main():
    D = codes.moonshine_frame_code_D()
    C = codes.dual(D)
    a = timed("MacWilliams from D", lambda: codes.macwilliams_transform(codes.weight_distribution(D), D.k)[4])
    b = timed("syndrome scan", lambda: len(codes.words_of_weight(C, 4)))
    c = timed("contains() over C(48,4)", lambda: sum(
        codes.contains(C, Gf2Vector.from_support(48, s)) for s in combinations(range(48), 4)))
    print("agree" if a == b == c else "DISAGREE")


if __name__ == "__main__":
    main()
