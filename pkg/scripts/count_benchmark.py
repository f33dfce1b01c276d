"""Time brute-force against closed-form divisor counts."""

import time
from dataclasses import dataclass

from _config import parse_config

from symstrata import arith


@dataclass
class Config:
    lam: tuple = (2, 2, 1, 1)
    primes: tuple = (2, 3, 5)


def main(cfg: Config):
    print("q\tbrute\tfast\tbrute_s\tfast_s")
    for p in cfg.primes:
        arith.clear_caches()
        t0 = time.perf_counter()
        b = arith.count_brute(cfg.lam, p).count
        t1 = time.perf_counter()
        f = arith.count_fast(cfg.lam, p).count
        t2 = time.perf_counter()
        print(f"{p}\t{b}\t{f}\t{t1 - t0:.3f}\t{t2 - t1:.4f}")


if __name__ == "__main__":
    main(parse_config(Config))
