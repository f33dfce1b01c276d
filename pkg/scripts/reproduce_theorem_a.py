"""Re-derive the Betti numbers of w_{1^n 22}(P^1) and compare them with point counts."""

from dataclasses import dataclass

from _config import parse_config

from symstrata import arith, catalog
from symstrata.consistency import trace_polynomial
from symstrata.hodge import betti, euler_characteristic


@dataclass
class Config:
    """Range of n for the Serre derivation of w_{1^n 22}."""

    n_min: int = 2
    n_max: int = 10


def main(cfg: Config):
    print("n\tbetti\teuler\ttrace\tcounts")
    for n in range(cfg.n_min, cfg.n_max + 1):
        t = catalog.derive_w1n22(n)
        trace = trace_polynomial(t, n + 2)
        counts = arith.strata_w1n22_poly(n)
        b = ",".join(map(str, betti(t)))
        print(f"{n}\t{b}\t{euler_characteristic(t)}\t{trace}\t{counts}")


if __name__ == "__main__":
    main(parse_config(Config))
