"""Place the count polynomial of each stratum by the Occam rule and compare with catalog data."""

from dataclasses import dataclass

from _config import parse_config

from symstrata import arith, catalog
from symstrata.consistency import occam_minimal, trace_check
from symstrata.hodge import betti


@dataclass
class Config:
    """Largest total |lambda| to sweep; both placement variants are printed."""

    max_total: int = 5


def partitions(total):
    if total == 0:
        yield ()
        return
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, cap), 0, -1):
            for tail in rec(rest - k, k):
                yield (k,) + tail
    yield from rec(total, total)


def main(cfg: Config):
    print("lambda\tcounts\tbetti_c_lowest\tbetti_c_highest\tcatalog_verdict")
    for m in range(1, cfg.max_total + 1):
        for lam in partitions(m):
            lam = arith.Partition.of(lam)
            counts = arith.interpolate(lam, arith.default_primes(lam))
            d = len(lam)
            cols = []
            for variant in ("lowest", "highest"):
                try:
                    cols.append(",".join(map(str, betti(occam_minimal(counts, d, variant)))))
                except ValueError as exc:
                    cols.append(f"n/a ({exc})")
            try:
                space = catalog.space_for_partition(lam.parts)
                verdict = trace_check(catalog.h_table(space), space.dimension, counts).verdict.value
            except (ValueError, catalog.UnsupportedSpace):
                verdict = "-"
            print(f"{lam}\t{counts}\t{cols[0]}\t{cols[1]}\t{verdict}")


if __name__ == "__main__":
    main(parse_config(Config))
