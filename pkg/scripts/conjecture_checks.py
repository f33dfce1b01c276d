"""Run both stable-cohomology statements over a range of n and print the reports."""

from dataclasses import dataclass

from _config import parse_config

from symstrata.consistency import STATEMENTS, check_conjecture


@dataclass
class Config:
    n_min: int = 2
    n_max: int = 6
    window: int = 5


def main(cfg: Config):
    n_range = range(cfg.n_min, cfg.n_max + 1)
    for name in STATEMENTS:
        print(f"== {name}")
        print(check_conjecture(name, n_range, window=cfg.window).render())
        print()


if __name__ == "__main__":
    main(parse_config(Config))
