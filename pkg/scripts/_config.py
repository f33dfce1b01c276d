"""Tiny helper: build an argparse CLI from a dataclass of defaults."""

import argparse
from dataclasses import fields


def parse_config(cls, argv=None):
    parser = argparse.ArgumentParser(description=cls.__doc__)
    for f in fields(cls):
        kind = type(f.default)
        if kind is tuple:
            parser.add_argument(f"--{f.name.replace('_', '-')}", default=f.default,
                                type=lambda s: tuple(int(x) for x in s.split(",")))
        else:
            parser.add_argument(f"--{f.name.replace('_', '-')}", default=f.default, type=kind)
    return cls(**vars(parser.parse_args(argv)))
