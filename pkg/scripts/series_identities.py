"""Check the generating-function identities at increasing truncation orders."""
import argparse
from dataclasses import dataclass

from magfine.series import compose_check, fine_series, prelie_quotient_dims, sabinin_dims, vallette_check


@dataclass
class Config:
    orders: tuple = (6, 12, 24)


def main(cfg: Config) -> None:
    for n in cfg.orders:
        print(f"order {n:>3}: vallette={vallette_check(n)} compose={compose_check(n)}")
    top = max(cfg.orders)
    print("Fine:", [int(c) for c in fine_series(top).coeffs[1:]])
    print("pre-Lie quotient:", prelie_quotient_dims(min(top, 8)))
    print("Log-Catalan:", sabinin_dims(top))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("orders", nargs="*", type=int, default=list(Config.orders))
    main(Config(tuple(p.parse_args().orders)))
