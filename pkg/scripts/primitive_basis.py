"""Show the degree-n primitive basis next to the expanded MagFine monomials."""
import argparse
from dataclasses import dataclass

from magfine.primitives import fine_images, prim_basis
from magfine.trees import enumerate_fine


@dataclass
class Config:
    n: int = 4


def show(x) -> str:
    return " ".join(f"{'+' if c > 0 else '-'}{abs(c)}*{t.code}" for (t, _), c in x.items())


def main(cfg: Config) -> None:
    print(f"kernel basis of delta, degree {cfg.n}:")
    for i, p in enumerate(prim_basis(cfg.n)):
        print(f"  p{i}: {show(p)}")
    print("MagFine monomials:")
    for m, x in zip(enumerate_fine(cfg.n), fine_images(cfg.n)):
        print(f"  {m.code}: {show(x)}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("n", nargs="?", type=int, default=Config.n)
    main(Config(p.parse_args().n))
