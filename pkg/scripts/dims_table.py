"""Print the primitive dimension table and time each degree.

    python3 scripts/dims_table.py --max-n 9 --image-max 8
"""
import argparse
import time
from dataclasses import dataclass

from magfine.primitives import fine_image_basis, prim_dimension
from magfine.trees import catalan, count_fine


@dataclass
class Config:
    max_n: int = 8
    image_max: int = 7


def main(cfg: Config) -> None:
    print(f"{'n':>3} {'C_(n-1)':>8} {'ker':>6} {'F_(n-1)':>8} {'image':>6} {'sec':>7}")
    for n in range(1, cfg.max_n + 1):
        start = time.perf_counter()
        k = prim_dimension(n)
        img = fine_image_basis(n)[1] if n <= cfg.image_max else None
        dt = time.perf_counter() - start
        print(f"{n:>3} {catalan(n - 1):>8} {k:>6} {count_fine(n):>8} {'-' if img is None else img:>6} {dt:>7.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--image-max", type=int, default=Config.image_max)
    a = p.parse_args()
    main(Config(a.max_n, a.image_max))
