"""Exhaustive classification of the cyclic codes of one length."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .cyclic_core import (
    basic_dual_zero,
    code_space,
    hull_dimension,
    is_lcd,
    is_one_dim_hull,
)

MAX_LEADERS = 24

CSV_COLUMNS = ("generator", "dim", "bz_dual", "hull_dim", "lcd", "one_dim_hull")


@dataclass(frozen=True)
class ClassificationRecord:
    generator: tuple[int, ...]
    dim: int
    bz_dual: tuple[int, ...]
    hull_dim: int
    lcd: bool
    one_dim_hull: bool

    def as_dict(self) -> dict:
        d = asdict(self)
        d["generator"] = list(self.generator)
        d["bz_dual"] = list(self.bz_dual)
        return d

    def as_csv_row(self) -> list[str]:
        return [
            ",".join(map(str, self.generator)),
            str(self.dim),
            " ".join(map(str, self.bz_dual)),
            str(self.hull_dim),
            str(self.lcd).lower(),
            str(self.one_dim_hull).lower(),
        ]


def record_for(code) -> ClassificationRecord:
    return ClassificationRecord(
        generator=code.gen.coeffs,
        dim=code.dim,
        bz_dual=tuple(sorted(basic_dual_zero(code))),
        hull_dim=hull_dimension(code),
        lcd=is_lcd(code),
        one_dim_hull=is_one_dim_hull(code)[0],
    )


def _classify_range(args: tuple[int, int, int, int]) -> list[ClassificationRecord]:
    q, n, lo, hi = args
    sp = code_space(q, n)
    return [record_for(sp.code_from_mask(mask)) for mask in range(lo, hi)]


def classify(q: int, n: int, jobs: int = 1) -> list[ClassificationRecord]:
    """One record per monic divisor of ``x^n - 1``, in canonical mask order."""
    sp = code_space(q, n)
    t = len(sp.leaders)
    if t > MAX_LEADERS:
        raise ValueError(
            f"x^{n} - 1 has {t} irreducible factors over F_{q}; "
            f"enumerating 2^{t} codes exceeds the limit of 2^{MAX_LEADERS}"
        )
    total = 2**t
    if jobs <= 1 or total < 64:
        return _classify_range((q, n, 0, total))
    chunk = max(1, total // (jobs * 4))
    ranges = [(q, n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    out: list[ClassificationRecord] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves submission order, so output stays canonical
        for part in pool.map(_classify_range, ranges):
            out.extend(part)
    return out
