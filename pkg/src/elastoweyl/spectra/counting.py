"""Eigenvalue counting functions and their on-disk cache."""

import csv
import io
from dataclasses import dataclass, field

import numpy as np

CACHE_VERSION = 1
CACHE_COLUMNS = ("geometry", "bc", "lambda", "multiplicity", "branch")
MERGE_RTOL = 1e-10


class CacheError(ValueError):
    pass


@dataclass
class CountingFunction:
    """Eigenvalues with multiplicities, evaluable as ``N(Lambda) = #{Lambda_n < Lambda}``.

    ``records`` keeps one row per root and branch; :attr:`values` and
    :attr:`multiplicities` hold the merged, strictly ascending spectrum.
    Eigenvalues up to ``lambda_max`` are complete.
    """

    geometry: str
    bc: str
    lambda_max: float
    records: list = field(default_factory=list)  # (lambda, multiplicity, branch)
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        self.records = sorted(
            ((float(v), int(k), str(b)) for v, k, b in self.records),
            key=lambda r: (r[0], r[2]),
        )
        for v, k, _ in self.records:
            if k <= 0:
                raise ValueError("multiplicities must be positive")
            if v < 0:
                raise ValueError("eigenvalues must be non-negative")
        self._merge()

    def _merge(self):
        vals, mults = [], []
        for v, k, _ in self.records:
            if vals and v - vals[-1] <= MERGE_RTOL * max(1.0, v):
                mults[-1] += k
            else:
                vals.append(v)
                mults.append(k)
        self.values = np.array(vals, dtype=float)
        self.multiplicities = np.array(mults, dtype=int)
        self._cum = np.concatenate([[0], np.cumsum(self.multiplicities)])

    @property
    def entries(self):
        return list(zip(self.values.tolist(), self.multiplicities.tolist()))

    def __call__(self, Lambda):
        """Number of eigenvalues strictly below ``Lambda``, with multiplicity."""
        idx = np.searchsorted(self.values, Lambda, side="left")
        out = self._cum[idx]
        return int(out) if np.ndim(out) == 0 else out

    def __len__(self):
        return int(self._cum[-1])

    def merge(self, other):
        if (self.geometry, self.bc) != (other.geometry, other.bc):
            raise ValueError("cannot merge spectra of different problems")
        return CountingFunction(
            self.geometry, self.bc, min(self.lambda_max, other.lambda_max),
            self.records + other.records, dict(self.params),
        )

    # --- cache ----------------------------------------------------------

    def to_csv(self):
        buf = io.StringIO()
        meta = ";".join(f"{k}={_fmt(v)}" for k, v in sorted(self.params.items()))
        buf.write(
            f"# elastoweyl spectrum v{CACHE_VERSION}; lambda_max={_fmt(self.lambda_max)}"
            + (f"; {meta}" if meta else "") + "\n"
        )
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CACHE_COLUMNS)
        for v, k, b in self.records:
            w.writerow([self.geometry, self.bc, repr(v), k, b])
        return buf.getvalue()

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_csv())

    @classmethod
    def from_csv(cls, text):
        lines = text.splitlines()
        if not lines or not lines[0].startswith("# elastoweyl spectrum v"):
            raise CacheError("missing spectrum cache header")
        head = [p.strip() for p in lines[0][2:].split(";")]
        version = int(head[0].rsplit("v", 1)[1])
        if version != CACHE_VERSION:
            raise CacheError(f"unsupported cache version {version}")
        meta = dict(p.split("=", 1) for p in head[1:] if "=" in p)
        lambda_max = float(meta.pop("lambda_max"))
        params = {k: float(v) for k, v in meta.items()}
        rows = list(csv.reader(lines[1:]))
        if not rows or tuple(rows[0]) != CACHE_COLUMNS:
            raise CacheError("unexpected cache columns")
        geometry = bc = None
        records = []
        for g, b, v, k, br in rows[1:]:
            if geometry is None:
                geometry, bc = g, b
            elif (g, b) != (geometry, bc):
                raise CacheError("mixed problems in one cache file")
            records.append((float(v), int(k), br))
        if geometry is None:
            raise CacheError("cache holds no records; geometry unknown")
        return cls(geometry, bc, lambda_max, records, params)

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_csv(fh.read())


def _fmt(v):
    return repr(float(v)) if isinstance(v, (int, float, np.floating)) else str(v)
