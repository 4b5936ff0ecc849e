"""lrc.Bounds.bounds

Closed-form bounds on locally recoverable codes. Every value is an exact
integer or Fraction.

Provides:
- `rate_bound`, `singleton_like`, `kamath_bound`, `nonexistence_window`,
  `mr_upper`, `turan_dag_bound`, `residue_code_distance`
- `BoundReport` and `bound_report(n, k, r, rho=None, t=None, measured_d=None)`
"""

import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Sequence

from lrc.errors import ParameterError
from lrc.Multiset.multiset import smallest_m_for_t

logger = logging.getLogger(__name__)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def rate_bound(n: int, r: int) -> int:
    """Largest k allowed by k/n <= r/(r+1)."""
    if n < 1 or r < 1:
        raise ParameterError("n and r must be positive")
    return (n * r) // (r + 1)


def singleton_like(n: int, k: int, r: int) -> int:
    """d <= n - k - ceil(k/r) + 2."""
    if not 1 <= r <= k <= n:
        raise ParameterError(f"need 1 <= r <= k <= n, got n={n}, k={k}, r={r}")
    return n - k - _ceil_div(k, r) + 2


def kamath_bound(n: int, k: int, r: int, rho: int) -> int:
    """d <= n - k + 1 - (ceil(k/r) - 1)(rho - 1) when every block is an (r+rho-1, r) MDS code."""
    if rho < 2:
        raise ParameterError("rho must be at least 2")
    if not 1 <= r <= k <= n:
        raise ParameterError(f"need 1 <= r <= k <= n, got n={n}, k={k}, r={r}")
    return n - k + 1 - (_ceil_div(k, r) - 1) * (rho - 1)


def nonexistence_window(n: int, k: int, r: int) -> bool:
    """True when 0 < n - k(r+1)/r < r+1, where no code meets singleton_like."""
    if r < 1 or k % r:
        raise ParameterError(f"the window is defined for r | k, got k={k}, r={r}")
    gap = Fraction(n) - Fraction(k * (r + 1), r)
    return 0 < gap < r + 1


def mr_upper(n: int, k: int, r: int) -> int:
    """d <= n - k - floor((k-1)/r) - floor((k-1)/r^2) + 1 for two recovering sets."""
    if r < 1 or k < 1:
        raise ParameterError("k and r must be positive")
    return n - k - (k - 1) // r - (k - 1) // (r * r) + 1


def turan_dag_bound(out_degrees: Sequence[int]) -> Fraction:
    """n / (1 + average out-degree): guaranteed size of an induced acyclic subgraph."""
    if not out_degrees:
        raise ParameterError("out-degree list must be nonempty")
    n = len(out_degrees)
    return Fraction(n) / (1 + Fraction(sum(out_degrees), n))


def residue_code_distance(block_sizes: Sequence[int], local_dims: Sequence[int]) -> int:
    """min(n_i - k_i + 1) over blocks carrying message symbols (k_i > 0).

    A nonzero message has a nonzero residue in some block, whose restriction
    is an (n_i, k_i) MDS codeword; a message living in one block only is
    zero everywhere else, so the minimum is reached.
    """
    if len(block_sizes) != len(local_dims):
        raise ParameterError("one local dimension per block is required")
    active = [(n_i, k_i) for n_i, k_i in zip(block_sizes, local_dims) if k_i > 0]
    if not active:
        raise ParameterError("no block carries message symbols")
    if any(k_i > n_i for n_i, k_i in active):
        raise ParameterError("local dimension exceeds block size")
    return min(n_i - k_i + 1 for n_i, k_i in active)


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    r: int
    r_used: int
    rate_cap: int
    singleton_like_d: int
    kamath_d: Optional[int] = None
    multi_lower_m: Optional[int] = None
    mr_upper_d: Optional[int] = None
    nonexistence: Optional[bool] = None
    optimal: Optional[bool] = None

    @property
    def r_clamped(self) -> bool:
        return self.r_used != self.r

    def to_json(self) -> dict:
        out = asdict(self)
        out["r_clamped"] = self.r_clamped
        return out


def bound_report(n: int, k: int, r: int, rho: Optional[int] = None, t: Optional[int] = None,
                 measured_d: Optional[int] = None) -> BoundReport:
    """Every bound that applies to (n, k, r); r above k is evaluated as r = k and reported as `r_used`."""
    r_eff = min(r, k)
    if r_eff != r:
        logger.warning("locality r=%d exceeds k=%d; bounds use r=%d", r, k, r_eff)
    d = singleton_like(n, k, r_eff)
    kamath = kamath_bound(n, k, r_eff, rho) if rho is not None else None
    multi = smallest_m_for_t(t) if t is not None else None
    mr = mr_upper(n, k, r_eff) if t is not None and t >= 2 else None
    window = nonexistence_window(n, k, r_eff) if k % r_eff == 0 else None
    target = kamath if kamath is not None else d
    optimal = None if measured_d is None else measured_d == target
    return BoundReport(n, k, r, r_eff, rate_bound(n, r), d, kamath, multi, mr, window, optimal)
