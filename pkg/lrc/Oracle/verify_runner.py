"""lrc.Oracle.verify_runner

Run the registered checks concurrently against one code and fold their
results into a report dict (`designed_d`, `measured_d`, `bound_d`,
`optimal`, per-position `locality`, `mds_blocks`, plus per-check latencies).
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Optional

from lrc import config
from lrc.Oracle.checks import VERIFY_REGISTRY, upper_bound

logger = logging.getLogger(__name__)


def run_all_checks(code, cap: Optional[int] = None, registry=None) -> dict:
    cap = config.exhaustive_cap() if cap is None else cap
    registry = VERIFY_REGISTRY if registry is None else registry

    results = {}
    with ThreadPoolExecutor(max_workers=config.workers()) as executor:
        future_to_key = {executor.submit(fn, code, cap): key for key, fn in registry}
        for future in as_completed(future_to_key):
            key = future_to_key[future]
            try:
                outcome = future.result()
                if isinstance(outcome, tuple) and len(outcome) == 2:
                    results[key] = outcome
                else:
                    results[key] = (outcome, 0)
            except Exception as exc:
                logger.error("check %s raised: %s", key, exc)
                results[key] = (None, 0)

    distance = results.get("distance", (None, 0))[0]
    measured = distance["distance"] if distance else None
    exhaustive = bool(distance and distance["exhaustive"])
    bound = upper_bound(code)
    locality = results.get("locality", (None, 0))[0]
    optimal = None
    if measured is not None and bound is not None and exhaustive:
        optimal = measured == bound

    report = {
        "construction": code.construction,
        "n": code.n,
        "k": code.k,
        "designed_d": code.certified_distance,
        "measured_d": measured,
        "exhaustive": exhaustive,
        "bound_d": bound,
        "optimal": optimal,
        "locality": locality,
        "locality_ok": None if locality is None else all(entry["certified"] for entry in locality),
        "mds_blocks": results.get("mds_blocks", (None, 0))[0],
        "rank_ok": results.get("rank", (None, 0))[0],
        "latency_ms": {key: latency for key, (_, latency) in results.items()},
    }
    if distance:
        report["witness"] = distance["witness"]
    return report
