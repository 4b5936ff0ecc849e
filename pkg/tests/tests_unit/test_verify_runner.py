"""Unit tests for the verification checks and the concurrent runner."""

from lrc.Catalog.catalog import (arbitrary_11_5_3, crt_8_4, local_mds_12_4_2_3, lrc_9_4_2, multi_12_4_2_3,
                                 multi_12_6_2_3, product_9_4_rs)
from lrc.Oracle.checks import (VERIFY_REGISTRY, check_locality, check_mds_blocks, check_rank,
                               declared_locality, upper_bound)
from lrc.Oracle.verify_runner import run_all_checks


def test_registry_keys():
    """The runner knows four checks."""
    assert [key for key, _ in VERIFY_REGISTRY] == ["distance", "locality", "mds_blocks", "rank"]


# ---------------------------------------------------------------------------
# Declared locality and bounds
# ---------------------------------------------------------------------------

def test_declared_locality():
    """Plain codes read r symbols; multi and product take the smallest set."""
    assert declared_locality(lrc_9_4_2()) == 2
    assert declared_locality(multi_12_4_2_3()) == 2
    assert declared_locality(product_9_4_rs()) == 2


def test_upper_bound_per_construction():
    """Singleton-like, local-MDS and weakest-block bounds."""
    assert upper_bound(lrc_9_4_2()) == 5
    assert upper_bound(local_mds_12_4_2_3()) == 7
    assert upper_bound(crt_8_4()) == 3
    assert upper_bound(multi_12_4_2_3()) == 8


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------

def test_check_rank_and_latency():
    """Checks return (result, latency_ms)."""
    result, latency = check_rank(lrc_9_4_2(), 0)
    assert result is True
    assert isinstance(latency, int) and latency >= 0


def test_check_mds_blocks_skips_plain_codes():
    """Only local-MDS and CRT codes have MDS blocks to check."""
    assert check_mds_blocks(lrc_9_4_2(), 0)[0] is None
    out, _ = check_mds_blocks(crt_8_4(), 0)
    assert [entry["ok"] for entry in out] == [True, True]


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

def test_report_for_optimal_code():
    """(9, 4, 2) measures d = 5 and meets the bound."""
    report = run_all_checks(lrc_9_4_2())
    assert report["construction"] == "lrc"
    assert (report["n"], report["k"], report["designed_d"]) == (9, 4, 5)
    assert report["measured_d"] == 5
    assert report["exhaustive"] is True
    assert report["bound_d"] == 5
    assert report["optimal"] is True
    assert report["locality_ok"] is True
    assert [entry["position"] for entry in report["locality"]] == list(range(9))
    assert {entry["locality"] for entry in report["locality"]} == {2}
    assert report["mds_blocks"] is None
    assert report["rank_ok"] is True
    assert len(report["witness"]) == 4
    assert set(report["latency_ms"]) == {"distance", "locality", "mds_blocks", "rank"}


def test_report_for_local_mds_code():
    """Blocks are MDS and d = 7 meets the local-MDS bound."""
    report = run_all_checks(local_mds_12_4_2_3())
    assert report["measured_d"] == 7
    assert report["optimal"] is True
    assert all(entry["ok"] for entry in report["mds_blocks"])


def test_report_for_crt_code():
    """d = 3 is the distance of each (4, 2) block."""
    report = run_all_checks(crt_8_4())
    assert report["designed_d"] == 3
    assert report["measured_d"] == 3
    assert report["bound_d"] == 3
    assert report["optimal"] is True


def test_report_uses_multi_set_bound_for_designed_distance():
    """Two recovering sets per symbol lift the designed distance from 2 to 4."""
    code = multi_12_6_2_3()
    assert code.designed_distance == 2
    report = run_all_checks(code, registry=[("rank", check_rank)])
    assert report["designed_d"] == 4


def test_report_locality_per_position():
    """The short block of the (11, 5, 3) code is repaired from 2 symbols."""
    report = run_all_checks(arbitrary_11_5_3(), registry=[("locality", check_locality)])
    localities = [entry["locality"] for entry in report["locality"]]
    assert localities == [3] * 8 + [2] * 3
    assert report["locality"][8]["recovering_sets"] == [[9, 10]]
    assert report["locality_ok"] is True


def test_sampled_distance_has_no_verdict():
    """Without exhaustive enumeration optimality stays undecided."""
    report = run_all_checks(lrc_9_4_2(), cap=100)
    assert report["exhaustive"] is False
    assert report["optimal"] is None
    assert report["measured_d"] >= 5


def test_failing_check_is_reported_as_none():
    """An exception in one check does not abort the others."""
    def boom(code, cap):
        raise RuntimeError("boom")

    def bare(code, cap):
        return True

    report = run_all_checks(lrc_9_4_2(), registry=[("distance", boom), ("rank", bare)])
    assert report["measured_d"] is None
    assert report["rank_ok"] is True
    assert report["latency_ms"] == {"distance": 0, "rank": 0}
    assert "witness" not in report
