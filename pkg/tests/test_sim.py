import io
import json

import numpy as np
import pytest

from rmproduct import sim


def quick_point(**overrides):
    args = dict(
        mode="soft", iterations=2, ebno_db=1.0,
        min_block_errors=25, max_frames=3000, seed=77,
    )
    args.update(overrides)
    return sim.run_point("rm(3,1)xrm(2,1)", **args)


def test_wilson_interval_textbook_value():
    lo, hi = sim.wilson_interval(5, 100)
    assert lo == pytest.approx(0.0215, abs=2e-3)
    assert hi == pytest.approx(0.1118, abs=2e-3)


def test_wilson_interval_edges():
    lo, hi = sim.wilson_interval(0, 50)
    assert lo == 0.0 and 0.0 < hi < 0.12
    lo, hi = sim.wilson_interval(50, 50)
    assert 0.88 < lo < 1.0 and hi == 1.0
    assert sim.wilson_interval(0, 0) == (0.0, 1.0)


def test_noiseless_limit_has_zero_bler():
    point = sim.run_point("rm(3,1)xrm(2,1)", mode="soft", iterations=1, ebno_db=40.0,
                          min_block_errors=1, max_frames=1000, seed=5)
    assert point.frames == 1000
    assert point.block_errors == 0
    assert point.bler == 0.0
    assert point.bit_errors == 0


def test_point_tally_invariants():
    point = quick_point()
    code_k = 12  # rm(3,1)xrm(2,1): 4 * 3
    assert 0 < point.block_errors <= point.frames <= 3000
    assert point.bler == point.block_errors / point.frames
    assert point.ber == point.bit_errors / (point.frames * code_k)
    assert point.bler_ci_lo <= point.bler <= point.bler_ci_hi


def test_stopping_rule_hits_error_target_exactly():
    point = quick_point()
    assert point.block_errors == 25  # stops at the frame of the 25th error


def test_stopping_rule_respects_frame_cap():
    point = quick_point(ebno_db=8.0, min_block_errors=10_000, max_frames=600)
    assert point.frames == 600
    assert point.block_errors < 10_000


def test_same_seed_reproduces_point():
    assert quick_point() == quick_point()


def test_different_seeds_differ():
    assert quick_point(seed=77) != quick_point(seed=78)


def test_worker_count_does_not_change_results():
    serial = quick_point(workers=1)
    parallel = quick_point(workers=2)
    assert serial == parallel


def test_snr_matches_rate_and_ebno():
    point = quick_point()
    # Eb/N0 (dB) = SNR (dB) - 10 log10(rate)
    assert point.snr_db == pytest.approx(point.ebno_db + 10 * np.log10(12 / 32), abs=1e-9)


def test_hard_mode_counts_fewer_operations():
    soft = quick_point(mode="soft")
    hard = quick_point(mode="hard")
    assert hard.ops_per_decode <= soft.ops_per_decode


def test_bler_monotone_in_ebno_up_to_ci_overlap():
    config = sim.SimConfig(
        code="rm(4,1)xrm(2,1)", decoder="soft", iterations=2,
        ebno_dbs=(0.0, 1.0, 2.0, 3.0), min_block_errors=50,
        max_frames=20_000, seed=9,
    )
    points = sim.run_sweep(config)
    for lower, higher in zip(points, points[1:]):
        assert higher.bler <= lower.bler or higher.bler_ci_lo <= lower.bler_ci_hi


def test_csv_format():
    points = [quick_point()]
    stream = io.StringIO()
    sim.emit_csv(points, stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == ("ebno_db,snr_db,frames,bit_errors,block_errors,"
                        "ber,bler,bler_ci_lo,bler_ci_hi,ops_per_decode")
    assert len(lines) == 2
    fields = lines[1].split(",")
    assert len(fields) == 10
    assert float(fields[0]) == 1.0
    assert int(fields[2]) == points[0].frames


def test_csv_empty_grid_has_header_only():
    stream = io.StringIO()
    sim.emit_csv([], stream)
    assert stream.getvalue() == ("ebno_db,snr_db,frames,bit_errors,block_errors,"
                                 "ber,bler,bler_ci_lo,bler_ci_hi,ops_per_decode\n")


def test_json_format_carries_config():
    config = sim.SimConfig(code="rm(3,1)xrm(2,1)", ebno_dbs=(1.0,), min_block_errors=25,
                           max_frames=3000, seed=77, iterations=2)
    points = sim.run_sweep(config)
    stream = io.StringIO()
    sim.emit_json(points, config, stream)
    payload = json.loads(stream.getvalue())
    assert payload["config"]["code"] == "rm(3,1)xrm(2,1)"
    assert payload["config"]["seed"] == 77
    assert len(payload["points"]) == 1
    assert set(payload["points"][0]) == set(sim.CSV_COLUMNS)


def test_config_validation():
    with pytest.raises(ValueError):
        sim.SimConfig(code="rm(2,1)", decoder="fuzzy")
    with pytest.raises(ValueError):
        sim.SimConfig(code="rm(2,1)", iterations=0)
    with pytest.raises(ValueError):
        sim.SimConfig(code="rm(2,1)", min_block_errors=0)
    with pytest.raises(ValueError):
        sim.SimConfig(code="rm(2,1)", max_frames=0)
    with pytest.raises(ValueError):
        sim.SimConfig(code="rm(2,1)", workers=0)
    with pytest.raises(ValueError):
        sim.SimConfig(code="rm(2,1)", out_format="xml")


def test_run_point_accepts_prebuilt_code():
    from rmproduct.product import product_code_from_descriptor

    code = product_code_from_descriptor("rm(3,1)xrm(2,1)")
    direct = sim.run_point(code, mode="soft", iterations=2, ebno_db=1.0,
                           min_block_errors=25, max_frames=3000, seed=77)
    assert direct == quick_point()
