import json

import pytest

from dyckzeta import (
    PreconditionError,
    catalan,
    check_bijections,
    check_grevlex,
    check_induction_step,
    check_theorem,
    enumerate_dyck,
    zeta,
)


# ---------------------------------------------------------------- passing

def test_theorem_small_sizes_pass():
    report = check_theorem(1)
    assert report.passed
    assert report.instances_checked == 1
    report = check_theorem(5)
    assert report.passed
    assert report.instances_checked == 42


def test_induction_small_sizes_pass():
    report = check_induction_step(1)
    assert report.passed
    assert report.instances_checked == 2
    report = check_induction_step(4)
    assert report.passed
    assert report.instances_checked == catalan(5)


def test_bijections_small_sizes_pass():
    for n in (2, 3, 6):
        report = check_bijections(n)
        assert report.passed
        assert report.instances_checked == catalan(n)


def test_grevlex_small_sizes_pass():
    for n in (1, 3):
        report = check_grevlex(n)
        assert report.passed
        assert report.instances_checked == catalan(n)


# --------------------------------------------------------------- ceilings

def test_ceilings_guard_and_override():
    with pytest.raises(PreconditionError, match="capped"):
        check_theorem(12)
    with pytest.raises(PreconditionError, match="capped"):
        check_induction_step(10)
    with pytest.raises(PreconditionError, match="capped"):
        check_grevlex(6)
    # max_n overrides in both directions
    with pytest.raises(PreconditionError, match="capped"):
        check_theorem(3, max_n=2)
    assert check_theorem(3, max_n=3).passed


def test_checks_reject_size_zero():
    with pytest.raises(PreconditionError, match="n >= 1"):
        check_theorem(0)


# -------------------------------------------------------------- sharding

def test_parallel_shards_match_inline_content():
    lone = check_theorem(6, jobs=1)
    four = check_theorem(6, jobs=4)
    assert lone.instances_checked == four.instances_checked
    assert lone.failures == four.failures
    lone = check_induction_step(5, jobs=1)
    three = check_induction_step(5, jobs=3)
    assert lone.instances_checked == three.instances_checked
    assert lone.failures == three.failures
    lone = check_bijections(6, jobs=1)
    two = check_bijections(6, jobs=2)
    assert lone.instances_checked == two.instances_checked
    assert lone.failures == two.failures


def test_jobs_exceeding_instances_are_harmless():
    report = check_theorem(2, jobs=16)
    assert report.passed
    assert report.instances_checked == 2


# ------------------------------------------------- corrupted-map fuzzing

def _corrupted_zeta(bad, replacement):
    def zeta_fn(word):
        return replacement if word == bad else zeta(word)

    return zeta_fn


def test_corrupting_zeta_fails_theorem_and_matching_induction():
    n = 4
    words = list(enumerate_dyck(n))
    for bad in words[:5]:
        replacement = next(w for w in words if w != zeta(bad))
        zeta_fn = _corrupted_zeta(bad, replacement)
        theorem = check_theorem(n, zeta_fn=zeta_fn)
        induction = check_induction_step(n - 1, zeta_fn=zeta_fn)
        # a failure at size n must show up as a failed extension at size n-1
        assert not theorem.passed
        assert not induction.passed
        assert len(theorem.failures) == 1
        assert any(
            "add_final_peak" in f.equation for f in induction.failures
        )


def test_failure_records_carry_diagnosable_encodings():
    n = 3
    words = list(enumerate_dyck(n))
    replacement = next(w for w in words if w != zeta(words[0]))
    report = check_theorem(n, zeta_fn=_corrupted_zeta(words[0], replacement))
    (failure,) = report.failures
    keys = dict(failure.inputs)
    assert set(keys) == {"pred", "q", "p_word"}
    assert failure.lhs != failure.rhs
    assert 0 <= failure.rank < catalan(n)


# ---------------------------------------------------------------- reports

def test_report_json_shape():
    report = check_theorem(4)
    blob = json.loads(json.dumps(report.to_json_dict()))
    assert blob["check"] == "theorem"
    assert blob["n"] == 4
    assert blob["instances"] == 14
    assert blob["failures"] == []
    assert isinstance(blob["elapsed_ms"], float)


def test_report_text_shape():
    text = check_bijections(3).render_text()
    assert "check=bijections" in text
    assert "instances=5" in text
    assert text.endswith("PASS")


def test_failing_report_text_lists_counterexamples():
    n = 3
    words = list(enumerate_dyck(n))
    replacement = next(w for w in words if w != zeta(words[1]))
    report = check_theorem(n, zeta_fn=_corrupted_zeta(words[1], replacement))
    text = report.render_text()
    assert "FAIL" in text
    assert "rank" in text
    assert not report.passed
    assert report.to_json_dict()["failures"][0]["equation"] == "a(U) == zeta(p(U))"


def test_reports_are_deterministic():
    first = check_induction_step(4)
    second = check_induction_step(4)
    assert first.failures == second.failures
    assert first.instances_checked == second.instances_checked
