"""Tests for the bounded exhaustive verification sweeps and their reports."""

import pytest

from qshuffle.verify import (
    MAX_WITNESSES,
    PROPERTIES,
    VerificationReport,
    _report,
    _thread_count,
    run_property,
    sweep_assoc,
    sweep_basis,
    sweep_comm,
    sweep_ehat_hom,
    sweep_goss,
    sweep_lemma_left_mul,
    sweep_lemma_ye_expansion,
    sweep_lemma_yx_expansion,
    sweep_oracle,
    sweep_phi_iso,
    sweep_pi_hom,
)


@pytest.mark.parametrize("q", [2, 3])
def test_sweep_comm(q):
    rep = sweep_comm(q, 4, "R")
    assert rep.ok
    assert (rep.checked, rep.passed, rep.failed) == (26, 26, 0)
    assert rep.params == {"q": q, "weight_cap": 4, "algebra": "R"}


def test_sweep_comm_full_algebra():
    rep = sweep_comm(2, 3, "E")
    assert rep.ok and rep.checked == 33


def test_sweep_assoc_r():
    rep = sweep_assoc(2, 4, "R")
    assert rep.ok
    assert rep.checked == 104
    assert rep.property == "assoc-R"


def test_sweep_assoc_e():
    rep = sweep_assoc(2, 3, "E")
    assert rep.ok
    assert rep.checked == 138
    assert rep.property == "assoc-E"


def test_sweep_ehat_hom():
    rep = sweep_ehat_hom(2, 4)
    assert rep.ok and rep.checked == 42


def test_sweep_pi_hom():
    rep = sweep_pi_hom(2, 3)
    assert rep.ok and rep.checked == 33


def test_sweep_phi_iso():
    rep = sweep_phi_iso(2, 4)
    assert rep.ok and rep.checked == 111
    assert rep.params["hom_cap"] == 3
    tight = sweep_phi_iso(2, 2, hom_cap=2)
    assert tight.ok


def test_sweep_basis():
    rep = sweep_basis(2, 4)
    assert rep.ok and rep.checked == 48


@pytest.mark.parametrize("q", [2, 3])
def test_sweep_lemma_left_mul(q):
    rep = sweep_lemma_left_mul(q, 4)
    assert rep.ok and rep.checked == 56
    assert rep.property == "lemma-3-7"


@pytest.mark.parametrize("q", [2, 3])
def test_sweep_lemma_yx_expansion(q):
    rep = sweep_lemma_yx_expansion(q, 4)
    assert rep.ok and rep.checked == 32
    assert rep.property == "lemma-3-8"


@pytest.mark.parametrize("q", [2, 3])
def test_sweep_lemma_ye_expansion(q):
    rep = sweep_lemma_ye_expansion(q, 4)
    assert rep.ok and rep.checked == 17
    assert rep.property == "lemma-3-9"


def test_sweep_oracle():
    rep = sweep_oracle(2, 6, 20)
    assert rep.ok and rep.checked == 256
    assert rep.params == {"q": 2, "weight_cap": 6, "precision": 20}


def test_sweep_goss():
    rep = sweep_goss(3, 50)
    assert rep.ok and rep.checked == 50


def test_report_json_shape_is_run_independent():
    rep = sweep_comm(2, 3, "R")
    doc = rep.to_json()
    assert sorted(doc) == ["checked", "failed", "params", "passed", "property", "witnesses"]
    assert "wall_ms" not in doc
    again = sweep_comm(2, 3, "R").to_json()
    assert doc == again


def test_report_seed_round_trips_when_set():
    rep = VerificationReport("demo", {}, 1, 1, 0, seed=17)
    assert rep.to_json()["seed"] == 17
    assert "seed: 17" in rep.render_text()


def test_render_text():
    rep = sweep_comm(2, 3, "R")
    text = rep.render_text()
    assert text.startswith("property: comm\n")
    assert "checked: 11  passed: 11  failed: 0" in text
    assert text.splitlines()[-1].startswith("wall: ")


def test_witness_cap():
    results = [f"witness {i}" for i in range(MAX_WITNESSES + 10)] + [None] * 5
    rep = _report("demo", {}, results, 0.0)
    assert rep.failed == MAX_WITNESSES + 10
    assert len(rep.witnesses) == MAX_WITNESSES
    assert not rep.ok
    assert rep.witnesses[0] == "witness 0"


def test_registry_names_and_dispatch():
    assert sorted(PROPERTIES) == [
        "assoc-E",
        "assoc-R",
        "basis",
        "comm",
        "ehat-hom",
        "lemma-3-7",
        "lemma-3-8",
        "phi-iso",
        "pi-hom",
    ]
    for name in PROPERTIES:
        rep = run_property(name, 2, 2)
        assert rep.ok, name


def test_run_property_unknown_name():
    with pytest.raises(ValueError, match="unknown property"):
        run_property("lemma-3-9", 2, 3)


def test_thread_env(monkeypatch):
    monkeypatch.setenv("QSHUFFLE_THREADS", "4")
    assert _thread_count() == 4
    rep = sweep_comm(2, 4, "R")
    assert rep.ok and rep.checked == 26
    monkeypatch.setenv("QSHUFFLE_THREADS", "abc")
    assert _thread_count() == 1
    monkeypatch.setenv("QSHUFFLE_THREADS", "-3")
    assert _thread_count() == 1
    monkeypatch.delenv("QSHUFFLE_THREADS")
    assert _thread_count() == 1
