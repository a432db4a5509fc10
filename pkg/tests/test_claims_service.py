import json

import pytest

from leechkit.core.errors import LeechkitError, UnknownClaimError
from leechkit.schemas.schemas import ClaimStatus
from leechkit.services import claim_checks
from leechkit.services.claims_service import ClaimsService, load_manifest


def _manifest(tmp_path, claims):
    path = tmp_path / "claims.json"
    path.write_text(json.dumps({"version": 1, "claims": claims}), encoding="utf-8")
    return path


def _entry(claim_id, handler, slow=False):
    return {"id": claim_id, "handler": handler, "slow": slow, "anchor": claim_id, "description": claim_id}


def test_manifest_is_complete():
    definitions = load_manifest()
    ids = [d.id for d in definitions]
    assert len(ids) == 24
    assert len(set(ids)) == 24
    assert all(d.handler in claim_checks.CHECKS for d in definitions)


def test_fast_listing_skips_slow_claims():
    service = ClaimsService()
    fast = {d.id for d in service.listar_claims(fast=True)}
    assert len(service.listar_claims()) == 24
    assert {"leech-constructions", "S11-reproduction", "klein-smooth"}.isdisjoint(fast)
    assert len(fast) == 21


def test_unknown_claim():
    with pytest.raises(UnknownClaimError):
        ClaimsService().buscar_claim("riemann")


def test_manifest_with_missing_handler(tmp_path):
    path = _manifest(tmp_path, [_entry("x", "no_such_check")])
    with pytest.raises(LeechkitError):
        ClaimsService(path)


def test_crashing_check_is_reported_as_fail(tmp_path, monkeypatch):
    def boom():
        raise ZeroDivisionError("nada")

    monkeypatch.setitem(claim_checks.CHECKS, "boom", boom)
    service = ClaimsService(_manifest(tmp_path, [_entry("boom-claim", "boom")]))
    report = service.run_claim("boom-claim")
    assert report.status == ClaimStatus.FAIL
    assert report.evidence["error"] == "ZeroDivisionError: nada"


def test_run_all_sorts_reports(tmp_path, monkeypatch):
    monkeypatch.setitem(claim_checks.CHECKS, "ok", lambda: (ClaimStatus.PASS, {}))
    monkeypatch.setitem(claim_checks.CHECKS, "unknown", lambda: (ClaimStatus.INDETERMINATE, {}))
    path = _manifest(tmp_path, [_entry("b", "ok"), _entry("a", "unknown"), _entry("c", "ok", slow=True)])
    reports = ClaimsService(path).run_all(max_workers=2)
    assert [r.id for r in reports] == ["a", "b", "c"]
    assert [r.status for r in reports] == [ClaimStatus.INDETERMINATE, ClaimStatus.PASS, ClaimStatus.PASS]
    assert [r.id for r in ClaimsService(path).run_all(fast=True)] == ["a", "b"]


@pytest.mark.parametrize(
    "claim_id",
    ["S11-printed", "S11-genus", "ternary-genus", "polar-TW1", "polar-TW2", "klein-symplectic", "klein-fixed-lines"],
)
def test_fast_claims_pass(claim_id):
    report = ClaimsService().run_claim(claim_id)
    assert report.status == ClaimStatus.PASS, report.evidence


@pytest.mark.slow
def test_full_suite_has_no_failures():
    reports = ClaimsService().run_all()
    assert not [r.id for r in reports if r.status == ClaimStatus.FAIL]
