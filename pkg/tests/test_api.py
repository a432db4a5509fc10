import pytest
from fastapi.testclient import TestClient

from leechkit.core import catalog
from leechkit.schemas.schemas import LatticeSchema


@pytest.fixture(scope="module")
def client():
    from leechkit.main import app

    with TestClient(app) as test_client:
        yield test_client


def _payload(lattice):
    return LatticeSchema.from_lattice(lattice).model_dump()


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_catalog_routes(client):
    names = client.get("/api/v1/catalog").json()
    assert "E8" in names
    response = client.get("/api/v1/catalog/D4")
    assert response.status_code == 200
    assert len(response.json()["gram"]) == 4
    assert client.get("/api/v1/catalog/Z9").status_code == 404
    assert client.get("/api/v1/catalog/A_n", params={"n": 0}).status_code == 422


def test_discriminant_route(client):
    response = client.post("/api/v1/lattices/discriminant", json=_payload(catalog.a_n(2)))
    assert response.status_code == 200
    data = response.json()
    assert data["form"]["invariants"] == [3]
    assert data["form"]["q"] == ["2/3"]
    assert data["milgram_signature"] == 2
    assert data["consistent"] is True


def test_discriminant_rejects_degenerate(client):
    payload = {"label": "bad", "gram": [[1, 1], [1, 1]]}
    assert client.post("/api/v1/lattices/discriminant", json=payload).status_code == 422


def test_enumerate_route(client):
    body = {"lattice": _payload(catalog.e_n(8)), "bound": 2}
    response = client.post("/api/v1/lattices/enumerate", json=body)
    assert response.status_code == 200
    assert response.json()["counts"] == {"2": 240}
    body["limit"] = 10
    assert client.post("/api/v1/lattices/enumerate", json=body).status_code == 413
    body["bound"] = 0
    assert client.post("/api/v1/lattices/enumerate", json=body).status_code == 422


def test_isometry_route(client, t1, t2):
    body = {"first": _payload(t1), "second": _payload(t2)}
    response = client.post("/api/v1/lattices/isometry", json=body)
    assert response.status_code == 200
    assert response.json()["status"] == "not_isometric"


def test_niemeier_routes(client):
    rows = client.get("/api/v1/niemeier").json()
    assert len(rows) == 24
    assert rows[22]["expected_roots"] == 48
    response = client.get("/api/v1/niemeier/N23", params={"verify_roots": True})
    assert response.status_code == 200
    assert response.json()["roots"] == 48
    assert response.json()["roots_ok"] is True
    assert client.get("/api/v1/niemeier/N24").status_code == 404


def test_claim_routes(client):
    claims = client.get("/api/v1/claims", params={"fast": True}).json()
    assert len(claims) == 21
    response = client.get("/api/v1/claims/klein-symplectic")
    assert response.status_code == 200
    assert response.json()["status"] == "pass"
    assert client.get("/api/v1/claims/riemann").status_code == 404


def test_klein_routes(client):
    response = client.get("/api/v1/klein/fixed-lines", params={"automorphism": "psi"})
    assert response.status_code == 200
    assert response.json()["fixed_points"] == [1, 2, 3, 4, 5]
    assert client.get("/api/v1/klein/fixed-lines", params={"automorphism": "alpha"}).status_code == 422
    assert client.get("/api/v1/klein/fixed-lines", params={"automorphism": "omega"}).status_code == 404
    assert client.get("/api/v1/klein/smooth", params={"prime": 3}).status_code == 422
    ranks = client.get("/api/v1/klein/ranks").json()
    assert ranks["residue_ranks"] == {"psi": 20, "beta": 16}
    assert ranks["consistent"] is True
