import pytest
from fastapi.testclient import TestClient

from parcc import box_packing, demo_satisfies_spec
from parcc.documents import demo_from_json, demo_to_json, inventory_to_json
from parcc.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


@pytest.fixture(scope="module")
def demos():
    return box_packing.demo_set(k=3, seed=6)


def test_health(client):
    r = client.get("/api/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_templates_listing(client):
    r = client.get("/api/templates")
    names = [t["name"] for t in r.json()["templates"]]
    assert names == ["original", "relaxed", "restrictive"]
    restrictive = r.json()["templates"][2]
    assert ["DR", "N"] in restrictive["excluded_atoms"]


def test_check_satisfied(client, demos):
    r = client.post(
        "/api/check",
        json={"spec": box_packing.spec_text(), "demo": demo_to_json(demos[0])},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["satisfied"] is True
    assert body["clauses_total"] == 24
    assert body["violations"] == []


def test_check_reports_violating_objects(client, demos):
    r = client.post(
        "/api/check", json={"spec": "DR_N(R, B)", "demo": demo_to_json(demos[0])}
    )
    body = r.json()
    assert r.status_code == 200 and body["satisfied"] is False
    assert body["violations"][0]["clause"] == "DR_N(R, B)"
    assert body["violations"][0]["objects"]


def test_schema_error_is_400_with_path(client, demos):
    doc = demo_to_json(demos[0])
    doc["objects"][0]["l"] = -1
    r = client.post("/api/check", json={"spec": "DR_N(B, R)", "demo": doc})
    assert r.status_code == 400
    assert r.json()["error"]["path"] == "objects[0].l"


def test_spec_syntax_error_is_400_with_position(client, demos):
    r = client.post(
        "/api/check", json={"spec": "DR_N(B R)", "demo": demo_to_json(demos[0])}
    )
    assert r.status_code == 400
    err = r.json()["error"]
    assert err["type"] == "SpecSyntaxError" and err["line"] == 1


def test_semantic_error_is_422(client, demos):
    r = client.post(
        "/api/check", json={"spec": "DR_N(B, ZZ)", "demo": demo_to_json(demos[0])}
    )
    assert r.status_code == 422


def test_infer_roundtrip(client, demos):
    r = client.post(
        "/api/infer",
        json={"demos": [demo_to_json(d) for d in demos], "seed": 4, "max_len": 2},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["enumerated"] >= body["checked"]
    accepted = [c for c in body["clauses"] if c["accepted"]]
    assert len(accepted) == len(body["spec"].splitlines())
    assert body["template"]["name"] == "original"
    # returned rules hold on the submitted demos
    check = client.post(
        "/api/check", json={"spec": body["spec"], "demo": demo_to_json(demos[1])}
    )
    assert check.json()["satisfied"] is True


def test_infer_rejects_mismatched_metadata(client, demos):
    other = demo_to_json(demos[0])
    other["space"]["x_max"] = 99
    r = client.post(
        "/api/infer", json={"demos": [demo_to_json(demos[0]), other], "seed": 0}
    )
    assert r.status_code == 422


def test_infer_inline_template_descriptor(client, demos):
    descriptor = {
        "name": "narrow",
        "max_len": 1,
        "same_head": True,
        "homogeneous_kind": True,
    }
    r = client.post(
        "/api/infer",
        json={"demos": [demo_to_json(d) for d in demos], "seed": 2, "template": descriptor},
    )
    assert r.status_code == 200
    assert r.json()["template"]["name"] == "narrow"


def test_infer_unknown_template_name_is_400(client, demos):
    r = client.post(
        "/api/infer",
        json={"demos": [demo_to_json(demos[0])], "template": "../secret.json"},
    )
    assert r.status_code == 400


def test_infer_invalid_params_is_422(client, demos):
    r = client.post(
        "/api/infer", json={"demos": [demo_to_json(demos[0])], "p_c": 2.0}
    )
    assert r.status_code == 422


def test_place_success(client):
    inv = box_packing.inventory({"B": 2, "R": 2, "G": 2})
    r = client.post(
        "/api/place",
        json={
            "spec": box_packing.spec_text(),
            "inventory": inventory_to_json(inv),
            "seed": 8,
        },
    )
    assert r.status_code == 200
    body = r.json()
    assert body["placed"] is True
    scene = demo_from_json(body["demo"])
    assert demo_satisfies_spec(box_packing.spec(), scene)


def test_place_infeasible_flag(client):
    inv = box_packing.inventory({"B": 2, "R": 2, "G": 2})
    r = client.post(
        "/api/place",
        json={
            "spec": "DR_N(B, R)\nDR_S(B, R)",
            "inventory": inventory_to_json(inv),
        },
    )
    assert r.status_code == 200
    body = r.json()
    assert body["placed"] is False
    assert body["infeasible"]["proven"] is True
    assert body["infeasible"]["clauses_total"] == 2


def test_missing_body_fields_rejected(client):
    r = client.post("/api/check", json={"spec": "DR_N(A, B)"})
    assert r.status_code == 422


def test_static_frontend_mount(tmp_path):
    (tmp_path / "index.html").write_text("<h1>editor</h1>")
    app = create_app(frontend_dir=str(tmp_path))
    client = TestClient(app)
    assert client.get("/api/health").status_code == 200
    page = client.get("/")
    assert page.status_code == 200 and "editor" in page.text
