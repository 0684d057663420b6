import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from summarylens.config import ServiceConfig, load_service_config, parse_config_file
from summarylens.ingest import OcrKind, OcrProviderConfig
from summarylens.service import create_app
from summarylens.summarizer import Method, SummaryConfig

FIXTURE_PAGE = "Bees forage in meadows. Scouts dance directions. The colony votes on nest sites."


def make_config(tmp_path: Path, mini_table_path: Path, **overrides) -> ServiceConfig:
    base = dict(
        data_dir=tmp_path / "data",
        embeddings_path=mini_table_path,
        ocr=OcrProviderConfig(kind=OcrKind.FIXTURE, fixture_text=FIXTURE_PAGE),
    )
    base.update(overrides)
    return ServiceConfig(**base)


@pytest.fixture
def client(tmp_path, mini_table_path):
    app = create_app(make_config(tmp_path, mini_table_path))
    with TestClient(app, raise_server_exceptions=False) as test_client:
        yield test_client


def paste(client, text: str) -> str:
    response = client.post("/api/v1/documents", json={"text": text})
    assert response.status_code == 200
    return response.json()["document_id"]


class TestScan:
    def test_fixture_scan_round_trip(self, client):
        response = client.post("/api/v1/scan", content=b"\x89PNG fake image bytes")
        assert response.status_code == 200
        body = response.json()
        assert body["text"] == FIXTURE_PAGE
        stored = client.get(f"/api/v1/documents/{body['document_id']}")
        assert stored.status_code == 200
        assert stored.json()["source"] == "fixture"
        assert stored.json()["text"] == FIXTURE_PAGE

    def test_empty_body_rejected(self, client):
        response = client.post("/api/v1/scan", content=b"")
        assert response.status_code == 400
        assert "error" in response.json()

    def test_two_scans_two_documents(self, client):
        first = client.post("/api/v1/scan", content=b"img-a").json()["document_id"]
        second = client.post("/api/v1/scan", content=b"img-b").json()["document_id"]
        assert first != second


class TestPaste:
    def test_returns_normalized_text(self, client):
        response = client.post(
            "/api/v1/documents", json={"text": "Bees forage.\nThey  dance."}
        )
        assert response.status_code == 200
        assert response.json()["text"] == "Bees forage. They dance."

    def test_non_json_body(self, client):
        response = client.post("/api/v1/documents", content=b"plain text")
        assert response.status_code == 400

    def test_wrong_shape(self, client):
        response = client.post("/api/v1/documents", json={"body": "Bees forage."})
        assert response.status_code == 400

    def test_whitespace_only_text(self, client):
        response = client.post("/api/v1/documents", json={"text": "  \n\t "})
        assert response.status_code == 400


class TestListingAndGet:
    def test_empty_listing(self, client):
        response = client.get("/api/v1/documents")
        assert response.status_code == 200
        assert response.json() == []

    def test_listing_has_previews(self, client):
        paste(client, "Bees forage in sunny meadows. They return at dusk.")
        entries = client.get("/api/v1/documents").json()
        assert len(entries) == 1
        assert set(entries[0]) == {"id", "created_at", "preview"}
        assert entries[0]["preview"].startswith("Bees forage")

    def test_listing_newest_first(self, client):
        first = paste(client, "Oldest document text.")
        second = paste(client, "Newest document text.")
        ids = [entry["id"] for entry in client.get("/api/v1/documents").json()]
        assert ids.index(second) < ids.index(first)

    def test_unknown_document(self, client):
        response = client.get("/api/v1/documents/doesnotexist")
        assert response.status_code == 404
        assert "error" in response.json()


class TestSummaryRoute:
    def test_defaults(self, client):
        doc_id = paste(client, FIXTURE_PAGE)
        response = client.get(f"/api/v1/documents/{doc_id}/summary")
        assert response.status_code == 200
        body = response.json()
        assert body["method"] == "textrank"
        assert body["k"] == 5
        assert body["selected"] == sorted(body["selected"])
        assert len(body["selected"]) == min(5, len(body["scores"]))
        assert abs(sum(body["scores"]) - 1.0) < 1e-9

    def test_explicit_k_and_method(self, client):
        doc_id = paste(client, FIXTURE_PAGE)
        response = client.get(f"/api/v1/documents/{doc_id}/summary?k=2&method=frequency")
        assert response.status_code == 200
        assert response.json()["k"] == 2
        assert response.json()["method"] == "frequency"
        assert len(response.json()["selected"]) == 2

    def test_k_zero_rejected(self, client):
        doc_id = paste(client, FIXTURE_PAGE)
        assert client.get(f"/api/v1/documents/{doc_id}/summary?k=0").status_code == 400

    def test_k_not_integer_rejected(self, client):
        doc_id = paste(client, FIXTURE_PAGE)
        assert client.get(f"/api/v1/documents/{doc_id}/summary?k=abc").status_code == 400

    def test_unknown_method_rejected(self, client):
        doc_id = paste(client, FIXTURE_PAGE)
        assert client.get(f"/api/v1/documents/{doc_id}/summary?method=nope").status_code == 400

    def test_abstractive_rejected(self, client):
        doc_id = paste(client, FIXTURE_PAGE)
        response = client.get(f"/api/v1/documents/{doc_id}/summary?method=abstractive")
        assert response.status_code == 400

    def test_unknown_document(self, client):
        assert client.get("/api/v1/documents/nope/summary").status_code == 404

    def test_cache_hit_byte_identical(self, client):
        doc_id = paste(client, FIXTURE_PAGE)
        first = client.get(f"/api/v1/documents/{doc_id}/summary")
        second = client.get(f"/api/v1/documents/{doc_id}/summary")
        assert first.content == second.content

    def test_canonical_field_order(self, client):
        doc_id = paste(client, FIXTURE_PAGE)
        body = client.get(f"/api/v1/documents/{doc_id}/summary").content
        assert list(json.loads(body)) == [
            "document_id", "method", "k", "selected", "sentences", "scores", "converged",
        ]
        assert b": " not in body


class TestHighlightsRoute:
    def test_spans_slice_to_sentences(self, client):
        doc_id = paste(client, FIXTURE_PAGE)
        summary = client.get(f"/api/v1/documents/{doc_id}/summary?k=2").json()
        marked = client.get(f"/api/v1/documents/{doc_id}/highlights?k=2").json()
        assert list(marked) == ["text", "highlight_spans"]
        assert len(marked["highlight_spans"]) == 2
        for (start, end), sentence in zip(marked["highlight_spans"], summary["sentences"]):
            assert marked["text"][start:end] == sentence

    def test_unknown_document(self, client):
        assert client.get("/api/v1/documents/nope/highlights").status_code == 404


class TestPersistenceAcrossRestart:
    def test_documents_and_summaries_survive(self, tmp_path, mini_table_path):
        config = make_config(tmp_path, mini_table_path)
        with TestClient(create_app(config)) as first:
            doc_id = paste(first, FIXTURE_PAGE)
            before = first.get(f"/api/v1/documents/{doc_id}/summary").content
        with TestClient(create_app(config)) as second:
            listing = second.get("/api/v1/documents").json()
            assert [entry["id"] for entry in listing] == [doc_id]
            after = second.get(f"/api/v1/documents/{doc_id}/summary").content
        assert before == after


class TestRootAndStartup:
    def test_root_reports_api_prefix(self, client):
        body = client.get("/").json()
        assert body["api"] == "/api/v1"

    def test_static_dir_served_at_root(self, tmp_path, mini_table_path):
        ui_dir = tmp_path / "ui"
        ui_dir.mkdir()
        (ui_dir / "index.html").write_text("<!doctype html><title>ui</title>", encoding="utf-8")
        config = make_config(tmp_path, mini_table_path, static_dir=ui_dir)
        with TestClient(create_app(config)) as client:
            response = client.get("/")
            assert response.status_code == 200
            assert "<title>ui</title>" in response.text

    def test_textrank_without_embeddings_fails_fast(self, tmp_path):
        config = ServiceConfig(data_dir=tmp_path / "data")
        with pytest.raises(ValueError):
            create_app(config)

    def test_frequency_service_needs_no_embeddings(self, tmp_path):
        config = ServiceConfig(
            data_dir=tmp_path / "data",
            summary=SummaryConfig(method=Method.FREQUENCY),
        )
        with TestClient(create_app(config)) as client:
            doc_id = paste(client, "Bees forage. Bees dance. Stones sit.")
            response = client.get(f"/api/v1/documents/{doc_id}/summary")
            assert response.status_code == 200
            assert response.json()["method"] == "frequency"


class TestConfigLoading:
    def test_parse_config_file(self, tmp_path):
        path = tmp_path / "service.conf"
        path.write_text(
            "# comment line\n"
            "port = 9000\n"
            "k = 3\n"
            "method = frequency\n"
            "\n"
            "damping = 0.9\n",
            encoding="utf-8",
        )
        values = parse_config_file(path)
        assert values == {"port": "9000", "k": "3", "method": "frequency", "damping": "0.9"}

    def test_unknown_key_rejected(self, tmp_path):
        path = tmp_path / "service.conf"
        path.write_text("prot = 9000\n", encoding="utf-8")
        with pytest.raises(ValueError, match="unknown key"):
            parse_config_file(path)

    def test_missing_equals_rejected(self, tmp_path):
        path = tmp_path / "service.conf"
        path.write_text("port 9000\n", encoding="utf-8")
        with pytest.raises(ValueError, match="key = value"):
            parse_config_file(path)

    def test_file_values_applied(self, tmp_path, mini_table_path):
        path = tmp_path / "service.conf"
        path.write_text(
            f"port = 9000\nk = 3\nmethod = frequency\nembeddings = {mini_table_path}\n"
            f"data_dir = {tmp_path / 'data'}\ndamping = 0.9\nmax_iterations = 50\n",
            encoding="utf-8",
        )
        config = load_service_config(path, env={})
        assert config.port == 9000
        assert config.summary.k == 3
        assert config.summary.method is Method.FREQUENCY
        assert config.summary.rank.damping == 0.9
        assert config.summary.rank.max_iterations == 50
        assert config.embeddings_path == mini_table_path

    def test_env_overrides_file(self, tmp_path, mini_table_path):
        path = tmp_path / "service.conf"
        path.write_text(f"port = 9000\nembeddings = {tmp_path / 'absent.txt'}\n", encoding="utf-8")
        env = {
            "SUMMARYLENS_PORT": "9100",
            "SUMMARYLENS_DATA_DIR": str(tmp_path / "envdata"),
            "SUMMARYLENS_EMBEDDINGS": str(mini_table_path),
        }
        config = load_service_config(path, env=env)
        assert config.port == 9100
        assert config.data_dir == tmp_path / "envdata"
        assert config.embeddings_path == mini_table_path

    def test_defaults_without_file(self):
        config = load_service_config(None, env={})
        assert config.port == 8080
        assert config.summary.k == 5
        assert config.summary.method is Method.TEXTRANK
        assert config.ocr.kind is OcrKind.FIXTURE

    def test_fixture_file_key_reads_text(self, tmp_path):
        page = tmp_path / "page.txt"
        page.write_text("Stored page text.", encoding="utf-8")
        conf = tmp_path / "service.conf"
        conf.write_text(f"ocr_fixture_file = {page}\n", encoding="utf-8")
        config = load_service_config(conf, env={})
        assert config.ocr.fixture_text == "Stored page text."
