"""Engine and service configuration.

Configuration files use a flat ``key = value`` format, UTF-8, one pair per
line, '#' comments. Recognized keys:

    host, port, data_dir, embeddings, embeddings_max_tokens,
    k, method, damping, tolerance, max_iterations,
    ocr_kind, ocr_fixture_text, ocr_fixture_file, ocr_endpoint_url, ocr_timeout,
    static_dir, highlight_open, highlight_close

Environment variables SUMMARYLENS_PORT, SUMMARYLENS_DATA_DIR and
SUMMARYLENS_EMBEDDINGS override the corresponding file values.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping

from .ingest import OcrKind, OcrProviderConfig
from .ranker import RankConfig
from .summarizer import Method, SummaryConfig

_KNOWN_KEYS = {
    "host",
    "port",
    "data_dir",
    "embeddings",
    "embeddings_max_tokens",
    "k",
    "method",
    "damping",
    "tolerance",
    "max_iterations",
    "ocr_kind",
    "ocr_fixture_text",
    "ocr_fixture_file",
    "ocr_endpoint_url",
    "ocr_timeout",
    "static_dir",
    "highlight_open",
    "highlight_close",
}


@dataclass(frozen=True)
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8080
    data_dir: Path = Path("summarylens_data")
    embeddings_path: Path | None = None
    embeddings_max_tokens: int | None = None
    summary: SummaryConfig = field(default_factory=SummaryConfig)
    ocr: OcrProviderConfig = field(default_factory=lambda: OcrProviderConfig(kind=OcrKind.FIXTURE))
    static_dir: Path | None = None
    highlight_open: str = ">>"
    highlight_close: str = "<<"

    def validated(self) -> "ServiceConfig":
        """Check startup invariants; creates the data directory if missing."""
        if not 1 <= self.port <= 65535:
            raise ValueError(f"port must be in [1, 65535], got {self.port}")
        self.data_dir.mkdir(parents=True, exist_ok=True)
        if self.summary.method is Method.TEXTRANK and self.embeddings_path is None:
            raise ValueError("the textrank method requires an embeddings path")
        if self.embeddings_path is not None and not self.embeddings_path.exists():
            raise ValueError(f"embeddings path does not exist: {self.embeddings_path}")
        if self.static_dir is not None and not self.static_dir.is_dir():
            raise ValueError(f"static dir does not exist: {self.static_dir}")
        return self


def parse_config_file(path: str | Path) -> dict[str, str]:
    values: dict[str, str] = {}
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ValueError(f"{path}:{line_no}: expected 'key = value'")
        key, _, value = stripped.partition("=")
        key = key.strip()
        if key not in _KNOWN_KEYS:
            raise ValueError(f"{path}:{line_no}: unknown key {key!r}")
        values[key] = value.strip()
    return values


def load_service_config(
    config_path: str | Path | None = None,
    env: Mapping[str, str] = os.environ,
) -> ServiceConfig:
    values = parse_config_file(config_path) if config_path else {}
    if "SUMMARYLENS_PORT" in env:
        values["port"] = env["SUMMARYLENS_PORT"]
    if "SUMMARYLENS_DATA_DIR" in env:
        values["data_dir"] = env["SUMMARYLENS_DATA_DIR"]
    if "SUMMARYLENS_EMBEDDINGS" in env:
        values["embeddings"] = env["SUMMARYLENS_EMBEDDINGS"]
    return _config_from_values(values)


def _config_from_values(values: dict[str, str]) -> ServiceConfig:
    config = ServiceConfig()
    if "host" in values:
        config = replace(config, host=values["host"])
    if "port" in values:
        config = replace(config, port=int(values["port"]))
    if "data_dir" in values:
        config = replace(config, data_dir=Path(values["data_dir"]))
    if "embeddings" in values:
        config = replace(config, embeddings_path=Path(values["embeddings"]))
    if "embeddings_max_tokens" in values:
        config = replace(config, embeddings_max_tokens=int(values["embeddings_max_tokens"]))
    if "static_dir" in values:
        config = replace(config, static_dir=Path(values["static_dir"]))
    if "highlight_open" in values:
        config = replace(config, highlight_open=values["highlight_open"])
    if "highlight_close" in values:
        config = replace(config, highlight_close=values["highlight_close"])

    rank = RankConfig(
        damping=float(values.get("damping", RankConfig.damping)),
        tolerance=float(values.get("tolerance", RankConfig.tolerance)),
        max_iterations=int(values.get("max_iterations", RankConfig.max_iterations)),
    )
    summary = SummaryConfig(
        method=Method(values.get("method", Method.TEXTRANK.value)),
        k=int(values.get("k", 5)),
        rank=rank,
    )
    config = replace(config, summary=summary)

    fixture_text = values.get("ocr_fixture_text")
    if "ocr_fixture_file" in values:
        fixture_text = Path(values["ocr_fixture_file"]).read_text(encoding="utf-8")
    ocr = OcrProviderConfig(
        kind=OcrKind(values.get("ocr_kind", OcrKind.FIXTURE.value)),
        fixture_text=fixture_text,
        endpoint_url=values.get("ocr_endpoint_url"),
        timeout=float(values.get("ocr_timeout", OcrProviderConfig.timeout)),
    )
    return replace(config, ocr=ocr)
