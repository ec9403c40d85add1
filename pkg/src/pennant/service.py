"""Read-only HTTP service over a prebuilt index.

The index is loaded once at startup and never mutated, so any number of
request threads can share it. Endpoints (all GET):

    /healthz                      liveness probe, text/plain "ok"
    /terms?prefix=&limit=         seed autocomplete: matching terms + df
    /pennant?seed=&min_co=&top_k=&base=&alpha=&gamma=&tau=
                                  diagram as JSON
    /pennant.svg?...              same parameters, rendered SVG

Omitted parameters fall back to the configured defaults. Unknown seeds
are 404 with a JSON body, malformed parameters 400. Response bodies are
pure functions of (index, query), byte-identical across repeats.
"""

from __future__ import annotations

import json
import logging
import signal
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlsplit

from .diagram import DEFAULT_MIN_CO, SectorParams, compute_pennant
from .errors import InvalidNError, UnknownTermError
from .index import TermIndex, load_index
from .render import RenderStyle, to_json, to_svg
from .weighting import DEFAULT_BASE, WeightParams

log = logging.getLogger("pennant.service")

DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8080


@dataclass
class ServiceConfig:
    index_path: str | Path
    host: str = DEFAULT_HOST
    port: int = DEFAULT_PORT
    min_co: int = DEFAULT_MIN_CO
    log_base: float = DEFAULT_BASE
    top_k: int | None = None
    sectors: SectorParams = field(default_factory=SectorParams)
    cors: bool = False
    terms_limit: int = 20


class _BadParameter(Exception):
    def __init__(self, name: str, reason: str):
        super().__init__(f"malformed parameter {name}: {reason}")
        self.name = name


def _dump(obj) -> bytes:
    return json.dumps(obj, indent=2, ensure_ascii=False).encode("utf-8")


class PennantRequestHandler(BaseHTTPRequestHandler):
    server_version = "pennant/0.1"
    protocol_version = "HTTP/1.1"
    # reap idle keep-alive connections: without this, a client that holds
    # its socket open would block the thread join in server_close()
    timeout = 2.0

    # typed views of self.server set by PennantHTTPServer
    @property
    def index(self) -> TermIndex:
        return self.server.index  # type: ignore[attr-defined]

    @property
    def config(self) -> ServiceConfig:
        return self.server.config  # type: ignore[attr-defined]

    def log_message(self, format, *args):  # noqa: A002 - stdlib signature
        log.debug("%s - %s", self.address_string(), format % args)

    def do_GET(self):
        url = urlsplit(self.path)
        query = {k: v[0] for k, v in parse_qs(url.query, keep_blank_values=True).items()}
        try:
            if url.path == "/healthz":
                self._reply(200, b"ok", "text/plain; charset=utf-8")
            elif url.path == "/terms":
                self._handle_terms(query)
            elif url.path == "/pennant":
                body = to_json(self._diagram(query)).encode("utf-8")
                self._reply(200, body, "application/json; charset=utf-8")
            elif url.path == "/pennant.svg":
                body = to_svg(self._diagram(query), RenderStyle()).encode("utf-8")
                self._reply(200, body, "image/svg+xml")
            else:
                self._reply(
                    404,
                    _dump({"error": "not found", "path": url.path}),
                    "application/json; charset=utf-8",
                )
        except UnknownTermError as exc:
            self._reply(
                404,
                _dump({"error": "unknown term", "seed": exc.term}),
                "application/json; charset=utf-8",
            )
        except (_BadParameter, InvalidNError, ValueError) as exc:
            self._reply(
                400,
                _dump({"error": str(exc)}),
                "application/json; charset=utf-8",
            )

    def _handle_terms(self, query: dict[str, str]):
        prefix = query.get("prefix", "")
        limit = self._int(query, "limit", self.config.terms_limit)
        matches = self.index.terms_with_prefix(prefix, limit=limit)
        payload = {
            "prefix": prefix,
            "terms": [{"term": t, "df": df} for t, df in matches],
        }
        self._reply(200, _dump(payload), "application/json; charset=utf-8")

    def _diagram(self, query: dict[str, str]):
        if "seed" not in query or not query["seed"]:
            raise _BadParameter("seed", "required")
        cfg = self.config
        return compute_pennant(
            self.index,
            seed=query["seed"],
            min_co=self._int(query, "min_co", cfg.min_co),
            top_k=self._int(query, "top_k", cfg.top_k),
            weights=WeightParams(log_base=self._float(query, "base", cfg.log_base)),
            sectors=SectorParams(
                alpha=self._float(query, "alpha", cfg.sectors.alpha),
                gamma=self._float(query, "gamma", cfg.sectors.gamma),
                tau=self._float(query, "tau", cfg.sectors.tau),
            ),
        )

    def _int(self, query, name, default):
        if name not in query:
            return default
        try:
            return int(query[name])
        except ValueError:
            raise _BadParameter(name, f"expected an integer, got {query[name]!r}") from None

    def _float(self, query, name, default):
        if name not in query:
            return default
        try:
            return float(query[name])
        except ValueError:
            raise _BadParameter(name, f"expected a number, got {query[name]!r}") from None

    def _reply(self, status: int, body: bytes, content_type: str):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        if self.config.cors:
            self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)


class PennantHTTPServer(ThreadingHTTPServer):
    """HTTP server bound to one immutable index."""

    daemon_threads = False  # joining threads on close finishes in-flight requests

    def __init__(self, address: tuple[str, int], index: TermIndex, config: ServiceConfig):
        super().__init__(address, PennantRequestHandler)
        self.index = index
        self.config = config


def make_server(index: TermIndex, config: ServiceConfig) -> PennantHTTPServer:
    return PennantHTTPServer((config.host, config.port), index, config)


def serve(config: ServiceConfig) -> int:
    """Load the index, bind, and serve until interrupted (INT or TERM)."""
    index = load_index(config.index_path)  # must succeed before we accept requests
    server = make_server(index, config)
    host, port = server.server_address[:2]
    log.info(
        "serving %s (N=%d, %d terms) on http://%s:%d",
        config.index_path,
        index.n_docs,
        len(index),
        host,
        port,
    )

    def _terminate(signum, frame):
        raise KeyboardInterrupt

    try:
        signal.signal(signal.SIGTERM, _terminate)
    except ValueError:
        pass  # not in the main thread; SIGINT handling still applies there
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        log.info("shutting down")
    finally:
        server.server_close()
    return 0
