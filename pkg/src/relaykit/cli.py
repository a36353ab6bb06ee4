"""Command-line front end: a thin client of the service.

Every subcommand posts its request to the FastAPI routes. By default the app
runs in-process, so batch work needs no server; --server switches the same
client to a remote instance.

    relaykit gen --config gen.json --out corpus/ --seed 7
    relaykit train --config train.json
    relaykit eval --config eval.json
    relaykit classify --config classify.json
    relaykit features --config features.json

Exit codes: 0 success, 2 config error, 3 data error, 4 model error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

CONFIG_ERROR, DATA_ERROR, MODEL_ERROR = 2, 3, 4


class ServiceClient:
    """POSTs requests either to an in-process app or to a remote server."""

    def __init__(self, server: str | None = None):
        if server:
            import httpx
            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient
            from .service.app import app
            self._client = TestClient(app)

    def post(self, route: str, payload: dict):
        response = self._client.post(route, json=payload)
        body = response.json()
        if response.status_code == 422:
            return CONFIG_ERROR, body
        if response.status_code != 200:
            return body.get("exit_code", DATA_ERROR), body
        return 0, body


def _load_config(args) -> dict:
    cfg = {}
    if args.config:
        path = Path(args.config)
        if not path.exists():
            raise FileNotFoundError(f"config file {path} not found")
        try:
            cfg = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ValueError(f"config file {path}: {exc}") from exc
        if not isinstance(cfg, dict):
            raise ValueError("config file must hold a JSON object")
    return cfg


#: CLI flag -> request field written when the flag is given (flags override
#: config leaves)
_OVERRIDES = {
    "gen": {"out": "out_dir", "seed": "seed"},
    "features": {"out": "out_path", "seed": "seed"},
    "train": {"out": "model_path", "seed": "seed"},
    "eval": {"out": "out_path", "seed": "seed"},
    "classify": {"seed": None, "out": None},
}


def _apply_overrides(command: str, cfg: dict, args) -> dict:
    table = _OVERRIDES[command]
    for flag, field in table.items():
        value = getattr(args, flag, None)
        if value is None or field is None:
            continue
        cfg[field] = value
    return cfg


def _print_report(command: str, body: dict) -> None:
    if command == "gen":
        for name, count in sorted(body.get("class_counts", {}).items()):
            print(f"{name}: {count}")
        print(f"wrote {body['n_records']} records to {body['out_dir']}")
    elif command == "train":
        for name, info in sorted(body.get("stages", {}).items()):
            score = info.get("cv_score")
            shown = f"{score:.4f}" if isinstance(score, float) else "-"
            print(f"{name}: rows={info['rows']} cv_balanced_accuracy={shown}")
        print(f"model written to {body['model_path']} "
              f"({body['train_seconds']:.1f}s)")
    elif command == "eval":
        for name, m in sorted(body.get("stages", {}).items()):
            print(f"{name}: balanced_accuracy={m['balanced_accuracy']:.4f} "
                  f"n={m['n_rows']}")
    elif command == "classify":
        for decision in body.get("decisions", []):
            print(json.dumps(decision))
    elif command == "features":
        print(f"wrote {body['n_rows']} rows ({body['n_skipped']} skipped) "
              f"to {body['out_path']}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="relaykit", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("gen", "synthesize a labeled corpus"),
        ("features", "export a feature matrix CSV for one stage"),
        ("train", "train the classifier cascade"),
        ("eval", "evaluate a trained cascade on a corpus"),
        ("classify", "stream relay decisions for a corpus"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="JSON request payload")
        p.add_argument("--seed", type=int, help="override the config seed")
        p.add_argument("--out", help="override the output path")
        p.add_argument("--server", help="remote service URL (default: in-process)")
        p.add_argument("--json", action="store_true",
                       help="print the raw report JSON instead of a summary")
    args = parser.parse_args(argv)

    try:
        cfg = _load_config(args)
    except (FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CONFIG_ERROR
    cfg = _apply_overrides(args.command, cfg, args)

    client = ServiceClient(args.server)
    route = {"eval": "/eval"}.get(args.command, f"/{args.command}")
    code, body = client.post(route, cfg)
    if code != 0:
        detail = body.get("error") or json.dumps(body.get("detail", body))
        print(f"error: {detail}", file=sys.stderr)
        return code
    if args.json:
        print(json.dumps(body, indent=2))
    else:
        _print_report(args.command, body)
    return 0


if __name__ == "__main__":
    sys.exit(main())
