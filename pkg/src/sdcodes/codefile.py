"""JSON code files: a code's JSON object plus ``"format_version": 1``."""
from __future__ import annotations

import json

from .cyclic import CyclicCode
from .selfdual import LinearCode

FORMAT_VERSION = 1


class CodeFileError(ValueError):
    pass


def to_document(code) -> dict:
    return {"format_version": FORMAT_VERSION, **code.to_json()}


def from_document(doc: dict):
    if not isinstance(doc, dict):
        raise CodeFileError("code file must hold a JSON object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise CodeFileError(f"unsupported format_version {doc.get('format_version')!r}")
    body = {k: v for k, v in doc.items() if k != "format_version"}
    kind = body.get("kind")
    try:
        if kind == "cyclic":
            return CyclicCode.from_json(body)
        if kind == "linear":
            return LinearCode.from_json(body)
    except (KeyError, TypeError, ValueError) as exc:
        raise CodeFileError(f"malformed {kind} code: {exc}") from exc
    raise CodeFileError(f"unknown code kind {kind!r}")


def dumps(code) -> str:
    return json.dumps(to_document(code), separators=(",", ":"))


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFileError(f"invalid JSON: {exc}") from exc
    return from_document(doc)


def load(path: str):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(code, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(code) + "\n")
